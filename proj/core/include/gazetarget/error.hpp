#pragma once

#include <stdexcept>
#include <string>

namespace gazetarget {

enum class Errc {
  // imaging
  grid_too_small,
  unknown_target,
  mixed_channels,
  mixed_dimensions,
  duplicate_id,
  out_of_canvas,
  even_window,
  wrong_channels,
  window_too_small,
  // features
  too_few_points,
  empty_input,
  dim_mismatch,
  // saliency
  image_too_small,
  // learn
  degenerate_labels,
  non_finite_input,
  single_class,
  no_convergence,
  // protocol
  insufficient_trials,
  wrong_participant_count,
  unknown_query,
  empty_candidates,
  too_few_targets,
  // data / io
  missing_file,
  schema_violation,
  out_of_bounds_fixation,
  invalid_config,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::grid_too_small: return "GridTooSmall";
    case Errc::unknown_target: return "UnknownTarget";
    case Errc::mixed_channels: return "MixedChannels";
    case Errc::mixed_dimensions: return "MixedDimensions";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::out_of_canvas: return "OutOfCanvas";
    case Errc::even_window: return "EvenWindow";
    case Errc::wrong_channels: return "WrongChannels";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::empty_input: return "EmptyInput";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::image_too_small: return "ImageTooSmall";
    case Errc::degenerate_labels: return "DegenerateLabels";
    case Errc::non_finite_input: return "NonFiniteInput";
    case Errc::single_class: return "SingleClass";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::insufficient_trials: return "InsufficientTrials";
    case Errc::wrong_participant_count: return "WrongParticipantCount";
    case Errc::unknown_query: return "UnknownQuery";
    case Errc::empty_candidates: return "EmptyCandidates";
    case Errc::too_few_targets: return "TooFewTargets";
    case Errc::missing_file: return "MissingFile";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::out_of_bounds_fixation: return "OutOfBoundsFixation";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace gazetarget
