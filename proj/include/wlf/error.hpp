#pragma once

#include <stdexcept>
#include <string>

namespace wlf {

enum class errc {
  empty_input,
  dimension_mismatch,
  non_finite_coordinate,
  bad_bin_width,
  bad_range,
  size_mismatch,
  dimension_error,
  cap_exceeded,
  too_large,
  degenerate_row,
  non_positive_step,
  window_shape_error,
  alignment_error,
  schedule_overrun,
  no_shared_times,
  degenerate_data,
  config_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_input: return "EmptyInput";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_finite_coordinate: return "NonFiniteCoordinate";
    case errc::bad_bin_width: return "BadBinWidth";
    case errc::bad_range: return "BadRange";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::dimension_error: return "DimensionError";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::too_large: return "TooLarge";
    case errc::degenerate_row: return "DegenerateRow";
    case errc::non_positive_step: return "NonPositiveStep";
    case errc::window_shape_error: return "WindowShapeError";
    case errc::alignment_error: return "AlignmentError";
    case errc::schedule_overrun: return "ScheduleOverrun";
    case errc::no_shared_times: return "NoSharedTimes";
    case errc::degenerate_data: return "DegenerateData";
    case errc::config_error: return "ConfigError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace wlf
