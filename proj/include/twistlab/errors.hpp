#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

/// Failure categories surfaced by the library. Each maps onto the error
/// conditions of the operation that raises it.
enum class Errc {
  invalid_shape,
  rotationally_invariant,
  grid_too_coarse,
  empty_support,
  invalid_window,
  window_outside_truncation,
  incompatible_grids,
  unaligned_interval,
  window_mismatch,
  zero_field,
  nonpositive_e1,
  invalid_split,
  invalid_alpha,
  invalid_ordering,
  nonpositive_lambda0,
  degenerate_section,
  no_positive_dmax,
  truncation_too_short,
  no_convergence,
  indefinite_mass,
  hypothesis_violated,
  parse_error,
  schema_violation,
  budget_exceeded,
};

const char* errc_name(Errc code) noexcept;

class LabError : public std::runtime_error {
 public:
  LabError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw LabError(code, msg); }

}  // namespace twistlab
