#include "twistlab/errors.hpp"

namespace twistlab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_shape: return "InvalidShape";
    case Errc::rotationally_invariant: return "RotationallyInvariant";
    case Errc::grid_too_coarse: return "GridTooCoarse";
    case Errc::empty_support: return "EmptySupport";
    case Errc::invalid_window: return "InvalidWindow";
    case Errc::window_outside_truncation: return "WindowOutsideTruncation";
    case Errc::incompatible_grids: return "IncompatibleGrids";
    case Errc::unaligned_interval: return "UnalignedInterval";
    case Errc::window_mismatch: return "WindowMismatch";
    case Errc::zero_field: return "ZeroField";
    case Errc::nonpositive_e1: return "NonpositiveE1";
    case Errc::invalid_split: return "InvalidSplit";
    case Errc::invalid_alpha: return "InvalidAlpha";
    case Errc::invalid_ordering: return "InvalidOrdering";
    case Errc::nonpositive_lambda0: return "NonpositiveLambda0";
    case Errc::degenerate_section: return "DegenerateSection";
    case Errc::no_positive_dmax: return "NoPositiveDmax";
    case Errc::truncation_too_short: return "TruncationTooShort";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::indefinite_mass: return "IndefiniteMass";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace twistlab
