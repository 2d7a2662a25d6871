#include "hjscc/errors.hpp"

namespace hjscc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::negative_weight: return "NegativeWeight";
    case errc::not_normalized: return "NotNormalized";
    case errc::non_finite: return "NonFinite";
    case errc::bad_axis: return "BadAxis";
    case errc::dim_mismatch: return "DimMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::zero_marginal_row: return "ZeroMarginalRow";
    case errc::zero_conditioning_mass: return "ZeroConditioningMass";
    case errc::degenerate_threshold: return "DegenerateThreshold";
    case errc::non_monotone_table: return "NonMonotoneTable";
    case errc::absolute_continuity_violation: return "AbsoluteContinuityViolation";
    case errc::infeasible_target: return "InfeasibleTarget";
    case errc::empty_atoms: return "EmptyAtoms";
    case errc::value_out_of_range: return "ValueOutOfRange";
    case errc::bad_args: return "BadArgs";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hjscc
