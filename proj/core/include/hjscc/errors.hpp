#pragma once

#include <stdexcept>
#include <string>

namespace hjscc {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (config errors, numerical failures, internal bugs).
enum class errc {
  negative_weight,
  not_normalized,
  non_finite,
  bad_axis,
  dim_mismatch,
  index_out_of_range,
  zero_marginal_row,
  zero_conditioning_mass,
  degenerate_threshold,
  non_monotone_table,
  absolute_continuity_violation,
  infeasible_target,
  empty_atoms,
  value_out_of_range,
  bad_args,
  invalid_argument,
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

}  // namespace hjscc
