#pragma once

#include <stdexcept>
#include <string>

namespace pricing {

/// Domain error codes surfaced by validation, solvers and the CLI.
enum class Errc {
  negative_value,
  non_monotone_marginals,
  non_concave_storage,
  dimension_mismatch,
  period_out_of_range,
  period_before_contour,
  concave_not_supported,
  instance_too_large,
  state_space_too_large,
  multi_buyer_not_supported,
  infeasible_action,
  inventory_bound_exceeded,
  parameter_out_of_range,
  parse_error,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace pricing
