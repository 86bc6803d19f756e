#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fuzcon {

/// Resolution and tolerances used to realize sup/inf, limits and equalities
/// numerically. Every report embeds the configuration it was produced with.
struct NumericConfig {
  int grid_n = 4097;        // 1-D sample count
  int grid2_n = 257;        // per-axis sample count for 2-D sweeps
  int ep_n = 47;            // per-axis count for exchange-principle triples
  int bisect_iters = 80;
  double eps_eq = 1e-9;
  double eps_zero = 0.0;
  double eps_one = 0.0;
  std::vector<double> delta_jump{1e-4, 1e-5, 1e-6};
  double tau_jump = 1e-5;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;

  /// Applies one `key=value` override (keys match the field names).
  void set(std::string_view key, std::string_view value);

  /// Applies a comma- or whitespace-separated list of `key=value` overrides.
  void apply_overrides(std::string_view list);
};

}  // namespace fuzcon
