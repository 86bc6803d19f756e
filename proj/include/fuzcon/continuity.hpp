#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fuzcon/config.hpp"

namespace fuzcon {

enum class Side { left, right, unknown };

struct JumpWitness {
  double at = 0.0;
  Side side = Side::unknown;
  double magnitude = 0.0;  // extrapolated |f(p) - f(p±)|
  double value = 0.0;      // f(at)
  double near_value = 0.0; // f evaluated at the closest offset on that side
};

/// Numerical verdict at resolution (grid, delta_jump, tau_jump).
struct ContinuityReport {
  bool left_continuous = true;
  bool right_continuous = true;
  bool continuous = true;
  std::optional<JumpWitness> worst_left;
  std::optional<JumpWitness> worst_right;
  std::optional<JumpWitness> worst;  // largest jump of any side
};

/// Estimated one-sided jump |f(p) - lim f(p±t)| from the offsets in
/// cfg.delta_jump. The differences d_k are fitted to J + c*delta_k^a so
/// that steep but continuous behaviour (sqrt-like or linear) extrapolates
/// to J close to 0; a linear fit through the two smallest offsets is also
/// taken and the smaller estimate wins. A difference at the smallest delta
/// already within tau_jump is returned as is. An estimate above tau_jump is only
/// kept when the difference stays above tau_jump at offsets shrunk by up to
/// 10^-6 beyond the smallest delta. Returns 0 when the side lies
/// outside [0,1].
double one_sided_jump(const std::function<double(double)>& f, double p, Side side,
                      const NumericConfig& cfg);

/// Same, with f(p) already known.
double one_sided_jump(const std::function<double(double)>& f, double p, double fp, Side side,
                      const NumericConfig& cfg);

/// Scans one-sided jumps at every point, and bisects into adjacent pairs
/// whose increment stands out from their neighbours to catch jumps that
/// fall between sample points.
ContinuityReport scan_continuity(const std::function<double(double)>& f,
                                 const std::vector<double>& points, const NumericConfig& cfg);

}  // namespace fuzcon
