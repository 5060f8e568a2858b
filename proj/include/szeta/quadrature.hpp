#pragma once

#include <functional>
#include <span>
#include <vector>

namespace szeta::quad {

/// Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes ascending. Newton iteration on P_n from the Tricomi initial guess.
Rule gauss_legendre(int n);

/// Cached rule; safe for concurrent readers once built.
const Rule& cached_rule(int n);

/// Composite rule over [lo, hi]: `panels` equal panels per breakpoint interval.
/// Breakpoints outside (lo, hi) are ignored.
struct Composite {
  std::vector<double> x;
  std::vector<double> w;
};
Composite composite(double lo, double hi, int panels, int nodes_per_panel,
                    std::span<const double> breakpoints = {});

struct Result {
  double value = 0.0;
  double err_est = 0.0;
};

/// Integrates f over [lo, hi] with 20-point panels, doubling the panel count
/// until two successive sums agree to `tol` (absolute or relative, whichever is
/// looser). Throws AccuracyError when `max_panels` is reached first.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-14, std::span<const double> breakpoints = {},
                 int min_panels = 1, int max_panels = 1 << 14);

}  // namespace szeta::quad
