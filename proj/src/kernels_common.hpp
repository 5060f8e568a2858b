#pragma once

// Shared inner loops of the serial and OpenMP kernels. Only the outermost
// loop differs between the two translation units.

#include <array>
#include <cmath>

#include "szeta/kernels.hpp"
#include "szeta/quadrature.hpp"

namespace szeta::kernels::detail {

inline constexpr int kMaxOrder = 12;

inline int pair_slot(int i, int j, int n) {
  // i < j, 0-based, row-major over the strict upper triangle
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Integral over the inner variables x_2..x_n for a fixed outermost node.
class SimplexWalker {
 public:
  explicit SimplexWalker(const SimplexProblem& p)
      : p_(p), rule_(quad::cached_rule(p.nodes_per_dim)), n_(p.diagrams->n),
        a_(p.profile->length()) {}

  /// Contribution of outermost node `i` (including its weight).
  double outer_term(int i) {
    const double lo = -0.5 * a_, hi = 0.5 * a_;
    const double half = 0.5 * (hi - lo);
    x_[0] = lo + half * (rule_.nodes[i] + 1.0);
    const double w = half * rule_.weights[i] * (*p_.profile)(x_[0]);
    return w * (n_ == 1 ? leaf() : inner(1));
  }

 private:
  double inner(int level) {
    const double lo = -0.5 * a_, hi = x_[level - 1];
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    const int m = static_cast<int>(rule_.nodes.size());
    for (int k = 0; k < m; ++k) {
      x_[level] = lo + half * (rule_.nodes[k] + 1.0);
      const double w = half * rule_.weights[k] * (*p_.profile)(x_[level]);
      acc += w * (level + 1 == n_ ? leaf() : inner(level + 1));
    }
    return acc;
  }

  double leaf() {
    const int n = n_;
    const double a = a_;
    if (n == 1) return green_plus_unchecked(p_.bc, a, x_[0], x_[0]);
    // x_[0] > x_[1] > ... so (i < j) is always the ordered branch
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        g_[pair_slot(i, j, n)] = green_plus_unchecked(p_.bc, a, x_[i], x_[j]);
    const auto& idx = p_.diagrams->pair_index;
    const int count = p_.diagrams->diagram_count();
    double sum = 0.0;
    for (int d = 0; d < count; ++d) {
      const int* e = idx.data() + static_cast<std::size_t>(d) * n;
      double prod = g_[e[0]];
      for (int k = 1; k < n; ++k) prod *= g_[e[k]];
      sum += prod;
    }
    return sum;
  }

  const SimplexProblem& p_;
  const quad::Rule& rule_;
  int n_;
  double a_;
  std::array<double, kMaxOrder> x_{};
  std::array<double, kMaxOrder * (kMaxOrder - 1) / 2> g_{};
};

inline void kernel_row(BC bc, double a, std::span<const double> x, std::span<const double> s,
                       Eigen::MatrixXd& m, Eigen::Index i) {
  for (Eigen::Index j = 0; j <= i; ++j) {
    const double g = green_plus_unchecked(bc, a, x[i], x[j]);  // x ascending: x_i >= x_j
    const double v = s[i] * g * s[j];
    m(i, j) = v;
    m(j, i) = v;
  }
}

}  // namespace szeta::kernels::detail
