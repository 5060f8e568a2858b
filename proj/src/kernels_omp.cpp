#include <cmath>
#include <vector>

#include "kernels_common.hpp"

namespace szeta::kernels {

double simplex_integral_omp(const SimplexProblem& p) {
  const int m = p.nodes_per_dim;
  std::vector<double> partial(m, 0.0);
#pragma omp parallel
  {
    detail::SimplexWalker walker(p);
#pragma omp for schedule(dynamic)
    for (int i = 0; i < m; ++i) partial[i] = walker.outer_term(i);
  }
  // fixed-order reduction: identical to the serial kernel
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

void assemble_kernel_omp(BC bc, double a, std::span<const double> x, std::span<const double> s,
                         Eigen::MatrixXd& m) {
  const auto n = static_cast<Eigen::Index>(x.size());
  m.resize(n, n);
#pragma omp parallel for schedule(dynamic, 16)
  for (Eigen::Index i = 0; i < n; ++i) detail::kernel_row(bc, a, x, s, m, i);
}

std::vector<double> weighted_root_density_omp(const DensityProfile& p,
                                              std::span<const double> x,
                                              std::span<const double> w) {
  std::vector<double> s(x.size());
  const auto n = static_cast<long>(x.size());
#pragma omp parallel for
  for (long i = 0; i < n; ++i) s[i] = std::sqrt(w[i] * p(x[i]));
  return s;
}

}  // namespace szeta::kernels
