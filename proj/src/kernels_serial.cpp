#include <cmath>
#include <stdexcept>
#include <vector>

#include "kernels_common.hpp"
#include "szeta/diagrams.hpp"
#include "szeta/error.hpp"

namespace szeta::kernels {

DiagramSet make_diagram_set(int n) {
  if (n > detail::kMaxOrder) throw CapabilityError("diagram order above the kernel limit");
  DiagramSet set;
  set.n = n;
  for (const auto& d : enumerate_diagrams(n)) {
    for (const auto& [i, j] : d.edges) set.pair_index.push_back(i == j ? 0 : detail::pair_slot(i - 1, j - 1, n));
  }
  return set;
}

double simplex_integral_serial(const SimplexProblem& p) {
  const int m = p.nodes_per_dim;
  std::vector<double> partial(m, 0.0);
  detail::SimplexWalker walker(p);
  for (int i = 0; i < m; ++i) partial[i] = walker.outer_term(i);
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

void assemble_kernel_serial(BC bc, double a, std::span<const double> x,
                            std::span<const double> s, Eigen::MatrixXd& m) {
  const auto n = static_cast<Eigen::Index>(x.size());
  m.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) detail::kernel_row(bc, a, x, s, m, i);
}

std::vector<double> weighted_root_density_serial(const DensityProfile& p,
                                                 std::span<const double> x,
                                                 std::span<const double> w) {
  std::vector<double> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = std::sqrt(w[i] * p(x[i]));
  return s;
}

}  // namespace szeta::kernels
