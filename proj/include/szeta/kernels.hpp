#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "szeta/density.hpp"
#include "szeta/greens.hpp"

// Hot loops of the sum-rule routes. Every kernel has a serial reference and an
// OpenMP version; both reduce in the same fixed order, so their results are
// bitwise identical for any thread count.
namespace szeta::kernels {

/// Diagram terms of one order, flattened to 0-based pair indices.
struct DiagramSet {
  int n = 0;
  /// For each diagram, n indices into the pair table (row-major i < j,
  /// or the diagonal slot for n = 1).
  std::vector<int> pair_index;
  int diagram_count() const { return n == 0 ? 0 : static_cast<int>(pair_index.size()) / n; }
};

/// Builds the pair-index form of enumerate_diagrams(n).
DiagramSet make_diagram_set(int n);

struct SimplexProblem {
  BC bc = BC::DD;
  const DensityProfile* profile = nullptr;
  const DiagramSet* diagrams = nullptr;
  int nodes_per_dim = 24;
};

/// Sum over diagrams of the ordered-simplex integral
///   int_{a/2 > x1 > ... > xn > -a/2} prod_edges G_+(x_i, x_j) prod_i Sigma(x_i),
/// by iterated Gauss-Legendre with each inner variable rescaled to
/// [-a/2, x_{k-1}]. The prefactor is not applied.
double simplex_integral_serial(const SimplexProblem& p);
double simplex_integral_omp(const SimplexProblem& p);

/// M_ij = s_i G(x_i, x_j) s_j with s_i = sqrt(w_i Sigma(x_i)).
void assemble_kernel_serial(BC bc, double a, std::span<const double> x,
                            std::span<const double> s, Eigen::MatrixXd& m);
void assemble_kernel_omp(BC bc, double a, std::span<const double> x, std::span<const double> s,
                         Eigen::MatrixXd& m);

/// s_i = sqrt(w_i Sigma(x_i)).
std::vector<double> weighted_root_density_serial(const DensityProfile& p,
                                                 std::span<const double> x,
                                                 std::span<const double> w);
std::vector<double> weighted_root_density_omp(const DensityProfile& p,
                                              std::span<const double> x,
                                              std::span<const double> w);

}  // namespace szeta::kernels
