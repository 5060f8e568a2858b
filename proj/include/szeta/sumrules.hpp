#pragma once

#include <string>
#include <vector>

#include "szeta/density.hpp"
#include "szeta/greens.hpp"

namespace szeta {

enum class Method { ClosedZ1, Diagram, KernelTrace };

std::string to_string(Method m);
Method parse_method(const std::string& s);

/// How the NN/PP zero mode is removed in the kernel route.
///
/// Regularized uses the regularized Green's function as is. Its trace equals
/// the spectral sum only for constant density. SigmaProjected additionally
/// projects out the Sigma-weighted flat mode, which reproduces the nonzero
/// spectrum of the string for any density.
enum class ZeroMode { Regularized, SigmaProjected };

struct QuadratureConfig {
  int nodes_per_dim = 24;       // diagram route
  int max_diagram_order = 5;
  int panels = 0;               // kernel route: coarsest panel count, 0 = from the profile
  int nodes_per_panel = 4;
  std::vector<int> grid_sizes;  // panel counts for Richardson; empty = {P, 2P, 4P}
  ZeroMode zero_mode = ZeroMode::Regularized;
  bool parallel = true;
  double tol = 0.0;             // absolute; 0 disables the accuracy check

  /// ParameterError on nodes_per_dim < 4 or non-increasing grid sizes.
  void validate() const;
  /// Resolved panel counts for a profile.
  std::vector<int> resolved_grids(const DensityProfile& p) const;
};

struct SumRuleTable {
  BC bc = BC::DD;
  Method method = Method::KernelTrace;
  std::vector<int> orders;
  std::vector<double> values;
  std::vector<double> err_est;

  /// Z at order s; DataError if absent.
  double at(int s) const;
  bool has(int s) const;
};

/// Integral of G(x, x) Sigma(x).
double zeta_one(const DensityProfile& p, BC bc);

/// Z(n) from the ordered-simplex diagram integrals. CapabilityError above
/// cfg.max_diagram_order; AccuracyError when cfg.tol > 0 and the estimate
/// (difference to a 3/4-resolution rule) exceeds it.
double zeta_diagram(const DensityProfile& p, BC bc, int n, const QuadratureConfig& cfg = {});

/// Z(1..n_max) as traces of powers of the discretized kernel, Richardson
/// extrapolated in h^2 over the configured grids.
SumRuleTable zeta_kernel_trace(const DensityProfile& p, BC bc, int n_max,
                               const QuadratureConfig& cfg = {});

/// Eigenvalues of the discretized kernel (descending) on `panels` panels.
std::vector<double> kernel_eigenvalues(const DensityProfile& p, BC bc, int panels,
                                       const QuadratureConfig& cfg = {});

/// Dispatches on method; orders need not be contiguous. No accuracy check.
SumRuleTable zeta_table(const DensityProfile& p, BC bc, const std::vector<int>& orders,
                        Method method, const QuadratureConfig& cfg = {});

struct IdentityReport {
  double mean_density = 0.0;
  double z_dd = 0.0, z_nn = 0.0, z_dn = 0.0, z_nd = 0.0, z_pp = 0.0;
  double residual_dd_nn = 0.0;  // Z_DD(1) + Z_NN(1) - a^2 <S> / 3
  double residual_dn_nd = 0.0;  // Z_DN(1) + Z_ND(1) - a^2 <S>
  double residual_pp = 0.0;     // Z_PP(1) - a^2 <S> / 12
  bool pass = false;
};

IdentityReport verify_sum_identities(const DensityProfile& p, double tol = 1e-9);

}  // namespace szeta
