#include "szeta/sumrules.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>

#include "szeta/diagrams.hpp"
#include "szeta/error.hpp"
#include "szeta/kernels.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedZ1: return "closed_z1";
    case Method::Diagram: return "diagram";
    case Method::KernelTrace: return "kernel_trace";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "closed" || t == "closed_z1" || t == "z1") return Method::ClosedZ1;
  if (t == "diagram" || t == "diagrams" || t == "simplex") return Method::Diagram;
  if (t == "kernel" || t == "kernel_trace" || t == "trace") return Method::KernelTrace;
  throw ParameterError("unknown method '" + s + "'");
}

void QuadratureConfig::validate() const {
  if (nodes_per_dim < 4) throw ParameterError("nodes_per_dim must be >= 4");
  if (max_diagram_order < 1) throw ParameterError("max_diagram_order must be >= 1");
  if (panels < 0) throw ParameterError("panels must be >= 0");
  if (nodes_per_panel < 1) throw ParameterError("nodes_per_panel must be >= 1");
  for (std::size_t i = 0; i < grid_sizes.size(); ++i) {
    if (grid_sizes[i] < 1) throw ParameterError("grid sizes must be positive");
    if (i > 0 && grid_sizes[i] <= grid_sizes[i - 1])
      throw ParameterError("grid sizes must be strictly increasing");
  }
  if (tol < 0.0) throw ParameterError("tol must be >= 0");
}

std::vector<int> QuadratureConfig::resolved_grids(const DensityProfile& p) const {
  if (!grid_sizes.empty()) return grid_sizes;
  int base = panels;
  if (base == 0) base = std::max(32, static_cast<int>(std::ceil(8.0 * p.length() / p.feature_scale())));
  return {base, 2 * base, 4 * base};
}

bool SumRuleTable::has(int s) const {
  return std::find(orders.begin(), orders.end(), s) != orders.end();
}

double SumRuleTable::at(int s) const {
  auto it = std::find(orders.begin(), orders.end(), s);
  if (it == orders.end()) throw DataError("order " + std::to_string(s) + " missing from table");
  return values[static_cast<std::size_t>(it - orders.begin())];
}

double zeta_one(const DensityProfile& p, BC bc) {
  const double a = p.length(), h = 0.5 * a;
  const int panels = quadrature_panels(p);
  auto r = quad::integrate([&](double x) { return green_diagonal(bc, a, x) * p(x); }, -h, h,
                           1e-14, p.breakpoints(), panels);
  return r.value;
}

namespace {

double simplex_sum(const DensityProfile& p, BC bc, const kernels::DiagramSet& set, int nodes,
                   bool parallel) {
  kernels::SimplexProblem prob{bc, &p, &set, nodes};
  return parallel ? kernels::simplex_integral_omp(prob) : kernels::simplex_integral_serial(prob);
}

struct DiagramValue {
  double value;
  double err_est;
};

DiagramValue diagram_value(const DensityProfile& p, BC bc, int n, const QuadratureConfig& cfg) {
  cfg.validate();
  if (n < 1) throw ParameterError("order must be >= 1");
  if (n > cfg.max_diagram_order)
    throw CapabilityError("diagram route capped at order " + std::to_string(cfg.max_diagram_order) +
                          "; use the kernel route");
  const auto set = kernels::make_diagram_set(n);
  const double pre = static_cast<double>(prefactor(n));
  const double fine = pre * simplex_sum(p, bc, set, cfg.nodes_per_dim, cfg.parallel);
  const int coarse_nodes = std::clamp((3 * cfg.nodes_per_dim) / 4, 2, cfg.nodes_per_dim - 1);
  const double coarse = pre * simplex_sum(p, bc, set, coarse_nodes, cfg.parallel);
  return {fine, std::abs(fine - coarse)};
}

quad::Composite kernel_nodes(const DensityProfile& p, int panels, int nodes_per_panel,
                             int* per_interval) {
  const auto bp = p.breakpoints();
  const int intervals = 1 + static_cast<int>(bp.size());
  const int per = std::max(1, static_cast<int>(std::lround(static_cast<double>(panels) / intervals)));
  if (per_interval) *per_interval = per;
  const double h = p.half_length();
  return quad::composite(-h, h, per, nodes_per_panel, bp);
}

/// Eigenvalues in descending order, zero mode deflated.
std::vector<double> kernel_spectrum(const DensityProfile& p, BC bc, int panels,
                                    const QuadratureConfig& cfg, int* per_interval) {
  const auto c = kernel_nodes(p, panels, cfg.nodes_per_panel, per_interval);
  const auto s = cfg.parallel ? kernels::weighted_root_density_omp(p, c.x, c.w)
                              : kernels::weighted_root_density_serial(p, c.x, c.w);
  Eigen::MatrixXd m;
  if (cfg.parallel)
    kernels::assemble_kernel_omp(bc, p.length(), c.x, s, m);
  else
    kernels::assemble_kernel_serial(bc, p.length(), c.x, s, m);

  if (has_zero_mode(bc) && cfg.zero_mode == ZeroMode::SigmaProjected) {
    // the string's zero mode is flat; in the symmetric frame it is s itself
    Eigen::Map<const Eigen::VectorXd> sv(s.data(), static_cast<Eigen::Index>(s.size()));
    const Eigen::VectorXd u = sv.normalized();
    const Eigen::VectorXd v = m * u;
    const double cuv = u.dot(v);
    m.noalias() -= u * v.transpose();
    m.noalias() -= v * u.transpose();
    m.noalias() += cuv * (u * u.transpose());
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("kernel eigensolver failed");
  std::vector<double> lam(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(lam.begin(), lam.end(), std::greater<>());
  const double top = lam.front();
  if (!(top > 0.0)) throw NumericalError("kernel has no positive eigenvalue");
  if (has_zero_mode(bc)) {
    auto it = std::min_element(lam.begin(), lam.end(),
                               [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (std::abs(*it) < 1e-10 * top) lam.erase(it);
  }
  if (lam.back() < -1e-10 * top)
    throw NumericalError("discretized kernel is not positive definite (lambda_min = " +
                         std::to_string(lam.back()) + ")");
  return lam;
}

/// Polynomial extrapolation in h^2 to h = 0 (Neville).
double extrapolate_h2(const std::vector<double>& h, const std::vector<double>& v) {
  const std::size_t m = v.size();
  std::vector<double> t(v);
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t i = m - 1; i >= k; --i) {
      const double hi = h[i] * h[i], hk = h[i - k] * h[i - k];
      t[i] = (hk * t[i] - hi * t[i - 1]) / (hk - hi);
      if (i == k) break;
    }
  return t[m - 1];
}

}  // namespace

double zeta_diagram(const DensityProfile& p, BC bc, int n, const QuadratureConfig& cfg) {
  const auto r = diagram_value(p, bc, n, cfg);
  if (cfg.tol > 0.0 && r.err_est > cfg.tol)
    throw AccuracyError("diagram route missed the requested tolerance", r.value, r.err_est);
  return r.value;
}

std::vector<double> kernel_eigenvalues(const DensityProfile& p, BC bc, int panels,
                                       const QuadratureConfig& cfg) {
  cfg.validate();
  return kernel_spectrum(p, bc, panels, cfg, nullptr);
}

SumRuleTable zeta_kernel_trace(const DensityProfile& p, BC bc, int n_max,
                               const QuadratureConfig& cfg) {
  cfg.validate();
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  const auto grids = cfg.resolved_grids(p);

  std::vector<double> h;
  std::vector<std::vector<double>> z(grids.size(), std::vector<double>(n_max, 0.0));
  for (std::size_t g = 0; g < grids.size(); ++g) {
    int per = 0;
    const auto lam = kernel_spectrum(p, bc, grids[g], cfg, &per);
    h.push_back(1.0 / per);
    // ascending magnitude keeps the power sums accurate
    for (auto it = lam.rbegin(); it != lam.rend(); ++it) {
      const double l = std::max(*it, 0.0);
      double pw = l;
      for (int s = 0; s < n_max; ++s) {
        z[g][s] += pw;
        pw *= l;
      }
    }
  }

  SumRuleTable t;
  t.bc = bc;
  t.method = Method::KernelTrace;
  for (int s = 1; s <= n_max; ++s) {
    std::vector<double> v;
    for (const auto& row : z) v.push_back(row[s - 1]);
    double val = v.back(), err = std::abs(v.back() - (v.size() > 1 ? v[v.size() - 2] : 0.0));
    if (v.size() >= 2) {
      val = extrapolate_h2(h, v);
      const std::vector<double> h2(h.begin() + 1, h.end()), v2(v.begin() + 1, v.end());
      const double lower = v2.size() >= 2 ? extrapolate_h2(h2, v2) : v.back();
      err = std::abs(val - lower);
    }
    t.orders.push_back(s);
    t.values.push_back(val);
    t.err_est.push_back(err);
  }
  if (cfg.tol > 0.0) {
    for (std::size_t i = 0; i < t.values.size(); ++i)
      if (t.err_est[i] > cfg.tol)
        throw AccuracyError("kernel route missed the requested tolerance at order " +
                                std::to_string(t.orders[i]),
                            t.values[i], t.err_est[i]);
  }
  return t;
}

SumRuleTable zeta_table(const DensityProfile& p, BC bc, const std::vector<int>& orders,
                        Method method, const QuadratureConfig& cfg) {
  cfg.validate();
  if (orders.empty()) throw ParameterError("no orders requested");
  for (int s : orders)
    if (s < 1) throw ParameterError("orders must be >= 1");
  SumRuleTable t;
  t.bc = bc;
  t.method = method;
  switch (method) {
    case Method::ClosedZ1:
      for (int s : orders) {
        if (s != 1) throw CapabilityError("closed form available for order 1 only");
        t.orders.push_back(1);
        t.values.push_back(zeta_one(p, bc));
        t.err_est.push_back(1e-14 * std::abs(t.values.back()));
      }
      return t;
    case Method::Diagram:
      if (has_zero_mode(bc) && cfg.zero_mode == ZeroMode::SigmaProjected)
        throw CapabilityError("diagram route supports the regularized zero mode only");
      for (int s : orders) {
        const auto r = diagram_value(p, bc, s, cfg);
        t.orders.push_back(s);
        t.values.push_back(r.value);
        t.err_est.push_back(r.err_est);
      }
      return t;
    case Method::KernelTrace: {
      QuadratureConfig c = cfg;
      c.tol = 0.0;
      const auto full = zeta_kernel_trace(p, bc, *std::max_element(orders.begin(), orders.end()), c);
      for (int s : orders) {
        t.orders.push_back(s);
        t.values.push_back(full.values[s - 1]);
        t.err_est.push_back(full.err_est[s - 1]);
      }
      return t;
    }
  }
  return t;
}

IdentityReport verify_sum_identities(const DensityProfile& p, double tol) {
  IdentityReport r;
  const double a = p.length();
  r.mean_density = mean_density(p);
  r.z_dd = zeta_one(p, BC::DD);
  r.z_nn = zeta_one(p, BC::NN);
  r.z_dn = zeta_one(p, BC::DN);
  r.z_nd = zeta_one(p, BC::ND);
  r.z_pp = zeta_one(p, BC::PP);
  const double m = a * a * r.mean_density;
  r.residual_dd_nn = r.z_dd + r.z_nn - m / 3.0;
  r.residual_dn_nd = r.z_dn + r.z_nd - m;
  r.residual_pp = r.z_pp - m / 12.0;
  r.pass = std::abs(r.residual_dd_nn) < tol && std::abs(r.residual_dn_nd) < tol &&
           std::abs(r.residual_pp) < tol;
  return r;
}

}  // namespace szeta
