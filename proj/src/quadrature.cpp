#include "szeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "szeta/error.hpp"

namespace szeta::quad {

Rule gauss_legendre(int n) {
  if (n < 1) throw ParameterError("gauss_legendre: n must be >= 1");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged root for the weight
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

const Rule& cached_rule(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

namespace {

std::vector<double> intervals(double lo, double hi, std::span<const double> breakpoints) {
  std::vector<double> cuts{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) cuts.push_back(b);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

Composite composite(double lo, double hi, int panels, int nodes_per_panel,
                    std::span<const double> breakpoints) {
  if (panels < 1) throw ParameterError("composite: panels must be >= 1");
  const Rule& rule = cached_rule(nodes_per_panel);
  const auto cuts = intervals(lo, hi, breakpoints);
  Composite c;
  c.x.reserve((cuts.size() - 1) * panels * nodes_per_panel);
  c.w.reserve(c.x.capacity());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double h = (cuts[k + 1] - cuts[k]) / panels;
    for (int p = 0; p < panels; ++p) {
      const double left = cuts[k] + p * h;
      for (int j = 0; j < nodes_per_panel; ++j) {
        c.x.push_back(left + 0.5 * h * (rule.nodes[j] + 1.0));
        c.w.push_back(0.5 * h * rule.weights[j]);
      }
    }
  }
  return c;
}

Result integrate(const std::function<double(double)>& f, double lo, double hi, double tol,
                 std::span<const double> breakpoints, int min_panels, int max_panels) {
  constexpr int kNodes = 20;
  auto sum = [&](int panels) {
    const auto c = composite(lo, hi, panels, kNodes, breakpoints);
    double s = 0.0;
    for (std::size_t i = 0; i < c.x.size(); ++i) s += c.w[i] * f(c.x[i]);
    return s;
  };
  int panels = std::max(1, min_panels);
  double prev = sum(panels);
  while (true) {
    panels *= 2;
    const double cur = sum(panels);
    const double diff = std::abs(cur - prev);
    if (diff <= tol * std::max(1.0, std::abs(cur))) return {cur, diff};
    if (panels >= max_panels)
      throw AccuracyError("integrate: no convergence", cur, diff);
    prev = cur;
  }
}

}  // namespace szeta::quad
