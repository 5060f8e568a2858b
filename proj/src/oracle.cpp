#include "szeta/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

#include "szeta/error.hpp"

namespace szeta {

namespace {

/// Upper band storage, column major, for LAPACKE_dsbevx.
class BandMatrix {
 public:
  BandMatrix(int n, int kd) : n_(n), kd_(kd), ab_(static_cast<std::size_t>(kd + 1) * n, 0.0) {}

  void add(int i, int j, double v) {
    if (i > j) std::swap(i, j);
    ab_[static_cast<std::size_t>(kd_ + i - j) + static_cast<std::size_t>(j) * (kd_ + 1)] += v;
  }

  std::vector<double> lowest(int count) {
    count = std::min(count, n_);
    std::vector<double> w(n_);
    std::vector<lapack_int> ifail(n_);
    lapack_int found = 0;
    double q = 0.0, z = 0.0;
    const double abstol = 2.0 * LAPACKE_dlamch('S');
    const lapack_int info =
        LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'N', 'I', 'U', n_, kd_, ab_.data(), kd_ + 1, &q, 1, 0.0, 0.0,
                       1, count, abstol, &found, w.data(), &z, 1, ifail.data());
    if (info != 0) throw NumericalError("band eigensolver failed, info = " + std::to_string(info));
    w.resize(static_cast<std::size_t>(found));
    return w;
  }

 private:
  int n_;
  int kd_;
  std::vector<double> ab_;
};

bool left_neumann(BC bc) { return bc == BC::NN || bc == BC::ND; }
bool right_neumann(BC bc) { return bc == BC::NN || bc == BC::DN; }

}  // namespace

std::vector<double> fd_eigenvalues(const DensityProfile& p, BC bc, int count, int grid_size) {
  const int n = grid_size;
  const double a = p.length(), h = a / n, ih2 = 1.0 / (h * h);
  auto vertex = [&](int v) { return v == n ? 0.5 * a : -0.5 * a + v * h; };

  if (bc == BC::PP) {
    // interleave 0, N-1, 1, N-2, ... so the cyclic stencil has bandwidth 2
    auto pos = [&](int v) { return v < (n + 1) / 2 ? 2 * v : 2 * (n - 1 - v) + 1; };
    std::vector<double> m(n);
    for (int v = 0; v < n; ++v) m[v] = p(vertex(v));
    BandMatrix d(n, 2);
    for (int v = 0; v < n; ++v) {
      const int w = (v + 1) % n;
      d.add(pos(v), pos(v), 2.0 * ih2 / m[v]);
      d.add(pos(v), pos(w), -ih2 / std::sqrt(m[v] * m[w]));
    }
    return d.lowest(count);
  }

  const int v0 = left_neumann(bc) ? 0 : 1;
  const int v1 = right_neumann(bc) ? n : n - 1;
  const int size = v1 - v0 + 1;
  std::vector<double> m(size);
  std::vector<double> diag(size);
  for (int v = v0; v <= v1; ++v) {
    const bool end = (v == 0 || v == n);
    m[v - v0] = p(vertex(v)) * (end ? 0.5 : 1.0);
    diag[v - v0] = (end ? 1.0 : 2.0) * ih2;
  }
  BandMatrix d(size, 1);
  for (int i = 0; i < size; ++i) {
    d.add(i, i, diag[i] / m[i]);
    if (i + 1 < size) d.add(i, i + 1, -ih2 / std::sqrt(m[i] * m[i + 1]));
  }
  return d.lowest(count);
}

SpectrumResult solve_spectrum(const DensityProfile& p, BC bc, int num_modes, int grid_size) {
  if (num_modes < 1) throw ParameterError("solve_spectrum: num_modes must be >= 1");
  if (grid_size < 8 * num_modes)
    throw CapabilityError("solve_spectrum: grid_size must be at least 8 * num_modes");
  const int want = num_modes + (has_zero_mode(bc) ? 1 : 0);

  auto solve = [&](int n) {
    auto e = fd_eigenvalues(p, bc, want, n);
    if (has_zero_mode(bc)) {
      // the difference operator annihilates constants exactly; the computed
      // zero eigenvalue is roundoff on the scale of the matrix norm (~ n^2)
      if (e.size() < 2 || std::abs(e[0]) > 1e-3 * e[1])
        throw NumericalError("solve_spectrum: zero mode not isolated");
      e.erase(e.begin());
    }
    if (static_cast<int>(e.size()) > num_modes) e.resize(num_modes);
    return e;
  };
  const auto coarse = solve(grid_size);
  const auto fine = solve(2 * grid_size);

  SpectrumResult r;
  r.bc = bc;
  r.grid_size = grid_size;
  const std::size_t k = std::min(coarse.size(), fine.size());
  for (std::size_t i = 0; i < k; ++i) {
    r.eigenvalues.push_back((4.0 * fine[i] - coarse[i]) / 3.0);
    r.err_est.push_back(std::abs(fine[i] - coarse[i]) / 3.0);
  }
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  return r;
}

double zeta_from_spectrum(const SpectrumResult& spec, const AsymptoticCoefficients& c, int s,
                          double a) {
  if (spec.eigenvalues.empty()) throw ParameterError("zeta_from_spectrum: empty spectrum");
  if (s < 1) throw ParameterError("zeta_from_spectrum: s must be >= 1");
  double sum = 0.0;
  // smallest terms first
  for (auto it = spec.eigenvalues.rbegin(); it != spec.eigenvalues.rend(); ++it)
    sum += std::pow(*it, -s);
  const int k = static_cast<int>(spec.eigenvalues.size());
  return sum + tail_sum(c, spec.bc, k, s, a).value;
}

}  // namespace szeta
