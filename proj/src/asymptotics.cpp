#include "szeta/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <algorithm>
#include <cmath>

#include "szeta/error.hpp"
#include "szeta/jet.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

AsymptoticCoefficients asym_coeffs(const DensityProfile& p) {
  const double a = p.length(), h = 0.5 * a;
  const int panels = quadrature_panels(p);
  const auto bp = p.breakpoints();
  const double total =
      quad::integrate([&](double x) { return std::sqrt(p(x)); }, -h, h, 1e-14, bp, panels).value;
  const double num = quad::integrate(
                         [&](double x) {
                           const double s = p(x), d1 = p.derivative(x), d2 = p.second_derivative(x);
                           return (4.0 * s * d2 - 5.0 * d1 * d1) / (16.0 * s * s * std::sqrt(s));
                         },
                         -h, h, 1e-14, bp, panels)
                         .value;
  return {a * a / (total * total), num / total};
}

template <class Real>
Real homogeneous_eigenvalue_t(BC bc, const Real& a, int n) {
  if (n < 1) throw ParameterError("homogeneous_eigenvalue: n must be >= 1");
  const Real pi = boost::math::constants::pi<Real>();
  const Real scale = pi * pi / (a * a);
  switch (bc) {
    case BC::DD:
    case BC::NN: return scale * Real(n) * Real(n);
    case BC::DN:
    case BC::ND: return scale * Real(2 * n - 1) * Real(2 * n - 1) / 4;
    case BC::PP: {
      const int k = (n + 1) / 2;
      return 4 * scale * Real(k) * Real(k);
    }
  }
  return Real(0);
}

double homogeneous_eigenvalue(BC bc, double a, int n) {
  return homogeneous_eigenvalue_t<double>(bc, a, n);
}

namespace {

using W = Wide;

// Normalized spectrum: alpha eps_j + beta = (alpha / a^2) (kappa_j + u), u = a^2 beta / alpha.

W kappa(BC bc, int j) { return homogeneous_eigenvalue_t<W>(bc, W(1), j); }

/// sum_j kappa_j^(-m) over the listed modes, from Bernoulli numbers.
W kappa_zeta(BC bc, int m) {
  using boost::math::bernoulli_b2n;
  using boost::math::factorial;
  const W b = abs(bernoulli_b2n<W>(m));
  const W f = factorial<W>(static_cast<unsigned>(2 * m));
  const W p2 = pow(W(2), 2 * m - 1);
  switch (bc) {
    case BC::DD:
    case BC::NN: return b * p2 / f;
    case BC::DN:
    case BC::ND: return (pow(W(2), 2 * m) - 1) * b * p2 / f;
    case BC::PP: return b / f;
  }
  return W(0);
}

/// Power series in u about 0; radius kappa_1.
W f_series(BC bc, int s, const W& u) {
  const W eps = std::numeric_limits<W>::epsilon();
  W sum(0), coef(1), upow(1);
  for (int k = 0; k < 600; ++k) {
    if (k > 0) {
      coef *= W(s + k - 1);
      coef /= W(k);
      upow *= -u;
    }
    const W term = coef * upow * kappa_zeta(bc, s + k);
    sum += term;
    if (k > 2 && abs(term) < eps * abs(sum)) return sum;
    if (u == 0) return sum;
  }
  throw NumericalError("tail series did not converge");
}

/// (-1)^(s-1)/(s-1)! d^(s-1)/du^(s-1) of the s = 1 closed form.
W f_closed(BC bc, int s, const W& u0) {
  const std::size_t deg = static_cast<std::size_t>(s - 1);
  const auto u = Jet<W>::variable(deg, u0);
  const auto x = sqrt(u);
  Jet<W> f(deg);
  switch (bc) {
    case BC::DD:
    case BC::NN: {
      const auto e = exp(x * W(-2));
      const auto coth = (e + W(1)) / (W(1) - e);
      f = (x * coth - W(1)) / (u * W(2));
      break;
    }
    case BC::DN:
    case BC::ND: {
      const auto e = exp(x * W(-2));
      const auto tanh = (W(1) - e) / (e + W(1));
      f = tanh / (x * W(2));
      break;
    }
    case BC::PP: {
      // doubly degenerate levels: sqrt(u)/2 coth(sqrt(u)/2)
      const auto y = x * W(0.5);
      const auto e = exp(x * W(-1));
      const auto coth = (e + W(1)) / (W(1) - e);
      f = (y * coth - W(1)) / u;
      break;
    }
  }
  return (s % 2 == 1) ? f[deg] : W(-f[deg]);
}

/// Hurwitz zeta sum_{i >= 0} (i + q)^(-m) by Euler-Maclaurin, q large.
W hurwitz(int m, const W& q) {
  using boost::math::bernoulli_b2n;
  using boost::math::factorial;
  const W eps = std::numeric_limits<W>::epsilon();
  W sum = pow(q, 1 - m) / W(m - 1) + pow(q, -m) / 2;
  W rising(m);  // m (m+1) ... (m+2k-2)
  W qpow = pow(q, -m - 1);
  W last(0);
  for (int k = 1; k < 200; ++k) {
    if (k > 1) {
      rising *= W(m + 2 * k - 3) * W(m + 2 * k - 2);
      qpow /= q * q;
    }
    const W term = bernoulli_b2n<W>(k) / factorial<W>(static_cast<unsigned>(2 * k)) * rising * qpow;
    if (k > 1 && abs(term) > abs(last)) break;  // asymptotic series turned
    sum += term;
    if (abs(term) < eps * abs(sum)) break;
    last = term;
  }
  return sum;
}

int level_of(BC bc, int j) { return bc == BC::PP ? (j + 1) / 2 : j; }

/// sum_{j > n} (kappa_j + u)^(-s): explicit terms, then a binomial expansion in
/// u with Hurwitz zetas for the remainder.
W f_direct(BC bc, int n, int s, const W& u) {
  const W pi = boost::math::constants::pi<W>();
  const W a_coef = (bc == BC::PP) ? 4 * pi * pi : pi * pi;
  const W delta = (bc == BC::DN || bc == BC::ND) ? W(-0.5) : W(0);
  const int mult = bc == BC::PP ? 2 : 1;
  const double ratio = std::sqrt(std::abs(static_cast<double>(u / a_coef)));
  const int levels = std::max({level_of(bc, n + 1), 60, static_cast<int>(std::ceil(4.0 * ratio)) + 1});
  const int last_mode = bc == BC::PP ? 2 * levels : levels;

  W sum(0);
  for (int j = last_mode; j > n; --j) sum += pow(kappa(bc, j) + u, -s);

  const W eps = std::numeric_limits<W>::epsilon();
  const W q = W(levels + 1) + delta;
  const W x = u / a_coef;
  W rem(0), coef(1), xpow(1);
  for (int i = 0; i < 400; ++i) {
    if (i > 0) {
      coef *= W(s + i - 1);
      coef /= W(i);
      xpow *= -x;
    }
    const W term = coef * xpow * hurwitz(2 * s + 2 * i, q);
    rem += term;
    if (abs(term) < eps * abs(rem) || x == 0) break;
  }
  return sum + W(mult) * pow(a_coef, -s) * rem;
}

}  // namespace

template <class Real>
TailSum<Real> tail_sum(const Real& alpha, const Real& beta, const Real& a, BC bc, int n, int s,
                       TailRoute route) {
  if (s < 1) throw ParameterError("tail_sum: s must be >= 1");
  if (n < 0) throw ParameterError("tail_sum: excluded count must be >= 0");
  if (!(alpha > 0) || !(a > 0)) throw ParameterError("tail_sum: alpha and a must be positive");
  const W aw(a), alw(alpha), bw(beta);
  const W u = aw * aw * bw / alw;
  if (!(kappa(bc, n + 1) + u > 0))
    throw ParameterError("tail_sum: first tail eigenvalue alpha eps + beta is not positive");

  W f;
  const W k1 = kappa(bc, 1);
  if (route == TailRoute::DirectSum || u < -k1 / 4) {
    f = f_direct(bc, n, s, u);
  } else {
    f = (u <= k1 / 4) ? f_series(bc, s, u) : f_closed(bc, s, u);
    for (int j = 1; j <= n; ++j) f -= pow(kappa(bc, j) + u, -s);
  }
  const W value = pow(aw * aw / alw, s) * f;
  return {bc, n, s, static_cast<Real>(value)};
}

template double homogeneous_eigenvalue_t<double>(BC, const double&, int);
template Wide homogeneous_eigenvalue_t<Wide>(BC, const Wide&, int);
template TailSum<double> tail_sum<double>(const double&, const double&, const double&, BC, int, int,
                                          TailRoute);
template TailSum<Wide> tail_sum<Wide>(const Wide&, const Wide&, const Wide&, BC, int, int,
                                      TailRoute);

}  // namespace szeta
