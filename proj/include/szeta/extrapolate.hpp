#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "szeta/asymptotics.hpp"
#include "szeta/error.hpp"
#include "szeta/sumrules.hpp"

namespace szeta {

/// Z(s) values keyed by order, from a computed table or from exact fixtures.
template <class Real>
struct ZetaData {
  BC bc = BC::DD;
  std::vector<int> orders;
  std::vector<Real> values;

  bool has(int s) const { return std::find(orders.begin(), orders.end(), s) != orders.end(); }
  const Real& at(int s) const {
    auto it = std::find(orders.begin(), orders.end(), s);
    if (it == orders.end()) throw DataError("order " + std::to_string(s) + " missing");
    return values[static_cast<std::size_t>(it - orders.begin())];
  }
};

inline ZetaData<double> to_zeta_data(const SumRuleTable& t) { return {t.bc, t.orders, t.values}; }

/// alpha, beta and the string length, for tail corrections.
template <class Real>
struct TailModel {
  Real alpha = Real(1);
  Real beta = Real(0);
  Real a = Real(1);
};

inline TailModel<double> to_tail_model(const AsymptoticCoefficients& c, double a = 1.0) {
  return {c.alpha, c.beta, a};
}

template <class Real>
struct BoundPair {
  int s = 0;
  Real lower{};  // Z(s+1)^(-1/(s+1))
  Real upper{};  // Z(s) / Z(s+1)
};

enum class EstimateMethod { Waring, Berry };

inline std::string to_string(EstimateMethod m) { return m == EstimateMethod::Waring ? "waring" : "berry"; }

template <class Real>
struct EstimateSequence {
  EstimateMethod method = EstimateMethod::Waring;
  std::vector<int> q;
  std::vector<Real> estimates;
};

template <class Real>
struct ShanksColumn {
  std::vector<Real> values;
  std::vector<bool> flagged;  // denominator vanished; middle value copied
};

template <class Real>
struct ShanksTable {
  std::vector<ShanksColumn<Real>> columns;  // columns[0] is the input sequence

  /// Last entry of the deepest column.
  Real best() const { return columns.back().values.back(); }
};

namespace detail {

template <class Real>
Real root_inverse(const Real& z, int q) {
  using std::pow;
  return pow(z, Real(-1) / Real(q));
}

template <class Real>
void require_positive(const Real& z, int s) {
  if (!(z > 0)) throw DataError("Z(" + std::to_string(s) + ") is not positive");
}

}  // namespace detail

/// Z(q)^(-1/q) for every order in the data: lower bounds on E_1.
template <class Real>
EstimateSequence<Real> waring_sequence(const ZetaData<Real>& z) {
  EstimateSequence<Real> out;
  out.method = EstimateMethod::Waring;
  for (std::size_t i = 0; i < z.orders.size(); ++i) {
    detail::require_positive(z.values[i], z.orders[i]);
    out.q.push_back(z.orders[i]);
    out.estimates.push_back(detail::root_inverse(z.values[i], z.orders[i]));
  }
  return out;
}

template <class Real>
BoundPair<Real> euler_bounds(const ZetaData<Real>& z, int s) {
  const Real& zs = z.at(s);
  const Real& zs1 = z.at(s + 1);
  detail::require_positive(zs, s);
  detail::require_positive(zs1, s + 1);
  return {s, detail::root_inverse(zs1, s + 1), Real(zs / zs1)};
}

/// [Z(q) - tail_1(q)]^(-1/q).
template <class Real>
Real berry_estimate(const ZetaData<Real>& z, const TailModel<Real>& m, BC bc, int q) {
  const Real& zq = z.at(q);
  detail::require_positive(zq, q);
  const Real tail = tail_sum<Real>(m.alpha, m.beta, m.a, bc, 1, q).value;
  const Real rest = zq - tail;
  if (!(rest > 0))
    throw TailInconsistencyError("Z(" + std::to_string(q) + ") does not exceed its tail estimate");
  return detail::root_inverse(rest, q);
}

template <class Real>
EstimateSequence<Real> berry_sequence(const ZetaData<Real>& z, const TailModel<Real>& m, BC bc) {
  EstimateSequence<Real> out;
  out.method = EstimateMethod::Berry;
  for (int q : z.orders) {
    out.q.push_back(q);
    out.estimates.push_back(berry_estimate(z, m, bc, q));
  }
  return out;
}

/// E_n from order m = q - n + 1:
///   [Z(m) - tail_n(m) - sum_{j<n} E_j^(-m)]^(-1/m),
/// with E_1..E_{n-1} taken from `known`.
template <class Real>
Real excited_estimate(const ZetaData<Real>& z, const TailModel<Real>& tm, BC bc, int q, int n,
                      const std::vector<Real>& known) {
  using std::pow;
  if (n < 1) throw ParameterError("excited_estimate: n must be >= 1");
  const int m = q - n + 1;
  if (m < 1) throw ParameterError("excited_estimate: q - n + 1 must be >= 1");
  if (static_cast<int>(known.size()) < n - 1)
    throw ParameterError("excited_estimate: need the n-1 lower eigenvalues");
  const Real& zm = z.at(m);
  detail::require_positive(zm, m);
  Real rest = zm - tail_sum<Real>(tm.alpha, tm.beta, tm.a, bc, n, m).value;
  for (int j = 0; j < n - 1; ++j) rest -= pow(known[j], Real(-m));
  if (!(rest > 0))
    throw TailInconsistencyError("excited-state bracket is not positive at order " +
                                 std::to_string(m));
  return detail::root_inverse(rest, m);
}

/// One Shanks pass:
///   (s_{k-1} s_{k+1} - s_k^2) / (s_{k-1} + s_{k+1} - 2 s_k).
/// A denominator below 1e-14 |s_k| counts as converged: s_k is copied and
/// the entry flagged. Sequences shorter than 3 give an empty column.
template <class Real>
ShanksColumn<Real> shanks(const std::vector<Real>& s) {
  using std::abs;
  ShanksColumn<Real> out;
  if (s.size() < 3) return out;
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    const Real den = s[k - 1] + s[k + 1] - 2 * s[k];
    if (abs(den) < Real(1e-14) * abs(s[k])) {
      out.values.push_back(s[k]);
      out.flagged.push_back(true);
    } else {
      out.values.push_back(Real((s[k - 1] * s[k + 1] - s[k] * s[k]) / den));
      out.flagged.push_back(false);
    }
  }
  return out;
}

template <class Real>
ShanksTable<Real> shanks_table(const std::vector<Real>& s) {
  ShanksTable<Real> t;
  t.columns.push_back({s, std::vector<bool>(s.size(), false)});
  while (t.columns.back().values.size() >= 3) t.columns.push_back(shanks(t.columns.back().values));
  return t;
}

}  // namespace szeta
