#pragma once

#include "szeta/density.hpp"
#include "szeta/greens.hpp"
#include "szeta/precision.hpp"

namespace szeta {

/// E_n ~ alpha * eps_n + beta, eps_n the homogeneous eigenvalues on the same
/// interval.
struct AsymptoticCoefficients {
  double alpha = 1.0;
  double beta = 0.0;
};

/// alpha = a^2 / sigma(a/2)^2,
/// beta  = int (4 S S'' - 5 S'^2) / (16 S^(5/2)) dx / int sqrt(S) dx.
AsymptoticCoefficients asym_coeffs(const DensityProfile& p);

/// n-th nonzero eigenvalue of -d^2/dx^2 on [-a/2, a/2], n >= 1. PP levels are
/// listed with multiplicity: n = 1, 2 -> 4 pi^2 / a^2, n = 3, 4 -> 16 pi^2 / a^2.
double homogeneous_eigenvalue(BC bc, double a, int n);

template <class Real>
Real homogeneous_eigenvalue_t(BC bc, const Real& a, int n);

enum class TailRoute {
  ClosedForm,  // coth/tanh closed forms differentiated in beta
  DirectSum    // explicit terms plus an Euler-Maclaurin remainder
};

template <class Real>
struct TailSum {
  BC bc = BC::DD;
  int n_excluded = 0;
  int s = 1;
  Real value{};
};

/// sum_{j > n} (alpha eps_j + beta)^(-s).
///
/// Both routes work internally with at least 50 digits. ParameterError when
/// s < 1, n < 0, alpha <= 0 or alpha eps_{n+1} + beta <= 0.
template <class Real>
TailSum<Real> tail_sum(const Real& alpha, const Real& beta, const Real& a, BC bc, int n, int s,
                       TailRoute route = TailRoute::ClosedForm);

inline TailSum<double> tail_sum(const AsymptoticCoefficients& c, BC bc, int n, int s,
                                double a = 1.0, TailRoute route = TailRoute::ClosedForm) {
  return tail_sum<double>(c.alpha, c.beta, a, bc, n, s, route);
}

extern template double homogeneous_eigenvalue_t<double>(BC, const double&, int);
extern template Wide homogeneous_eigenvalue_t<Wide>(BC, const Wide&, int);
extern template TailSum<double> tail_sum<double>(const double&, const double&, const double&, BC,
                                                 int, int, TailRoute);
extern template TailSum<Wide> tail_sum<Wide>(const Wide&, const Wide&, const Wide&, BC, int, int,
                                             TailRoute);

}  // namespace szeta
