#pragma once

#include <string>
#include <vector>

#include "szeta/extrapolate.hpp"
#include "szeta/greens.hpp"
#include "szeta/precision.hpp"

// Exact reference values: closed-form sum rules, printed digit tables and
// small-eps expansions. Used as ground truth by tests and by `estimate
// --fixtures`.
namespace szeta::fixtures {

struct FixtureInfo {
  std::string id;
  std::string description;
};

/// Catalogue of the fixtures below.
std::vector<FixtureInfo> catalogue();

/// Dirichlet Z(s) of the density 9/(12x+10), s = 1..9, as a rational plus a
/// polynomial in log 2. ParameterError outside 1..9.
template <class Real>
Real horgan_chan_zeta(int s);

/// Orders 1..9 of horgan_chan_zeta.
template <class Real>
ZetaData<Real> horgan_chan_table();

/// Printed rows of the estimate table: q, Z(q)^(-1/q), tail-corrected value.
struct EstimateRow {
  int q;
  std::string waring;
  std::string berry;
};
std::vector<EstimateRow> table2_values();

/// Printed repeated-Shanks tables, column by column (S1..S4).
std::vector<std::vector<std::string>> table3_values();  // from the Waring column
std::vector<std::vector<std::string>> table4_values();  // from the tail-corrected column

/// |value - printed| below one unit in the last printed digit.
bool matches_printed(const Wide& value, const std::string& printed);

/// Number of leading significant digits on which value and reference agree.
int agreeing_digits(const Wide& value, const Wide& reference);

/// Borg string (1+alpha)^2/(1+alpha(x+1/2))^4, a = 1.
double borg_mean_density(double alpha);
/// Z(1) for every boundary condition. ParameterError for alpha <= -1.
double borg_zeta_one(double alpha, BC bc);
/// NN Z(2). The closed form has a removable singularity at alpha = 0; near
/// it a Taylor series is used.
double borg_nn_zeta_two(double alpha);

/// Density 2 + sin(2 pi (x + 1/2) / eps): small-eps series for the
/// fundamental mode.
double oscillating_dd_expansion(double eps);      // exact coefficients, to eps^5
double oscillating_dd_numeric(double eps);        // same series, 4-digit coefficients
double oscillating_shanks_expansion(double eps);  // Shanks S from Z(3..5), to eps^5
double oscillating_nn_expansion(double eps);      // Shanks from Z(2..4), to eps^2

inline constexpr double kOscillatingShanksConstant = 4.9347;
inline constexpr double kOscillatingNNConstant = 4.9336;

/// Horgan-Chan eigenvalue expansion with the higher coefficients included:
///   pi^2 n^2 + 3/8 - 165/(512 pi^2 n^2) + ...
double horgan_chan_asymptotic_eigenvalue(int n);

}  // namespace szeta::fixtures
