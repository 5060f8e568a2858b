#include "szeta/fixtures.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <numbers>

#include "szeta/error.hpp"

namespace szeta::fixtures {

namespace {

struct Term {
  long long num;
  long long den;
  int log_power;
};

// coefficient * log(2)^power
const std::vector<Term>& hc_terms(int s) {
  static const std::vector<std::vector<Term>> table = {
      {{5, 8, 0}, {-2, 3, 1}},
      {{-13, 64, 0}, {4, 9, 2}},
      {{-105, 1024, 0}, {-8, 27, 3}, {7, 24, 1}},
      {{131, 46080, 0}, {16, 81, 4}, {-7, 27, 2}, {95, 864, 1}},
      {{9521, 589824, 0}, {-32, 243, 5}, {35, 162, 3}, {-475, 5184, 2}, {-917, 27648, 1}},
      {{11466667, 2752512000, 0},
       {64, 729, 6},
       {-14, 81, 4},
       {95, 1296, 3},
       {1897, 34560, 2},
       {-13183, 368640, 1}},
      {{-38464127, 31708938240, 0},
       {-128, 2187, 7},
       {98, 729, 5},
       {-665, 11664, 4},
       {-6713, 103680, 3},
       {463043, 9953280, 2},
       {-728683, 147456000, 1}},
      {{-448469829001, 466121392128000, 0},
       {256, 6561, 8},
       {-224, 2187, 6},
       {95, 2187, 5},
       {3857, 58320, 4},
       {-92749, 1866240, 3},
       {8508391, 5225472000, 2},
       {8136221, 1486356480, 1}},
      {{-5652867433, 60881161420800, 0},
       {-512, 19683, 9},
       {56, 729, 7},
       {-95, 2916, 6},
       {-4837, 77760, 5},
       {13261, 276480, 4},
       {7288553, 2322432000, 3},
       {-65171959, 5945425920, 2},
       {1880324004961, 699182088192000, 1}},
  };
  return table[static_cast<std::size_t>(s - 1)];
}

}  // namespace

std::vector<FixtureInfo> catalogue() {
  return {
      {"horgan-chan-zeta", "exact Dirichlet Z(1..9) of 9/(12x+10): rationals plus powers of log 2"},
      {"table2", "printed Z(q)^(-1/q) and tail-corrected estimates, q = 1..9, 10 digits"},
      {"table3", "printed repeated Shanks of the Z(q)^(-1/q) column"},
      {"table4", "printed repeated Shanks of the tail-corrected column, 18 digits"},
      {"borg", "Borg string Z(1) for NN/DN/ND/PP/DD and NN Z(2)"},
      {"oscillating", "small-eps series of E1 for 2 + sin(2 pi (x+1/2)/eps), DD and NN"},
  };
}

template <class Real>
Real horgan_chan_zeta(int s) {
  if (s < 1 || s > 9) throw ParameterError("horgan_chan_zeta: order must be in 1..9");
  using std::log;
  using std::pow;
  const Real l = log(Real(2));
  Real sum(0);
  for (const auto& t : hc_terms(s)) sum += Real(t.num) / Real(t.den) * pow(l, t.log_power);
  return sum;
}

template <class Real>
ZetaData<Real> horgan_chan_table() {
  ZetaData<Real> z;
  z.bc = BC::DD;
  for (int s = 1; s <= 9; ++s) {
    z.orders.push_back(s);
    z.values.push_back(horgan_chan_zeta<Real>(s));
  }
  return z;
}

template double horgan_chan_zeta<double>(int);
template Wide horgan_chan_zeta<Wide>(int);
template ZetaData<double> horgan_chan_table<double>();
template ZetaData<Wide> horgan_chan_table<Wide>();

std::vector<EstimateRow> table2_values() {
  return {
      {1, "6.13866459", "10.22002206"},  {2, "9.80124983", "10.21851148"},
      {3, "10.15503866", "10.21820809"}, {4, "10.20660399", "10.21813692"},
      {5, "10.21580556", "10.21811931"}, {6, "10.21762510", "10.21811486"},
      {7, "10.21800650", "10.21811373"}, {8, "10.21808942", "10.21811344"},
      {9, "10.21810790", "10.21811337"},
  };
}

std::vector<std::vector<std::string>> table3_values() {
  return {
      {"10.19286707426", "10.21540206670", "10.21780418009", "10.21807358764", "10.21810765046",
       "10.21811245123", "10.21811319374"},
      {"10.21809078335", "10.21810761972", "10.21811258058", "10.21811323885", "10.21811332959"},
      {"10.21811465291", "10.21811333956", "10.21811334410"},
      {"10.21811334408"},
  };
}

std::vector<std::vector<std::string>> table4_values() {
  return {
      {"10.2181318565099322", "10.2181151161288641", "10.2181135270306264",
       "10.2181133642743735", "10.2181133468298224", "10.2181133449084580",
       "10.2181133446933714"},
      {"10.2181133603626791", "10.2181133457026718", "10.2181133447356183",
       "10.2181133446706434", "10.2181133446662585"},
      {"10.2181133446673210", "10.2181133446659633", "10.2181133446659411"},
      {"10.2181133446659408"},
  };
}

bool matches_printed(const Wide& value, const std::string& printed) {
  const auto dot = printed.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  const Wide ref(printed);
  return abs(value - ref) < pow(Wide(10), -decimals);
}

int agreeing_digits(const Wide& value, const Wide& reference) {
  if (value == reference) return 50;
  const Wide rel = abs(value - reference) / abs(reference);
  return static_cast<int>(std::floor(static_cast<double>(-log10(rel))));
}

double borg_mean_density(double alpha) {
  if (!(alpha > -1.0)) throw ParameterError("borg: alpha must be > -1");
  return (alpha * alpha + 3.0 * alpha + 3.0) / (3.0 * alpha + 3.0);
}

double borg_zeta_one(double alpha, BC bc) {
  if (!(alpha > -1.0)) throw ParameterError("borg: alpha must be > -1");
  switch (bc) {
    case BC::DD: return 1.0 / 6.0;
    case BC::NN: return (alpha * (2.0 * alpha + 3.0) + 3.0) / (18.0 * (alpha + 1.0));
    case BC::DN: return (alpha + 3.0) / (6.0 * alpha + 6.0);
    case BC::ND: return (2.0 * alpha + 3.0) / 6.0;
    case BC::PP: return (alpha * (alpha + 3.0) + 3.0) / (36.0 * (alpha + 1.0));
  }
  return 0.0;
}

double borg_nn_zeta_two(double alpha) {
  if (!(alpha > -1.0)) throw ParameterError("borg: alpha must be > -1");
  if (std::abs(alpha) < 1e-2) {
    const double c[] = {1.0 / 90.0, 0.0, 43.0 / 1890.0, -43.0 / 1890.0,
                        193.0 / 5670.0, -257.0 / 5670.0, 787.0 / 13860.0};
    double v = 0.0;
    for (int k = 6; k >= 0; --k) v = v * alpha + c[k];
    return v;
  }
  // the two parts cancel to ~alpha^-5; evaluate wide
  const Wide a(alpha);
  const Wide poly = (((((((10 * a + 12) * a + 93) * a + 1422) * a + 6021) * a + 12420) * a + 14220) * a +
                     8640) * a + 2160;
  const Wide first = poly / (810 * pow(a, 4) * (a + 1) * (a + 1));
  const Wide second = 2 * (a + 1) * (a + 2) * (a * (a + 2) + 2) / (3 * pow(a, 5)) * log(a + 1);
  return static_cast<double>(first - second);
}

double oscillating_dd_expansion(double eps) {
  using std::numbers::pi;
  const double e2 = eps * eps, e3 = e2 * eps, e4 = e3 * eps, e5 = e4 * eps;
  const double sp = std::sin(pi / eps);
  return pi * pi / 2.0 - pi * pi / 64.0 * e2 + 0.25 * pi * sp * sp * e3 - 15.0 * pi * pi / 1024.0 * e4 +
         pi * (5.0 * std::sin(4.0 * pi / eps) - 116.0 * std::cos(2.0 * pi / eps) + 116.0) / 1024.0 * e5;
}

double oscillating_dd_numeric(double eps) {
  using std::numbers::pi;
  const double e2 = eps * eps, e3 = e2 * eps, e4 = e3 * eps, e5 = e4 * eps;
  const double c2 = std::cos(2.0 * pi / eps), s4 = std::sin(4.0 * pi / eps);
  return 4.9348 - 0.1542 * e2 + e3 * (0.3927 - 0.3927 * c2) - 0.1446 * e4 +
         e5 * (0.0153 * s4 - 0.3559 * c2 + 0.3559);
}

double oscillating_shanks_expansion(double eps) {
  using std::numbers::pi;
  const double e2 = eps * eps, e3 = e2 * eps, e4 = e3 * eps, e5 = e4 * eps;
  const double c2 = std::cos(2.0 * pi / eps), s4 = std::sin(4.0 * pi / eps);
  return kOscillatingShanksConstant - 0.1543 * e2 + e3 * (0.3929 - 0.3929 * c2) - 0.1463 * e4 +
         e5 * (0.0155 * s4 - 0.3605 * c2 + 0.3605);
}

double oscillating_nn_expansion(double eps) {
  using std::numbers::pi;
  const double c2 = std::cos(2.0 * pi / eps), c4 = std::cos(4.0 * pi / eps);
  return kOscillatingNNConstant + eps * (0.7852 * c2 - 0.7852) +
         eps * eps * (-0.3122 * c2 + 0.01562 * c4 - 0.1084);
}

double horgan_chan_asymptotic_eigenvalue(int n) {
  using std::numbers::pi;
  const double k = pi * pi * n * n;
  return k + 3.0 / 8.0 - 165.0 / (512.0 * k) + 73179.0 / (81920.0 * k * k) -
         81997443.0 / (14680064.0 * k * k * k);
}

}  // namespace szeta::fixtures
