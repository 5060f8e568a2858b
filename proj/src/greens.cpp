#include "szeta/greens.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "szeta/error.hpp"

namespace szeta {

std::string to_string(BC bc) {
  switch (bc) {
    case BC::DD: return "DD";
    case BC::NN: return "NN";
    case BC::DN: return "DN";
    case BC::ND: return "ND";
    case BC::PP: return "PP";
  }
  return "??";
}

BC parse_bc(const std::string& s) {
  std::string u(s);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  for (BC bc : kAllBCs)
    if (to_string(bc) == u) return bc;
  throw ParameterError("unknown boundary condition '" + s + "'");
}

namespace {
void check(double a, double x) {
  if (!(a > 0.0)) throw ParameterError("green: a must be positive");
  if (std::abs(x) > 0.5 * a * (1.0 + 1e-14))
    throw DomainError("green: coordinate outside [-a/2, a/2]");
}
}  // namespace

double green(BC bc, double a, double x, double y) {
  check(a, x);
  check(a, y);
  return x >= y ? green_plus_unchecked(bc, a, x, y) : green_plus_unchecked(bc, a, y, x);
}

double green_plus(BC bc, double a, double x, double y) {
  check(a, x);
  check(a, y);
  if (x < y) throw OrderingError("green_plus: requires x >= y");
  return green_plus_unchecked(bc, a, x, y);
}

double green_diagonal(BC bc, double a, double x) {
  check(a, x);
  switch (bc) {
    case BC::DD: return a / 4.0 - x * x / a;
    case BC::NN: return a / 12.0 + x * x / a;
    case BC::DN: return x + a / 2.0;
    case BC::ND: return -x + a / 2.0;
    case BC::PP: return a / 12.0;
  }
  return 0.0;
}

}  // namespace szeta
