#pragma once

#include <string>

namespace szeta {

enum class BC { DD, NN, DN, ND, PP };

inline constexpr BC kAllBCs[] = {BC::DD, BC::NN, BC::DN, BC::ND, BC::PP};

std::string to_string(BC bc);
/// Case-insensitive "dd", "nn", "dn", "nd", "pp"; ParameterError otherwise.
BC parse_bc(const std::string& s);

/// NN and PP carry a zero mode; their Green's function is the regularized one
/// with the constant mode projected out.
constexpr bool has_zero_mode(BC bc) noexcept { return bc == BC::NN || bc == BC::PP; }

// Green's functions of -d^2/dx^2 on [-a/2, a/2]. DD on the left end means the
// function vanishes at x = -a/2 (DN: Dirichlet at -a/2, Neumann at +a/2).

/// G(x, y), symmetric. DomainError outside the square.
double green(BC bc, double a, double x, double y);

/// Ordered branch G_+(x, y) for x >= y. OrderingError if x < y.
double green_plus(BC bc, double a, double x, double y);

/// G(x, x).
double green_diagonal(BC bc, double a, double x);

/// Unchecked ordered branch for inner loops (caller guarantees x >= y).
inline double green_plus_unchecked(BC bc, double a, double x, double y) noexcept {
  switch (bc) {
    case BC::DD: return (a - 2.0 * x) * (a + 2.0 * y) / (4.0 * a);
    case BC::NN: return (a * a + 6.0 * a * (y - x) + 6.0 * (x * x + y * y)) / (12.0 * a);
    case BC::DN: return y + 0.5 * a;
    case BC::ND: return 0.5 * a - x;
    case BC::PP: {
      const double d = x - y;
      return (a * a - 6.0 * a * d + 6.0 * d * d) / (12.0 * a);
    }
  }
  return 0.0;
}

}  // namespace szeta
