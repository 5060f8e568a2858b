#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace szeta {

enum class Family { Uniform, Borg, HorganChan, Oscillating, Gottlieb, Table };

std::string to_string(Family f);

namespace detail {
struct DensityModel;
}

/// Density of a string on [-a/2, a/2]. Immutable; copies share the model.
///
/// Borg, Horgan-Chan and oscillating profiles are defined for a = 1 only.
/// Built-in families carry analytic first and second derivatives; tables use
/// a clamped cubic spline and fourth-order central differences.
class DensityProfile {
 public:
  static DensityProfile uniform(double a = 1.0);
  /// (1+alpha)^2 / (1 + alpha (x + 1/2))^4, alpha > -1.
  static DensityProfile borg(double alpha);
  /// 9 / (12 x + 10).
  static DensityProfile horgan_chan();
  /// 2 + sin(2 pi (x + 1/2) / eps), eps > 0.
  static DensityProfile oscillating(double eps);
  /// Knots must be strictly increasing; the string spans [x.front(), x.back()],
  /// which must be symmetric about the origin.
  static DensityProfile table(std::vector<double> x, std::vector<double> sigma);
  /// Two-column CSV "x,sigma"; an optional non-numeric header line is skipped.
  static DensityProfile table_from_csv(const std::filesystem::path& path);

  double length() const noexcept { return a_; }
  double half_length() const noexcept { return 0.5 * a_; }
  Family family() const noexcept;
  std::string describe() const;

  /// Checked evaluation: DomainError for |x| > a/2, ProfileError if the value
  /// is not positive and finite.
  double evaluate(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  /// Unchecked evaluation for inner loops.
  double operator()(double x) const noexcept;

  /// Interior points where the profile is only piecewise smooth (table knots).
  std::span<const double> breakpoints() const noexcept;

  /// Shortest length over which the density changes appreciably (oscillation
  /// period, distance to the nearest singularity, knot spacing). Used to size
  /// quadrature panels.
  double feature_scale() const noexcept;

  /// Table profiles only: somewhere the spline bends by more than a quarter of
  /// the local density over one knot spacing. The knots then do not resolve
  /// the profile, and sum rules and asymptotics may be unreliable.
  bool is_rough() const noexcept;

  /// Internal handle, for transforms built on top of an existing profile.
  const std::shared_ptr<const detail::DensityModel>& model() const noexcept { return model_; }

 private:
  DensityProfile(std::shared_ptr<const detail::DensityModel> m, double a);
  void validate() const;

  std::shared_ptr<const detail::DensityModel> model_;
  double a_;

  friend DensityProfile gottlieb_transform(const DensityProfile&, double);
};

/// Isospectral (Dirichlet) Moebius transform of `base`:
///   Sigma~(x) = xi'(x)^2 Sigma(xi(x)),
///   xi(x) = (a alpha (a + 2x) + 4x) / (2 a alpha + 4 alpha x + 4).
/// Requires alpha > -1/a; otherwise the pole of xi lies in the closed domain.
DensityProfile gottlieb_transform(const DensityProfile& base, double alpha);

/// Moebius map used by gottlieb_transform, with its first three derivatives.
struct MoebiusMap {
  double a;
  double alpha;
  double operator()(double x) const noexcept;
  double d1(double x) const noexcept;
  double d2(double x) const noexcept;
  double d3(double x) const noexcept;
};

/// Minimum panels per breakpoint interval so that every panel is shorter
/// than the profile's feature scale.
int quadrature_panels(const DensityProfile& p);

/// (1/a) * integral of Sigma over the string.
double mean_density(const DensityProfile& p);

/// sigma(x) = integral_{-a/2}^{x} sqrt(Sigma(y)) dy.
double sigma(const DensityProfile& p, double x);

/// Tabulated sigma(x) for repeated evaluation: cumulative sums over fixed
/// panels plus a Gauss-Legendre partial panel.
class SigmaIntegral {
 public:
  explicit SigmaIntegral(const DensityProfile& p);
  double operator()(double x) const;
  double total() const noexcept { return cumulative_.back(); }

 private:
  DensityProfile profile_;
  std::vector<double> edges_;
  std::vector<double> cumulative_;
};

/// Parses the profile grammar:
///   uniform | uniform:a=<f> | borg:alpha=<f> | horgan-chan | oscillating:eps=<f>
///   | gottlieb:base=<spec>,alpha=<f> | table:path=<csv>
/// Throws ParameterError on malformed input.
DensityProfile parse_profile(const std::string& spec);

}  // namespace szeta
