#include "szeta/density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "szeta/error.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

namespace detail {

struct DensityModel {
  virtual ~DensityModel() = default;
  virtual Family family() const = 0;
  virtual std::string describe() const = 0;
  virtual double value(double x) const = 0;
  virtual double d1(double x) const = 0;
  virtual double d2(double x) const = 0;
  virtual double feature_scale() const = 0;
  virtual std::span<const double> breakpoints() const { return {}; }
  virtual bool rough() const { return false; }
};

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Uniform final : DensityModel {
  double a;
  explicit Uniform(double a_) : a(a_) {}
  Family family() const override { return Family::Uniform; }
  std::string describe() const override { return a == 1.0 ? "uniform" : "uniform:a=" + fmt(a); }
  double value(double) const override { return 1.0; }
  double d1(double) const override { return 0.0; }
  double d2(double) const override { return 0.0; }
  double feature_scale() const override { return a; }
};

struct Borg final : DensityModel {
  double alpha;
  explicit Borg(double al) : alpha(al) {}
  Family family() const override { return Family::Borg; }
  std::string describe() const override { return "borg:alpha=" + fmt(alpha); }
  double u(double x) const { return 1.0 + alpha * (x + 0.5); }
  double value(double x) const override {
    const double s = 1.0 + alpha;
    return s * s / std::pow(u(x), 4);
  }
  double d1(double x) const override {
    const double s = 1.0 + alpha;
    return -4.0 * alpha * s * s / std::pow(u(x), 5);
  }
  double d2(double x) const override {
    const double s = 1.0 + alpha;
    return 20.0 * alpha * alpha * s * s / std::pow(u(x), 6);
  }
  double feature_scale() const override {
    if (alpha == 0.0) return 1.0;
    // pole at x + 1/2 = -1/alpha; distance to the nearer end of [0, 1]
    const double pole = -1.0 / alpha;
    const double dist = pole < 0.0 ? -pole : pole - 1.0;
    return std::clamp(dist, 1e-3, 1.0);
  }
};

struct HorganChan final : DensityModel {
  Family family() const override { return Family::HorganChan; }
  std::string describe() const override { return "horgan-chan"; }
  double value(double x) const override { return 9.0 / (12.0 * x + 10.0); }
  double d1(double x) const override {
    const double u = 12.0 * x + 10.0;
    return -108.0 / (u * u);
  }
  double d2(double x) const override {
    const double u = 12.0 * x + 10.0;
    return 2592.0 / (u * u * u);
  }
  double feature_scale() const override { return 1.0 / 3.0; }
};

struct Oscillating final : DensityModel {
  double eps;
  explicit Oscillating(double e) : eps(e) {}
  Family family() const override { return Family::Oscillating; }
  std::string describe() const override { return "oscillating:eps=" + fmt(eps); }
  double k() const { return 2.0 * std::numbers::pi / eps; }
  double value(double x) const override { return 2.0 + std::sin(k() * (x + 0.5)); }
  double d1(double x) const override { return k() * std::cos(k() * (x + 0.5)); }
  double d2(double x) const override { return -k() * k() * std::sin(k() * (x + 0.5)); }
  double feature_scale() const override { return std::min(1.0, eps); }
};

struct Gottlieb final : DensityModel {
  std::shared_ptr<const DensityModel> base;
  MoebiusMap xi;
  std::vector<double> mapped;
  Gottlieb(std::shared_ptr<const DensityModel> b, double a, double alpha)
      : base(std::move(b)), xi{a, alpha} {
    // xi(x) = (A x + B) / (C x + A); pull the base breakpoints back through it
    const double A = 2.0 * a * alpha + 4.0, B = a * a * alpha, C = 4.0 * alpha;
    for (double y : base->breakpoints()) mapped.push_back((A * y - B) / (A - C * y));
  }
  Family family() const override { return Family::Gottlieb; }
  std::string describe() const override {
    return "gottlieb:base=" + base->describe() + ",alpha=" + fmt(xi.alpha);
  }
  double value(double x) const override {
    const double t = xi.d1(x);
    return t * t * base->value(xi(x));
  }
  double d1(double x) const override {
    const double y = xi(x), p1 = xi.d1(x), p2 = xi.d2(x);
    return 2.0 * p1 * p2 * base->value(y) + p1 * p1 * p1 * base->d1(y);
  }
  double d2(double x) const override {
    const double y = xi(x), p1 = xi.d1(x), p2 = xi.d2(x), p3 = xi.d3(x);
    return base->value(y) * (2.0 * p2 * p2 + 2.0 * p1 * p3) + base->d1(y) * 5.0 * p1 * p1 * p2 +
           base->d2(y) * p1 * p1 * p1 * p1;
  }
  double feature_scale() const override {
    double s = base->feature_scale();
    if (xi.alpha != 0.0) {
      // pole of xi at x = -a/2 - 1/alpha
      const double pole = -0.5 * xi.a - 1.0 / xi.alpha;
      const double dist =
          pole < -0.5 * xi.a ? -0.5 * xi.a - pole : pole - 0.5 * xi.a;
      s = std::min(s, std::max(dist, 1e-3 * xi.a));
    }
    return s;
  }
  std::span<const double> breakpoints() const override { return mapped; }
};

// Clamped cubic spline. End slopes from one-sided three-point differences.
struct Table final : DensityModel {
  std::vector<double> x, y, m2;  // m2: second derivatives at knots
  std::vector<double> interior;
  double a;
  bool is_rough = false;

  Table(std::vector<double> xs, std::vector<double> ys) : x(std::move(xs)), y(std::move(ys)) {
    const std::size_t n = x.size();
    a = x.back() - x.front();
    auto slope3 = [&](std::size_t i0, std::size_t i1, std::size_t i2) {
      // derivative at x[i0] of the parabola through three knots
      const double h1 = x[i1] - x[i0], h2 = x[i2] - x[i0];
      return (y[i1] - y[i0]) * h2 / (h1 * (h2 - h1)) - (y[i2] - y[i0]) * h1 / (h2 * (h2 - h1));
    };
    const double s0 = n >= 3 ? slope3(0, 1, 2) : (y[1] - y[0]) / (x[1] - x[0]);
    const double sn = n >= 3 ? slope3(n - 1, n - 2, n - 3) : s0;

    // tridiagonal system for the knot second derivatives (Thomas algorithm)
    std::vector<double> sub(n), diag(n), sup(n), rhs(n);
    const double h0 = x[1] - x[0];
    diag[0] = h0 / 3.0;
    sup[0] = h0 / 6.0;
    rhs[0] = (y[1] - y[0]) / h0 - s0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double hl = x[i] - x[i - 1], hr = x[i + 1] - x[i];
      sub[i] = hl / 6.0;
      diag[i] = (hl + hr) / 3.0;
      sup[i] = hr / 6.0;
      rhs[i] = (y[i + 1] - y[i]) / hr - (y[i] - y[i - 1]) / hl;
    }
    const double hn = x[n - 1] - x[n - 2];
    sub[n - 1] = hn / 6.0;
    diag[n - 1] = hn / 3.0;
    rhs[n - 1] = sn - (y[n - 1] - y[n - 2]) / hn;
    for (std::size_t i = 1; i < n; ++i) {
      const double f = sub[i] / diag[i - 1];
      diag[i] -= f * sup[i - 1];
      rhs[i] -= f * rhs[i - 1];
    }
    m2.assign(n, 0.0);
    m2[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) m2[i] = (rhs[i] - sup[i] * m2[i + 1]) / diag[i];

    interior.assign(x.begin() + 1, x.end() - 1);

    // bending over one knot spacing, relative to the local density
    double bend = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double hl = i > 0 ? x[i] - x[i - 1] : 0.0;
      const double hr = i + 1 < n ? x[i + 1] - x[i] : 0.0;
      const double h = std::max(hl, hr);
      bend = std::max(bend, std::abs(m2[i]) * h * h / y[i]);
    }
    is_rough = bend > 0.25;
  }

  Family family() const override { return Family::Table; }
  std::string describe() const override { return "table"; }

  // Piece index; points outside the knot range use the end pieces.
  std::size_t piece(double t) const {
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    return std::min(i, x.size() - 2);
  }
  double value(double t) const override {
    const std::size_t i = piece(t);
    const double h = x[i + 1] - x[i];
    const double A = (x[i + 1] - t) / h, B = (t - x[i]) / h;
    return A * y[i] + B * y[i + 1] +
           ((A * A * A - A) * m2[i] + (B * B * B - B) * m2[i + 1]) * h * h / 6.0;
  }
  double fd_step() const { return 1e-4 * a; }
  double d1(double t) const override {
    const double h = fd_step();
    return (-value(t + 2 * h) + 8 * value(t + h) - 8 * value(t - h) + value(t - 2 * h)) /
           (12.0 * h);
  }
  double d2(double t) const override {
    const double h = fd_step();
    return (-value(t + 2 * h) + 16 * value(t + h) - 30 * value(t) + 16 * value(t - h) -
            value(t - 2 * h)) /
           (12.0 * h * h);
  }
  double feature_scale() const override {
    double s = a;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) s = std::min(s, x[i + 1] - x[i]);
    return s;
  }
  std::span<const double> breakpoints() const override { return interior; }
  bool rough() const override { return is_rough; }
};

}  // namespace
}  // namespace detail

std::string to_string(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::Borg: return "borg";
    case Family::HorganChan: return "horgan_chan";
    case Family::Oscillating: return "oscillating";
    case Family::Gottlieb: return "gottlieb";
    case Family::Table: return "table";
  }
  return "unknown";
}

double MoebiusMap::operator()(double x) const noexcept {
  return (a * alpha * (a + 2.0 * x) + 4.0 * x) / (2.0 * a * alpha + 4.0 * alpha * x + 4.0);
}
double MoebiusMap::d1(double x) const noexcept {
  const double den = 4.0 * alpha * x + 2.0 * a * alpha + 4.0;
  return 16.0 * (1.0 + a * alpha) / (den * den);
}
double MoebiusMap::d2(double x) const noexcept {
  const double den = 4.0 * alpha * x + 2.0 * a * alpha + 4.0;
  return -2.0 * 4.0 * alpha * 16.0 * (1.0 + a * alpha) / (den * den * den);
}
double MoebiusMap::d3(double x) const noexcept {
  const double den = 4.0 * alpha * x + 2.0 * a * alpha + 4.0;
  return 6.0 * 16.0 * alpha * alpha * 16.0 * (1.0 + a * alpha) / (den * den * den * den);
}

DensityProfile::DensityProfile(std::shared_ptr<const detail::DensityModel> m, double a)
    : model_(std::move(m)), a_(a) {
  validate();
}

void DensityProfile::validate() const {
  if (!(a_ > 0.0) || !std::isfinite(a_)) throw ProfileError("string length must be positive");
  constexpr int kSamples = 1001;
  for (int i = 0; i < kSamples; ++i) {
    const double x = -0.5 * a_ + a_ * i / (kSamples - 1);
    const double v = model_->value(x);
    if (!(v > 0.0) || !std::isfinite(v))
      throw ProfileError("density not positive at x = " + std::to_string(x) + " (" +
                         model_->describe() + ")");
  }
}

DensityProfile DensityProfile::uniform(double a) {
  if (!(a > 0.0)) throw ParameterError("uniform: a must be positive");
  return {std::make_shared<detail::Uniform>(a), a};
}

DensityProfile DensityProfile::borg(double alpha) {
  if (!(alpha > -1.0)) throw ParameterError("borg: alpha must be > -1");
  return {std::make_shared<detail::Borg>(alpha), 1.0};
}

DensityProfile DensityProfile::horgan_chan() { return {std::make_shared<detail::HorganChan>(), 1.0}; }

DensityProfile DensityProfile::oscillating(double eps) {
  if (!(eps > 0.0)) throw ParameterError("oscillating: eps must be positive");
  return {std::make_shared<detail::Oscillating>(eps), 1.0};
}

DensityProfile DensityProfile::table(std::vector<double> x, std::vector<double> sigma) {
  if (x.size() != sigma.size() || x.size() < 2)
    throw ProfileError("table: need at least two (x, sigma) pairs of equal length");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i + 1] > x[i])) throw ProfileError("table: knots must be strictly increasing");
  const double a = x.back() - x.front();
  if (std::abs(x.front() + x.back()) > 1e-12 * a)
    throw ProfileError("table: knots must span a symmetric interval [-a/2, a/2]");
  return {std::make_shared<detail::Table>(std::move(x), std::move(sigma)), a};
}

DensityProfile DensityProfile::table_from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ProfileError("table: cannot open " + path.string());
  std::vector<double> xs, ys;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double xv, yv;
    if (!(ls >> xv >> yv)) {
      if (first) {
        first = false;
        continue;
      }
      throw ProfileError("table: malformed line '" + line + "'");
    }
    first = false;
    xs.push_back(xv);
    ys.push_back(yv);
  }
  return table(std::move(xs), std::move(ys));
}

Family DensityProfile::family() const noexcept { return model_->family(); }
std::string DensityProfile::describe() const { return model_->describe(); }

double DensityProfile::evaluate(double x) const {
  if (std::abs(x) > 0.5 * a_ * (1.0 + 1e-14))
    throw DomainError("density: x = " + std::to_string(x) + " outside the string");
  const double v = model_->value(x);
  if (!(v > 0.0) || !std::isfinite(v)) throw ProfileError("density not positive");
  return v;
}

double DensityProfile::derivative(double x) const {
  if (std::abs(x) > 0.5 * a_ * (1.0 + 1e-14)) throw DomainError("density: x outside the string");
  return model_->d1(x);
}

double DensityProfile::second_derivative(double x) const {
  if (std::abs(x) > 0.5 * a_ * (1.0 + 1e-14)) throw DomainError("density: x outside the string");
  return model_->d2(x);
}

double DensityProfile::operator()(double x) const noexcept { return model_->value(x); }

std::span<const double> DensityProfile::breakpoints() const noexcept { return model_->breakpoints(); }
double DensityProfile::feature_scale() const noexcept { return model_->feature_scale(); }
bool DensityProfile::is_rough() const noexcept { return model_->rough(); }

DensityProfile gottlieb_transform(const DensityProfile& base, double alpha) {
  const double a = base.length();
  if (!(alpha * a > -1.0))
    throw ParameterError("gottlieb: alpha must exceed -1/a (Moebius pole inside the string)");
  if (alpha == 0.0) return base;
  return {std::make_shared<detail::Gottlieb>(base.model(), a, alpha), a};
}

int quadrature_panels(const DensityProfile& p) {
  const double total = std::ceil(p.length() / p.feature_scale());
  const double intervals = 1.0 + static_cast<double>(p.breakpoints().size());
  return std::max(1, static_cast<int>(std::ceil(total / intervals)));
}

double mean_density(const DensityProfile& p) {
  const double h = p.half_length();
  auto r = quad::integrate([&](double x) { return p(x); }, -h, h, 1e-14, p.breakpoints(),
                           quadrature_panels(p));
  return r.value / p.length();
}

double sigma(const DensityProfile& p, double x) {
  const double h = p.half_length();
  if (std::abs(x) > h * (1.0 + 1e-14)) throw DomainError("sigma: x outside the string");
  if (x <= -h) return 0.0;
  auto r = quad::integrate([&](double t) { return std::sqrt(p(t)); }, -h, x, 1e-14,
                           p.breakpoints(), quadrature_panels(p));
  return r.value;
}

SigmaIntegral::SigmaIntegral(const DensityProfile& p) : profile_(p) {
  const double h = p.half_length();
  const int panels = std::max(64, 8 * static_cast<int>(std::ceil(p.length() / p.feature_scale())));
  edges_.resize(panels + 1);
  cumulative_.assign(panels + 1, 0.0);
  const auto& rule = quad::cached_rule(20);
  for (int k = 0; k <= panels; ++k) edges_[k] = -h + p.length() * k / panels;
  for (int k = 0; k < panels; ++k) {
    const double lo = edges_[k], hi = edges_[k + 1];
    double s = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      s += rule.weights[j] * std::sqrt(p(lo + 0.5 * (hi - lo) * (rule.nodes[j] + 1.0)));
    cumulative_[k + 1] = cumulative_[k] + 0.5 * (hi - lo) * s;
  }
}

double SigmaIntegral::operator()(double x) const {
  const double h = profile_.half_length();
  if (std::abs(x) > h * (1.0 + 1e-14)) throw DomainError("sigma: x outside the string");
  x = std::clamp(x, -h, h);
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  std::size_t k = it == edges_.begin() ? 0 : static_cast<std::size_t>(it - edges_.begin()) - 1;
  k = std::min(k, edges_.size() - 2);
  const double lo = edges_[k];
  if (x == lo) return cumulative_[k];
  const auto& rule = quad::cached_rule(20);
  double s = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    s += rule.weights[j] * std::sqrt(profile_(lo + 0.5 * (x - lo) * (rule.nodes[j] + 1.0)));
  return cumulative_[k] + 0.5 * (x - lo) * s;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParameterError("profile spec: bad number for " + what + ": '" + text + "'");
  }
}

// "key=value" with the given key, or ParameterError.
std::string expect_kv(const std::string& body, const std::string& key) {
  const std::string prefix = key + "=";
  if (body.rfind(prefix, 0) != 0)
    throw ParameterError("profile spec: expected '" + prefix + "...', got '" + body + "'");
  return body.substr(prefix.size());
}

}  // namespace

DensityProfile parse_profile(const std::string& raw) {
  const std::string spec = trim(raw);
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);

  if (head == "uniform") {
    if (body.empty()) return DensityProfile::uniform();
    return DensityProfile::uniform(parse_number(expect_kv(body, "a"), "a"));
  }
  if (head == "horgan-chan" || head == "horgan_chan") {
    if (!body.empty()) throw ParameterError("profile spec: horgan-chan takes no parameters");
    return DensityProfile::horgan_chan();
  }
  if (head == "borg") return DensityProfile::borg(parse_number(expect_kv(body, "alpha"), "alpha"));
  if (head == "oscillating")
    return DensityProfile::oscillating(parse_number(expect_kv(body, "eps"), "eps"));
  if (head == "table") return DensityProfile::table_from_csv(expect_kv(body, "path"));
  if (head == "gottlieb") {
    // base spec may itself contain ':' and ','; alpha is the last parameter
    const auto cut = body.rfind(",alpha=");
    if (cut == std::string::npos)
      throw ParameterError("profile spec: gottlieb needs base=<spec>,alpha=<f>");
    const std::string base = expect_kv(body.substr(0, cut), "base");
    const double alpha = parse_number(body.substr(cut + 7), "alpha");
    return gottlieb_transform(parse_profile(base), alpha);
  }
  throw ParameterError("profile spec: unknown family '" + head + "'");
}

}  // namespace szeta
