#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "szeta/density.hpp"
#include "szeta/error.hpp"

using namespace szeta;
using doctest::Approx;

TEST_CASE("evaluate: family values") {
  CHECK(DensityProfile::borg(0.0).evaluate(0.3) == 1.0);
  CHECK(DensityProfile::horgan_chan().evaluate(-0.5) == Approx(9.0 / 4.0));
  CHECK(DensityProfile::oscillating(0.1).evaluate(-0.5) == Approx(2.0));
  CHECK(DensityProfile::uniform().evaluate(0.5) == 1.0);
  const auto b = DensityProfile::borg(2.0);
  CHECK(b.evaluate(0.1) == Approx(9.0 / std::pow(1.0 + 2.0 * 0.6, 4)));
}

TEST_CASE("evaluate: errors") {
  const auto p = DensityProfile::horgan_chan();
  CHECK_THROWS_AS(p.evaluate(0.51), DomainError);
  CHECK_THROWS_AS(p.derivative(-0.7), DomainError);
  CHECK_THROWS_AS(DensityProfile::borg(-1.0), ParameterError);
  CHECK_THROWS_AS(DensityProfile::oscillating(0.0), ParameterError);
  CHECK_THROWS_AS(DensityProfile::table({-0.5, 0.0, 0.5}, {1.0, -0.2, 1.0}), ProfileError);
  CHECK_THROWS_AS(DensityProfile::table({-0.5, 0.5, 0.2}, {1.0, 1.0, 1.0}), ProfileError);
  CHECK_THROWS_AS(DensityProfile::table({-0.5, 0.7}, {1.0, 1.0}), ProfileError);
}

TEST_CASE("mean density") {
  CHECK(mean_density(DensityProfile::uniform()) == Approx(1.0).epsilon(1e-14));
  CHECK(mean_density(DensityProfile::horgan_chan()) == Approx(1.5 * std::log(2.0)).epsilon(1e-13));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-0.95, 20.0);
  for (int i = 0; i < 10; ++i) {
    const double al = dist(rng);
    const double exact = (al * al + 3 * al + 3) / (3 * al + 3);
    CHECK(std::abs(mean_density(DensityProfile::borg(al)) - exact) < 1e-10);
  }
}

TEST_CASE("sigma against antiderivatives") {
  const auto hc = DensityProfile::horgan_chan();
  // int 3/sqrt(12y+10) dy = (sqrt(12x+10) - 2)/2
  for (double x : {-0.5, -0.2, 0.0, 0.37, 0.5})
    CHECK(sigma(hc, x) == Approx((std::sqrt(12 * x + 10) - 2) / 2).epsilon(1e-13));
  for (double al : {-0.5, 1.0, 5.0}) {
    const auto b = DensityProfile::borg(al);
    CHECK(sigma(b, 0.5) == Approx(1.0).epsilon(1e-13));
    // (1+al)(x+1/2)/(1+al(x+1/2))
    const double x = 0.1;
    CHECK(sigma(b, x) == Approx((1 + al) * (x + 0.5) / (1 + al * (x + 0.5))).epsilon(1e-13));
  }
  CHECK(sigma(DensityProfile::uniform(2.0), 1.0) == Approx(2.0));
  const SigmaIntegral si(hc);
  CHECK(si.total() == Approx(1.0).epsilon(1e-14));
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double x = -0.5 + i / 50.0;
    const double v = si(x);
    CHECK(v > prev);
    CHECK(v == Approx(sigma(hc, x)).epsilon(1e-13));
    prev = v;
  }
  CHECK(si(-0.5) == 0.0);
}

TEST_CASE("gottlieb transform") {
  const auto u = DensityProfile::uniform();
  for (double al : {-0.5, 1.0, 3.0}) {
    const auto g = gottlieb_transform(u, al);
    const auto b = DensityProfile::borg(al);
    for (double x : {-0.5, -0.1, 0.25, 0.5}) CHECK(g(x) == Approx(b(x)).epsilon(1e-14));
  }
  // xi(0) = 1/6, xi'(0) = 8/9 for a = 1, alpha = 1
  const MoebiusMap m{1.0, 1.0};
  CHECK(m(0.0) == Approx(1.0 / 6.0));
  CHECK(m.d1(0.0) == Approx(8.0 / 9.0));
  CHECK(gottlieb_transform(u, 1.0)(0.0) == Approx(64.0 / 81.0));
  CHECK(m(-0.5) == Approx(-0.5));
  CHECK(m(0.5) == Approx(0.5));
  // identity
  const auto hc = DensityProfile::horgan_chan();
  CHECK(gottlieb_transform(hc, 0.0)(0.2) == hc(0.2));
  // sigma(a/2) is preserved
  for (double al : {-0.6, 0.5, 4.0}) {
    const auto g = gottlieb_transform(hc, al);
    CHECK(sigma(g, 0.5) == Approx(sigma(hc, 0.5)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gottlieb_transform(hc, -1.0), ParameterError);
}

TEST_CASE("analytic derivatives agree with finite differences at O(h^2)") {
  const DensityProfile profiles[] = {DensityProfile::borg(1.5), DensityProfile::horgan_chan(),
                                     DensityProfile::oscillating(0.3),
                                     gottlieb_transform(DensityProfile::horgan_chan(), 0.8)};
  for (const auto& p : profiles) {
    for (double x : {-0.3, 0.05, 0.31}) {
      auto err = [&](double h) {
        const double d1 = (p(x + h) - p(x - h)) / (2 * h);
        const double d2 = (p(x + h) - 2 * p(x) + p(x - h)) / (h * h);
        return std::pair{std::abs(d1 - p.derivative(x)), std::abs(d2 - p.second_derivative(x))};
      };
      const auto [a1, a2] = err(1e-2);
      const auto [b1, b2] = err(5e-3);
      CHECK(a1 / b1 == Approx(4.0).epsilon(0.05));
      CHECK(a2 / b2 == Approx(4.0).epsilon(0.05));
    }
  }
}

TEST_CASE("table profile: spline and derivatives") {
  std::vector<double> x, y;
  for (int i = 0; i <= 40; ++i) {
    x.push_back(-0.5 + i / 40.0);
    y.push_back(9.0 / (12.0 * x.back() + 10.0));
  }
  const auto t = DensityProfile::table(x, y);
  const auto hc = DensityProfile::horgan_chan();
  CHECK(t.family() == Family::Table);
  CHECK_FALSE(t.is_rough());
  CHECK(t.breakpoints().size() == 39);
  // end slopes are three-point differences, O(h^2): values near the ends are
  // good to ~h^3, interior ones to ~h^4
  for (double s : {-0.43, 0.011, 0.29}) {
    CHECK(t(s) == Approx(hc(s)).epsilon(1e-5));
    CHECK(t.derivative(s) == Approx(hc.derivative(s)).epsilon(1e-3));
    CHECK(t.second_derivative(s) == Approx(hc.second_derivative(s)).epsilon(2e-2));
  }
  CHECK(t(0.011) == Approx(hc(0.011)).epsilon(1e-7));
  CHECK(mean_density(t) == Approx(1.5 * std::log(2.0)).epsilon(1e-5));

  std::vector<double> ry = y;
  ry[20] *= 3.0;
  CHECK(DensityProfile::table(x, ry).is_rough());
}

TEST_CASE("parse_profile grammar") {
  CHECK(parse_profile("uniform").family() == Family::Uniform);
  CHECK(parse_profile("uniform:a=2").length() == 2.0);
  CHECK(parse_profile("horgan-chan").family() == Family::HorganChan);
  CHECK(parse_profile("borg:alpha=2")(0.0) == Approx(9.0 / 16.0));
  CHECK(parse_profile("oscillating:eps=0.1").family() == Family::Oscillating);
  const auto g = parse_profile("gottlieb:base=borg:alpha=1,alpha=0.5");
  CHECK(g.family() == Family::Gottlieb);
  CHECK(g(0.1) == Approx(gottlieb_transform(DensityProfile::borg(1.0), 0.5)(0.1)));
  CHECK_THROWS_AS(parse_profile("borg:beta=2"), ParameterError);
  CHECK_THROWS_AS(parse_profile("borg:alpha=x"), ParameterError);
  CHECK_THROWS_AS(parse_profile("zigzag"), ParameterError);
  CHECK_THROWS_AS(parse_profile("gottlieb:base=uniform"), ParameterError);

  const auto path = std::filesystem::temp_directory_path() / "szeta_density_table.csv";
  {
    std::ofstream f(path);
    f << "x,sigma\n-0.5,1\n0,2\n0.5,1\n";
  }
  const auto t = parse_profile("table:path=" + path.string());
  CHECK(t(0.0) == Approx(2.0));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_profile("table:path=/nonexistent/file.csv"), ProfileError);
}

TEST_CASE("profiles are safe to share across threads") {
  const auto p = gottlieb_transform(DensityProfile::oscillating(0.2), 0.7);
  std::vector<double> serial(2000), parallel(2000);
  for (int i = 0; i < 2000; ++i) serial[i] = p(-0.5 + i / 1999.0);
#pragma omp parallel for
  for (int i = 0; i < 2000; ++i) parallel[i] = p(-0.5 + i / 1999.0);
  CHECK(serial == parallel);
}
