#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace szeta {

/// Truncated Taylor series c_0 + c_1 t + ... + c_D t^D.
template <class Real>
class Jet {
 public:
  explicit Jet(std::size_t degree, Real c0 = Real(0)) : c_(degree + 1, Real(0)) { c_[0] = c0; }

  /// The variable u0 + t.
  static Jet variable(std::size_t degree, Real u0) {
    Jet j(degree, u0);
    if (degree > 0) j.c_[1] = Real(1);
    return j;
  }

  std::size_t degree() const { return c_.size() - 1; }
  const Real& operator[](std::size_t k) const { return c_[k]; }
  Real& operator[](std::size_t k) { return c_[k]; }

  friend Jet operator+(Jet x, const Jet& y) {
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
    return x;
  }
  friend Jet operator-(Jet x, const Jet& y) {
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] -= y.c_[k];
    return x;
  }
  friend Jet operator+(Jet x, const Real& y) {
    x.c_[0] += y;
    return x;
  }
  friend Jet operator-(Jet x, const Real& y) {
    x.c_[0] -= y;
    return x;
  }
  friend Jet operator-(const Real& y, const Jet& x) {
    Jet r(x.degree());
    for (std::size_t k = 0; k < x.c_.size(); ++k) r.c_[k] = -x.c_[k];
    r.c_[0] += y;
    return r;
  }
  friend Jet operator*(Jet x, const Real& y) {
    for (auto& c : x.c_) c *= y;
    return x;
  }
  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r(x.degree());
    for (std::size_t k = 0; k < x.c_.size(); ++k)
      for (std::size_t i = 0; i <= k; ++i) r.c_[k] += x.c_[i] * y.c_[k - i];
    return r;
  }
  friend Jet operator/(const Jet& x, const Jet& y) {
    Jet r(x.degree());
    for (std::size_t k = 0; k < x.c_.size(); ++k) {
      Real acc = x.c_[k];
      for (std::size_t i = 1; i <= k; ++i) acc -= y.c_[i] * r.c_[k - i];
      r.c_[k] = acc / y.c_[0];
    }
    return r;
  }

  friend Jet sqrt(const Jet& x) {
    using std::sqrt;
    Jet r(x.degree());
    r.c_[0] = sqrt(x.c_[0]);
    for (std::size_t k = 1; k < x.c_.size(); ++k) {
      Real acc = x.c_[k];
      for (std::size_t i = 1; i < k; ++i) acc -= r.c_[i] * r.c_[k - i];
      r.c_[k] = acc / (2 * r.c_[0]);
    }
    return r;
  }

  friend Jet exp(const Jet& x) {
    using std::exp;
    Jet r(x.degree());
    r.c_[0] = exp(x.c_[0]);
    for (std::size_t k = 1; k < x.c_.size(); ++k) {
      Real acc(0);
      for (std::size_t i = 1; i <= k; ++i) acc += Real(static_cast<long>(i)) * x.c_[i] * r.c_[k - i];
      r.c_[k] = acc / Real(static_cast<long>(k));
    }
    return r;
  }

 private:
  std::vector<Real> c_;
};

}  // namespace szeta
