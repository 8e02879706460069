#pragma once

#include "cfhankel/error.hpp"
#include "cfhankel/polynomial.hpp"
#include "cfhankel/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cfh {

/// Truncated formal power series: coefficients of x^0..x^order are trusted,
/// nothing beyond is known. Results of binary operations carry the smaller of
/// the operand orders and never fabricate coefficients beyond it.
template <ExactRing T>
class Series {
 public:
  using value_type = T;

  /// The constant 1 known to the given order.
  Series() : coeffs_(1, T(1)) {}
  explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(Errc::InsufficientTerms, "a series needs at least one coefficient");
  }

  static Series constant(T c, std::size_t order) {
    std::vector<T> v(order + 1, T(0));
    v[0] = std::move(c);
    return Series(std::move(v));
  }

  /// Taylor expansion of a polynomial to the given order.
  static Series from_polynomial(const Polynomial<T>& p, std::size_t order) {
    std::vector<T> v(order + 1, T(0));
    for (std::size_t k = 0; k <= order; ++k) v[k] = p.coeff(k);
    return Series(std::move(v));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }

  Series truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return Series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Series operator+(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<T> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = f.coeffs_[k] + g.coeffs_[k];
    return Series(std::move(v));
  }
  friend Series operator-(const Series& f, const Series& g) { return f + (-g); }

  /// Cauchy product; order = min(f.order, g.order).
  friend Series operator*(const Series& f, const Series& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<T> v(n + 1, T(0));
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(f.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return Series(std::move(v));
  }

  friend bool operator==(const Series& f, const Series& g) {
    return f.coeffs_.size() == g.coeffs_.size() && std::equal(f.coeffs_.begin(), f.coeffs_.end(), g.coeffs_.begin());
  }

 private:
  std::vector<T> coeffs_;
};

template <ExactRing T>
Series<T> series_mul(const Series<T>& f, const Series<T>& g) {
  return f * g;
}

/// Multiplicative inverse to the same order. The constant term must be a unit
/// of the ring: a nonzero rational, or a nonzero constant ParamPoly.
template <ExactRing T>
Series<T> series_reciprocal(const Series<T>& f) {
  if (is_zero(f[0])) throw Error(Errc::ZeroConstantTerm, "reciprocal of a series with zero constant term");
  const auto inv0 = try_divide(T(1), f[0]);
  if (!inv0) throw Error(Errc::NonInvertibleScalar, "constant term " + to_string(f[0]) + " is not a unit");
  const std::size_t n = f.order();
  std::vector<T> r(n + 1, T(0));
  r[0] = *inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (!is_zero(f[i])) acc += f[i] * r[k - i];
    }
    r[k] = -(acc * *inv0);
  }
  return Series<T>(std::move(r));
}

/// Index of the first nonzero stored coefficient; nullopt means the series
/// is zero so far, i.e. through its whole trusted order.
template <ExactRing T>
std::optional<std::size_t> series_valuation(const Series<T>& f) {
  for (std::size_t k = 0; k <= f.order(); ++k)
    if (!is_zero(f[k])) return k;
  return std::nullopt;
}

/// Coefficient-wise conversion, e.g. Series<Rational> -> Series<Scalar>.
template <ExactRing To, ExactRing From>
Series<To> series_cast(const Series<From>& f) {
  std::vector<To> v;
  v.reserve(f.order() + 1);
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return Series<To>(std::move(v));
}

}  // namespace cfh
