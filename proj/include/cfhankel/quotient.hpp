#pragma once

#include "cfhankel/error.hpp"
#include "cfhankel/ring.hpp"
#include "cfhankel/scalar.hpp"

#include <optional>
#include <string>
#include <utility>

namespace cfh {

// Canonical form for num/den: a field quotient collapses to den = 1; a
// polynomial quotient is reduced by the gcd with a monic denominator.
inline void reduce_quotient(Rational& num, Rational& den) {
  num /= den;
  den = 1;
}

inline void reduce_quotient(ParamPoly& num, ParamPoly& den) {
  if (num.is_zero()) {
    den = ParamPoly(Rational(1));
    return;
  }
  const ParamPoly g = gcd(num, den);
  num = *try_divide(num, g);
  den = *try_divide(den, g);
  const Rational lead = den.leading();
  num = num * ParamPoly(Rational(1) / lead);
  den = den * ParamPoly(Rational(1) / lead);
}

inline void reduce_quotient(Scalar& num, Scalar& den) {
  if (num.rational() && den.rational()) {
    Rational n = *num.rational(), d = *den.rational();
    reduce_quotient(n, d);
    num = n;
    den = d;
    return;
  }
  ParamPoly n = num.to_poly(), d = den.to_poly();
  reduce_quotient(n, d);
  num = n;
  den = d;
}

/// Formal quotient num/den over an ExactRing, so that inverses such as 1/g
/// can be carried without a Laurent type. Kept in reduced form.
template <ExactRing T>
class Quotient {
 public:
  Quotient() : num_(0), den_(1) {}
  Quotient(T value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)
  Quotient(T num, T den) : num_(std::move(num)), den_(std::move(den)) {
    if (detail::is_zero_value(den_)) throw Error(Errc::ZeroCoefficient, "quotient with zero denominator");
    reduce_quotient(num_, den_);
  }

  const T& num() const { return num_; }
  const T& den() const { return den_; }
  bool is_zero() const { return detail::is_zero_value(num_); }

  Quotient inverse() const {
    if (is_zero()) throw Error(Errc::ZeroCoefficient, "inverse of zero");
    return Quotient(den_, num_);
  }

  /// Integer power; negative exponents invert.
  Quotient pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    const auto k = static_cast<unsigned long long>(e);
    return Quotient(power(num_, k), power(den_, k));
  }

  /// The quotient as a ring element, when den divides num.
  std::optional<T> to_ring() const { return try_divide(num_, den_); }

  friend Quotient operator*(const Quotient& x, const Quotient& y) { return Quotient(x.num_ * y.num_, x.den_ * y.den_); }
  friend Quotient operator/(const Quotient& x, const Quotient& y) { return x * y.inverse(); }
  friend Quotient operator-(const Quotient& x) { return Quotient(-x.num_, x.den_); }
  friend bool operator==(const Quotient& x, const Quotient& y) { return x.num_ * y.den_ == y.num_ * x.den_; }

  friend std::string to_string(const Quotient& x) {
    if (x.den_ == T(1)) return to_string(x.num_);
    return "(" + to_string(x.num_) + ")/(" + to_string(x.den_) + ")";
  }

 private:
  T num_;
  T den_;
};

}  // namespace cfh
