#pragma once

#include "cfhankel/polynomial.hpp"
#include "cfhankel/rational.hpp"

#include <concepts>
#include <optional>
#include <string>
#include <variant>

namespace cfh {

/// Runtime scalar: either an exact rational or a polynomial in the formal
/// parameter. Arithmetic stays rational while every operand is rational and
/// promotes to ParamPoly as soon as one operand is symbolic, so a computation
/// started on rational data never leaves the rational variant.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational r) : value_(std::move(r)) {}     // NOLINT(implicit)
  Scalar(ParamPoly p) : value_(std::move(p)) {}    // NOLINT(implicit)
  template <std::integral I>
  Scalar(I v) : value_(Rational(v)) {}             // NOLINT(implicit)

  bool is_symbolic() const { return std::holds_alternative<ParamPoly>(value_); }
  const Rational* rational() const { return std::get_if<Rational>(&value_); }
  ParamPoly to_poly() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Value equality across variants: Rational(3) == ParamPoly{3}.
  friend bool operator==(const Scalar& a, const Scalar& b);

  friend bool is_zero(const Scalar& s);
  friend std::optional<Scalar> try_divide(const Scalar& num, const Scalar& den);
  friend std::optional<Rational> as_rational(const Scalar& s);

 private:
  std::variant<Rational, ParamPoly> value_;
};

/// Substitute a rational value for the formal parameter.
Rational eval_param(const Scalar& s, const Rational& at);
inline Rational eval_param(const Rational& r, const Rational&) { return r; }
inline Rational eval_param(const ParamPoly& p, const Rational& at) { return p.eval(at); }

std::string to_string(const Scalar& s);

/// Requirements on the coefficient ring of every generic algorithm here: an
/// integral domain with exact division reported through try_divide.
template <typename T>
concept ExactRing = requires(const T& a, const T& b) {
  T(0);
  T(1);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { try_divide(a, b) } -> std::convertible_to<std::optional<T>>;
  { as_rational(a) } -> std::convertible_to<std::optional<Rational>>;
};

static_assert(ExactRing<Rational>);
static_assert(ExactRing<ParamPoly>);
static_assert(ExactRing<Scalar>);

}  // namespace cfh
