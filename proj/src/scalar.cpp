#include "cfhankel/scalar.hpp"

namespace cfh {

ParamPoly Scalar::to_poly() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return ParamPoly(*r);
  return std::get<ParamPoly>(value_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.rational() && b.rational()) return *a.rational() + *b.rational();
  return a.to_poly() + b.to_poly();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.rational() && b.rational()) return *a.rational() - *b.rational();
  return a.to_poly() - b.to_poly();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.rational() && b.rational()) return *a.rational() * *b.rational();
  return a.to_poly() * b.to_poly();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rational() && b.rational()) return *a.rational() == *b.rational();
  return a.to_poly() == b.to_poly();
}

bool is_zero(const Scalar& s) {
  return std::visit([](const auto& v) { return is_zero(v); }, s.value_);
}

std::optional<Scalar> try_divide(const Scalar& num, const Scalar& den) {
  if (num.rational() && den.rational()) {
    if (auto q = try_divide(*num.rational(), *den.rational())) return Scalar(*q);
    return std::nullopt;
  }
  if (auto q = try_divide(num.to_poly(), den.to_poly())) return Scalar(*q);
  return std::nullopt;
}

std::optional<Rational> as_rational(const Scalar& s) {
  return std::visit([](const auto& v) { return as_rational(v); }, s.value_);
}

Rational eval_param(const Scalar& s, const Rational& at) {
  if (const auto* r = s.rational()) return *r;
  return s.to_poly().eval(at);
}

std::string to_string(const Scalar& s) {
  if (const auto* r = s.rational()) return to_string(*r);
  return to_string(s.to_poly());
}

}  // namespace cfh
