#pragma once

#include "cfhankel/error.hpp"
#include "cfhankel/rational.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfh {

namespace detail {

// Unqualified call so that member functions named is_zero do not hide the
// free overloads.
template <typename T>
bool is_zero_value(const T& value) {
  return is_zero(value);
}

}  // namespace detail

/// Dense univariate polynomial over a commutative ring T. Coefficients are
/// indexed by power; trailing zeros are stripped so the zero polynomial is the
/// empty coefficient list.
template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  Polynomial(T constant) { coeffs_.push_back(std::move(constant)); trim(); }  // NOLINT(implicit)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(T(constant)) {}  // NOLINT(implicit)
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  /// Horner evaluation; V must accept multiplication and addition with T.
  template <typename V>
  V eval(const V& at) const {
    V acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + V(*it);
    return acc;
  }

  /// Multiplication by var^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k, T(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  friend bool is_zero(const Polynomial& p) { return p.is_zero(); }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero_value(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Polynomial in the single formal parameter (written g in text output) with
/// rational coefficients.
using ParamPoly = Polynomial<Rational>;

/// Euclidean division over Q. Throws Error(NotInScalarRing) on a zero divisor.
std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& num, const ParamPoly& den);

/// Exact quotient when den divides num, otherwise nullopt.
std::optional<ParamPoly> try_divide(const ParamPoly& num, const ParamPoly& den);

/// Monic greatest common divisor; gcd(0, 0) = 0.
ParamPoly gcd(ParamPoly a, ParamPoly b);

/// The constant value when the degree is at most zero.
std::optional<Rational> as_rational(const ParamPoly& p);

ParamPoly pow(const ParamPoly& p, unsigned long long e);

/// Human-readable form, e.g. "-g^4 + 2*g - 1/3".
std::string to_string(const ParamPoly& p, std::string_view var = "g");

}  // namespace cfh
