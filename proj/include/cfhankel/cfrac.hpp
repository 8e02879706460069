#pragma once

#include "cfhankel/error.hpp"
#include "cfhankel/polynomial.hpp"
#include "cfhankel/ring.hpp"
#include "cfhankel/series.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cfh {

enum class Termination { terminated, truncated };

/// C-fraction in the shape
///
///   g(x) = 1 / (1 + a_1 x^{q_1} / (1 + a_2 x^{q_2} / (1 + ...)))
///
/// with every a_k nonzero and every q_k >= 1. A terminated fraction is exact
/// as stored. A truncated one stands for a longer fraction whose series is
/// only pinned through `reliable_order`.
template <ExactRing T>
struct CFraction {
  std::vector<T> a;
  std::vector<std::size_t> q;
  Termination status = Termination::terminated;
  std::size_t reliable_order = 0;

  std::size_t size() const { return a.size(); }
  bool terminated() const { return status == Termination::terminated; }

  /// s_n = q_1 + ... + q_n for n = 0..size().
  std::vector<std::size_t> partial_sums() const {
    std::vector<std::size_t> s{0};
    for (std::size_t qk : q) s.push_back(s.back() + qk);
    return s;
  }

  /// Throws Error(InvalidExponent / ZeroCoefficient) when the invariants fail.
  void validate() const {
    if (a.size() != q.size()) throw Error(Errc::InvalidExponent, "a and q lists differ in length");
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (q[k] < 1) throw Error(Errc::InvalidExponent, "q_" + std::to_string(k + 1) + " must be >= 1");
      if (is_zero(a[k])) throw Error(Errc::ZeroCoefficient, "a_" + std::to_string(k + 1) + " is zero");
    }
  }

  friend bool operator==(const CFraction&, const CFraction&) = default;
};

/// Numerator and denominator of the n-th approximant of 1 + a_1x^{q_1}/(1 + ...),
/// the reciprocal of the C-fraction value.
template <ExactRing T>
struct ApproximantPair {
  Polynomial<T> A;
  Polynomial<T> B;
  std::size_t n = 0;
};

/// Build the C-fraction of a series with unit constant term by repeatedly
/// splitting off a_{n+1} x^{q_{n+1}} from f_n - 1 and inverting the rest,
/// starting from the reciprocal of the input. Extraction stops when f_n - 1
/// vanishes through the trusted window; only an input flagged `exact` may
/// then be reported as terminated.
template <ExactRing T>
CFraction<T> correspond(const Series<T>& f, bool exact = false) {
  if (!(f[0] == T(1))) throw Error(Errc::ConstantTermNotOne, "constant term is " + to_string(f[0]));
  const std::size_t trusted = f.order();
  CFraction<T> cf;
  Series<T> current = series_reciprocal(f);
  for (;;) {
    const Series<T> tail = current - Series<T>::constant(T(1), current.order());
    const auto v = series_valuation(tail);
    if (!v) break;
    const T lead = tail[*v];
    std::vector<T> rest;
    rest.reserve(tail.order() - *v + 1);
    for (std::size_t k = *v; k <= tail.order(); ++k) {
      rest.push_back(divide_exact(tail[k], lead, Errc::NonInvertibleLeadingScalar,
                                  "coefficient " + to_string(tail[k]) + " is not divisible by " + to_string(lead)));
    }
    cf.a.push_back(lead);
    cf.q.push_back(*v);
    current = series_reciprocal(Series<T>(std::move(rest)));
  }
  cf.status = exact ? Termination::terminated : Termination::truncated;
  cf.reliable_order = trusted;
  return cf;
}

/// Convenience wrapper for a series without unit constant term: returns the
/// C-fraction of 1 + x f(x).
template <ExactRing T>
CFraction<T> correspond_shifted(const Series<T>& f, bool exact = false) {
  std::vector<T> v{T(1)};
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return correspond(Series<T>(std::move(v)), exact);
}

/// Order of the series that evaluate() can vouch for.
template <ExactRing T>
std::size_t evaluation_order(const CFraction<T>& cf, std::size_t order) {
  return cf.terminated() ? order : std::min(order, cf.reliable_order);
}

/// Taylor expansion of the stored finite fraction, evaluated bottom-up. For a
/// truncated fraction the result order is capped at its reliable order.
template <ExactRing T>
Series<T> evaluate(const CFraction<T>& cf, std::size_t order) {
  const std::size_t n = evaluation_order(cf, order);
  Series<T> t = Series<T>::constant(T(1), n);
  for (std::size_t k = cf.size(); k-- > 0;) {
    const Series<T> inv = series_reciprocal(t);
    std::vector<T> v(n + 1, T(0));
    v[0] = T(1);
    for (std::size_t i = 0; i + cf.q[k] <= n; ++i) v[i + cf.q[k]] += cf.a[k] * inv[i];
    t = Series<T>(std::move(v));
  }
  return series_reciprocal(t);
}

template <ExactRing T>
ApproximantPair<T> approximants(const CFraction<T>& cf, std::size_t n) {
  if (n > cf.size())
    throw Error(Errc::IndexOutOfRange, "approximant " + std::to_string(n) + " of a " + std::to_string(cf.size()) + "-term fraction");
  Polynomial<T> a_prev(T(1)), b_prev(T(1));  // index n-2
  Polynomial<T> a_cur(T(1)), b_cur(T(1));    // index n-1
  if (n == 0) return {a_cur, b_cur, 0};
  a_cur = Polynomial<T>(T(1)) + Polynomial<T>::monomial(cf.a[0], cf.q[0]);
  for (std::size_t k = 2; k <= n; ++k) {
    const auto step = Polynomial<T>::monomial(cf.a[k - 1], cf.q[k - 1]);
    Polynomial<T> a_next = a_cur + step * a_prev;
    Polynomial<T> b_next = b_cur + step * b_prev;
    a_prev = std::exchange(a_cur, std::move(a_next));
    b_prev = std::exchange(b_cur, std::move(b_next));
  }
  return {a_cur, b_cur, n};
}

/// A_n B_{n-1} - A_{n-1} B_n - (-1)^{n-1} a_1...a_n x^{s_n}; identically zero.
template <ExactRing T>
Polynomial<T> determinant_identity_residual(const CFraction<T>& cf, std::size_t n) {
  if (n < 1 || n > cf.size())
    throw Error(Errc::IndexOutOfRange, "determinant identity index " + std::to_string(n));
  const auto cur = approximants(cf, n);
  const auto prev = approximants(cf, n - 1);
  T coeff(1);
  for (std::size_t k = 0; k < n; ++k) coeff = coeff * cf.a[k];
  if (n % 2 == 0) coeff = -coeff;
  const std::size_t s_n = cf.partial_sums()[n];
  return cur.A * prev.B - prev.A * cur.B - Polynomial<T>::monomial(coeff, s_n);
}

/// Series of B_n / A_n, the n-th approximant of the C-fraction value.
template <ExactRing T>
Series<T> approximant_series(const CFraction<T>& cf, std::size_t n, std::size_t order) {
  const auto pair = approximants(cf, n);
  return Series<T>::from_polynomial(pair.B, order) * series_reciprocal(Series<T>::from_polynomial(pair.A, order));
}

template <ExactRing To, ExactRing From>
CFraction<To> cfraction_cast(const CFraction<From>& cf) {
  CFraction<To> out;
  for (const auto& x : cf.a) out.a.emplace_back(x);
  out.q = cf.q;
  out.status = cf.status;
  out.reliable_order = cf.reliable_order;
  return out;
}

}  // namespace cfh
