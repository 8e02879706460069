#pragma once

#include "cfhankel/cfrac.hpp"
#include "cfhankel/error.hpp"
#include "cfhankel/hankel.hpp"
#include "cfhankel/quotient.hpp"
#include "cfhankel/ring.hpp"
#include "cfhankel/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfh {

/// Sign convention for the closed-form Hankel values. `as_printed` keeps the
/// extra factor (-1)^1 in the second sign term; `sign_corrected` drops it.
enum class Convention { as_printed, sign_corrected };

std::string_view convention_name(Convention c) noexcept;
/// Accepts "as-printed" and "sign-corrected"; throws Error(ParseError).
Convention parse_convention(std::string_view text);

/// Exponent data of the fraction with monomial partial denominators b_n x^{p_n}
/// matched to a C-fraction.
struct IndexProfile {
  std::vector<std::size_t> qtilde;     ///< 1, q_1, q_2, ...
  std::vector<std::size_t> p;          ///< p_n = qtilde_n - p_{n-1}
  std::vector<std::size_t> m;          ///< m_n = p_0 + ... + p_n
  std::vector<std::size_t> dense_pos;  ///< p_1 + ... + p_n = m_n - 1
};

/// p_0..p_M from qtilde_0..qtilde_M via the alternating sums. Throws
/// Error(NegativePExponent) naming the first n with p_n < 0.
std::vector<std::size_t> p_sequence(std::span<const std::size_t> qtilde, std::size_t M);

/// Coefficients 0..M of (1 + x G(x)) / (1 - x^2), G the generating function
/// of q_1, q_2, ...
std::vector<std::size_t> index_gf_expansion(std::span<const std::size_t> q, std::size_t M);

/// Profile for entries 0..M from the C-fraction exponents q_1..q_M. The
/// m-sequence is checked against index_gf_expansion.
IndexProfile index_profile(std::span<const std::size_t> q, std::size_t M);

/// qtilde = (1, q_1, q_2, ...).
std::vector<std::size_t> qtilde_from(std::span<const std::size_t> q);

/// b_0..b_M from a_0..a_{M-1} (a_0 = 1 prepended by the caller), via
///   b_{2n}   = (a_0 a_2 ... a_{2n-2}) / (a_1 a_3 ... a_{2n-1})
///   b_{2n+1} = (a_1 a_3 ... a_{2n-1}) / (a_0 a_2 ... a_{2n}).
template <ExactRing T>
std::vector<Quotient<T>> b_from_a(std::span<const T> a, std::size_t M) {
  if (a.size() < M) throw Error(Errc::InsufficientTerms, "b_" + std::to_string(M) + " needs a_0..a_" + std::to_string(M - 1));
  for (std::size_t k = 0; k < M; ++k)
    if (is_zero(a[k])) throw Error(Errc::ZeroCoefficient, "a_" + std::to_string(k) + " is zero");
  std::vector<Quotient<T>> b;
  b.reserve(M + 1);
  T even(1), odd(1);  // products of a_j, j < k, over even / odd j
  for (std::size_t k = 0; k <= M; ++k) {
    b.push_back(k % 2 == 0 ? Quotient<T>(even, odd) : Quotient<T>(odd, even));
    if (k < M) (k % 2 == 0 ? even : odd) = (k % 2 == 0 ? even : odd) * a[k];
  }
  return b;
}

/// a_k = 1 / (b_k b_{k+1}) for k = 0..b.size()-2.
template <ExactRing T>
std::vector<T> a_from_b(std::span<const Quotient<T>> b) {
  std::vector<T> a;
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    if (b[k].is_zero() || b[k + 1].is_zero())
      throw Error(Errc::ZeroCoefficient, "b_" + std::to_string(b[k].is_zero() ? k : k + 1) + " is zero");
    const auto value = (b[k] * b[k + 1]).inverse().to_ring();
    if (!value) throw Error(Errc::NotInScalarRing, "a_" + std::to_string(k) + " is not a ring element");
    a.push_back(*value);
  }
  return a;
}

namespace detail {

inline int parity_sign(unsigned long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// Hankel value of the b/p fraction at index m, evaluated term by term:
///
///   prod_i (-1)^{p_i(p_i-1)/2} * (-1)^{sum_{i<m} i p_{i+1}} * prod_i b_i^{-(p_i + 2 sum_{j>i} p_j)}
///
/// b and p are indexed from 0; entries 1..m are used. m = 0 gives 1.
template <ExactRing T>
T prop2_value(std::span<const Quotient<T>> b, std::span<const std::size_t> p, std::size_t m) {
  if (b.size() <= m || p.size() <= m) throw Error(Errc::InsufficientTerms, "prop2_value needs b_1..b_m and p_1..p_m");
  unsigned long long sign_exp = 0;
  for (std::size_t i = 1; i <= m; ++i)
    if (p[i] > 0) sign_exp += p[i] * (p[i] - 1) / 2;
  for (std::size_t i = 0; i < m; ++i) sign_exp += i * p[i + 1];
  Quotient<T> value(T(1));
  std::size_t tail = 0;  // sum_{j>i} p_j
  for (std::size_t i = m; i >= 1; --i) {
    if (b[i].is_zero()) throw Error(Errc::ZeroCoefficient, "b_" + std::to_string(i) + " is zero");
    value = value * b[i].pow(-static_cast<long long>(p[i] + 2 * tail));
    tail += p[i];
  }
  auto ring_value = value.to_ring();
  if (!ring_value) throw Error(Errc::NotInScalarRing, "prop2_value " + to_string(value) + " is not a ring element");
  return detail::parity_sign(sign_exp) < 0 ? T(-*ring_value) : *ring_value;
}

/// Signed monomial sign * prod_k a_k^{e_k}.
struct MonomialValue {
  int sign = 1;
  std::map<std::size_t, std::size_t> exponents;  ///< k -> e_k, k = 1..m

  std::size_t total_exponent() const {
    std::size_t total = 0;
    for (const auto& [k, e] : exponents) total += e;
    return total;
  }

  /// a holds a_1, a_2, ... (a_1 at index 0).
  template <ExactRing T>
  T instantiate(std::span<const T> a) const {
    if (sign == 0) return T(0);
    T value(1);
    for (const auto& [k, e] : exponents) {
      if (e == 0) continue;
      if (k == 0 || k > a.size()) throw Error(Errc::IndexOutOfRange, "a_" + std::to_string(k) + " not supplied");
      value = value * power(a[k - 1], e);
    }
    return sign < 0 ? T(-value) : value;
  }

  friend bool operator==(const MonomialValue&, const MonomialValue&) = default;
};

/// Closed-form Hankel value for index m of the C-fraction with partial
/// numerators a_1.. (a[0] = a_1) and exponents qtilde = (1, q_1, ...):
///
///   prod_{i=1}^m (-1)^{p_i(p_i+1)/2} * (-1)^{c + sum_{i=0}^{m-1} i p_{i+1}} * prod_{k=1}^m a_k^{sum_{i=k}^m p_i}
///
/// with c = 1 for Convention::as_printed and c = 0 for sign_corrected.
template <ExactRing T>
MonomialValue prop3_value(std::span<const T> a, std::span<const std::size_t> qtilde, std::size_t m, Convention convention) {
  if (a.size() < m) throw Error(Errc::InsufficientTerms, "prop3_value needs a_1..a_" + std::to_string(m));
  if (qtilde.size() <= m) throw Error(Errc::InsufficientTerms, "prop3_value needs qtilde_0..qtilde_" + std::to_string(m));
  const auto p = p_sequence(qtilde, m);
  for (std::size_t k = 0; k < m; ++k)
    if (is_zero(a[k])) throw Error(Errc::ZeroCoefficient, "a_" + std::to_string(k + 1) + " is zero");
  unsigned long long sign_exp = convention == Convention::as_printed ? 1 : 0;
  for (std::size_t i = 1; i <= m; ++i) sign_exp += p[i] * (p[i] + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) sign_exp += i * p[i + 1];
  MonomialValue mv;
  mv.sign = detail::parity_sign(sign_exp);
  std::size_t tail = 0;
  for (std::size_t k = m; k >= 1; --k) {
    tail += p[k];
    mv.exponents[k] = tail;
  }
  return mv;
}

template <ExactRing T>
struct ProfileEntry {
  std::size_t n = 0;
  T value;
  std::size_t multiplicity = 0;
};

template <ExactRing T>
struct DenseTransform {
  std::vector<T> dense;
  std::vector<ProfileEntry<T>> profile;
  Convention convention = Convention::sign_corrected;
};

/// Closed-form Hankel transform h_0..h_maxN of the finite C-fraction (a, q)
/// with qtilde = (1, q_1, ..., q_K): index m lands at position p_1 + ... + p_m,
/// every other position is zero. Indices sharing a position must agree in
/// value; the count of such indices is the multiplicity.
template <ExactRing T>
DenseTransform<T> dense_transform(std::span<const T> a, std::span<const std::size_t> qtilde, std::size_t max_n,
                                  Convention convention) {
  const std::size_t count = a.size();
  if (qtilde.size() < count + 1)
    throw Error(Errc::InsufficientTerms, "need qtilde_0..qtilde_" + std::to_string(count));
  const auto p = p_sequence(qtilde, count);
  DenseTransform<T> out;
  out.convention = convention;
  out.dense.assign(max_n + 1, T(0));
  std::size_t pos = 0;
  for (std::size_t m = 0; m <= count; ++m) {
    if (m > 0) pos += p[m];
    if (pos > max_n) break;
    T value = prop3_value(a, qtilde, m, convention).instantiate(a);
    if (!out.profile.empty() && out.profile.back().n == pos) {
      auto& entry = out.profile.back();
      if (!(entry.value == value))
        throw Error(Errc::MultiplicityConflict, "position " + std::to_string(pos) + ": " + to_string(entry.value) + " vs " +
                                                    to_string(value) + " at m = " + std::to_string(m));
      ++entry.multiplicity;
    } else {
      out.profile.push_back({pos, value, 1});
      out.dense[pos] = value;
    }
  }
  return out;
}

/// dense_transform of a CFraction. A truncated fraction must be long enough
/// that every index landing at or below max_n is stored, i.e. p_1 + ... + p_K
/// exceeds max_n; otherwise Error(InsufficientTerms).
template <ExactRing T>
DenseTransform<T> dense_transform(const CFraction<T>& cf, std::size_t max_n, Convention convention) {
  const auto qtilde = qtilde_from(cf.q);
  if (!cf.terminated()) {
    const auto p = p_sequence(qtilde, cf.size());
    std::size_t last = 0;
    for (std::size_t k = 1; k < p.size(); ++k) last += p[k];
    if (last <= max_n)
      throw Error(Errc::InsufficientTerms, "truncated fraction covers Hankel positions below " + std::to_string(last) +
                                               " only, requested " + std::to_string(max_n));
  }
  return dense_transform(std::span<const T>(cf.a), std::span<const std::size_t>(qtilde), max_n, convention);
}

/// Ground truth: Hankel transform of the fraction's own series expansion.
template <ExactRing T>
std::vector<T> oracle_transform(const CFraction<T>& cf, std::size_t max_n) {
  const auto series = evaluate(cf, 2 * max_n);
  if (series.order() < 2 * max_n)
    throw Error(Errc::InsufficientTerms, "fraction is reliable to order " + std::to_string(series.order()) + ", need " +
                                             std::to_string(2 * max_n));
  return hankel_transform(series.coeffs(), max_n);
}

/// Oracle against closed form over positions 0..max_n.
template <ExactRing T>
struct HankelReport {
  std::vector<T> oracle;
  DenseTransform<T> closed;
  std::vector<std::size_t> mismatches;

  bool agree() const { return mismatches.empty(); }
};

template <ExactRing T>
HankelReport<T> compare_transforms(const CFraction<T>& cf, std::size_t max_n, Convention convention) {
  HankelReport<T> report{oracle_transform(cf, max_n), dense_transform(cf, max_n, convention), {}};
  for (std::size_t n = 0; n <= max_n; ++n)
    if (!(report.oracle[n] == report.closed.dense[n])) report.mismatches.push_back(n);
  return report;
}

}  // namespace cfh
