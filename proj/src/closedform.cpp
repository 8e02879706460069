#include "cfhankel/closedform.hpp"

namespace cfh {

std::string_view convention_name(Convention c) noexcept {
  return c == Convention::as_printed ? "as-printed" : "sign-corrected";
}

Convention parse_convention(std::string_view text) {
  if (text == "as-printed") return Convention::as_printed;
  if (text == "sign-corrected") return Convention::sign_corrected;
  throw Error(Errc::ParseError, "unknown convention '" + std::string(text) + "'");
}

std::vector<std::size_t> qtilde_from(std::span<const std::size_t> q) {
  std::vector<std::size_t> qt{1};
  qt.insert(qt.end(), q.begin(), q.end());
  return qt;
}

std::vector<std::size_t> p_sequence(std::span<const std::size_t> qtilde, std::size_t M) {
  if (qtilde.size() <= M) throw Error(Errc::InsufficientTerms, "p_" + std::to_string(M) + " needs qtilde_0..qtilde_" + std::to_string(M));
  if (qtilde[0] != 1) throw Error(Errc::InvalidExponent, "qtilde_0 must be 1");
  std::vector<std::size_t> p{1};
  for (std::size_t n = 1; n <= M; ++n) {
    if (qtilde[n] < 1) throw Error(Errc::InvalidExponent, "qtilde_" + std::to_string(n) + " must be >= 1");
    if (qtilde[n] < p.back())
      throw Error(Errc::NegativePExponent, "p_" + std::to_string(n) + " = " + std::to_string(qtilde[n]) + " - " +
                                               std::to_string(p.back()) + " < 0");
    p.push_back(qtilde[n] - p.back());
  }
  return p;
}

std::vector<std::size_t> index_gf_expansion(std::span<const std::size_t> q, std::size_t M) {
  if (q.size() < M) throw Error(Errc::InsufficientTerms, "index expansion to " + std::to_string(M) + " needs q_1..q_" + std::to_string(M));
  std::vector<Rational> numer{Rational(1)};
  for (std::size_t k = 0; k < M; ++k) numer.emplace_back(q[k]);
  std::vector<Rational> denom(M + 1, Rational(0));
  denom[0] = 1;
  if (M >= 2) denom[2] = -1;
  const auto m = Series<Rational>(std::move(numer)) * series_reciprocal(Series<Rational>(std::move(denom)));
  std::vector<std::size_t> out;
  out.reserve(M + 1);
  for (const auto& c : m.coeffs()) out.push_back(static_cast<std::size_t>(numerator_of(c)));
  return out;
}

IndexProfile index_profile(std::span<const std::size_t> q, std::size_t M) {
  if (q.size() < M) throw Error(Errc::InsufficientTerms, "index profile to " + std::to_string(M) + " needs q_1..q_" + std::to_string(M));
  IndexProfile prof;
  prof.qtilde = qtilde_from(q.first(M));
  prof.p = p_sequence(prof.qtilde, M);
  std::size_t running = 0;
  for (std::size_t n = 0; n <= M; ++n) {
    running += prof.p[n];
    prof.m.push_back(running);
    prof.dense_pos.push_back(running - 1);
  }
  if (prof.m != index_gf_expansion(q, M))
    throw std::logic_error("index_profile: partial sums of p disagree with the (1 + xG(x))/(1 - x^2) expansion");
  return prof;
}

}  // namespace cfh
