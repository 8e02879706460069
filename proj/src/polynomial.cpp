#include "cfhankel/polynomial.hpp"

namespace cfh {

std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) throw Error(Errc::NotInScalarRing, "polynomial division by zero");
  if (num.degree() < den.degree()) return {ParamPoly{}, num};
  std::vector<Rational> rem = num.coeffs();
  const auto dd = static_cast<std::size_t>(den.degree());
  std::vector<Rational> quo(rem.size() - dd, Rational(0));
  const Rational& lead = den.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational c = rem[k + dd] / lead;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= c * den.coeffs()[j];
  }
  return {ParamPoly(std::move(quo)), ParamPoly(std::move(rem))};
}

std::optional<ParamPoly> try_divide(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) return std::nullopt;
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

ParamPoly gcd(ParamPoly a, ParamPoly b) {
  while (!b.is_zero()) {
    ParamPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  std::vector<Rational> v = a.coeffs();
  for (auto& c : v) c /= lead;
  return ParamPoly(std::move(v));
}

std::optional<Rational> as_rational(const ParamPoly& p) {
  if (p.degree() > 0) return std::nullopt;
  return p.coeff(0);
}

ParamPoly pow(const ParamPoly& p, unsigned long long e) {
  ParamPoly result(Rational(1));
  ParamPoly base = p;
  for (; e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

std::string to_string(const ParamPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (k == 0 || !unit) out += to_string(c);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace cfh
