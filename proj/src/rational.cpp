#include "cfhankel/rational.hpp"

#include "cfhankel/error.hpp"

#include <cctype>

namespace cfh {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NonInvertibleScalar: return "NonInvertibleScalar";
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::NonInvertibleLeadingScalar: return "NonInvertibleLeadingScalar";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::NegativePExponent: return "NegativePExponent";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::MultiplicityConflict: return "MultiplicityConflict";
    case Errc::NotInScalarRing: return "NotInScalarRing";
    case Errc::InvalidExponent: return "InvalidExponent";
    case Errc::UnknownName: return "UnknownName";
    case Errc::MissingParameter: return "MissingParameter";
    case Errc::ZeroConstantDenominator: return "ZeroConstantDenominator";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error(Errc::ZeroCoefficient, "rational with zero denominator");
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(Errc::ParseError, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(Errc::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  const BigInt num = parse_integer(body.substr(0, slash), text);
  const std::string_view den_text = body.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw Error(Errc::ParseError, "sign in denominator of '" + std::string(text) + "'");
  const BigInt den = parse_integer(den_text, text);
  if (den.is_zero()) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

Rational pow(const Rational& r, long long e) {
  if (e < 0) {
    if (r.is_zero()) throw Error(Errc::ZeroCoefficient, "negative power of zero");
    return pow(Rational(1) / r, -e);
  }
  Rational result(1);
  Rational base = r;
  for (auto k = static_cast<unsigned long long>(e); k != 0; k >>= 1) {
    if (k & 1U) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

}  // namespace cfh
