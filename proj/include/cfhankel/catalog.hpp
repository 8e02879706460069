#pragma once

#include "cfhankel/cfrac.hpp"
#include "cfhankel/closedform.hpp"
#include "cfhankel/polynomial.hpp"
#include "cfhankel/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cfh {

/// F_0 = 0, F_1 = 1 (A000045).
BigInt fibonacci(std::size_t n);
/// binomial(2n, n) / (n + 1) (A000108).
BigInt catalan_number(std::size_t n);

/// catalan, aerated-catalan, fibonacci-cf, rogers-ramanujan.
const std::vector<std::string>& catalog_names();

/// First `terms` partial quotients of a named fraction:
///   catalan           a_n = -1,   q_n = 1
///   aerated-catalan   a_n = -1,   q_n = 2
///   fibonacci-cf      a_n = F_n,  q_n = F_n
///   rogers-ramanujan  a_n = gamma, q_n = n  (symbolic gamma when not given)
/// The result is truncated with reliable order s_{terms+1} - 1, the last
/// coefficient the full infinite fraction pins down.
CFraction<Scalar> catalog_cfraction(std::string_view name, std::optional<Rational> gamma, std::size_t terms);

/// Smallest term count for which both the oracle and the closed form of the
/// named fraction are defined up to Hankel order max_n.
std::size_t catalog_terms_for(std::string_view name, std::size_t max_n);

/// First `count` Taylor coefficients of numer / denom; polynomials in x.
std::vector<Rational> expand_rational_gf(const ParamPoly& numer, const ParamPoly& denom, std::size_t count);

enum class Verdict { confirmed, refuted, unchecked };
std::string_view verdict_name(Verdict v) noexcept;

/// Agreement of a symbolic claim after substituting a rational gamma.
struct SpotCheck {
  Rational gamma;
  std::string expected;
  std::string computed;
  bool agree = false;
};

struct Claim {
  std::string id;
  std::string location;  ///< "Example N", "Introduction", ...
  std::string quote;     ///< printed text the claim is taken from
  std::vector<std::string> expected;
  std::vector<std::string> computed;
  Verdict verdict = Verdict::unchecked;
  std::string note;
  std::vector<SpotCheck> spot_checks;
};

/// Outcome of comparing one convention against the oracle on every entry.
struct ConventionTrial {
  Convention convention;
  std::vector<std::pair<std::string, bool>> entries;
  bool all_agree = false;
};

struct VerificationReport {
  std::optional<Convention> convention;  ///< nullopt when no single convention fits every entry
  std::size_t max_n = 0;
  std::vector<ConventionTrial> trials;
  std::vector<Claim> claims;  ///< sorted by id
};

/// Runs both conventions against the oracle on every catalog entry up to
/// max_n and returns the one that matches all of them.
std::optional<Convention> arbitrate_convention(std::size_t max_n, std::vector<ConventionTrial>* trials = nullptr);

VerificationReport verify_paper_claims(std::size_t max_n = 12);

}  // namespace cfh
