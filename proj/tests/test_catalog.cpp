#include "cfhankel/catalog.hpp"
#include "cfhankel/closedform.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cfh;
using cfh::test::gamma_poly;
using cfh::test::rationals;

namespace {

std::vector<Scalar> scalars(std::initializer_list<long long> v) {
  std::vector<Scalar> out;
  for (auto x : v) out.emplace_back(Rational(x));
  return out;
}

// Taylor coefficients of n/d by the linear recurrence d_0 c_k = n_k - sum_{j>=1} d_j c_{k-j}.
std::vector<Rational> recurrence_expand(const std::vector<Rational>& n, const std::vector<Rational>& d, std::size_t count) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = k < n.size() ? n[k] : Rational(0);
    for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * c[k - j];
    c.push_back(acc / d[0]);
  }
  return c;
}

const Claim& find_claim(const VerificationReport& r, std::string_view id) {
  const auto it = std::find_if(r.claims.begin(), r.claims.end(), [&](const Claim& c) { return c.id == id; });
  REQUIRE(it != r.claims.end());
  return *it;
}

}  // namespace

TEST_CASE("catalog_cfraction examples") {
  const auto fib = catalog_cfraction("fibonacci-cf", std::nullopt, 5);
  CHECK(fib.a == scalars({1, 1, 2, 3, 5}));
  CHECK(fib.q == std::vector<std::size_t>{1, 1, 2, 3, 5});

  const auto cat = catalog_cfraction("catalan", std::nullopt, 4);
  CHECK(cat.a == scalars({-1, -1, -1, -1}));
  CHECK(cat.q == std::vector<std::size_t>{1, 1, 1, 1});

  const auto aer = catalog_cfraction("aerated-catalan", std::nullopt, 3);
  CHECK(aer.a == scalars({-1, -1, -1}));
  CHECK(aer.q == std::vector<std::size_t>{2, 2, 2});

  const auto rr = catalog_cfraction("rogers-ramanujan", std::nullopt, 4);
  CHECK(rr.a == std::vector<Scalar>(4, Scalar(gamma_poly())));
  CHECK(rr.q == std::vector<std::size_t>{1, 2, 3, 4});
  const auto rr2 = catalog_cfraction("rogers-ramanujan", Rational(2), 4);
  CHECK(rr2.a == scalars({2, 2, 2, 2}));
  CHECK_FALSE(rr2.a[0].is_symbolic());

  CHECK_THROWS_WITH_AS(catalog_cfraction("nope", std::nullopt, 3), doctest::Contains("UnknownName"), Error);
  for (const auto& name : catalog_names()) CHECK_FALSE(catalog_cfraction(name, std::nullopt, 3).terminated());
}

TEST_CASE("entries supply enough terms for their declared depth") {
  for (const auto& name : catalog_names()) {
    const auto cf = catalog_cfraction(name, std::nullopt, catalog_terms_for(name, 12));
    CHECK(evaluate(cf, 24).order() == 24);
  }
}

TEST_CASE("helpers agree with evaluated series") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  for (std::size_t n = 1; n < 40; ++n) CHECK(fibonacci(n + 1) == fibonacci(n) + fibonacci(n - 1));
  CHECK(catalan_number(0) == 1);
  for (std::size_t n = 0; n < 20; ++n)  // C_{n+1} = 2(2n+1)/(n+2) C_n
    CHECK(catalan_number(n + 1) * (n + 2) == catalan_number(n) * 2 * (2 * n + 1));

  const auto cat = evaluate(catalog_cfraction("catalan", std::nullopt, 12), 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(cat[n] == Scalar(Rational(catalan_number(n))));
  const auto aer = evaluate(catalog_cfraction("aerated-catalan", std::nullopt, 12), 16);
  for (std::size_t n = 0; n <= 16; ++n)
    CHECK(aer[n] == Scalar(n % 2 == 0 ? Rational(catalan_number(n / 2)) : Rational(0)));

  const auto fib = catalog_cfraction("fibonacci-cf", std::nullopt, 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(fib.a[n - 1] == Scalar(Rational(fibonacci(n))));
    CHECK(fib.q[n - 1] == static_cast<std::size_t>(fibonacci(n)));
  }
}

TEST_CASE("entries round trip through correspond") {
  for (const auto& name : catalog_names()) {
    const auto cf = catalog_cfraction(name, std::nullopt, 6);
    const auto series = evaluate(cf, cf.reliable_order);
    const auto back = correspond(series);
    REQUIRE(back.size() >= cf.size());
    for (std::size_t k = 0; k < cf.size(); ++k) {
      CHECK(back.a[k] == cf.a[k]);
      CHECK(back.q[k] == cf.q[k]);
    }
  }
}

TEST_CASE("expand_rational_gf") {
  const ParamPoly one(1);
  const ParamPoly one_minus_x(std::vector<Rational>{1, -1});
  CHECK(expand_rational_gf(one, one_minus_x, 5) == rationals({1, 1, 1, 1, 1}));

  // (1 + x/(1-x))/(1-x^2) = 1/((1-x)(1-x^2))
  const ParamPoly one_minus_x2(std::vector<Rational>{1, 0, -1});
  CHECK(expand_rational_gf(one, one_minus_x * one_minus_x2, 6) == rationals({1, 1, 2, 2, 3, 3}));

  CHECK_THROWS_WITH_AS(expand_rational_gf(one, ParamPoly(std::vector<Rational>{0, 1}), 3),
                       doctest::Contains("ZeroConstantDenominator"), Error);

  const ParamPoly x(std::vector<Rational>{0, 1});
  const ParamPoly xp1 = x + one, xm1 = x - one;
  const ParamPoly denom = xp1 * xp1 * pow(xm1, 4);
  const ParamPoly printed_numer = ParamPoly(2) * x * x * (pow(x, 3) + ParamPoly(3));
  const auto expanded = expand_rational_gf(printed_numer, denom, 7);
  CHECK(expanded == recurrence_expand(printed_numer.coeffs(), denom.coeffs(), 7));
  CHECK(expanded == rationals({0, 0, 6, 12, 30, 50, 88}));
  // The printed sequence comes from x^2 + 3 in place of x^3 + 3.
  const ParamPoly alt_numer = ParamPoly(2) * x * x * (x * x + ParamPoly(3));
  CHECK(expand_rational_gf(alt_numer, denom, 7) == rationals({0, 0, 6, 12, 32, 52, 94}));

  std::mt19937 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = test::random_param_poly(rng, 3);
    auto d = test::random_param_poly(rng, 3);
    if (d.coeff(0) == 0) d = d + ParamPoly(1);
    if (d.coeff(0) == 0) continue;
    CHECK(expand_rational_gf(n, d, 10) == recurrence_expand(n.coeffs(), d.coeffs(), 10));
  }
}

TEST_CASE("arbitration selects the sign-corrected convention") {
  std::vector<ConventionTrial> trials;
  const auto conv = arbitrate_convention(12, &trials);
  REQUIRE(conv.has_value());
  CHECK(*conv == Convention::sign_corrected);
  REQUIRE(trials.size() == 2);
  for (const auto& t : trials) {
    CHECK(t.entries.size() == catalog_names().size());
    CHECK(t.all_agree == (t.convention == Convention::sign_corrected));
  }
}

TEST_CASE("verify_paper_claims verdicts") {
  const auto report = verify_paper_claims(12);
  REQUIRE(report.convention.has_value());
  CHECK(*report.convention == Convention::sign_corrected);
  CHECK(std::is_sorted(report.claims.begin(), report.claims.end(),
                       [](const Claim& x, const Claim& y) { return x.id < y.id; }));
  for (std::size_t k = 1; k < report.claims.size(); ++k) CHECK(report.claims[k - 1].id != report.claims[k].id);

  for (const char* id : {"intro-catalan-hankel", "ex1-dense-values", "ex1-nonzero-terms", "ex1-index-sequence",
                         "ex1-multiplicity", "ex2-index-sequence", "ex2-values", "ex2-multiplicity", "ex3-index-sequence",
                         "ex3-values", "ex3-multiplicity", "ex4-p-sequence", "ex4-index-sequence", "ex4-value-m00",
                         "ex4-value-m01"})
    CHECK_MESSAGE(find_claim(report, id).verdict == Verdict::confirmed, id);

  for (const char* id : {"ex1-formula-as-printed", "ex4-value-m02", "ex4-value-m03", "ex4-value-m04", "ex4-value-m05",
                         "ex4-value-m06", "ex4-exponent-gf-expansion", "ex4-exponent-gf-vs-oracle"})
    CHECK_MESSAGE(find_claim(report, id).verdict == Verdict::refuted, id);

  const auto& h2 = find_claim(report, "ex4-value-m02");
  CHECK(h2.computed == std::vector<std::string>{"-g^4"});
  CHECK(h2.expected == std::vector<std::string>{"-g^6"});
  REQUIRE(h2.spot_checks.size() == 2);
  CHECK(h2.spot_checks[0].gamma == Rational(1));
  CHECK(h2.spot_checks[0].agree);
  CHECK(h2.spot_checks[1].gamma == Rational(2));
  CHECK_FALSE(h2.spot_checks[1].agree);
}

TEST_CASE("catalan claims at a shallower depth") {
  const auto report = verify_paper_claims(6);
  CHECK(find_claim(report, "intro-catalan-hankel").verdict == Verdict::confirmed);
  CHECK(find_claim(report, "ex2-values").verdict == Verdict::confirmed);
}
