#include "cfhankel/catalog.hpp"
#include "cfhankel/cli.hpp"
#include "cfhankel/json_io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace cfh;
using cfh::test::gamma_poly;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("scalar formats") {
  CHECK(to_json(parse_rational("-6/4")) == Json("-3/2"));
  CHECK(to_json(Rational(7)) == Json("7"));
  CHECK(to_json(gamma_poly()) == Json::parse(R"({"coeffs": ["0", "1"]})"));
  CHECK(rational_from_json(Json("3/9")) == make_rational(1, 3));
  CHECK(rational_from_json(Json(-4)) == Rational(-4));
  CHECK_THROWS_WITH_AS(rational_from_json(Json(0.5)), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(rational_from_json(Json("1/0")), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(rational_from_json(Json("abc")), doctest::Contains("ParseError"), Error);
  const Scalar s = scalar_from_json(Json::parse(R"({"coeffs": ["1", "0", "-1/2"]})"));
  CHECK(s.is_symbolic());
  CHECK(s == Scalar(ParamPoly(std::vector<Rational>{1, 0, make_rational(-1, 2)})));
}

TEST_CASE("series and fraction round trips") {
  const auto input = series_from_json(Json::parse(R"({"coeffs": ["1", 2, "1/3"], "order": 2, "exact": true})"));
  CHECK(input.exact);
  CHECK(input.series.order() == 2);
  CHECK(to_json(input.series) == Json::parse(R"({"coeffs": ["1", "2", "1/3"], "order": 2})"));
  CHECK_THROWS_WITH_AS(series_from_json(Json::parse(R"({"coeffs": ["1", "2"], "order": 5})")),
                       doctest::Contains("ParseError"), Error);

  for (const auto& name : catalog_names()) {
    const auto cf = catalog_cfraction(name, std::nullopt, 5);
    CHECK(cfraction_from_json(to_json(cf)) == cf);
  }
  const auto plain = cfraction_from_json(Json::parse(R"({"a": ["2"], "q": [1]})"));
  CHECK(plain.terminated());
  CHECK_THROWS_WITH_AS(cfraction_from_json(Json::parse(R"({"a": ["2"], "q": [0]})")), doctest::Contains("Error"), Error);
}

TEST_CASE("mixed symbolic input is pinned to one variant") {
  auto v = scalars_from_json(Json::parse(R"(["1", {"coeffs": ["0", "1"]}])"));
  pin_variant(v);
  CHECK(v[0].is_symbolic());
  CHECK(v[1].is_symbolic());
}

TEST_CASE("cli catalog then eval") {
  const auto cat = invoke({"catalog", "catalan", "--terms", "8"});
  REQUIRE(cat.code == 0);
  const auto ev = invoke({"eval", "--cfraction", "-", "--order", "5"}, cat.out);
  REQUIRE(ev.code == 0);
  CHECK(ev.json() == Json::parse(R"({"coeffs": ["1", "1", "2", "5", "14", "42"], "order": 5})"));
}

TEST_CASE("cli compare on fibonacci") {
  const auto cat = invoke({"catalog", "fibonacci-cf", "--terms", "8"});
  const auto cmp = invoke({"compare", "--cfraction", "-", "--max-n", "12"}, cat.out);
  CHECK(cmp.code == 0);
  const auto j = cmp.json();
  CHECK(j["agree"] == true);
  CHECK(j["closed"]["dense"].back() == "1547934105600000000");
  CHECK(j["oracle"] == j["closed"]["dense"]);

  const auto printed = invoke({"compare", "--cfraction", "-", "--max-n", "12", "--convention", "as-printed"}, cat.out);
  CHECK(printed.code == 1);
  CHECK(printed.json()["agree"] == false);
}

TEST_CASE("cli expand") {
  const auto r = invoke({"expand", "--series", "-", "--exact"}, R"({"coeffs": ["1", "0", "0", "0", "0"], "order": 4})");
  CHECK(r.code == 0);
  CHECK(r.json() == Json::parse(R"({"a": [], "q": [], "status": "terminated"})"));
  const auto cat = invoke({"expand", "--series", "-"}, R"({"coeffs": ["1", "1", "2", "5", "14"], "order": 4})");
  CHECK(cat.json() == Json::parse(R"({"a": ["-1", "-1", "-1", "-1"], "q": [1, 1, 1, 1], "status": {"truncated": 4}})"));
  const auto bad = invoke({"expand", "--series", "-"}, R"({"coeffs": ["2", "1"], "order": 1})");
  CHECK(bad.code == 3);
  CHECK(bad.err.find("ConstantTermNotOne") != std::string::npos);
}

TEST_CASE("cli hankel and closed") {
  const auto h = invoke({"hankel", "--series", "-", "--max-n", "2"}, R"({"coeffs": ["1", "1", "1", "1", "1"], "order": 4})");
  CHECK(h.code == 0);
  CHECK(h.json() == Json::parse(R"({"hankel": ["1", "0", "0"], "max_n": 2})"));
  const auto shortseq = invoke({"hankel", "--series", "-", "--max-n", "3"}, R"({"coeffs": ["1", "1"], "order": 1})");
  CHECK(shortseq.code == 3);
  CHECK(shortseq.err.find("InsufficientTerms") != std::string::npos);

  const auto closed = invoke({"closed", "--cfraction", "-", "--max-n", "3"}, R"({"a": ["-1", "-1"], "q": [2, 2]})");
  CHECK(closed.code == 0);
  CHECK(closed.json()["convention"] == "sign-corrected");
  CHECK(closed.json()["dense"] == Json::parse(R"(["1", "1", "1", "0"])"));
  const auto neg = invoke({"closed", "--cfraction", "-", "--max-n", "3"}, R"({"a": ["1", "1"], "q": [3, 1]})");
  CHECK(neg.code == 3);
  CHECK(neg.err.find("NegativePExponent") != std::string::npos);
}

TEST_CASE("cli catalog options") {
  const auto rr = invoke({"catalog", "rogers-ramanujan", "--gamma", "1/2", "--terms", "2"});
  CHECK(rr.json()["a"] == Json::parse(R"(["1/2", "1/2"])"));
  const auto unknown = invoke({"catalog", "nope"});
  CHECK(unknown.code == 3);
  CHECK(unknown.err.find("UnknownName") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"hankel", "--series", "-", "--max-n", "2", "--zzz"}).code == 2);
  CHECK(invoke({"closed", "--cfraction", "-", "--max-n", "2", "--convention", "other"}).code == 2);
  CHECK(invoke({"eval", "--cfraction", "-", "--order", "2"}, "{not json").code == 2);
  CHECK(invoke({"eval", "--cfraction", "/nonexistent/file.json", "--order", "2"}).code == 2);
  CHECK(invoke({"hankel", "--series", "-", "--max-n", "1"}, R"({"coeffs": [0.5], "order": 0})").code == 2);
}

TEST_CASE("cli verify and byte-stable output") {
  const auto first = invoke({"verify"});
  const auto second = invoke({"verify"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto j = first.json();
  CHECK(j["convention"] == "sign-corrected");
  CHECK(j["max_n"] == 12);
  for (const auto& c : j["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("location"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("verdict"));
  }
  const auto a = invoke({"catalog", "rogers-ramanujan", "--terms", "6"});
  CHECK(a.out == invoke({"catalog", "rogers-ramanujan", "--terms", "6"}).out);
}
