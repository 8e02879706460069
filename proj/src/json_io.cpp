#include "cfhankel/json_io.hpp"

#include <algorithm>
#include <string>

namespace cfh {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const ParamPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"coeffs", coeffs}};
}

Json to_json(const Scalar& s) {
  if (const auto* r = s.rational()) return to_json(*r);
  return to_json(s.to_poly());
}

Json to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Json to_json(const Series<Scalar>& f) { return Json{{"coeffs", to_json(f.coeffs())}, {"order", f.order()}}; }

Json to_json(const CFraction<Scalar>& cf) {
  Json status = cf.terminated() ? Json("terminated") : Json{{"truncated", cf.reliable_order}};
  return Json{{"a", to_json(cf.a)}, {"q", cf.q}, {"status", status}};
}

Json to_json(const DenseTransform<Scalar>& t) {
  Json profile = Json::array();
  for (const auto& e : t.profile)
    profile.push_back(Json{{"n", e.n}, {"value", to_json(e.value)}, {"multiplicity", e.multiplicity}});
  return Json{{"dense", to_json(t.dense)}, {"profile", profile}, {"convention", std::string(convention_name(t.convention))}};
}

Json to_json(const VerificationReport& report) {
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json claim{{"id", c.id},
               {"location", c.location},
               {"printed", c.quote},
               {"expected", c.expected},
               {"computed", c.computed},
               {"verdict", std::string(verdict_name(c.verdict))}};
    if (!c.note.empty()) claim["note"] = c.note;
    if (!c.spot_checks.empty()) {
      Json checks = Json::array();
      for (const auto& sc : c.spot_checks)
        checks.push_back(Json{{"gamma", to_string(sc.gamma)}, {"expected", sc.expected}, {"computed", sc.computed}, {"agree", sc.agree}});
      claim["spot_checks"] = checks;
    }
    claims.push_back(std::move(claim));
  }
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json entries = Json::object();
    for (const auto& [name, ok] : t.entries) entries[name] = ok;
    trials.push_back(Json{{"convention", std::string(convention_name(t.convention))}, {"entries", entries}, {"matches_oracle", t.all_agree}});
  }
  return Json{{"convention", report.convention ? Json(std::string(convention_name(*report.convention))) : Json("none")},
              {"max_n", report.max_n},
              {"arbitration", trials},
              {"claims", claims}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("expected a rational string \"p/q\", got " + j.dump());
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("coeffs") || !j.at("coeffs").is_array() || j.size() != 1) fail("polynomial scalar must be {\"coeffs\": [...]}");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return ParamPoly(std::move(coeffs));
  }
  return rational_from_json(j);
}

std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  pin_variant(out);
  return out;
}

SeriesInput series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) fail("series must be {\"coeffs\": [...], \"order\": N}");
  for (const auto& [key, value] : j.items())
    if (key != "coeffs" && key != "order" && key != "exact") fail("unknown series field '" + key + "'");
  auto coeffs = scalars_from_json(j.at("coeffs"));
  if (coeffs.empty()) fail("series needs at least one coefficient");
  if (j.contains("order")) {
    const std::size_t order = size_from_json(j.at("order"), "order");
    if (order + 1 > coeffs.size()) fail("order " + std::to_string(order) + " exceeds the supplied coefficients");
    coeffs.resize(order + 1);
  }
  SeriesInput in{Series<Scalar>(std::move(coeffs)), false};
  if (j.contains("exact")) {
    if (!j.at("exact").is_boolean()) fail("exact must be a boolean");
    in.exact = j.at("exact").get<bool>();
  }
  return in;
}

CFraction<Scalar> cfraction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("q")) fail("cfraction must be {\"a\": [...], \"q\": [...], \"status\": ...}");
  for (const auto& [key, value] : j.items())
    if (key != "a" && key != "q" && key != "status") fail("unknown cfraction field '" + key + "'");
  CFraction<Scalar> cf;
  cf.a = scalars_from_json(j.at("a"));
  if (!j.at("q").is_array()) fail("q must be an array");
  for (const auto& e : j.at("q")) cf.q.push_back(size_from_json(e, "q entry"));
  cf.status = Termination::terminated;
  if (j.contains("status")) {
    const Json& st = j.at("status");
    if (st.is_string() && st.get<std::string>() == "terminated") {
      cf.status = Termination::terminated;
    } else if (st.is_object() && st.size() == 1 && st.contains("truncated")) {
      cf.status = Termination::truncated;
      cf.reliable_order = size_from_json(st.at("truncated"), "truncated order");
    } else {
      fail("status must be \"terminated\" or {\"truncated\": N}");
    }
  }
  try {
    cf.validate();
  } catch (const Error& e) {
    fail(e.what());
  }
  return cf;
}

void pin_variant(std::vector<Scalar>& values) {
  if (std::none_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_symbolic(); })) return;
  for (auto& s : values) s = Scalar(s.to_poly());
}

}  // namespace cfh
