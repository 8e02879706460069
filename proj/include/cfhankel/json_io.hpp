#pragma once

#include "cfhankel/catalog.hpp"
#include "cfhankel/cfrac.hpp"
#include "cfhankel/closedform.hpp"
#include "cfhankel/scalar.hpp"
#include "cfhankel/series.hpp"

#include <json.hpp>

#include <vector>

// Wire formats shared by the library and the CLI:
//   rational     "p/q" (q omitted when 1)
//   ParamPoly    {"coeffs": ["p/q", ...]}
//   Series       {"coeffs": [scalar, ...], "order": N}   optional "exact": bool
//   CFraction    {"a": [...], "q": [...], "status": "terminated" | {"truncated": N}}
//   transform    {"dense": [...], "profile": [{"n", "value", "multiplicity"}], "convention": ...}
// Object keys are emitted in sorted order, so output is byte-stable.
namespace cfh {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const ParamPoly& p);
Json to_json(const Scalar& s);
Json to_json(const std::vector<Scalar>& v);
Json to_json(const Series<Scalar>& f);
Json to_json(const CFraction<Scalar>& cf);
Json to_json(const DenseTransform<Scalar>& t);
Json to_json(const VerificationReport& report);

/// All parsers throw Error(ParseError) on schema violations. Numbers must be
/// strings or JSON integers; floating-point literals are rejected.
Rational rational_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);
std::vector<Scalar> scalars_from_json(const Json& j);

struct SeriesInput {
  Series<Scalar> series;
  bool exact = false;
};
SeriesInput series_from_json(const Json& j);
CFraction<Scalar> cfraction_from_json(const Json& j);

/// If any element is symbolic, convert every element to ParamPoly so a whole
/// computation runs in one variant.
void pin_variant(std::vector<Scalar>& values);

}  // namespace cfh
