#include "cfhankel/cli.hpp"

#include "cfhankel/catalog.hpp"
#include "cfhankel/defaults.hpp"
#include "cfhankel/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace cfh::cli {

namespace {

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(path);
    if (!file) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<Scalar> pinned(std::vector<Scalar> values, bool symbolic) {
  if (symbolic)
    for (auto& v : values) v = Scalar(v.to_poly());
  return values;
}

bool any_symbolic(const std::vector<Scalar>& values) {
  return std::any_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_symbolic(); });
}

DenseTransform<Scalar> pinned(DenseTransform<Scalar> t, bool symbolic) {
  t.dense = pinned(std::move(t.dense), symbolic);
  if (symbolic)
    for (auto& e : t.profile) e.value = Scalar(e.value.to_poly());
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions and Hankel transforms in exact arithmetic", "cfhankel"};
  app.require_subcommand(1, 1);

  std::string series_path, cfraction_path, name, gamma_text, convention_text;
  std::size_t order = 0, max_n = 0, terms = 8, verify_max_n = 12;
  bool exact = false;

  auto* expand = app.add_subcommand("expand", "series JSON -> C-fraction JSON");
  expand->add_option("--series", series_path, "series file, '-' for stdin")->required();
  expand->add_flag("--exact", exact, "the series is exact: a vanishing tail means termination");

  auto* eval = app.add_subcommand("eval", "C-fraction JSON -> series JSON");
  eval->add_option("--cfraction", cfraction_path, "C-fraction file, '-' for stdin")->required();
  eval->add_option("--order", order, "highest power of x")->required();

  auto* hankel = app.add_subcommand("hankel", "Hankel transform of a series by exact determinants");
  hankel->add_option("--series", series_path, "series file, '-' for stdin")->required();
  hankel->add_option("--max-n", max_n, "largest Hankel order")->required();

  const std::vector<std::string> conventions{"as-printed", "sign-corrected"};
  auto* closed = app.add_subcommand("closed", "closed-form Hankel transform of a C-fraction");
  closed->add_option("--cfraction", cfraction_path, "C-fraction file, '-' for stdin")->required();
  closed->add_option("--max-n", max_n, "largest Hankel order")->required();
  closed->add_option("--convention", convention_text, "sign convention")->check(CLI::IsMember(conventions));

  auto* compare = app.add_subcommand("compare", "closed form against the determinant oracle");
  compare->add_option("--cfraction", cfraction_path, "C-fraction file, '-' for stdin")->required();
  compare->add_option("--max-n", max_n, "largest Hankel order")->required();
  compare->add_option("--convention", convention_text, "sign convention")->check(CLI::IsMember(conventions));

  auto* catalog = app.add_subcommand("catalog", "named example C-fraction");
  catalog->add_option("name", name, "catalan | aerated-catalan | fibonacci-cf | rogers-ramanujan")->required();
  catalog->add_option("--gamma", gamma_text, "rational gamma p/q for rogers-ramanujan (symbolic if omitted)");
  catalog->add_option("--terms", terms, "number of partial quotients")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check the printed example values against the oracle");
  verify->add_option("--max-n", verify_max_n, "largest Hankel order")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  const Convention convention = convention_text.empty() ? shipped_convention() : parse_convention(convention_text);

  try {
    if (expand->parsed()) {
      const auto input = series_from_json(read_json(series_path, in));
      emit(out, to_json(correspond(input.series, exact || input.exact)));
    } else if (eval->parsed()) {
      const auto cf = cfraction_from_json(read_json(cfraction_path, in));
      emit(out, to_json(evaluate(cf, order)));
    } else if (hankel->parsed()) {
      const auto input = series_from_json(read_json(series_path, in));
      const bool symbolic = any_symbolic(input.series.coeffs());
      emit(out, Json{{"max_n", max_n}, {"hankel", to_json(pinned(hankel_transform(input.series.coeffs(), max_n), symbolic))}});
    } else if (closed->parsed()) {
      const auto cf = cfraction_from_json(read_json(cfraction_path, in));
      emit(out, to_json(pinned(dense_transform(cf, max_n, convention), any_symbolic(cf.a))));
    } else if (compare->parsed()) {
      const auto cf = cfraction_from_json(read_json(cfraction_path, in));
      const bool symbolic = any_symbolic(cf.a);
      const auto report = compare_transforms(cf, max_n, convention);
      emit(out, Json{{"agree", report.agree()},
                     {"oracle", to_json(pinned(report.oracle, symbolic))},
                     {"closed", to_json(pinned(report.closed, symbolic))},
                     {"mismatches", report.mismatches}});
      return report.agree() ? success : disagreement;
    } else if (catalog->parsed()) {
      std::optional<Rational> gamma;
      if (!gamma_text.empty()) gamma = parse_rational(gamma_text);
      emit(out, to_json(catalog_cfraction(name, gamma, terms)));
    } else if (verify->parsed()) {
      const auto report = verify_paper_claims(verify_max_n);
      emit(out, to_json(report));
      return report.convention ? success : disagreement;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::ParseError ? usage_error : computation_error;
  }
  return success;
}

}  // namespace cfh::cli
