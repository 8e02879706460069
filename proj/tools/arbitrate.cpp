// Build step: pick the closed-form sign convention that matches the Hankel
// oracle on every catalog entry and write it out as a header.
#include "cfhankel/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cfhankel-arbitrate OUTPUT_HEADER MAX_N\n";
    return 2;
  }
  const auto max_n = static_cast<std::size_t>(std::strtoul(argv[2], nullptr, 10));
  std::vector<cfh::ConventionTrial> trials;
  const auto chosen = cfh::arbitrate_convention(max_n, &trials);
  for (const auto& t : trials) {
    std::cerr << "  " << cfh::convention_name(t.convention) << ':';
    for (const auto& [name, ok] : t.entries) std::cerr << ' ' << name << '=' << (ok ? "match" : "MISMATCH");
    std::cerr << '\n';
  }
  if (!chosen) {
    std::cerr << "cfhankel-arbitrate: no sign convention matches the oracle on every catalog entry\n";
    return 1;
  }
  std::ofstream header(argv[1]);
  header << "#pragma once\n\n"
         << "// Generated by cfhankel-arbitrate (max_n = " << max_n << "). Do not edit.\n\n"
         << "#include \"cfhankel/closedform.hpp\"\n\n"
         << "namespace cfh {\n\n"
         << "inline constexpr Convention kArbitratedConvention = Convention::"
         << (*chosen == cfh::Convention::as_printed ? "as_printed" : "sign_corrected") << ";\n\n"
         << "}  // namespace cfh\n";
  std::cerr << "cfhankel-arbitrate: selected " << cfh::convention_name(*chosen) << '\n';
  return header ? 0 : 1;
}
