#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "nalg/coloring.hpp"
#include "nalg/corpus.hpp"
#include "nalg/enumeration.hpp"

namespace nalg {

struct DemoRow {
  std::string subject;
  std::string algebra;
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  bool pass() const { return expected == computed; }
};

/// Every reference count: colorings of the bundled diagrams and the number of
/// partial products on the mod-3 Alexander tribracket.
inline std::vector<DemoRow> run_demo() {
  struct Claim {
    const char* diagram;
    const char* algebra;
    std::uint64_t expected;
  };
  static constexpr Claim claims[] = {
      {"theta", "full", 9},       {"handcuff", "full", 3}, {"theta", "diag", 3},
      {"handcuff", "diag", 3},    {"hopf_handlebody", "diag", 27}, {"genus2_link", "diag", 3},
      {"k1", "K", 3},             {"k2", "K", 0},          {"z4_left", "z4", 8},
      {"z4_right", "z4", 4},
  };
  std::vector<DemoRow> rows;
  for (const auto& c : claims) {
    const auto A = builtin_algebra(c.algebra);
    const auto D = builtin_diagram(c.diagram);
    rows.push_back({c.diagram, c.algebra, c.expected, count_colorings(A, D)});
  }
  const auto ex1 = builtin_algebra("ex1");
  rows.push_back({"ex1-products", "ex1", 8, enumerate_products(ex1.tribracket()).items.size()});
  return rows;
}

inline std::string format_demo(const std::vector<DemoRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "subject" << std::setw(9) << "algebra" << std::setw(10) << "expected"
     << std::setw(10) << "computed" << "status\n";
  for (const auto& r : rows)
    os << std::setw(18) << r.subject << std::setw(9) << r.algebra << std::setw(10) << r.expected << std::setw(10)
       << r.computed << (r.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace nalg
