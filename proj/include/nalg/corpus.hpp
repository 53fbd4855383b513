#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nalg/algebra_io.hpp"
#include "nalg/diagram.hpp"

namespace nalg {

// Bundled diagrams and algebras. Each text is identical to the matching file
// under data/ (a test keeps them in sync).
//
// Transcription rule for crossings: orient both strands and call LL the region
// left of both, RR the region right of both, and RoLu / LoRu the two mixed
// regions (right of over, left of under; left of over, right of under). The
// crossing then reads [LL, RoLu, RR] = LoRu.
//
// Vertices: at a split vertex (one edge in) read the regions counterclockwise
// from the incoming edge as right, middle, left; at a merge vertex (one edge
// out) read them counterclockwise from the outgoing edge as left, middle,
// right.
namespace corpus {

struct NamedText {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::string_view kTheta = R"(name = theta
kind = spatial-graph
regions: o p q
vertex: o p q
vertex: o p q
)";

inline constexpr std::string_view kHandcuff = R"(name = handcuff
kind = spatial-graph
# o is the outer region, p and q the disks bounded by the two loops
regions: o p q
vertex: p o o
vertex: o o q
)";

inline constexpr std::string_view kHopfHandlebody = R"(name = hopf_handlebody
kind = handlebody-link
# two genus-1 components, i.e. a Hopf link
regions: a b c d
crossing: c d a b
crossing: c b a d
)";

// a1 and a2 are forced equal to a by the two vertices once the product is
// idempotent, which leaves [a,a,b] = c and [a,c,b] = a.
inline constexpr std::string_view kGenus2Link = R"(name = genus2_link
kind = handlebody-link
regions: a a1 b c a2
crossing: a a1 b c
crossing: a c b a1
vertex: a a1 a2
vertex: a a1 a2
)";

inline constexpr std::string_view kK1 = R"(name = k1
kind = spatial-graph
# trefoil with a chord through the outer region (a knotted theta)
regions: a b c d e f
crossing: c d a b
crossing: c f e d
crossing: c b e f
vertex: d a e
vertex: b a e
)";

inline constexpr std::string_view kK2 = R"(name = k2
kind = spatial-graph
# Hopf-linked handcuff, the bar crossing the lens between the two loops
regions: a b c d e
crossing: c d a b
crossing: e b a d
vertex: e c d
vertex: e c b
)";

inline constexpr std::string_view kZ4Left = R"(name = z4_left
kind = spatial-graph
# trefoil with a chord through the central region
regions: a b c d e f
crossing: c d a b
crossing: e f a d
crossing: e b a f
vertex: c e b
vertex: c e d
)";

inline constexpr std::string_view kZ4Right = R"(name = z4_right
kind = spatial-graph
# Hopf-linked handcuff, the bar running through the outer region
regions: a b c d e
crossing: c d a b
crossing: c b e d
vertex: b e a
vertex: d e a
)";

inline constexpr std::string_view kEx1 = R"(# Alexander tribracket a - b + c mod 3, no product
n = 3
tribracket:
1 2 3 / 3 1 2 / 2 3 1
2 3 1 / 1 2 3 / 3 1 2
3 1 2 / 2 3 1 / 1 2 3
)";

inline constexpr std::string_view kFull = R"(n = 3
tribracket:
1 2 3 / 3 1 2 / 2 3 1
2 3 1 / 1 2 3 / 3 1 2
3 1 2 / 2 3 1 / 1 2 3
product:
1 3 2 / 3 2 1 / 2 1 3
)";

inline constexpr std::string_view kDiag = R"(n = 3
tribracket:
1 2 3 / 3 1 2 / 2 3 1
2 3 1 / 1 2 3 / 3 1 2
3 1 2 / 2 3 1 / 1 2 3
product:
1 0 0 / 0 2 0 / 0 0 3
)";

inline constexpr std::string_view kK = R"(n = 3
tribracket:
1 2 3 / 3 1 2 / 2 3 1
2 3 1 / 1 2 3 / 3 1 2
3 1 2 / 2 3 1 / 1 2 3
product:
- 3 - / - - 1 / 2 - -
)";

inline constexpr std::string_view kZ4 = R"(# Alexander tribracket a - b + c mod 4
n = 4
tribracket:
1 2 3 4 / 4 1 2 3 / 3 4 1 2 / 2 3 4 1
2 3 4 1 / 1 2 3 4 / 4 1 2 3 / 3 4 1 2
3 4 1 2 / 2 3 4 1 / 1 2 3 4 / 4 1 2 3
4 1 2 3 / 3 4 1 2 / 2 3 4 1 / 1 2 3 4
product:
1 - 2 - / - 2 - 3 / 4 - 3 - / - 1 - 4
)";

inline const std::vector<NamedText>& diagram_texts() {
  static const std::vector<NamedText> v = {
      {"theta", kTheta}, {"handcuff", kHandcuff}, {"hopf_handlebody", kHopfHandlebody},
      {"genus2_link", kGenus2Link}, {"k1", kK1}, {"k2", kK2},
      {"z4_left", kZ4Left}, {"z4_right", kZ4Right},
  };
  return v;
}

inline const std::vector<NamedText>& algebra_texts() {
  static const std::vector<NamedText> v = {
      {"ex1", kEx1}, {"full", kFull}, {"diag", kDiag}, {"K", kK}, {"z4", kZ4},
  };
  return v;
}

}  // namespace corpus

inline std::vector<Diagram> builtin_diagrams() {
  std::vector<Diagram> out;
  for (const auto& t : corpus::diagram_texts()) out.push_back(parse_diagram(t.text, std::string(t.name)));
  return out;
}

inline Diagram builtin_diagram(std::string_view name) {
  for (const auto& t : corpus::diagram_texts())
    if (t.name == name) return parse_diagram(t.text, std::string(t.name));
  throw InvalidParameter("no builtin diagram '" + std::string(name) + "'");
}

/// The tribracket-only "ex1" entry comes back with the empty product.
inline NiebrzydowskiAlgebra builtin_algebra(std::string_view name) {
  for (const auto& t : corpus::algebra_texts())
    if (t.name == name) return parse_algebra(t.text, std::string(t.name)).algebra();
  throw InvalidParameter("no builtin algebra '" + std::string(name) + "'");
}

}  // namespace nalg
