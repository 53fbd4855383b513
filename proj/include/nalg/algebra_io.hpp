#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

/// Contents of one algebra block. The product is absent for tribracket-only
/// files.
struct ParsedAlgebra {
  Tribracket tribracket;
  std::optional<PartialProduct> product;

  bool has_product() const noexcept { return product.has_value(); }
  NiebrzydowskiAlgebra algebra() const {
    return NiebrzydowskiAlgebra(tribracket, product ? *product : PartialProduct::empty(tribracket.size()));
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string_view strip_comment(std::string_view s) {
  const auto h = s.find('#');
  return trim(h == std::string_view::npos ? s : s.substr(0, h));
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

struct BlockParser {
  std::string source;
  int n = 0;
  std::size_t n_line = 0;
  enum class Section { None, Tri, Prod } section = Section::None;
  std::size_t tri_line = 0, prod_line = 0;
  std::vector<Element> tri{}, prod{};
  bool saw_product = false;

  bool started() const { return n_line != 0; }

  void feed_entries(std::string_view body, std::size_t line) {
    for (auto tok : split_ws(body)) {
      if (tok == "/") continue;
      // Allow "1 2 3/3 1 2" as well as spaced slashes.
      std::size_t s = 0;
      while (s <= tok.size()) {
        auto e = tok.find('/', s);
        if (e == std::string_view::npos) e = tok.size();
        auto piece = tok.substr(s, e - s);
        if (!piece.empty()) push(piece, line);
        s = e + 1;
      }
    }
  }

  void push(std::string_view tok, std::size_t line) {
    if (section == Section::None) throw ParseError(source, line, "entries before a 'tribracket:' or 'product:' header");
    if (section == Section::Prod && tok == "-") {
      prod.push_back(kUndefined);
      return;
    }
    auto v = parse_int(tok);
    if (!v) throw ParseError(source, line, "bad entry '" + std::string(tok) + "'");
    const int lo = section == Section::Prod ? 0 : 1;
    if (*v < lo || *v > n)
      throw ParseError(source, line, "entry " + std::to_string(*v) + " outside " + std::to_string(lo) + ".." + std::to_string(n));
    (section == Section::Tri ? tri : prod).push_back(*v);
  }

  ParsedAlgebra finish(std::size_t last_line) const {
    if (!started()) throw ParseError(source, last_line, "missing 'n = <size>' line");
    if (tri_line == 0) throw ParseError(source, last_line, "missing 'tribracket:' block");
    const std::size_t want3 = ipow(n, 3), want2 = ipow(n, 2);
    if (tri.size() != want3)
      throw ParseError(source, tri_line,
                       "tribracket block has " + std::to_string(tri.size()) + " entries, expected " + std::to_string(want3));
    if (saw_product && prod.size() != want2)
      throw ParseError(source, prod_line,
                       "product block has " + std::to_string(prod.size()) + " entries, expected " + std::to_string(want2));
    ParsedAlgebra parsed{Tribracket(n, tri), std::nullopt};
    if (saw_product) parsed.product = PartialProduct(n, prod);
    return parsed;
  }
};

}  // namespace detail

/// Parses a stream of algebra blocks. Each block starts at an `n = <size>`
/// line. Both '-' and '0' mean undefined inside a product block.
inline std::vector<ParsedAlgebra> parse_algebras(std::string_view text, const std::string& source = "<input>") {
  std::vector<ParsedAlgebra> out;
  detail::BlockParser cur{source};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = detail::strip_comment(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty()) continue;

    if (line.rfind("n", 0) == 0 && line.find('=') != std::string_view::npos &&
        detail::trim(line.substr(0, line.find('='))) == "n") {
      if (cur.started()) {
        out.push_back(cur.finish(line_no - 1));
        cur = detail::BlockParser{source};
      }
      auto v = detail::parse_int(detail::trim(line.substr(line.find('=') + 1)));
      if (!v || *v < 1) throw ParseError(source, line_no, "bad size in '" + std::string(line) + "'");
      cur.n = *v;
      cur.n_line = line_no;
      continue;
    }
    if (!cur.started()) throw ParseError(source, line_no, "expected 'n = <size>' before '" + std::string(line) + "'");
    auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      auto head = detail::trim(line.substr(0, colon));
      if (head == "tribracket") {
        if (cur.tri_line) throw ParseError(source, line_no, "duplicate 'tribracket:' block");
        cur.section = detail::BlockParser::Section::Tri;
        cur.tri_line = line_no;
      } else if (head == "product") {
        if (cur.saw_product) throw ParseError(source, line_no, "duplicate 'product:' block");
        cur.section = detail::BlockParser::Section::Prod;
        cur.prod_line = line_no;
        cur.saw_product = true;
      } else {
        throw ParseError(source, line_no, "unknown block '" + std::string(head) + "'");
      }
      cur.feed_entries(line.substr(colon + 1), line_no);
      continue;
    }
    cur.feed_entries(line, line_no);
  }
  if (!cur.started() && out.empty()) throw ParseError(source, line_no, "no algebra found");
  if (cur.started()) out.push_back(cur.finish(line_no));
  return out;
}

inline ParsedAlgebra parse_algebra(std::string_view text, const std::string& source = "<input>") {
  auto all = parse_algebras(text, source);
  if (all.size() != 1)
    throw ParseError(source, 1, "expected exactly one algebra, found " + std::to_string(all.size()));
  return std::move(all.front());
}

inline std::string format_product_rows(const PartialProduct& P) {
  std::ostringstream os;
  const int n = P.size();
  for (Element a = 1; a <= n; ++a) {
    if (a > 1) os << " / ";
    for (Element b = 1; b <= n; ++b) {
      if (b > 1) os << ' ';
      const Element v = P.at(a, b);
      if (v == kUndefined)
        os << '-';
      else
        os << v;
    }
  }
  return os.str();
}

inline std::string format_tribracket_matrix(const Tribracket& T, Element a) {
  std::ostringstream os;
  const int n = T.size();
  for (Element b = 1; b <= n; ++b) {
    if (b > 1) os << " / ";
    for (Element c = 1; c <= n; ++c) {
      if (c > 1) os << ' ';
      os << T(a, b, c);
    }
  }
  return os.str();
}

inline std::string format_algebra(const Tribracket& T, const PartialProduct* P = nullptr) {
  std::ostringstream os;
  os << "n = " << T.size() << "\ntribracket:\n";
  for (Element a = 1; a <= T.size(); ++a) os << format_tribracket_matrix(T, a) << '\n';
  if (P) os << "product:\n" << format_product_rows(*P) << '\n';
  return os.str();
}

inline std::string format_algebra(const NiebrzydowskiAlgebra& A) {
  return format_algebra(A.tribracket(), &A.product());
}

inline std::string format_witness(const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

inline std::string format_value(Element v) { return v == kUndefined ? "-" : std::to_string(v); }

/// One line per violation, or the single line "PASS".
inline std::string format_report(const AxiomReport& r) {
  if (r.passed) return "PASS\n";
  std::ostringstream os;
  os << "FAIL " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations)
    os << "  " << v.axiom << ' ' << format_witness(v.witness) << " lhs=" << format_value(v.lhs)
       << " rhs=" << format_value(v.rhs) << '\n';
  return os.str();
}

}  // namespace nalg
