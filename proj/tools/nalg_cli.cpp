// Command-line front end: verify, enumerate, count and check moves.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nalg/nalg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

// Thrown for unreadable paths; the message names the file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kBuiltinPrefix = "builtin:";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_builtin(const std::string& arg) { return arg.rfind(kBuiltinPrefix, 0) == 0; }

nalg::ParsedAlgebra load_algebra(const std::string& arg) {
  if (is_builtin(arg)) {
    const auto name = arg.substr(kBuiltinPrefix.size());
    for (const auto& t : nalg::corpus::algebra_texts())
      if (t.name == name) return nalg::parse_algebra(t.text, arg);
    throw IoError("no builtin algebra '" + name + "'");
  }
  return nalg::parse_algebra(read_file(arg), arg);
}

nalg::Diagram load_diagram(const std::string& arg) {
  if (is_builtin(arg)) {
    const auto name = arg.substr(kBuiltinPrefix.size());
    for (const auto& t : nalg::corpus::diagram_texts())
      if (t.name == name) return nalg::parse_diagram(t.text, arg);
    throw IoError("no builtin diagram '" + name + "'");
  }
  return nalg::parse_diagram(read_file(arg), arg);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

nalg::EnumerationBudget make_budget(std::uint64_t max_candidates, double timeout) {
  nalg::EnumerationBudget b;
  if (max_candidates > 0) b.max_candidates = max_candidates;
  if (timeout > 0) b.timeout_seconds = timeout;
  return b;
}

int cmd_verify(const std::string& path) {
  const auto parsed = load_algebra(path);
  const auto report = parsed.has_product() ? nalg::verify_algebra(parsed.algebra()) : nalg::verify_tribracket(parsed.tribracket);
  std::cout << nalg::format_report(report);
  return report.passed ? kOk : kMathFailure;
}

int cmd_enumerate_tribrackets(int n, const nalg::EnumerationBudget& budget) {
  const auto res = nalg::enumerate_tribrackets(n, budget);
  for (std::size_t i = 0; i < res.items.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << nalg::format_algebra(res.items[i]);
  }
  std::cerr << res.items.size() << " tribracket(s)" << (res.complete ? "" : ", search stopped by budget") << '\n';
  return kOk;
}

int cmd_enumerate_products(const std::string& path, bool idempotent_only, const nalg::EnumerationBudget& budget) {
  const auto parsed = load_algebra(path);
  std::vector<nalg::PartialProduct> items;
  bool complete = true;
  if (idempotent_only) {
    items = nalg::enumerate_idempotent_products(parsed.tribracket);
  } else {
    auto res = nalg::enumerate_products(parsed.tribracket, budget);
    items = std::move(res.items);
    complete = res.complete;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << nalg::format_algebra(parsed.tribracket, &items[i]);
  }
  std::cerr << items.size() << " product(s)" << (complete ? "" : ", search stopped by budget") << '\n';
  return kOk;
}

int cmd_count(const std::string& alg_path, const std::string& dia_path, bool enumerate, bool oracle,
              std::uint64_t cap) {
  const auto A = load_algebra(alg_path).algebra();
  const auto D = load_diagram(dia_path);
  const auto count = nalg::count_colorings(A, D);
  std::cout << count << '\n';
  if (enumerate) {
    for (const auto& col : nalg::enumerate_colorings(A, D)) {
      for (std::size_t i = 0; i < col.size(); ++i) std::cout << (i ? " " : "") << D.regions[i] << '=' << col[i];
      std::cout << '\n';
    }
  }
  if (oracle) {
    const auto brute = nalg::count_colorings_bruteforce(A, D, cap);
    if (brute != count) {
      std::cerr << "oracle mismatch: solver " << count << ", brute force " << brute << '\n';
      return kMathFailure;
    }
    std::cerr << "oracle agrees\n";
  }
  return kOk;
}

int cmd_check_moves(const std::string& path, const std::string& which, bool include_ih) {
  const auto A = load_algebra(path).algebra();
  const auto all = nalg::builtin_move_pairs();
  std::vector<const nalg::LocalMovePair*> selected;
  if (which.empty()) {
    for (const auto& m : all)
      if (include_ih || !m.requires_idempotent) selected.push_back(&m);
  } else {
    for (const auto& id : split_commas(which)) selected.push_back(&nalg::find_move(all, id));
  }
  bool ok = true;
  for (const auto* m : selected) {
    const auto r = nalg::check_move_invariance(A, *m);
    std::cout << m->move_id << ' ';
    if (r.passed) {
      std::cout << "PASS (" << r.boundary_colorings << " boundary colorings)\n";
      continue;
    }
    ok = false;
    std::cout << "FAIL at (";
    for (std::size_t i = 0; i < m->boundary.size(); ++i) std::cout << (i ? "," : "") << m->boundary[i];
    std::cout << ")=" << nalg::format_witness(r.witness) << ": before " << r.before_count << ", after "
              << r.after_count << '\n';
  }
  return ok ? kOk : kMathFailure;
}

int cmd_demo() {
  const auto rows = nalg::run_demo();
  std::cout << nalg::format_demo(rows);
  for (const auto& r : rows)
    if (!r.pass()) return kMathFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Niebrzydowski tribrackets, algebras and region-coloring counts"};
  app.require_subcommand(1);

  std::string alg, dia, moves;
  int n = 0;
  bool enumerate = false, oracle = false, include_ih = false, idempotent_only = false;
  std::uint64_t cap = nalg::kDefaultOracleCap, max_candidates = 0;
  double timeout = 0;
  const std::string file_help = "algebra file, or builtin:NAME (ex1, full, diag, K, z4)";

  auto* verify = app.add_subcommand("verify", "check every axiom and list violations");
  verify->add_option("algebra", alg, file_help)->required();

  auto* etri = app.add_subcommand("enumerate-tribrackets", "list every tribracket on {1..n}");
  etri->add_option("n", n, "carrier size")->required()->check(CLI::Range(1, 6));
  etri->add_option("--max-candidates", max_candidates, "stop after this many complete tables");
  etri->add_option("--timeout", timeout, "stop after this many seconds");

  auto* eprod = app.add_subcommand("enumerate-products", "list every compatible partial product");
  eprod->add_option("algebra", alg, file_help)->required();
  eprod->add_flag("--idempotent", idempotent_only, "only idempotent products");
  eprod->add_option("--max-candidates", max_candidates, "stop after this many complete tables");
  eprod->add_option("--timeout", timeout, "stop after this many seconds");

  auto* count = app.add_subcommand("count", "number of colorings of a diagram");
  count->add_option("algebra", alg, file_help)->required();
  count->add_option("diagram", dia, "diagram file, or builtin:NAME")->required();
  count->add_flag("--enumerate", enumerate, "also list the colorings");
  count->add_flag("--oracle", oracle, "cross-check against brute force");
  count->add_option("--cap", cap, "largest brute-force search space");

  auto* check = app.add_subcommand("check-moves", "compare boundary extension counts for each local move");
  check->add_option("algebra", alg, file_help)->required();
  check->add_option("--moves", moves, "comma-separated move ids");
  check->add_flag("--include-ih", include_ih, "also check the IH move");

  auto* demo = app.add_subcommand("demo", "reproduce every reference count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(alg);
    if (*etri) return cmd_enumerate_tribrackets(n, make_budget(max_candidates, timeout));
    if (*eprod) return cmd_enumerate_products(alg, idempotent_only, make_budget(max_candidates, timeout));
    if (*count) return cmd_count(alg, dia, enumerate, oracle, cap);
    if (*check) return cmd_check_moves(alg, moves, include_ih);
    if (*demo) return cmd_demo();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nalg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
