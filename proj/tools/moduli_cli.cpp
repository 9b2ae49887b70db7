#include "moduli/algebra/serialize.hpp"
#include "moduli/errors.hpp"
#include "moduli/fatgraph/enumerate.hpp"
#include "moduli/fatgraph/text_format.hpp"
#include "moduli/invariants/invariants.hpp"
#include "moduli/kernels/kernels.hpp"
#include "moduli/polytope/polytope.hpp"
#include "moduli/recursion/numeric.hpp"
#include "moduli/recursion/symbolic.hpp"
#include "moduli/recursion/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

using namespace moduli;

namespace {

constexpr int kPolynomialBudget = 7;
constexpr int kEnumerationBudget = 4;
constexpr std::uint64_t kSampleSeed = 20240601;

struct RunConfig {
  int g = 0;
  int n = 0;
  std::vector<std::int64_t> b;
  std::string parity;
  std::string method = "poly";
  std::string format = "text";
  std::string cache_dir;
  std::string verify = "off";
  bool force = false;
  bool fatgraphs = false;
  unsigned max_m = 2;
};

void check_budget(const RunConfig& cfg, int budget, const char* what) {
  const int dim = 3 * cfg.g - 3 + cfg.n;
  if (dim <= budget) return;
  const std::string msg = std::string(what) + " budget exceeded: 3g-3+n = " + std::to_string(dim) +
                          " > " + std::to_string(budget);
  if (!cfg.force) throw RefusalError(msg + " (use --force to override)");
  std::cerr << "warning: " << msg << ", continuing because of --force\n";
}

void check_lengths(const RunConfig& cfg) {
  if (static_cast<int>(cfg.b.size()) != cfg.n)
    throw RefusalError("expected " + std::to_string(cfg.n) + " boundary lengths, got " +
                       std::to_string(cfg.b.size()));
  for (auto v : cfg.b)
    if (v < 1) throw RefusalError("boundary lengths must be positive integers");
}

std::vector<bool> parse_parity(const RunConfig& cfg) {
  std::vector<bool> odd;
  std::stringstream in(cfg.parity);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "odd") odd.push_back(true);
    else if (item == "even") odd.push_back(false);
    else throw RefusalError("--parity entries must be 'odd' or 'even', got '" + item + "'");
  }
  if (static_cast<int>(odd.size()) != cfg.n)
    throw RefusalError("--parity needs " + std::to_string(cfg.n) + " entries");
  return odd;
}

FamilyStore make_store(const RunConfig& cfg) {
  std::string dir = cfg.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("MODULI_CACHE_DIR")) dir = env;
  return dir.empty() ? FamilyStore() : FamilyStore(dir);
}

std::vector<std::vector<std::int64_t>> full_points(int n, int max_length) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> b(n, 1);
  while (true) {
    std::int64_t s = 0;
    for (auto v : b) s += v;
    if (s % 2 == 0) out.push_back(b);
    int i = 0;
    while (i < n && b[i] == max_length) b[i++] = 1;
    if (i == n) break;
    ++b[i];
  }
  return out;
}

void run_verification(const RunConfig& cfg, FamilyStore& store, const std::string& level) {
  if (level == "off") return;
  const auto points = level == "full" ? full_points(cfg.n, 6) : sample_points(cfg.n, 10, kSampleSeed);
  const RecursionReport report = verify_recursion(store, cfg.g, cfg.n, points);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "recursion check failed for (" << cfg.g << "," << cfg.n << ") at b = (";
    for (std::size_t i = 0; i < report.mismatches.front().size(); ++i)
      msg << (i ? "," : "") << report.mismatches.front()[i];
    msg << ")";
    throw ConsistencyError(msg.str());
  }
  std::cerr << "verified recursion at " << report.checked << " points\n";
}

const LatticeCountPolynomial& family(const RunConfig& cfg, FamilyStore& store) {
  require_stable(cfg.g, cfg.n);
  check_budget(cfg, kPolynomialBudget, "polynomial");
  const auto& f = store.get(cfg.g, cfg.n);
  if (store.rejected_cache_files() > 0)
    std::cerr << "warning: rejected " << store.rejected_cache_files() << " corrupt cache file(s), recomputed\n";
  run_verification(cfg, store, cfg.verify);
  return f;
}

void print(const RunConfig& cfg, const nlohmann::json& j, const std::string& text) {
  if (cfg.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string vector_text(const std::vector<std::int64_t>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

int cmd_poly(const RunConfig& cfg) {
  FamilyStore store = make_store(cfg);
  const auto& f = family(cfg, store);
  if (!cfg.parity.empty()) {
    const SquarePolynomial p = f.polynomial_for(parse_parity(cfg));
    print(cfg, to_json(p), render(p) + "\n");
    return 0;
  }
  std::string text;
  for (std::size_t k = 0; k < f.classes.size(); k += 2)
    text += "odd_count=" + std::to_string(k) + ": " + render(f.classes[k]) + "\n";
  print(cfg, to_json(f), text);
  return 0;
}

int cmd_eval(const RunConfig& cfg, const std::string& method) {
  require_stable(cfg.g, cfg.n);
  check_lengths(cfg);
  Rational value;
  if (method == "direct") {
    check_budget(cfg, kEnumerationBudget, "enumeration");
    value = direct_count(cfg.g, cfg.n, cfg.b);
  } else if (method == "recursive") {
    value = eval_recursive(cfg.g, cfg.n, cfg.b);
  } else {
    FamilyStore store = make_store(cfg);
    value = family(cfg, store).evaluate(cfg.b);
  }
  print(cfg, {{"g", cfg.g}, {"n", cfg.n}, {"b", cfg.b}, {"method", method}, {"value", to_string(value)}},
        to_string(value) + "\n");
  return 0;
}

int cmd_dessins(const RunConfig& cfg) {
  require_stable(cfg.g, cfg.n);
  check_lengths(cfg);
  check_budget(cfg, kEnumerationBudget, "enumeration");
  const DessinListing listing = list_dessins(cfg.g, cfg.n, cfg.b);
  nlohmann::json entries = nlohmann::json::array();
  std::string text;
  for (const auto& e : listing.entries) {
    entries.push_back({{"fatgraph", write_fatgraph(e.graph)}, {"aut", e.automorphisms}, {"metrics", e.metrics}});
    text += write_fatgraph(e.graph) + "  |Aut|=" + std::to_string(e.automorphisms) + "\n";
    for (const auto& x : e.metrics) text += "  x=" + vector_text(x) + "\n";
  }
  text += "weighted total: " + to_string(listing.weighted_total) + "\n";
  print(cfg, {{"g", cfg.g}, {"n", cfg.n}, {"b", cfg.b}, {"entries", entries},
              {"weighted_total", to_string(listing.weighted_total)}},
        text);
  return 0;
}

int cmd_fatgraphs(const RunConfig& cfg) {
  require_stable(cfg.g, cfg.n);
  check_budget(cfg, kEnumerationBudget, "enumeration");
  nlohmann::json graphs = nlohmann::json::array();
  std::string text;
  for (const auto& e : enumerate(cfg.g, cfg.n)) {
    const int edges = edge_count(e.graph);
    graphs.push_back({{"fatgraph", write_fatgraph(e.graph)}, {"edges", edges}, {"aut", e.automorphisms}});
    text += write_fatgraph(e.graph) + "  E=" + std::to_string(edges) + " |Aut|=" +
            std::to_string(e.automorphisms) + "\n";
  }
  text += std::to_string(graphs.size()) + " labeled fatgraphs\n";
  print(cfg, {{"g", cfg.g}, {"n", cfg.n}, {"fatgraphs", graphs}}, text);
  return 0;
}

std::string branch_text(const UniPolynomial& p) {
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational c = p.coefficient(d);
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    s += to_string(abs(c)) + (d == 0 ? "" : d == 1 ? "*k" : "*k^" + std::to_string(d));
  }
  return s.empty() ? "0" : s;
}

nlohmann::json branch_json(const UniPolynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_string(c));
  return j;
}

int cmd_kernels(const RunConfig& cfg) {
  std::vector<std::pair<std::string, KernelKey>> keys;
  for (unsigned m = 0; m <= cfg.max_m; ++m) keys.emplace_back("S_" + std::to_string(m), pair_kernel_key(m));
  for (unsigned m = 0; m <= cfg.max_m; ++m)
    for (unsigned m2 = 0; m + m2 <= cfg.max_m; ++m2)
      keys.emplace_back("R_" + std::to_string(m) + "," + std::to_string(m2), triple_kernel_key(m, m2));
  nlohmann::json list = nlohmann::json::array();
  std::string text;
  for (const auto& [name, key] : keys) {
    const ParityKernel& k = kernel(key);
    list.push_back({{"name", name}, {"even", branch_json(k.even_branch)}, {"odd", branch_json(k.odd_branch)}});
    text += name + "  even k: " + branch_text(k.even_branch) + "\n";
    text += std::string(name.size(), ' ') + "  odd k:  " + branch_text(k.odd_branch) + "\n";
  }
  print(cfg, {{"kernels", list}}, text);
  return 0;
}

int cmd_euler(const RunConfig& cfg) {
  FamilyStore store = make_store(cfg);
  const Rational closed = euler_closed(cfg.g, cfg.n);
  const Rational poly = euler_from_polynomial(family(cfg, store));
  nlohmann::json j{{"g", cfg.g}, {"n", cfg.n}, {"closed", to_string(closed)}, {"polynomial", to_string(poly)}};
  std::string text = "closed:     " + to_string(closed) + "\npolynomial: " + to_string(poly) + "\n";
  if (cfg.fatgraphs) {
    check_budget(cfg, kEnumerationBudget, "enumeration");
    const Rational fat = euler_from_fatgraphs(cfg.g, cfg.n);
    j["fatgraphs"] = to_string(fat);
    text += "fatgraphs:  " + to_string(fat) + "\n";
  }
  print(cfg, j, text);
  if (closed != poly) throw ConsistencyError("Euler characteristics disagree");
  return 0;
}

int cmd_report(const RunConfig& cfg) {
  FamilyStore store = make_store(cfg);
  const auto& f = family(cfg, store);
  const bool fat = cfg.fatgraphs && 3 * cfg.g - 3 + cfg.n <= kEnumerationBudget;
  std::cout << invariants_report(f, {fat}).dump(2) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  FamilyStore store = make_store(cfg);
  RunConfig quiet = cfg;
  quiet.verify = "off";
  family(quiet, store);
  const std::string level = cfg.verify == "off" ? "samples" : cfg.verify;
  run_verification(cfg, store, level);
  print(cfg, {{"g", cfg.g}, {"n", cfg.n}, {"level", level}, {"ok", true}}, "ok\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-count polynomials N_{g,n} and the invariants they encode"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Family cache directory (default $MODULI_CACHE_DIR)");
  app.add_option("--verify", cfg.verify, "Recheck the recursion before output")
      ->check(CLI::IsMember({"off", "samples", "full"}));
  app.add_flag("--force", cfg.force, "Run past the size budgets");

  auto add_gn = [&](CLI::App* sub) {
    sub->add_option("g", cfg.g, "genus")->required();
    sub->add_option("n", cfg.n, "number of boundary components")->required();
  };
  auto add_b = [&](CLI::App* sub) { sub->add_option("b", cfg.b, "boundary lengths")->required(); };

  auto* poly = app.add_subcommand("poly", "Print the parity-class polynomials of N_{g,n}");
  add_gn(poly);
  poly->add_option("--parity", cfg.parity, "Comma-separated odd/even per argument");

  auto* eval = app.add_subcommand("eval", "Evaluate N_{g,n}(b)");
  add_gn(eval);
  add_b(eval);
  eval->add_option("--method", cfg.method, "Engine")->check(CLI::IsMember({"direct", "recursive", "poly"}));

  auto* count = app.add_subcommand("count-direct", "Evaluate N_{g,n}(b) by fatgraph lattice counting");
  add_gn(count);
  add_b(count);

  auto* dessins = app.add_subcommand("dessins", "List fatgraph metrics with boundary lengths b");
  add_gn(dessins);
  add_b(dessins);

  auto* fatgraphs = app.add_subcommand("fatgraphs", "Enumerate labeled fatgraphs of type (g,n)");
  add_gn(fatgraphs);

  auto* kernels = app.add_subcommand("kernels", "Print the parity kernels S_m and R_{m,m'}");
  kernels->add_option("--max-m", cfg.max_m, "Largest m (and m+m')");

  auto* euler = app.add_subcommand("euler", "Orbifold Euler characteristic of M_{g,n}");
  add_gn(euler);
  euler->add_flag("--fatgraphs", cfg.fatgraphs, "Also sum over fatgraphs");

  auto* report = app.add_subcommand("report", "JSON report of the invariants of N_{g,n}");
  add_gn(report);
  report->add_flag("--fatgraphs", cfg.fatgraphs, "Include enumeration-based values");

  auto* verify = app.add_subcommand("verify", "Check the recursion on the family of N_{g,n}");
  add_gn(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poly) return cmd_poly(cfg);
    if (*eval) return cmd_eval(cfg, cfg.method);
    if (*count) return cmd_eval(cfg, "direct");
    if (*dessins) return cmd_dessins(cfg);
    if (*fatgraphs) return cmd_fatgraphs(cfg);
    if (*kernels) return cmd_kernels(cfg);
    if (*euler) return cmd_euler(cfg);
    if (*report) return cmd_report(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
