// soergel-forge: enumeration, graphs, morphisms and verification suites from the command line
#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "soergel/induced.hpp"
#include "soergel/suites.hpp"

using namespace soergel;
using nlohmann::json;

namespace {

constexpr int kMaxRank = 5;
constexpr const char* kSchema = "soergel-forge/1";

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 4;
  std::string J;
  std::optional<int> lo, hi;
  unsigned seed = 0;
  std::string format = "json";
  double budget = 0;  // seconds, 0 = none
};

json envelope(const std::string& cmd) { return json{{"schema", kSchema}, {"command", cmd}}; }

IndexSet parse_J(const Config& c, bool required = true) {
  if (c.J.empty()) {
    if (required) throw UsageError("--J is required");
    return {};
  }
  IndexSet J;
  try {
    J = parse_index_set(c.J);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --J: ") + e.what());
  }
  for (int j : J)
    if (j < 1 || j > c.n) throw UsageError("--J must be a subset of 1.." + std::to_string(c.n));
  return J;
}

Word parse_word_arg(const std::string& s, int n) {
  Word w;
  try {
    w = s == "-" || s == "e" ? Word{} : parse_word(s);
  } catch (const std::exception& e) {
    throw UsageError("bad word '" + s + "': " + e.what());
  }
  for (int c : w)
    if (c < 1 || c > n) throw UsageError("letters must lie in 1.." + std::to_string(n));
  return w;
}

void require_format(const Config& c, std::initializer_list<const char*> ok) {
  for (auto* f : ok)
    if (c.format == f) return;
  throw UsageError("format '" + c.format + "' is not available for this command");
}

// runs f, giving up with exit code 3 once the budget is spent
template <class F>
int with_budget(const Config& c, F f) {
  if (c.budget <= 0) return f();
  auto fut = std::async(std::launch::async, f);
  if (fut.wait_for(std::chrono::duration<double>(c.budget)) == std::future_status::ready) return fut.get();
  json o = envelope("budget");
  o["status"] = "budget_exceeded";
  o["budget_seconds"] = c.budget;
  std::cout << o.dump(2) << std::endl;
  std::_Exit(kBudget);
}

int cmd_redwords(const Config& c, const std::string& word) {
  require_format(c, {"json", "text"});
  Word w;
  IndexSet J;
  std::vector<Word> words;
  if (!word.empty()) {
    w = parse_word_arg(word, c.n);
    words = reduced_words(eval(w, c.n));
  } else {
    J = parse_J(c);
    words = reduced_words(longest(J, c.n).w);
  }
  if (c.format == "text") {
    for (auto& x : words) std::cout << word_str(x) << "\n";
    return kPass;
  }
  json o = envelope("redwords");
  if (word.empty())
    o["J"] = J;
  else
    o["word"] = w;
  o["count"] = words.size();
  o["words"] = json::array();
  for (auto& x : words) o["words"].push_back(word_str(x));
  std::cout << o.dump(2) << std::endl;
  return kPass;
}

int cmd_graph(const Config& c, bool conflated) {
  require_format(c, {"json", "dot"});
  IndexSet J = parse_J(c);
  auto g = build_expanded(longest(J, c.n).w);
  auto cg = conflate(g);
  if (c.format == "dot") {
    std::cout << to_dot(g, conflated ? &cg : nullptr);
    return kPass;
  }
  json o = envelope("graph");
  o["J"] = J;
  o["conflated"] = conflated;
  o["graph"] = json::parse(to_json(g, cg, conflated));
  std::cout << o.dump(2) << std::endl;
  return kPass;
}

int cmd_zmat(const Config& c, bool bar) {
  require_format(c, {"json"});
  IndexSet J = parse_J(c);
  if (J.empty()) throw UsageError("--J must be nonempty");
  BSMorphism z = bar ? zbar_morphism(J) : z_morphism(J);
  json o = envelope("zmat");
  o["J"] = J;
  o["bar"] = bar;
  o["morphism"] = json::parse(z.to_json());
  std::cout << o.dump() << std::endl;
  return kPass;
}

int cmd_verify(const Config& c, const std::string& suite) {
  require_format(c, {"json", "text"});
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  SuiteConfig sc;
  sc.n = c.n;
  sc.seed = c.seed;
  if (!c.J.empty()) sc.sets = {parse_J(c)};
  if (c.hi) sc.homdim_degree = *c.hi;
  return with_budget(c, [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto checks = run_suite(suite, sc);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.check < b.check; });
    bool ok = all_pass(checks);
    if (c.format == "text") {
      for (auto& k : checks)
        std::cout << (k.pass ? "PASS " : "FAIL ") << k.check << " " << k.params
                  << (k.witness.empty() ? "" : " [" + k.witness + "]") << "\n";
      std::cout << (ok ? "pass" : "fail") << " " << suite << " " << checks.size() << " checks" << std::endl;
    } else {
      json o = envelope("verify");
      o["suite"] = suite;
      o["status"] = ok ? "pass" : "fail";
      o["seconds"] = dt;
      o["checks"] = json::parse(checks_to_json(checks));
      std::cout << o.dump(2) << std::endl;
    }
    return ok ? kPass : kFail;
  });
}

int cmd_homdim(const Config& c, const std::string& xs, const std::string& ys) {
  require_format(c, {"json", "text"});
  Word x = parse_word_arg(xs, c.n), y = parse_word_arg(ys, c.n);
  int d = static_cast<int>(x.size() + y.size());
  int lo = c.lo.value_or(-d), hi = c.hi.value_or(d + 4);
  if (lo > hi) throw UsageError("--degree-lo exceeds --degree-hi");
  LaurentPoly rank = hom_rank_bs(x, y);
  return with_budget(c, [&] {
    json rows = json::array();
    bool ok = true;
    for (int m = lo; m <= hi; ++m) {
      long got = (m + d) % 2 ? 0 : hom_dim_at_degree(x, y, m, c.n);
      long want = graded_dim(rank, m, c.n);
      ok = ok && got == want;
      rows.push_back({{"degree", m}, {"dim", got}, {"predicted", want}});
    }
    if (c.format == "text") {
      std::cout << "degree dim predicted\n";
      for (auto& r : rows) std::cout << r["degree"] << " " << r["dim"] << " " << r["predicted"] << "\n";
    } else {
      json o = envelope("homdim");
      o["x"] = x;
      o["y"] = y;
      o["nvars"] = c.n;
      o["graded_rank"] = rank.str();
      o["status"] = ok ? "pass" : "fail";
      o["table"] = rows;
      std::cout << o.dump(2) << std::endl;
    }
    return ok ? kPass : kFail;
  });
}

int cmd_dualbasis(const Config& c) {
  require_format(c, {"json", "text"});
  IndexSet J = parse_J(c, false);
  auto db = dual_bases(J);
  if (c.format == "text") {
    for (size_t r = 0; r < db.basis.size(); ++r)
      std::cout << word_str(db.index[r]) << "\t" << db.basis[r].str() << "\t" << db.dual[r].str() << "\n";
    return kPass;
  }
  json o = envelope("dualbasis");
  o["J"] = J;
  o["entries"] = json::array();
  for (size_t r = 0; r < db.basis.size(); ++r)
    o["entries"].push_back({{"index", word_str(db.index[r])},
                            {"length", db.length[r]},
                            {"basis", db.basis[r].str()},
                            {"dual", db.dual[r].str()}});
  std::cout << o.dump(2) << std::endl;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular Soergel bimodule computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--n", c.n, "rank (R has n variables)")->check(CLI::Range(1, kMaxRank));
  app.add_option("--J", c.J, "parabolic subset, comma separated");
  app.add_option("--degree-lo", c.lo, "lowest degree");
  app.add_option("--degree-hi", c.hi, "highest degree");
  app.add_option("--seed", c.seed, "seed for sampled checks");
  app.add_option("--format", c.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--budget-seconds", c.budget, "give up after this many seconds");

  std::string word, suite, x, y;
  bool conflated = false, bar = false;
  auto* red = app.add_subcommand("redwords", "reduced words of w_J or of a word's element");
  red->add_option("--word", word, "word instead of --J");
  auto* graph = app.add_subcommand("graph", "graph of reduced expressions");
  graph->add_flag("--conflated", conflated, "collapse commutation classes");
  auto* zmat = app.add_subcommand("zmat", "the idempotent z_J as a matrix");
  zmat->add_flag("--bar", bar, "z bar instead");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  auto* homdim = app.add_subcommand("homdim", "bimodule hom dimensions against the Hecke prediction");
  homdim->add_option("x", x, "source word ('-' for empty)")->required();
  homdim->add_option("y", y, "target word ('-' for empty)")->required();
  auto* dual = app.add_subcommand("dualbasis", "dual bases of R over R^J");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*red) return cmd_redwords(c, word);
    if (*graph) return cmd_graph(c, conflated);
    if (*zmat) return cmd_zmat(c, bar);
    if (*verify) return cmd_verify(c, suite);
    if (*homdim) return cmd_homdim(c, x, y);
    if (*dual) return cmd_dualbasis(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
