// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "orientcorr/orientcorr.hpp"

using namespace orientcorr;
using nlohmann::json;

namespace {

struct Failure {
  std::string what;
};

std::string note; // optional detail printed after a PASS line

void require(bool ok, const std::string &what) {
  if (!ok)
    throw Failure{what};
}

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::vector<std::string> &args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str() + err.str()};
}

// Uniform random labelled trees via Pruefer sequences.
Graph pruefer_tree(Vertex n, std::mt19937 &rng) {
  if (n == 2)
    return Graph::from_edges(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> seq(n - 2);
  for (auto &x : seq)
    x = pick(rng);
  std::vector<unsigned> degree(n, 1);
  for (Vertex x : seq)
    ++degree[x];
  std::vector<Edge> edges;
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1)
      ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  Vertex u = n, v = n;
  for (Vertex i = 0; i < n; ++i)
    if (degree[i] == 1)
      (u == n ? u : v) = i;
  edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

std::vector<Graph> test_trees() {
  std::mt19937 rng(20240611);
  std::vector<Graph> trees;
  for (Vertex n = 3; n <= 8; ++n)
    for (int i = 0; i < 10; ++i)
      trees.push_back(pruefer_tree(n, rng));
  trees.push_back(path_graph(8));
  std::vector<Edge> star;
  for (Vertex v = 1; v < 8; ++v)
    star.emplace_back(0, v);
  trees.push_back(Graph::from_edges(8, star));
  return trees;
}

Graph k4_minus_edge() { return complete_graph(4).without_edge(0, 1); }

// ---------------------------------------------------------------------------

void table_reproduction() {
  struct Row {
    unsigned n;
    const char *scaled_a, *p_a, *scaled_ab, *p_ab, *rel_cov;
  };
  const Row expected[] = {
      {2, "1", "0.5000", nullptr, nullptr, nullptr},
      {3, "3", "0.3750", "1", "0.1250000", "-0.125000"},
      {4, "16", "0.2500", "4", "0.0625000", "0.000000"},
      {5, "150", "0.1465", "26", "0.0253906", "0.154898"},
      {6, "2504", "0.0764", "272", "0.0083008", "0.296523"},
      {7, "77472", "0.0369", "4672", "0.0022278", "0.387428"},
      {8, "4677904", "0.0174", "139696", "0.0005204", "0.416449"},
      {9, "571023120", "0.0083", "7928624", "0.0001154", "0.401547"},
      {10, "142058571776", "0.0040", "917140928", "0.0000261", "0.374613"},
      {11, "71626948215168", "0.0020", "220836999808", "0.0000061", "0.355191"},
      {12, "72752562631695616", "0.0010", "109473061398784", "0.0000015",
       "0.344746"},
      {13, "148346259329909191680", "0.0005", "110228037783934976", "0.0000004",
       "0.339426"},
  };
  const auto r = run_cli({"--json", "table", "--max-n", "13"});
  require(r.code == 0, "table command failed");
  const json rows = json::parse(r.out)["results"]["rows"];
  require(rows.size() == std::size(expected), "row count");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &e = expected[i];
    const auto &row = rows[i];
    const std::string at = " at n=" + std::to_string(e.n);
    require(row["n"] == e.n, "n" + at);
    require(row["scaled_a"] == e.scaled_a, "P(A) scaled" + at);
    require(row["p_a_display"] == e.p_a, "P(A) decimal" + at);
    if (!e.scaled_ab) {
      require(!row.contains("scaled_ab"), "unexpected P(A and B)" + at);
      continue;
    }
    require(row["scaled_ab"] == e.scaled_ab, "P(A and B) scaled" + at);
    require(row["p_ab_display"] == e.p_ab, "P(A and B) decimal" + at);
    require(row["rel_cov_display"] == e.rel_cov, "relative covariance" + at);
  }
  const auto text = run_cli({"table", "--max-n", "13"});
  require(text.out.find("71626948215168") != std::string::npos &&
              text.out.find("0.339426") != std::string::npos,
          "text table");
}

void k4_minus_edge_labelings() {
  const Graph g = k4_minus_edge(); // a = 0 and b = 1 are the non-adjacent pair
  const auto first = exact_correlation(g, {0, 2, 1});
  require(first.cov.value() == Dyadic(7, 10), "first labeling: " + first.cov.to_string());
  const auto second = exact_correlation(g, {2, 0, 3});
  require(second.cov.value() == -Dyadic(25, 10),
          "second labeling: " + second.cov.to_string());
}

void recursion_vs_enumeration() {
  KnRecursion rec;
  for (Vertex n = 3; n <= 7; ++n) {
    const auto k = count_events(complete_graph(n), {0, 1, 2}, {kDefaultEnumerationCap, 0});
    const auto m = static_cast<unsigned>(k.m);
    const BigInt total = pow2(m);
    require(rec.f(n, 1) == DyadicProb::from_count(total - k.n_c, m),
            "f mismatch at n=" + std::to_string(n));
    require(rec.g(n, 1) == DyadicProb::from_count(total - k.n_c - k.n_d + k.n_cd, m),
            "g mismatch at n=" + std::to_string(n));
  }
}

void sign_sequence() {
  KnRecursion rec;
  for (unsigned n = 3; n <= 15; ++n) {
    const int want = n == 3 ? -1 : n == 4 ? 0 : 1;
    require(covariance_sign_kn(rec, n) == want, "sign at n=" + std::to_string(n));
  }
}

void cycles() {
  for (unsigned n = 3; n <= 10; ++n)
    for (unsigned c = 1; c + 1 < n; ++c)
      for (unsigned d = 1; c + d < n; ++d) {
        const std::string at = " at n=" + std::to_string(n) + " c=" +
                               std::to_string(c) + " d=" + std::to_string(d);
        const auto closed = cycle_correlation({n, c, d});
        const auto brute = exact_correlation(cycle_graph(n), {0, c, c + d});
        require(closed.p_c == brute.p_c && closed.p_d == brute.p_d &&
                    closed.p_cd == brute.p_cd && closed.cov == brute.cov,
                "closed form differs from enumeration" + at);
        const Dyadic bound = -Dyadic::half_pow(2 * n);
        require(closed.cov.value() <= bound, "bound violated" + at);
        require((closed.cov.value() == bound) == (c == 1 && d == 1),
                "equality case" + at);
      }
}

void forests() {
  const auto trees = test_trees();
  require(trees.size() >= 50, "too few trees");
  std::vector<Graph> graphs = trees;
  // Forests: drop one edge from a few trees.
  for (std::size_t i = 0; i < trees.size(); i += 7)
    graphs.push_back(trees[i].without_edge(trees[i].edges().front().first,
                                             trees[i].edges().front().second));
  for (const Graph &g : graphs)
    for_each_ordered_triple(g.n(), [&](const Triple &t) {
      const auto v = forest_correlation(g, t);
      const auto brute = exact_correlation(g, t);
      const auto got = v.correlation();
      const std::string at = " on " + to_graph6(g);
      require(got.p_c == brute.p_c && got.p_d == brute.p_d &&
                  got.p_cd == brute.p_cd && got.cov == brute.cov,
              "closed form differs from enumeration" + at);
      const auto comp = component_of(g, t.a);
      const bool split = !(comp & bit(t.s)) || !(comp & bit(t.b));
      const auto da = distances_from(g, t.a), ds = distances_from(g, t.s);
      const bool passes = !split && da[t.s] + ds[t.b] == da[t.b];
      require((v.kind == ForestKind::independent) == (split || passes),
              "verdict" + at);
      if (v.kind == ForestKind::independent)
        require(brute.cov.sign == 0, "independent but correlated" + at);
      else
        require(brute.p_cd.is_zero(), "exclusive but joint probability > 0" + at);
    });
}

void bound_suite() {
  const auto report = bound_report(40);
  require(report.c8_below_5, "c(8) < 5");
  for (const auto &row : report.rows)
    require(row.all_true(), "bound fails at n=" + std::to_string(row.n));
  require(report.all_true(), "report");
}

void limit_trend() {
  KnRecursion rec;
  const double f30 = ldexp(rec.f(30, 1).to_double(), 28);
  const double g30 = ldexp(rec.g(30, 1).to_double(), 57);
  require(f30 > 0.95 && f30 < 1.05, "2^(n-2) f(30,1) = " + std::to_string(f30));
  require(g30 > 2.85 && g30 < 3.15, "2^(2n-3) g(30,1) = " + std::to_string(g30));
  const Rational third(1, 3);
  Rational previous = 1;
  for (unsigned n = 10; n <= 15; ++n) {
    Rational gap = *table_row(rec, n).rel_cov - third;
    if (gap < 0)
      gap = -gap;
    require(gap < previous, "|rel_cov - 1/3| not decreasing at n=" + std::to_string(n));
    previous = gap;
  }
}

void classifier() {
  const ClassifyOptions opts{{kDefaultEnumerationCap, 0}};
  const auto k4 = classify(complete_graph(4), opts);
  require(k4.class_i && k4.class_ii && k4.class_iii, "K4 flags");
  for (Vertex n : {5u, 6u}) {
    const auto f = classify(complete_graph(n), opts);
    require(f.class_iii && !f.class_i, "K" + std::to_string(n) + " flags");
  }
  for (Vertex n = 3; n <= 8; ++n)
    require(classify(cycle_graph(n), opts).class_i, "C" + std::to_string(n));
  for (const Graph &t : test_trees())
    require(classify(t, opts).class_i, "tree " + to_graph6(t));
  require(classify(k4_minus_edge(), opts).class_ii, "K4 minus an edge");
}

void monte_carlo() {
  const Graph k5 = complete_graph(5);
  const Triple t{0, 1, 2};
  // 26/1024 is the joint non-reachability probability g(5,1).
  const double exact = kn_g(5, 1).to_double();
  require(exact == 26.0 / 1024, "g(5,1)");
  // One-sample proportion test: the standard error is taken at the
  // hypothesised value. The plug-in (Wald) count is reported alongside.
  const double se0 = binomial_se(exact, 100000);
  int covered = 0, covered_wald = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto e = mc_estimate(k5, t, 100000, seed, 0);
    covered += std::abs(e.p_neither_hat - exact) <= 3 * se0;
    covered_wald += std::abs(e.p_neither_hat - exact) <= 3 * e.se_neither;
  }
  const std::string tally = std::to_string(covered) + "/200 within 3 se (plug-in se: " +
                            std::to_string(covered_wald) + "/200)";
  require(covered >= 198, tally);
  note = tally;
  require(mc_estimate(k5, t, 100000, 99, 1) == mc_estimate(k5, t, 100000, 99, 8),
          "1 vs 8 workers differ");
  const std::vector<std::string> args = {"--json", "mc", "--graph6", "D~{", "--a",
                                         "0", "--s", "1", "--b", "2",
                                         "--samples", "100000", "--seed", "7"};
  auto with = [&](const char *threads) {
    auto a = args;
    a.insert(a.begin(), {"--threads", threads});
    return run_cli(a);
  };
  const auto one = with("1"), eight = with("8");
  require(one.code == 0 && one.out == eight.out, "CLI output differs across workers");
}

void determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"table", "--max-n", "13"},
      {"kn", "--n", "20"},
      {"exact", "--graph6", "E~~w", "--a", "0", "--s", "3", "--b", "5"},
      {"exact", "--graph6", "C^", "--a", "0", "--s", "2", "--b", "1"},
      {"cycle", "--n", "9", "--c", "2", "--d", "3"},
      {"forest", "--graph6", "D?{", "--a", "0", "--s", "1", "--b", "2"},
      {"classify", "--graph6", "E~~w"},
      {"bounds", "--max-n", "40"},
  };
  for (const auto &cmd : commands)
    for (const bool as_json : {false, true}) {
      std::vector<std::string> outputs;
      for (const char *threads : {"1", "8", "1", "8"}) {
        std::vector<std::string> args = {"--threads", threads};
        if (as_json)
          args.push_back("--json");
        args.insert(args.end(), cmd.begin(), cmd.end());
        const auto r = run_cli(args);
        require(r.code == 0, "command failed: " + cmd.front());
        outputs.push_back(r.out);
      }
      for (const auto &o : outputs)
        require(o == outputs.front(), "nondeterministic output: " + cmd.front());
    }
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<void()>>> criteria = {
      {"complete-graph table, n = 2..13", table_reproduction},
      {"K4 minus an edge: +7/1024 and -25/1024", k4_minus_edge_labelings},
      {"f and g equal enumeration on K3..K7", recursion_vs_enumeration},
      {"covariance sign sequence n = 3..15", sign_sequence},
      {"cycle closed form and bound, n = 3..10", cycles},
      {"forest dichotomy on random trees and forests", forests},
      {"exact bound suite up to n = 40", bound_suite},
      {"limit trend at n = 30 and rel. covariance gap", limit_trend},
      {"classifier flags", classifier},
      {"Monte Carlo calibration on K5", monte_carlo},
      {"determinism across thread counts and runs", determinism},
  };
  int failures = 0, index = 0;
  for (const auto &[name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    note.clear();
    try {
      check();
      detail = note;
    } catch (const Failure &f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception &e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-48s %7.2fs%s%s\n", ok ? "PASS" : "FAIL", index, name,
                secs, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
