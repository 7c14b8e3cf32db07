#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "orientcorr/orientcorr.hpp"

namespace orientcorr::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Unreadable input file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  unsigned threads = 0;
  bool json = false;
  unsigned cap = kDefaultEnumerationCap;

  EnumOptions enumeration() const { return {cap, threads}; }
};

struct GraphSource {
  std::string graph6;
  std::string edges_file;
};

struct TripleArgs {
  Vertex a = 0, s = 0, b = 0;
  Triple triple() const { return {a, s, b}; }
};

std::string render(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string read_text(const std::string &path, std::istream &in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path);
  if (!file)
    throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

Graph load_graph(const GraphSource &src, std::istream &in) {
  if (src.graph6.empty() == src.edges_file.empty())
    throw std::invalid_argument("give exactly one of --graph6 or --edges");
  if (!src.graph6.empty())
    return parse_graph6(src.graph6);
  return parse_edge_list(read_text(src.edges_file, in));
}

void add_graph_source(CLI::App *cmd, GraphSource &src) {
  cmd->add_option("--graph6", src.graph6, "graph as a graph6 record");
  cmd->add_option("--edges", src.edges_file,
                  "edge-list file (first line n, then \"u v\" per line; - for stdin)");
}

void add_triple(CLI::App *cmd, TripleArgs &t) {
  cmd->add_option("--a", t.a, "vertex a")->required();
  cmd->add_option("--s", t.s, "vertex s")->required();
  cmd->add_option("--b", t.b, "vertex b")->required();
}

Json header(const char *command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

Json graph_json(const Graph &g) {
  return Json{{"n", g.n()}, {"m", g.m()}, {"graph6", to_graph6(g)}};
}

Json triple_json(const Triple &t) {
  return Json{{"a", t.a}, {"s", t.s}, {"b", t.b}};
}

Json correlation_json(const TripleCorrelation &r) {
  return Json{{"p_c", r.p_c.to_string()},
              {"p_d", r.p_d.to_string()},
              {"p_cd", r.p_cd.to_string()},
              {"cov", r.cov.to_string()},
              {"cov_sign", std::string(1, r.cov.sign_char())},
              {"cov_magnitude", r.cov.magnitude.to_string()},
              {"approx",
               {{"p_c", r.p_c.to_double()},
                {"p_d", r.p_d.to_double()},
                {"p_cd", r.p_cd.to_double()},
                {"cov", r.cov.to_double()}}}};
}

void print_correlation(std::ostream &out, const TripleCorrelation &r) {
  auto line = [&](const char *label, const std::string &exact, double approx) {
    out << label << exact << "  (" << render(approx) << ")\n";
  };
  line("P(a->s)         = ", r.p_c.to_string(), r.p_c.to_double());
  line("P(s->b)         = ", r.p_d.to_string(), r.p_d.to_double());
  line("P(a->s, s->b)   = ", r.p_cd.to_string(), r.p_cd.to_double());
  line("covariance      = ", r.cov.to_string(), r.cov.to_double());
  out << "sign            = " << r.cov.sign_char() << "\n";
}

void emit(std::ostream &out, const Json &j) { out << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// Subcommands

int cmd_kn(unsigned n, const GlobalOptions &g, std::ostream &out) {
  if (n < 3 || n > kMaxTableN)
    throw std::invalid_argument("kn needs 3 <= n <= " + std::to_string(kMaxTableN));
  KnRecursion rec;
  const KnRow row = table_row(rec, n);
  const int sign = covariance_sign_kn(rec, n);
  if (g.json) {
    Json j = header("kn");
    j["inputs"] = {{"n", n}};
    j["results"] = {
        {"p_a", row.p_a.to_string()},
        {"p_ab", row.p_ab->to_string()},
        {"scaled_a", row.scaled_a.str()},
        {"scaled_ab", row.scaled_ab->str()},
        {"rel_cov", rational_to_string(*row.rel_cov)},
        {"cov_sign", sign},
        {"approx",
         {{"p_a", row.p_a.to_double()},
          {"p_ab", row.p_ab->to_double()},
          {"rel_cov", to_double(*row.rel_cov)}}}};
    emit(out, j);
    return kOk;
  }
  out << "n                      = " << n << "\n"
      << "P(A)                   = " << row.p_a.to_string() << "  ("
      << render(row.p_a.to_double()) << ")\n"
      << "P(A and B)             = " << row.p_ab->to_string() << "  ("
      << render(row.p_ab->to_double()) << ")\n"
      << "P(A) * 2^C(n,2)        = " << row.scaled_a << "\n"
      << "P(A and B) * 2^C(n,2)  = " << *row.scaled_ab << "\n"
      << "relative covariance    = " << rational_to_string(*row.rel_cov) << "  ("
      << format_fixed(*row.rel_cov, 6) << ")\n"
      << "covariance sign        = " << (sign < 0 ? '-' : sign > 0 ? '+' : '0')
      << "\n";
  return kOk;
}

int cmd_table(unsigned max_n, const GlobalOptions &g, std::ostream &out) {
  if (max_n < 2 || max_n > kMaxTableN)
    throw std::invalid_argument("table needs 2 <= max-n <= " +
                                std::to_string(kMaxTableN));
  KnRecursion rec;
  std::vector<KnRow> rows;
  for (unsigned n = 2; n <= max_n; ++n)
    rows.push_back(table_row(rec, n));

  if (g.json) {
    Json j = header("table");
    j["inputs"] = {{"max_n", max_n}};
    Json list = Json::array();
    for (const auto &r : rows) {
      Json row = {{"n", r.n},
                  {"scaled_a", r.scaled_a.str()},
                  {"p_a", r.p_a.to_string()},
                  {"p_a_display", format_fixed(r.p_a.to_rational(), 4)}};
      if (r.p_ab) {
        row["scaled_ab"] = r.scaled_ab->str();
        row["p_ab"] = r.p_ab->to_string();
        row["p_ab_display"] = format_fixed(r.p_ab->to_rational(), 7);
        row["rel_cov"] = rational_to_string(*r.rel_cov);
        row["rel_cov_display"] = format_fixed(*r.rel_cov, 6);
      }
      list.push_back(std::move(row));
    }
    j["results"] = {{"rows", std::move(list)}};
    emit(out, j);
    return kOk;
  }

  // Columns: n | P(A)*2^C(n,2) | P(A) | P(A&B)*2^C(n,2) | P(A&B) | rel. cov.
  std::size_t wa = 13, wab = 15;
  for (const auto &r : rows) {
    wa = std::max(wa, r.scaled_a.str().size());
    if (r.scaled_ab)
      wab = std::max(wab, r.scaled_ab->str().size());
  }
  auto pad = [](const std::string &s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  out << pad("n", 3) << " | " << pad("P(A)*2^C(n,2)", wa) << " | "
      << pad("P(A)", 6) << " | " << pad("P(AB)*2^C(n,2)", wab) << " | "
      << pad("P(AB)", 9) << " | " << pad("rel.cov", 9) << "\n";
  for (const auto &r : rows) {
    std::ostringstream line;
    line << pad(std::to_string(r.n), 3) << " | " << pad(r.scaled_a.str(), wa)
         << " | " << format_fixed(r.p_a.to_rational(), 4) << " | ";
    if (r.p_ab)
      line << pad(r.scaled_ab->str(), wab) << " | "
           << format_fixed(r.p_ab->to_rational(), 7) << " | "
           << pad(format_fixed(*r.rel_cov, 6), 9);
    else
      line << pad("", wab) << " | " << pad("", 9) << " |";
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
  }
  return kOk;
}

int cmd_exact(const Graph &graph, const Triple &t, const GlobalOptions &g,
              std::ostream &out) {
  const auto counts = count_events(graph, t, g.enumeration());
  const auto r = TripleCorrelation::from_counts(counts);
  if (g.json) {
    Json j = header("exact");
    j["inputs"] = {{"graph", graph_json(graph)}, {"triple", triple_json(t)}};
    Json res = correlation_json(r);
    res["counts"] = {{"orientations", pow2(static_cast<unsigned>(counts.m)).str()},
                     {"n_c", counts.n_c.str()},
                     {"n_d", counts.n_d.str()},
                     {"n_cd", counts.n_cd.str()}};
    j["results"] = std::move(res);
    emit(out, j);
    return kOk;
  }
  out << "graph " << to_graph6(graph) << " (n=" << graph.n()
      << ", m=" << graph.m() << "), a=" << t.a << " s=" << t.s << " b=" << t.b
      << "\n";
  out << "orientations    = 2^" << counts.m << "\n";
  print_correlation(out, r);
  return kOk;
}

int cmd_cycle(const CycleTriple &ct, const GlobalOptions &g, std::ostream &out) {
  const auto r = cycle_correlation(ct);
  const bool at_bound = r.cov.value() == -Dyadic::half_pow(2 * ct.n);
  if (g.json) {
    Json j = header("cycle");
    j["inputs"] = {{"n", ct.n}, {"c", ct.c}, {"d", ct.d}};
    Json res = correlation_json(r);
    res["bound"] = (-Dyadic::half_pow(2 * ct.n)).to_string();
    res["at_bound"] = at_bound;
    j["results"] = std::move(res);
    emit(out, j);
    return kOk;
  }
  out << "cycle n=" << ct.n << " c=" << ct.c << " d=" << ct.d << "\n";
  print_correlation(out, r);
  out << "bound -2^-(2n)  = " << (-Dyadic::half_pow(2 * ct.n)).to_string()
      << (at_bound ? "  (attained)" : "  (strict)") << "\n";
  return kOk;
}

int cmd_forest(const Graph &graph, const Triple &t, const GlobalOptions &g,
               std::ostream &out) {
  const auto v = forest_correlation(graph, t);
  if (g.json) {
    Json j = header("forest");
    j["inputs"] = {{"graph", graph_json(graph)}, {"triple", triple_json(t)}};
    Json res = correlation_json(v.correlation());
    res["kind"] = to_string(v.kind);
    j["results"] = std::move(res);
    emit(out, j);
    return kOk;
  }
  out << "verdict         = " << to_string(v.kind) << "\n";
  print_correlation(out, v.correlation());
  return kOk;
}

Json flags_json(const ClassFlags &f) {
  return Json{{"class_i", f.class_i},           {"class_ii", f.class_ii},
              {"class_iii", f.class_iii},       {"neg_triples", f.neg_triples},
              {"zero_triples", f.zero_triples}, {"pos_triples", f.pos_triples}};
}

Json record_json(const StreamRecord &r) {
  Json j = {{"id", r.id}, {"graph6", r.graph6}, {"status", to_string(r.status)}};
  if (r.status != RecordStatus::error || r.n) {
    j["n"] = r.n;
    j["m"] = r.m;
  }
  if (r.flags)
    j["flags"] = flags_json(*r.flags);
  if (r.outerplanar)
    j["outerplanar"] = *r.outerplanar;
  if (r.disconnected)
    j["disconnected"] = true;
  if (!r.message.empty())
    j["message"] = r.message;
  return j;
}

struct ClassifyArgs {
  std::string graph6;
  std::string stream;
  bool outerplanar = false;
  bool allow_disconnected = false;
  bool per_triple = false;
};

int cmd_classify(const ClassifyArgs &args, const GlobalOptions &g,
                 std::istream &in, std::ostream &out) {
  if (args.graph6.empty() == args.stream.empty())
    throw std::invalid_argument("give exactly one of --graph6 or --stream");
  StreamOptions opts;
  opts.classify.enumeration = g.enumeration();
  opts.classify.allow_disconnected = args.allow_disconnected;
  opts.classify.per_triple = args.per_triple;
  opts.outerplanar = args.outerplanar;

  if (!args.graph6.empty()) {
    const Graph graph = parse_graph6(args.graph6);
    const ClassFlags f = classify(graph, opts.classify);
    std::optional<bool> outerplanar;
    if (args.outerplanar)
      outerplanar = is_outerplanar(graph);
    if (g.json) {
      Json j = header("classify");
      j["inputs"] = {{"graph", graph_json(graph)}};
      Json res = flags_json(f);
      if (outerplanar)
        res["outerplanar"] = *outerplanar;
      j["results"] = std::move(res);
      emit(out, j);
      return kOk;
    }
    out << "graph " << to_graph6(graph) << " (n=" << graph.n()
        << ", m=" << graph.m() << ")\n"
        << "class I   = " << std::boolalpha << f.class_i << "\n"
        << "class II  = " << f.class_ii << "\n"
        << "class III = " << f.class_iii << "\n"
        << "triples   = " << f.neg_triples << " negative, " << f.zero_triples
        << " independent, " << f.pos_triples << " positive\n";
    if (outerplanar)
      out << "outerplanar = " << *outerplanar << "\n";
    return kOk;
  }

  std::ifstream file;
  std::istream *source = &in;
  if (args.stream != "-") {
    file.open(args.stream);
    if (!file)
      throw InputError("cannot open " + args.stream);
    source = &file;
  }
  const auto summary = classify_stream(
      *source, opts, [&](const StreamRecord &r) { emit(out, record_json(r)); });
  Json s = header("classify");
  s["summary"] = {{"records", summary.records},
                  {"classified", summary.classified},
                  {"class_i", summary.class_i},
                  {"class_ii", summary.class_ii},
                  {"class_iii", summary.class_iii},
                  {"skipped_disconnected", summary.skipped_disconnected},
                  {"skipped_over_cap", summary.skipped_over_cap},
                  {"errors", summary.errors}};
  if (args.outerplanar)
    s["summary"]["outerplanar"] = summary.outerplanar;
  emit(out, s);
  return kOk;
}

int cmd_mc(const Graph &graph, const Triple &t, std::uint64_t samples,
           std::uint64_t seed, const GlobalOptions &g, std::ostream &out) {
  const auto e = mc_estimate(graph, t, samples, seed, g.threads);
  if (g.json) {
    Json j = header("mc");
    j["inputs"] = {{"graph", graph_json(graph)},
                   {"triple", triple_json(t)},
                   {"samples", samples},
                   {"seed", std::to_string(seed)}};
    j["results"] = {{"counts", {{"n_c", e.n_c}, {"n_d", e.n_d}, {"n_cd", e.n_cd}}},
                    {"p_c_hat", e.p_c_hat},
                    {"p_d_hat", e.p_d_hat},
                    {"p_cd_hat", e.p_cd_hat},
                    {"p_neither_hat", e.p_neither_hat},
                    {"cov_hat", e.cov_hat},
                    {"se_cov", e.se_cov},
                    {"se_cd", e.se_cd},
                    {"se_neither", e.se_neither}};
    emit(out, j);
    return kOk;
  }
  out << "samples         = " << samples << " (seed " << seed << ")\n"
      << "P(a->s)         ~ " << render(e.p_c_hat) << "\n"
      << "P(s->b)         ~ " << render(e.p_d_hat) << "\n"
      << "P(a->s, s->b)   ~ " << render(e.p_cd_hat) << " +- "
      << render(e.se_cd) << "\n"
      << "P(neither)      ~ " << render(e.p_neither_hat) << " +- "
      << render(e.se_neither) << "\n"
      << "covariance      ~ " << render(e.cov_hat) << " +- "
      << render(e.se_cov) << "\n";
  return kOk;
}

int cmd_bounds(unsigned max_n, const GlobalOptions &g, std::ostream &out) {
  if (max_n < 3 || max_n > 200)
    throw std::invalid_argument("bounds needs 3 <= max-n <= 200");
  const auto report = bound_report(max_n);
  auto opt = [](const std::optional<bool> &v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  if (g.json) {
    Json j = header("bounds");
    j["inputs"] = {{"max_n", max_n}};
    Json rows = Json::array();
    for (const auto &r : report.rows)
      rows.push_back({{"n", r.n},
                      {"pa_lower", opt(r.pa_lower)},
                      {"pa_upper", opt(r.pa_upper)},
                      {"pab_lower", opt(r.pab_lower)},
                      {"pab_upper", opt(r.pab_upper)},
                      {"a_bound_7_4", r.a_bound_7_4},
                      {"a_bound_13_8", r.a_bound_13_8},
                      {"b_bound", r.b_bound},
                      {"c_decreasing", r.c_decreasing},
                      {"a", rational_to_string(r.a_value)},
                      {"b", rational_to_string(r.b_value)}});
    j["results"] = {{"rows", std::move(rows)},
                    {"c8_below_5", report.c8_below_5},
                    {"all_true", report.all_true()}};
    emit(out, j);
    return kOk;
  }
  auto mark = [](const std::optional<bool> &v) {
    return v ? (*v ? "ok" : "FAIL") : "-";
  };
  auto mark_b = [](bool v) { return v ? "ok" : "FAIL"; };
  out << "  n  P(A)lo P(A)hi P(AB)lo P(AB)hi a<=5.6 a<=13.6 b<=4 c-decr\n";
  for (const auto &r : report.rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%3u  %-6s %-6s %-7s %-7s %-6s %-7s %-4s %s\n",
                  r.n, mark(r.pa_lower), mark(r.pa_upper), mark(r.pab_lower),
                  mark(r.pab_upper), mark_b(r.a_bound_7_4),
                  mark_b(r.a_bound_13_8), mark_b(r.b_bound),
                  mark_b(r.c_decreasing));
    out << buf;
  }
  out << "c(8) < 5: " << mark_b(report.c8_below_5) << "\n"
      << "all checks: " << (report.all_true() ? "pass" : "FAIL") << "\n";
  return kOk;
}

int cmd_gnp(unsigned n, double p, std::uint64_t seed, const GlobalOptions &g,
            std::ostream &out) {
  const Graph graph = gnp_generate(n, p, seed);
  if (g.json) {
    Json j = header("gnp");
    j["inputs"] = {{"n", n}, {"p", p}, {"seed", std::to_string(seed)}};
    j["results"] = graph_json(graph);
    emit(out, j);
    return kOk;
  }
  out << to_graph6(graph) << "\n";
  return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact and sampled reachability correlations in randomly "
               "oriented graphs"};
  app.name("orientcorr");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--threads", global.threads,
                 "worker threads (0 = $ORIENTCORR_THREADS or all cores)");
  app.add_flag("--json", global.json, "emit one JSON record");
  app.add_option("--cap", global.cap, "max edge count for exhaustive enumeration")
      ->check(CLI::Range(1u, kMaxEnumerationCap));

  unsigned kn_n = 0;
  auto *kn = app.add_subcommand("kn", "exact P(A), P(A and B) on K_n");
  kn->add_option("--n", kn_n, "vertex count")->required();

  unsigned table_max = 13;
  auto *table = app.add_subcommand("table", "complete-graph table for n = 2..max-n");
  table->add_option("--max-n", table_max, "largest n")->capture_default_str();

  GraphSource exact_src;
  TripleArgs exact_triple;
  auto *exact = app.add_subcommand("exact", "exhaustive enumeration for one triple");
  add_graph_source(exact, exact_src);
  add_triple(exact, exact_triple);

  CycleTriple cycle_args;
  TripleArgs cycle_labels{kMaxVertices, kMaxVertices, kMaxVertices};
  auto *cycle = app.add_subcommand("cycle", "closed form on the cycle C_n");
  cycle->add_option("--n", cycle_args.n, "cycle length")->required();
  auto *opt_c = cycle->add_option("--c", cycle_args.c, "edges from a to s");
  auto *opt_d = cycle->add_option("--d", cycle_args.d, "edges from s to b");
  auto *opt_a = cycle->add_option("--a", cycle_labels.a, "label of a on 0..n-1");
  auto *opt_s = cycle->add_option("--s", cycle_labels.s, "label of s");
  auto *opt_b = cycle->add_option("--b", cycle_labels.b, "label of b");
  opt_c->needs(opt_d);
  opt_d->needs(opt_c);
  opt_a->needs(opt_s, opt_b);
  opt_c->excludes(opt_a);

  GraphSource forest_src;
  TripleArgs forest_triple;
  auto *forest = app.add_subcommand("forest", "closed form on a forest");
  add_graph_source(forest, forest_src);
  add_triple(forest, forest_triple);

  ClassifyArgs classify_args;
  auto *classify_cmd = app.add_subcommand("classify", "correlation classes");
  classify_cmd->add_option("--graph6", classify_args.graph6, "single graph6 record");
  classify_cmd->add_option("--stream", classify_args.stream,
                           "file of graph6 records, one per line (- for stdin)");
  classify_cmd->add_flag("--outerplanar", classify_args.outerplanar,
                         "also test for K4 / K2,3 minors (n <= 10)");
  classify_cmd->add_flag("--allow-disconnected", classify_args.allow_disconnected,
                         "classify disconnected graphs anyway");
  classify_cmd->add_flag("--per-triple", classify_args.per_triple,
                         "reference per-triple enumeration");

  GraphSource mc_src;
  TripleArgs mc_triple;
  std::uint64_t mc_samples = 100000, mc_seed = 1;
  auto *mc = app.add_subcommand("mc", "Monte Carlo estimate for one triple");
  add_graph_source(mc, mc_src);
  add_triple(mc, mc_triple);
  mc->add_option("--samples", mc_samples, "sample count")->capture_default_str()
      ->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_seed, "64-bit seed")->capture_default_str();

  unsigned bounds_max = 40;
  auto *bounds = app.add_subcommand("bounds", "exact checks of the K_n envelopes");
  bounds->add_option("--max-n", bounds_max, "largest n")->capture_default_str();

  unsigned gnp_n = 10;
  double gnp_p = 0.5;
  std::uint64_t gnp_seed = 1;
  auto *gnp = app.add_subcommand("gnp", "sample a G(n,p) graph as graph6");
  gnp->add_option("--n", gnp_n, "vertex count")->required();
  gnp->add_option("--p", gnp_p, "edge probability")->required();
  gnp->add_option("--seed", gnp_seed, "64-bit seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*kn)
      return cmd_kn(kn_n, global, out);
    if (*table)
      return cmd_table(table_max, global, out);
    if (*exact)
      return cmd_exact(load_graph(exact_src, in), exact_triple.triple(), global,
                       out);
    if (*cycle) {
      CycleTriple ct = cycle_args;
      if (opt_a->count() > 0)
        ct = cycle_triple_from_labels(cycle_args.n, cycle_labels.triple());
      else if (opt_c->count() == 0)
        throw std::invalid_argument("cycle needs --c/--d or --a/--s/--b");
      return cmd_cycle(ct, global, out);
    }
    if (*forest)
      return cmd_forest(load_graph(forest_src, in), forest_triple.triple(),
                        global, out);
    if (*classify_cmd)
      return cmd_classify(classify_args, global, in, out);
    if (*mc)
      return cmd_mc(load_graph(mc_src, in), mc_triple.triple(), mc_samples,
                    mc_seed, global, out);
    if (*bounds)
      return cmd_bounds(bounds_max, global, out);
    if (*gnp)
      return cmd_gnp(gnp_n, gnp_p, gnp_seed, global, out);
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError &e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceededError &e) {
    err << "refused: " << e.what() << "\n";
    return kOverCap;
  } catch (const std::invalid_argument &e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  std::vector<const char *> argv{"orientcorr"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

} // namespace orientcorr::cli
