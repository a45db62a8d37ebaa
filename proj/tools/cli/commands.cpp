#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "family_dsl.hpp"
#include "fixtures.hpp"
#include "indseq/error.hpp"
#include "report.hpp"

namespace indseq::cli {

namespace {

constexpr const char* kVersion = "0.3.0";
constexpr int kDefaultKMax = 200;
constexpr int kFullRangeKMax = 5000;

struct Context {
  std::string engine = "auto";
  int jobs = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::size_t budget = 5'000'000;
  bool full_range = false;
  bool resume = false;
  std::ostream* stdout_ = nullptr;

  Engine engine_kind() const { return parse_engine(engine); }
  EngineOptions engine_options() const {
    EngineOptions o;
    o.deletion_budget = budget;
    return o;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json base_report(const std::string& command, const Context& ctx) {
  Json r;
  r["tool"] = "indseq";
  r["version"] = kVersion;
  r["command"] = command;
  r["seed"] = std::to_string(ctx.seed);
  return r;
}

MarkedGraph load_source(const std::string& source) {
  if (source.find('(') != std::string::npos) return build_family(source);
  return MarkedGraph{read_edge_list_file(source), 0, std::nullopt};
}

// Flat rows render as CSV; anything else goes through JSON or text.
std::string render_rows_csv(const Json& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  std::vector<std::string> header;
  for (const auto& [k, v] : rows.front().items()) header.push_back(k);
  out << csv_line(header) << '\n';
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    for (const auto& k : header) {
      const Json& v = row.at(k);
      fields.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << csv_line(fields) << '\n';
  }
  return out.str();
}

void emit(const Json& report, const Context& ctx, bool to_out_file = true) {
  std::string text;
  if (ctx.format == "json") {
    text = report.dump(2) + "\n";
  } else if (ctx.format == "text") {
    text = render_text(report);
  } else if (ctx.format == "csv" && report.contains("csv") && !report.contains("rows")) {
    // Rows already went to the CSV file; the summary stays machine-readable.
    text = report.dump(2) + "\n";
  } else if (ctx.format == "csv") {
    if (!report.contains("rows")) throw Error("--format csv needs a command that produces rows");
    text = render_rows_csv(report.at("rows"));
  } else {
    throw Error("unknown format '" + ctx.format + "'");
  }
  if (to_out_file && !ctx.out.empty()) {
    std::ofstream f(ctx.out, std::ios::binary);
    if (!f) throw Error("cannot write " + ctx.out);
    f << text;
  } else {
    *ctx.stdout_ << text;
  }
}

std::string threshold_decimal(const std::optional<AlgebraicNumber>& t) { return t ? t->decimal(6) : ""; }

// ---------------------------------------------------------------- poly

int cmd_poly(const Context& ctx, const std::string& source, bool real_roots) {
  const auto t0 = Clock::now();
  const MarkedGraph g = load_source(source);
  const IndPolyResult r = indpoly(g.graph, ctx.engine_kind(), ctx.engine_options());
  Json rep = base_report("poly", ctx);
  rep["inputs"] = {{"source", source}, {"engine", ctx.engine}};
  Json res;
  res["vertices"] = g.graph.vertex_count();
  res["edges"] = g.graph.edge_count();
  res["polynomial"] = to_json(r.poly);
  res["text"] = to_string(r.poly);
  res["alpha"] = r.alpha;
  res["independent_sets"] = r.total_count.get_str();
  res["verdict"] = to_json(analyze(r.poly, real_roots));
  rep["result"] = res;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string theorem;
  std::string source;
  std::optional<int> v;
  std::optional<int> w;
  int s_min = 0;
  int s_max = 30;
  int e_min = 0;
  int e_max = 30;
  int k_min = 2;
  std::optional<int> k_max;
  int n_max = 40;
  int ground_truth = 40;
  bool detail = false;
};

bool ground_truth_log_concave(const MarkedPolys& m, int n_max) {
  for (const auto& v : direct_family_scan(m, n_max)) {
    if (!v.log_concave) return false;
  }
  return true;
}

int verify_thm7(const Context& ctx, const VerifyOptions& o) {
  if (o.source.empty()) throw Error("verify thm7 needs --source");
  MarkedGraph g = load_source(o.source);
  if (o.v) g.v = *o.v;
  if (o.w) g.w = *o.w;
  g.validate(true);
  const auto t0 = Clock::now();
  const Thm7Verdict v = thm7_certify(g, ctx.engine_kind());
  Json rep = base_report("verify", ctx);
  rep["inputs"] = {{"theorem", "thm7"}, {"source", o.source}, {"v", g.v}, {"w", *g.w}};
  rep["result"] = to_json(v);
  if (v.certified && o.ground_truth > 0) {
    const bool gt = ground_truth_log_concave(marked_polys(g, ctx.engine_kind()), o.ground_truth);
    rep["result"]["ground_truth_log_concave"] = gt;
    if (!gt) rep["result"]["contradiction"] = true;
  }
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx);
  if (rep["result"].contains("contradiction")) return kExitFinding;
  return v.certified ? kExitOk : kExitFinding;
}

int verify_item1(const Context& ctx, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  std::vector<std::pair<int, int>> grid;
  for (int s = o.s_min; s <= o.s_max; ++s) {
    for (int e = o.e_min; e <= o.e_max; ++e) grid.emplace_back(s, e);
  }
  struct Row {
    Thm8Item1Verdict v;
    std::optional<bool> ground_truth;
  };
  Json rows = Json::array();
  Json details = Json::array();
  int findings = 0;
  int fallback = 0;
  ordered_scan<Row>(
      0, grid.size(), ctx.jobs,
      [&](std::size_t i) {
        Row r;
        r.v = verify_thm8_item1(grid[i].first, grid[i].second, o.n_max);
        if (r.v.certified && o.ground_truth > 0) {
          r.ground_truth = ground_truth_log_concave(double_star_polys(r.v.s, r.v.s + r.v.e), o.ground_truth);
        }
        return r;
      },
      [&](const Row& r) {
        const auto& v = r.v;
        const bool exception = is_item1_exception(v.s, v.e);
        const bool route_ok = exception ? v.route != Route::kRelations : v.route == Route::kRelations;
        const bool finding = !v.certified || v.contradiction || !route_ok || (r.ground_truth && !*r.ground_truth);
        std::string status = finding ? "finding" : exception ? "certified via fallback" : "certified";
        findings += finding;
        fallback += !finding && exception;
        Json row;
        row["s"] = v.s;
        row["e"] = v.e;
        row["certified"] = v.certified;
        row["route"] = to_string(v.route);
        row["listed_exception"] = exception;
        row["p_lc_plus"] = v.p_lc_plus;
        row["direct_fq_holds"] = v.direct_fq.holds;
        row["fq_threshold"] = threshold_decimal(v.direct_fq.threshold);
        row["ground_truth_n"] = r.ground_truth ? o.ground_truth : 0;
        row["ground_truth_log_concave"] = r.ground_truth ? (*r.ground_truth ? "true" : "false") : "";
        row["status"] = status;
        rows.push_back(row);
        if (o.detail || finding || exception || !v.note.empty()) details.push_back(to_json(v));
      });
  Json rep = base_report("verify", ctx);
  rep["inputs"] = {{"theorem", "thm8-1"}, {"s", {o.s_min, o.s_max}}, {"e", {o.e_min, o.e_max}},
                   {"n_max", o.n_max},    {"ground_truth_n", o.ground_truth}};
  rep["summary"] = {{"instances", grid.size()}, {"certified_via_fallback", fallback}, {"findings", findings}};
  rep["rows"] = rows;
  if (ctx.format != "csv") rep["details"] = details;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx);
  return findings ? kExitFinding : kExitOk;
}

int verify_item2(const Context& ctx, const VerifyOptions& o) {
  const int k_max = o.k_max.value_or(kDefaultKMax);
  const int cap = ctx.full_range ? kFullRangeKMax : kDefaultKMax;
  if (k_max > cap) {
    throw Error("k up to " + std::to_string(k_max) + " needs --full-range (limit " + std::to_string(cap) + ")");
  }
  if (o.k_min < 2) throw Error("k must be at least 2");
  const auto t0 = Clock::now();
  struct Row {
    Thm8Item2Verdict v;
    std::optional<bool> ground_truth;
  };
  Json rows = Json::array();
  Json details = Json::array();
  int findings = 0;
  int fallback = 0;
  ordered_scan<Row>(
      static_cast<std::size_t>(o.k_min), static_cast<std::size_t>(k_max) + 1, ctx.jobs,
      [&](std::size_t k) {
        Row r;
        r.v = verify_thm8_item2(static_cast<int>(k), o.n_max);
        if (r.v.certified && o.ground_truth > 0) {
          r.ground_truth = ground_truth_log_concave(marked_path_polys(static_cast<int>(k)), o.ground_truth);
        }
        return r;
      },
      [&](const Row& r) {
        const auto& v = r.v;
        const bool exception = is_item2_exception(v.k);
        const bool route_ok = exception ? v.route != Route::kDirect : v.route == Route::kDirect;
        const bool finding = !v.certified || !route_ok || (r.ground_truth && !*r.ground_truth);
        findings += finding;
        fallback += !finding && exception;
        Json row;
        row["k"] = v.k;
        row["certified"] = v.certified;
        row["route"] = to_string(v.route);
        row["listed_exception"] = exception;
        row["direct_holds"] = v.direct.holds;
        row["fq_threshold"] = threshold_decimal(v.direct.threshold);
        row["degenerate_points"] = v.direct.degenerate_points.size();
        row["ground_truth_n"] = r.ground_truth ? o.ground_truth : 0;
        row["ground_truth_log_concave"] = r.ground_truth ? (*r.ground_truth ? "true" : "false") : "";
        row["status"] = finding ? "finding" : exception ? "certified via fallback" : "certified";
        rows.push_back(row);
        if (o.detail || finding || exception || !v.note.empty()) details.push_back(to_json(v));
      });
  Json rep = base_report("verify", ctx);
  rep["inputs"] = {{"theorem", "thm8-2"}, {"k", {o.k_min, k_max}}, {"n_max", o.n_max},
                   {"ground_truth_n", o.ground_truth}};
  rep["summary"] = {{"instances", k_max - o.k_min + 1}, {"certified_via_fallback", fallback}, {"findings", findings}};
  rep["rows"] = rows;
  if (ctx.format != "csv") rep["details"] = details;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx);
  return findings ? kExitFinding : kExitOk;
}

// Relations known to fail, with the q regions where they do.
std::set<std::string> listed_relation_failures(int s, int e) {
  if (s != 0) return {};
  switch (e) {
    case 0:
      return {"d4"};
    case 1:
      return {"d3", "e2"};
    case 2:
    case 3:
      return {"d3"};
    default:
      return {};
  }
}

int verify_relations(const Context& ctx, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  std::vector<std::pair<int, int>> grid;
  for (int s = o.s_min; s <= o.s_max; ++s) {
    for (int e = o.e_min; e <= o.e_max; ++e) grid.emplace_back(s, e);
  }
  Json rows = Json::array();
  Json exceptional = Json::array();
  int findings = 0;
  ordered_scan<RelationReport>(
      0, grid.size(), ctx.jobs, [&](std::size_t i) { return verify_nine_relations(grid[i].first, grid[i].second); },
      [&](const RelationReport& r) {
        std::set<std::string> failed;
        std::string names;
        std::string thresholds;
        for (const auto& x : r.relations) {
          if (x.verdict.holds) continue;
          failed.insert(x.name);
          names += (names.empty() ? "" : ";") + x.name;
          thresholds += (thresholds.empty() ? "" : ";") +
                        (x.verdict.threshold ? x.verdict.threshold->to_string() : std::string("none"));
        }
        const bool listed = !failed.empty() && failed == listed_relation_failures(r.s, r.e);
        const bool finding = !failed.empty() && !listed;
        findings += finding;
        Json row;
        row["s"] = r.s;
        row["e"] = r.e;
        row["case"] = r.case_s_ge_e ? "s>=e" : "s<e";
        row["relations"] = r.relations.size();
        row["all_hold"] = r.all_hold;
        row["failed"] = names;
        row["thresholds"] = thresholds;
        row["status"] = finding ? "finding" : listed ? "listed exception" : "pass";
        rows.push_back(row);
        if (o.detail || !failed.empty()) exceptional.push_back(to_json(r));
      });
  Json rep = base_report("verify", ctx);
  rep["inputs"] = {{"theorem", "nine-relations"}, {"s", {o.s_min, o.s_max}}, {"e", {o.e_min, o.e_max}}};
  rep["summary"] = {{"instances", grid.size()}, {"listed_exceptions", exceptional.size() - findings},
                    {"findings", findings}};
  rep["rows"] = rows;
  if (ctx.format != "csv") rep["details"] = exceptional;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx);
  return findings ? kExitFinding : kExitOk;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
  std::string what;
  int n = 16;
  std::uint64_t count = 1000;
  int max_vertices = 10;
  std::string source;
  std::optional<int> v;
  std::string variant = "1";
  int k_max = 10;
  int n_max = 12;
  std::string g_coeffs = "1";
  std::string h_coeffs = "0";
};

IntPoly parse_coefficients(const std::string& text) {
  std::vector<BigInt> c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw Error("empty coefficient in '" + text + "'");
    BigInt v;
    if (v.set_str(cur, 10) != 0) throw Error("bad coefficient '" + cur + "'");
    c.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  flush();
  return IntPoly(std::move(c));
}

// Streams tree rows to an optional CSV and folds them into counters.
class TreeSummary {
 public:
  static std::vector<std::string> header() {
    return {"index", "source", "seed",           "vertices",        "alpha",      "unimodal",
            "log_concave", "lc_plus", "mode_index", "final_third", "ft_start_index", "polynomial", "edge_list"};
  }

  static std::vector<std::string> row(const TreeScanRow& r, const std::string& source) {
    const bool finding = !r.verdict.unimodal || !r.final_third.holds;
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    return {std::to_string(r.index),
            source,
            std::to_string(r.seed),
            std::to_string(r.tree.vertex_count()),
            std::to_string(r.final_third.alpha),
            b(r.verdict.unimodal),
            b(r.verdict.log_concave),
            b(r.verdict.lc_plus),
            r.verdict.mode_index ? std::to_string(*r.verdict.mode_index) : "",
            b(r.final_third.holds),
            std::to_string(r.final_third.start_index),
            compact_poly(r.poly),
            finding ? compact_edge_list(r.tree) : ""};
  }

  void fold(const std::vector<std::string>& f) {
    if (f.size() != header().size()) throw Error("malformed CSV row while resuming");
    ++count;
    unimodal += f[5] == "true";
    log_concave += f[6] == "true";
    lc_plus += f[7] == "true";
    final_third += f[9] == "true";
    if (f[5] != "true" || f[9] != "true") {
      findings.push_back({{"index", f[0]},
                          {"source", f[1]},
                          {"seed", f[2]},
                          {"unimodal", f[5] == "true"},
                          {"final_third", f[9] == "true"},
                          {"polynomial", f[11]},
                          {"edge_list", f[12]}});
    }
  }

  Json to_json() const {
    auto frac = [&](std::size_t k) { return count ? static_cast<double>(k) / static_cast<double>(count) : 1.0; };
    Json j;
    j["trees"] = count;
    j["unimodal"] = unimodal;
    j["fraction_unimodal"] = frac(unimodal);
    j["log_concave"] = log_concave;
    j["lc_plus"] = lc_plus;
    j["final_third"] = final_third;
    j["fraction_final_third"] = frac(final_third);
    j["findings"] = findings;
    return j;
  }

  std::size_t count = 0;
  std::size_t unimodal = 0;
  std::size_t log_concave = 0;
  std::size_t lc_plus = 0;
  std::size_t final_third = 0;
  Json findings = Json::array();
};

std::unique_ptr<CsvWriter> open_csv(const Context& ctx, const std::vector<std::string>& header) {
  if (ctx.out.empty()) {
    if (ctx.resume) throw Error("--resume needs --out");
    return nullptr;
  }
  return std::make_unique<CsvWriter>(ctx.out, header, ctx.resume);
}

int scan_trees(const Context& ctx, const ScanOptions& o) {
  const auto t0 = Clock::now();
  const bool corpus_mode = o.what == "final-third";
  auto csv = open_csv(ctx, TreeSummary::header());
  TreeSummary summary;
  std::size_t done = 0;
  if (csv) {
    for (const auto& f : csv->existing_rows()) summary.fold(f);
    done = csv->existing_rows().size();
  }
  Json rows = Json::array();
  auto sink_for = [&](const std::string& source) {
    return [&, source](const TreeScanRow& r) {
      const auto fields = TreeSummary::row(r, source);
      if (csv) csv->write(fields);
      summary.fold(fields);
      if (ctx.format == "csv" && !csv) {
        Json j;
        const auto h = TreeSummary::header();
        for (std::size_t i = 0; i < h.size(); ++i) j[h[i]] = fields[i];
        rows.push_back(j);
      }
    };
  };
  const Engine engine = ctx.engine_kind();
  Json inputs;
  inputs["what"] = o.what;
  std::uint64_t corpus_size = 0;
  if (corpus_mode) {
    const std::vector<Graph> corpus = tree_corpus(o.max_vertices);
    corpus_size = corpus.size();
    inputs["max_vertices"] = o.max_vertices;
    inputs["corpus_trees"] = corpus_size;
    if (done < corpus_size) {
      ordered_scan<TreeScanRow>(
          done, corpus_size, ctx.jobs, [&](std::size_t i) { return analyze_tree(i, 0, corpus[i], engine); },
          sink_for("corpus"));
    }
  }
  // The random part is indexed after the corpus so resume offsets stay valid.
  const std::uint64_t random_count = o.count;
  inputs["random_vertices"] = o.n;
  inputs["random_count"] = std::to_string(random_count);
  const std::uint64_t start = done > corpus_size ? done - corpus_size : 0;
  ordered_scan<TreeScanRow>(
      start, random_count, ctx.jobs,
      [&](std::size_t i) {
        const std::uint64_t s = derive_seed(ctx.seed, i);
        return analyze_tree(corpus_size + i, s, random_tree(o.n, s), engine);
      },
      sink_for("random"));

  Json rep = base_report("scan", ctx);
  rep["inputs"] = inputs;
  rep["summary"] = summary.to_json();
  rep["resumed_rows"] = done;
  if (ctx.format == "csv" && !csv) rep["rows"] = rows;
  if (csv) rep["csv"] = ctx.out;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx, false);
  const bool finding = corpus_mode ? summary.final_third != summary.count : summary.unimodal != summary.count ||
                                                                                  summary.final_third != summary.count;
  return finding ? kExitFinding : kExitOk;
}

// Rows for the small searches: value, verdict.
int emit_search(const Context& ctx, const std::string& what, Json inputs, const MinimalSearch& m,
                const std::string& column, Clock::time_point t0) {
  auto csv = open_csv(ctx, {column, "holds"});
  if (ctx.resume) throw Error("--resume applies to tree scans only");
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.per_value.size(); ++i) {
    const int value = m.start + static_cast<int>(i);
    if (csv) csv->write({std::to_string(value), m.per_value[i] ? "true" : "false"});
    rows.push_back({{column, value}, {"holds", m.per_value[i]}});
  }
  Json rep = base_report("scan", ctx);
  inputs["what"] = what;
  rep["inputs"] = inputs;
  rep["summary"] = to_json(m);
  rep["summary"]["result"] = m.first ? std::to_string(*m.first) : "none <= " + std::to_string(m.limit);
  rep["rows"] = rows;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx, false);
  return (!m.relapses.empty() || m.cross_check_failed) ? kExitFinding : kExitOk;
}

int scan_minimal_k(const Context& ctx, const ScanOptions& o) {
  if (o.source.empty()) throw Error("scan minimal-k needs --source");
  const auto t0 = Clock::now();
  const MarkedGraph g = load_source(o.source);
  return emit_search(ctx, "minimal-k", {{"source", o.source}, {"k_max", o.k_max}},
                     minimal_k_pendants_everywhere(g.graph, o.k_max), "k", t0);
}

int scan_minimal_n(const Context& ctx, const ScanOptions& o) {
  const auto t0 = Clock::now();
  if (o.variant == "shift") {
    const IntPoly g = parse_coefficients(o.g_coeffs);
    const IntPoly h = parse_coefficients(o.h_coeffs);
    return emit_search(ctx, "minimal-n",
                       {{"variant", "shift"}, {"g", to_json(g)}, {"h", to_json(h)}, {"n_max", o.n_max}},
                       minimal_n_binomial_shift(g, h, o.n_max), "n", t0);
  }
  if (o.variant != "1" && o.variant != "2") throw Error("--variant must be 1, 2 or shift");
  if (o.source.empty()) throw Error("scan minimal-n needs --source");
  const MarkedGraph g = load_source(o.source);
  const int v = o.v.value_or(g.v);
  return emit_search(ctx, "minimal-n", {{"source", o.source}, {"v", v}, {"variant", o.variant}, {"n_max", o.n_max}},
                     minimal_n_pendant_star(g.graph, v, std::stoi(o.variant), o.n_max), "n", t0);
}

int scan_fibonacci(const Context& ctx, const ScanOptions& o) {
  const auto t0 = Clock::now();
  if (ctx.resume) throw Error("--resume applies to tree scans only");
  auto csv = open_csv(ctx, {"n", "vertices", "degree", "real_roots"});
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : fibonacci_real_roots_scan(o.n_max)) {
    if (csv) {
      csv->write({std::to_string(r.n), std::to_string(r.vertices), std::to_string(r.degree),
                  r.real_roots ? "true" : "false"});
    }
    rows.push_back({{"n", r.n}, {"vertices", r.vertices}, {"degree", r.degree}, {"real_roots", r.real_roots}});
    all = all && r.real_roots;
  }
  Json rep = base_report("scan", ctx);
  rep["inputs"] = {{"what", "fibonacci"}, {"n_max", o.n_max}};
  rep["summary"] = {{"all_real_rooted", all}};
  rep["rows"] = rows;
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx, false);
  return all ? kExitOk : kExitFinding;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const Context& ctx, const std::string& fixtures_path, const std::string& dump_path) {
  const auto t0 = Clock::now();
  Json fixtures = builtin_fixtures();
  if (!dump_path.empty()) {
    std::ofstream f(dump_path, std::ios::binary);
    if (!f) throw Error("cannot write " + dump_path);
    f << fixtures.dump(2) << '\n';
    return kExitOk;
  }
  if (!fixtures_path.empty()) {
    std::ifstream f(fixtures_path, std::ios::binary);
    if (!f) throw Error("cannot read " + fixtures_path);
    try {
      fixtures = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw Error(std::string("invalid fixture file: ") + e.what());
    }
  }
  SelftestOptions so;
  so.seed = ctx.seed;
  so.jobs = ctx.jobs;
  Json rep = base_report("selftest", ctx);
  rep["inputs"] = {{"fixtures", fixtures_path.empty() ? "builtin" : fixtures_path}};
  rep["result"] = run_selftest(fixtures, so);
  rep["timings"] = {{"total_ms", ms_since(t0)}};
  emit(rep, ctx);
  return rep["result"]["failed"].get<std::size_t>() == 0 ? kExitOk : kExitFinding;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence polynomials and log-concavity certificates for tree families", "indseq"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.stdout_ = &out;
  ctx.jobs = default_jobs();
  app.add_option("--engine", ctx.engine, "auto, brute, tree or deletion")
      ->check(CLI::IsMember({"auto", "brute", "tree", "deletion"}));
  app.add_option("--jobs", ctx.jobs, "worker threads (default: INDSEQ_JOBS or hardware threads)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", ctx.seed, "base seed for random instances");
  app.add_option("--out", ctx.out, "report file (poly, verify, selftest) or CSV file (scan)");
  app.add_option("--format", ctx.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--budget", ctx.budget, "call budget of the deletion engine");
  app.add_flag("--full-range", ctx.full_range, "allow k up to 5000 in verify thm8-2");

  std::string poly_source;
  bool poly_real_roots = false;
  auto* poly = app.add_subcommand("poly", "independence polynomial and sequence verdict");
  poly->add_option("source", poly_source, "family expression or edge-list file")->required();
  poly->add_flag("--real-roots", poly_real_roots, "also decide the real-roots property");
  poly->footer("Families: " + family_help());

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "certify the family theorems");
  verify->add_option("theorem", vo.theorem, "thm7, thm8-1, thm8-2 or nine-relations")
      ->required()
      ->check(CLI::IsMember({"thm7", "thm8-1", "thm8-2", "nine-relations"}));
  verify->add_option("--source", vo.source, "marked family or edge-list file (thm7)");
  verify->add_option("--v", vo.v, "override the v mark");
  verify->add_option("--w", vo.w, "override the w mark");
  verify->add_option("--s-min", vo.s_min)->check(CLI::NonNegativeNumber);
  verify->add_option("--s-max", vo.s_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--e-min", vo.e_min)->check(CLI::NonNegativeNumber);
  verify->add_option("--e-max", vo.e_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--k-min", vo.k_min);
  verify->add_option("--k-max", vo.k_max);
  verify->add_option("--n-max", vo.n_max, "largest n for per-n clustering certificates")->check(CLI::PositiveNumber);
  verify->add_option("--ground-truth", vo.ground_truth, "check p_n directly for n up to this value (0 disables)")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--detail", vo.detail, "include full certificates for every instance");

  ScanOptions so;
  auto* scan = app.add_subcommand("scan", "batch scans with CSV output");
  scan->add_option("what", so.what, "random-trees, final-third, minimal-k, minimal-n or fibonacci")
      ->required()
      ->check(CLI::IsMember({"random-trees", "final-third", "minimal-k", "minimal-n", "fibonacci"}));
  scan->add_option("--n", so.n, "vertices of random trees")->check(CLI::PositiveNumber);
  scan->add_option("--count", so.count, "number of random trees (final-third: extra random trees)");
  scan->add_option("--max-vertices", so.max_vertices, "corpus size for final-third")->check(CLI::PositiveNumber);
  scan->add_option("--source", so.source, "family expression or edge-list file");
  scan->add_option("--v", so.v, "vertex for minimal-n (default: the family's v mark)");
  scan->add_option("--variant", so.variant, "minimal-n: 1, 2 or shift");
  scan->add_option("--k-max", so.k_max)->check(CLI::NonNegativeNumber);
  scan->add_option("--n-max", so.n_max)->check(CLI::NonNegativeNumber);
  scan->add_option("--g-poly", so.g_coeffs, "minimal-n shift: coefficients of g, lowest degree first");
  scan->add_option("--h-poly", so.h_coeffs, "minimal-n shift: coefficients of h");
  scan->add_flag("--resume", ctx.resume, "continue after the last complete CSV row");

  std::string fixtures_path;
  std::string dump_path;
  auto* selftest = app.add_subcommand("selftest", "reference values, engine agreement and invariants");
  selftest->add_option("--fixtures", fixtures_path, "fixture file to use instead of the built-in table");
  selftest->add_option("--dump-fixtures", dump_path, "write the built-in fixtures and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitOperational;
  }

  // Scans default to collecting fresh instances unless told otherwise.
  if (scan->parsed() && so.what == "final-third" && scan->count("--count") == 0) so.count = 0;

  try {
    if (poly->parsed()) return cmd_poly(ctx, poly_source, poly_real_roots);
    if (verify->parsed()) {
      if (vo.theorem == "thm7") return verify_thm7(ctx, vo);
      if (vo.theorem == "thm8-1") return verify_item1(ctx, vo);
      if (vo.theorem == "thm8-2") return verify_item2(ctx, vo);
      return verify_relations(ctx, vo);
    }
    if (scan->parsed()) {
      if (so.what == "random-trees" || so.what == "final-third") return scan_trees(ctx, so);
      if (so.what == "minimal-k") return scan_minimal_k(ctx, so);
      if (so.what == "minimal-n") return scan_minimal_n(ctx, so);
      return scan_fibonacci(ctx, so);
    }
    if (selftest->parsed()) return cmd_selftest(ctx, fixtures_path, dump_path);
  } catch (const DslError& e) {
    err << "error: family expression " << e.what() << "\n";
    return kExitOperational;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOperational;
  }
  return kExitOperational;
}

}  // namespace indseq::cli
