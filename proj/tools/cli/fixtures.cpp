#include "fixtures.hpp"

#include <cstdio>
#include <exception>

#include "family_dsl.hpp"
#include "indseq/error.hpp"

namespace indseq::cli {

Json builtin_fixtures() {
  return Json::parse(R"json({
    "indpoly": [
      {"family": "path(4)", "coefficients": ["1", "4", "3"]},
      {"family": "fib(2)", "coefficients": ["1", "4", "3"]},
      {"family": "star(3)", "coefficients": ["1", "4", "3", "1"]},
      {"family": "doublestar(1,2)", "coefficients": ["1", "5", "6", "2"]}
    ],
    "fq": [
      {"family": "path(4, v=1, w=2)",
       "coefficients": [["1"], ["8"], ["22", "-4"], ["24", "-8"], ["9", "-4"]]},
      {"family": "doublestar(s=0,e=1)",
       "coefficients": [["1"], ["6"], ["11", "-4"], ["6", "-4"], ["1"]]},
      {"family": "doublestar(s=0,e=2)",
       "coefficients": [["1"], ["8"], ["22", "-4"], ["26", "-8"], ["17", "-4"], ["6"], ["1"]]},
      {"family": "doublestar(s=0,e=3)",
       "coefficients": [["1"], ["10"], ["37", "-4"], ["68", "-12"], ["78", "-12"], ["58", "-4"], ["28"], ["8"], ["1"]]},
      {"family": "markedpath(5)",
       "coefficients": [["1"], ["10"], ["37", "-4"], ["62", "-20"], ["46", "-28"], ["12", "-8"], ["1"]]}
    ],
    "thresholds": [
      {"kind": "fq", "family": "doublestar(s=0,e=1)", "closed_form": "(11-sqrt(21))/8", "decimal": "0.802"},
      {"kind": "fq", "family": "markedpath(5)", "closed_form": "(41-sqrt(113))/32", "decimal": "0.949"},
      {"kind": "pair", "family": "doublestar(s=0,e=1)", "closed_form": "(13-sqrt(33))/8", "decimal": "0.907"},
      {"kind": "relation", "s": 0, "e": 1, "relation": "d3", "closed_form": "(5-sqrt(5))/4", "decimal": "0.691"}
    ]
  })json");
}

namespace {

// Rounded to `digits` places, as the reference decimals are quoted.
std::string rounded(const AlgebraicNumber& a, int digits) {
  AlgebraicNumber t = a;
  t.refine(Rational(1, 1000000000));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, t.approx());
  return buf;
}

class Checks {
 public:
  void add(const std::string& name, bool passed, const std::string& detail = "") {
    Json c;
    c["name"] = name;
    c["passed"] = passed;
    if (!detail.empty()) c["detail"] = detail;
    list_.push_back(c);
    failed_ += passed ? 0 : 1;
  }

  template <typename F>
  void run(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  Json report() const {
    Json r;
    r["checks"] = list_;
    r["total"] = list_.size();
    r["passed"] = list_.size() - failed_;
    r["failed"] = failed_;
    return r;
  }

 private:
  Json list_ = Json::array();
  std::size_t failed_ = 0;
};

}  // namespace

Json run_selftest(const Json& fixtures, const SelftestOptions& opts) {
  Checks checks;

  for (const auto& fx : fixtures.value("indpoly", Json::array())) {
    const std::string fam = fx.at("family").get<std::string>();
    checks.run("indpoly " + fam, [&] {
      const Graph g = build_family(fam).graph;
      const IntPoly expected = int_poly_from_json(fx.at("coefficients"));
      for (Engine e : {Engine::kBruteForce, Engine::kTreeDp, Engine::kDeletion}) {
        const IntPoly got = indpoly(g, e).poly;
        checks.add("indpoly " + fam + " [" + to_string(e) + "]", got == expected, got == expected ? "" : to_string(got));
      }
    });
  }

  for (const auto& fx : fixtures.value("fq", Json::array())) {
    const std::string fam = fx.at("family").get<std::string>();
    checks.run("fq " + fam, [&] {
      const ParamPoly got = build_fq(build_family(fam));
      const ParamPoly expected = param_poly_from_json(fx.at("coefficients"));
      checks.add("fq " + fam, got == expected, got == expected ? "" : to_string(got));
    });
  }

  for (const auto& fx : fixtures.value("thresholds", Json::array())) {
    const std::string kind = fx.at("kind").get<std::string>();
    const std::string name = "threshold " + kind + " " + fx.value("family", fx.value("relation", std::string()));
    checks.run(name, [&] {
      std::optional<AlgebraicNumber> t;
      if (kind == "fq") {
        t = fq_lc_plus_on_unit_interval(build_fq(build_family(fx.at("family").get<std::string>()))).threshold;
      } else if (kind == "pair") {
        t = pair_threshold_q2(build_fq(build_family(fx.at("family").get<std::string>())));
      } else if (kind == "relation") {
        const auto rep = verify_nine_relations(fx.at("s").get<int>(), fx.at("e").get<int>());
        for (const auto& r : rep.relations) {
          if (r.name == fx.at("relation").get<std::string>()) t = r.verdict.threshold;
        }
      } else {
        throw Error("unknown threshold kind '" + kind + "'");
      }
      const bool ok = t && t->to_string() == fx.at("closed_form").get<std::string>() &&
                      rounded(*t, 3) == fx.at("decimal").get<std::string>();
      checks.add(name, ok, t ? t->to_string() + " ~ " + t->decimal(6) : "no threshold");
    });
  }

  checks.run("engine agreement", [&] {
    std::vector<Graph> corpus = tree_corpus(8);
    for (std::uint64_t i = 0; i < 10; ++i) corpus.push_back(random_graph(12, 0.3, derive_seed(opts.seed, i)));
    const EngineAgreement agree = engine_agreement(corpus, opts.jobs);
    checks.add("engine agreement on " + std::to_string(agree.graphs) + " graphs", agree.mismatches.empty(),
               std::to_string(agree.mismatches.size()) + " mismatches");
  });

  checks.run("sequence verdicts", [&] {
    const auto a = analyze(std::vector<BigInt>{1, 2, 1, 2});
    checks.add("[1,2,1,2] not unimodal at 2", !a.unimodal && a.first_violation && a.first_violation->index == 2);
    checks.add("[1,4,3] LC+", analyze(std::vector<BigInt>{1, 4, 3}).lc_plus);
    checks.add("1+x+x^2 not real-rooted", !check_real_roots(IntPoly{1, 1, 1}));
    checks.add("1+3x+x^2 real-rooted", check_real_roots(IntPoly{1, 3, 1}));
  });

  checks.run("f_q endpoints", [&] {
    const MarkedPolys m = marked_polys(double_star(1, 2));
    const ParamPoly f = build_fq(m);
    const IntPoly x2 = IntPoly::monomial(1, 2);
    checks.add("f_0 = p^2", substitute_q(f, Rational(0)) == to_rational(m.p * m.p));
    checks.add("f_1 = p^2 - 4x^2 p_v p_w",
               substitute_q(f, Rational(1)) == to_rational(m.p * m.p - IntPoly::constant(4) * x2 * m.pv * m.pw));
  });

  checks.run("concatenation recurrence", [&] {
    const MarkedGraph s12 = double_star(1, 2);
    const MarkedPolys m = marked_polys(s12);
    bool ok = true;
    for (int n = 0; n <= 6; ++n) {
      ok = ok && concat_recurrence(m.p, m.pv, m.pw, n) == indpoly_tree_dp(concat_two(s12, n)).poly;
    }
    checks.add("recurrence matches concatenated trees", ok);
  });

  checks.run("item 2 routes", [&] {
    for (int k = 2; k <= 12; ++k) {
      const auto v = verify_thm8_item2(k, 8);
      const bool ok = v.certified && ((v.route == Route::kDirect) != is_item2_exception(k));
      checks.add("item 2 k=" + std::to_string(k), ok, to_string(v.route));
    }
  });

  checks.run("item 1 routes", [&] {
    const std::vector<std::pair<std::pair<int, int>, Route>> expected = {
        {{0, 0}, Route::kRelations}, {{0, 1}, Route::kClustering}, {{0, 2}, Route::kDirectFq},
        {{0, 3}, Route::kDirectFq},  {{1, 1}, Route::kRelations}};
    for (const auto& [se, route] : expected) {
      const auto v = verify_thm8_item1(se.first, se.second, 8);
      checks.add("item 1 (" + std::to_string(se.first) + "," + std::to_string(se.second) + ")",
                 v.certified && v.route == route, to_string(v.route));
    }
  });

  checks.run("numeric cross-checks", [&] {
    const MarkedPolys k2 = marked_polys(MarkedGraph{path(2), 0, 1});
    const double r1 = cosine_factorization_check(k2.p, k2.pv, k2.pw, 3);
    checks.add("cosine factorization K2 n=3", r1 < 1e-9, std::to_string(r1));
    const double r2 = rooted_product_factor_check(path(2), MarkedGraph{path(2), 0, std::nullopt});
    checks.add("rooted product K2[K2]", r2 < 1e-9, std::to_string(r2));
  });

  return checks.report();
}

}  // namespace indseq::cli
