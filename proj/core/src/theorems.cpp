#include "indseq/theorems.hpp"

#include "indseq/error.hpp"

namespace indseq {

std::string to_string(Route r) {
  switch (r) {
    case Route::kRelations:
      return "relations";
    case Route::kDirectFq:
      return "direct-fq";
    case Route::kClustering:
      return "clustering";
    case Route::kPairProduct:
      return "pair-product";
    case Route::kDirect:
      return "direct";
    case Route::kNone:
      return "none";
  }
  return "none";
}

bool is_item1_exception(int s, int e) { return s == 0 && e >= 1 && e <= 3; }

bool is_item2_exception(int k) { return k == 3 || k == 5; }

namespace {

// Per-n clustering certificates for n = 1..n_max; true when all certify.
bool certify_by_clustering(const MarkedPolys& m, int n_max, std::vector<ClusterCertificate>& out) {
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(cluster_certify_family(m, n));
    ok = ok && out.back().certified;
  }
  return ok;
}

bool clusters_contradict(const std::vector<ClusterCertificate>& certs) {
  for (const auto& c : certs) {
    if (c.certified && !c.direct.log_concave) return true;
  }
  return false;
}

}  // namespace

Thm8Item1Verdict verify_thm8_item1(int s, int e, int n_max) {
  if (s < 0 || e < 0) throw GraphError("verify_thm8_item1: s and e must be non-negative");
  Thm8Item1Verdict v;
  v.s = s;
  v.e = e;
  v.n_max = n_max;
  const MarkedPolys m = double_star_polys(s, s + e);
  v.p_lc_plus = analyze(m.p).lc_plus;
  v.relations = verify_nine_relations(s, e);
  v.direct_fq = fq_lc_plus_on_unit_interval(build_fq(m));

  bool relations_ok = v.relations.all_hold;
  if (!relations_ok && s == 0 && e == 0) {
    // Only the quadratic-term positivity fails here, and f_q = 1 + 4x + 4(1-q)x^2 is checked instead.
    bool only_d4 = true;
    for (const auto& r : v.relations.relations) {
      if (!r.verdict.holds && r.name != "d4") only_d4 = false;
    }
    if (only_d4 && v.direct_fq.holds) {
      relations_ok = true;
      v.note = "quadratic-term positivity fails for q >= 3/4; f_q = 1 + 4x + 4(1-q)x^2 checked directly";
    }
  }

  if (relations_ok && v.p_lc_plus) {
    v.route = Route::kRelations;
    v.contradiction = !v.direct_fq.holds;
    v.certified = !v.contradiction;
    return v;
  }
  if (v.direct_fq.holds && v.p_lc_plus) {
    v.route = Route::kDirectFq;
    v.certified = true;
    return v;
  }
  v.route = Route::kClustering;
  v.certified = certify_by_clustering(m, n_max, v.clusters);
  v.contradiction = clusters_contradict(v.clusters);
  v.note = "clustering certificate covers 1 <= n <= " + std::to_string(n_max);
  return v;
}

Thm8Item2Verdict verify_thm8_item2(int k, int n_max) {
  if (k < 2) throw GraphError("verify_thm8_item2: k must be at least 2");
  Thm8Item2Verdict v;
  v.k = k;
  v.n_max = n_max;
  const MarkedPolys m = marked_path_polys(k);
  const ParamPoly f = build_fq(m);
  const bool p_ok = analyze(m.p).lc_plus;
  v.direct = fq_lc_plus_on_unit_interval(f);
  if (v.direct.holds && p_ok) {
    v.route = Route::kDirect;
    v.certified = true;
    for (const auto& d : v.direct.degenerate_points) {
      if (d.reason.rfind("coefficient", 0) == 0) {
        v.note += (v.note.empty() ? "" : "; ") + std::string("c_") + std::to_string(d.index) + " vanishes at q = " +
                  d.q.to_string() + ", trimmed polynomial is LC+";
      }
    }
    return v;
  }

  v.full_box = pair_product_lc_box(f, unit_interval(), unit_interval());
  if (v.full_box->holds) {
    // The unpaired index s = ceil(floor(n/2) / 2) has s pi / (n + 1) in
    // [pi/4, pi/3], so its q_s lies in [1/4, 1/2] for every n.
    v.singleton = fq_lc_plus_on_interval(f, {Rational(1, 4), Rational(1, 2)});
    if (v.singleton->holds && p_ok) {
      v.route = Route::kPairProduct;
      v.certified = certify_by_clustering(m, n_max, v.clusters);
      v.note = "pair products LC+ on the unit square; per-n clustering checked for 1 <= n <= " + std::to_string(n_max);
      return v;
    }
  }
  v.route = Route::kClustering;
  v.certified = p_ok && certify_by_clustering(m, n_max, v.clusters);
  v.note = "clustering certificate covers 1 <= n <= " + std::to_string(n_max);
  return v;
}

IntPoly pendants_everywhere_poly(const IntPoly& pG, int vertices, int k) {
  IntPoly out;
  const IntPoly base = one_plus_x_pow(static_cast<unsigned>(k));
  IntPoly power = IntPoly::constant(1);
  // Accumulate from the top so (1+x)^{k(|V|-t)} is built incrementally.
  for (int t = vertices; t >= 0; --t) {
    if (t <= pG.degree()) out += (power * IntPoly::constant(pG[t])).shifted(static_cast<std::size_t>(t));
    if (t > 0) power *= base;
  }
  return out;
}

namespace {

void finish(MinimalSearch& r) {
  for (int i = 0; i < static_cast<int>(r.per_value.size()); ++i) {
    const int value = r.start + i;
    if (r.per_value[i]) {
      if (!r.first) r.first = value;
    } else if (r.first) {
      r.relapses.push_back(value);
    }
  }
}

}  // namespace

MinimalSearch minimal_k_pendants_everywhere(const Graph& g, int k_max) {
  if (k_max < 0) throw GraphError("minimal_k_pendants_everywhere: negative k_max");
  MinimalSearch r;
  r.start = 0;
  r.limit = k_max;
  const IntPoly pG = indpoly(g).poly;
  const int n = g.vertex_count();
  for (int k = 0; k <= k_max; ++k) {
    const IntPoly p = pendants_everywhere_poly(pG, n, k);
    if (k <= 2 && n * (k + 1) <= 40) {
      if (indpoly(attach_pendants_everywhere(g, k)).poly != p) r.cross_check_failed = true;
    }
    r.per_value.push_back(analyze(p).lc_plus);
  }
  finish(r);
  return r;
}

MinimalSearch minimal_n_pendant_star(const Graph& g, int v, int variant, int n_max) {
  if (variant != 1 && variant != 2) throw GraphError("minimal_n_pendant_star: variant must be 1 or 2");
  if (!g.valid_vertex(v)) throw GraphError("minimal_n_pendant_star: vertex out of range");
  MinimalSearch r;
  r.start = 1;
  r.limit = n_max;
  const IntPoly x = IntPoly::monomial(1, 1);
  const IntPoly pG = indpoly(g).poly;
  const IntPoly p_minus_v = indpoly(delete_vertex(g, v)).poly;
  const IntPoly p_closed = indpoly(delete_closed_neighborhood(g, v)).poly;
  for (int n = 1; n <= n_max; ++n) {
    const IntPoly p = variant == 1
                          ? p_minus_v * one_plus_x_pow(static_cast<unsigned>(n)) + x * p_closed
                          : pG * one_plus_x_pow(static_cast<unsigned>(n - 1)) + x * p_minus_v;
    if (n <= 4) {
      const Graph built = variant == 1 ? attach_pendants(g, v, n) : attach_pendant_star_via_leaf(g, v, n);
      if (built.vertex_count() <= 40 && indpoly(built).poly != p) r.cross_check_failed = true;
    }
    r.per_value.push_back(analyze(p).lc_plus);
  }
  finish(r);
  return r;
}

MinimalSearch minimal_n_binomial_shift(const IntPoly& g, const IntPoly& h, int n_max) {
  if (g.is_zero()) throw PolyError("minimal_n_binomial_shift: g must be non-zero");
  for (const auto& c : g.coeffs()) {
    if (sgn(c) <= 0) throw PolyError("minimal_n_binomial_shift: g must have positive coefficients");
  }
  if (!h.is_zero()) {
    if (sgn(h[0]) != 0) throw PolyError("minimal_n_binomial_shift: h(0) must be 0");
    for (int i = 1; i <= h.degree(); ++i) {
      if (sgn(h[i]) <= 0) throw PolyError("minimal_n_binomial_shift: h must have positive coefficients from degree 1");
    }
  }
  MinimalSearch r;
  r.start = 0;
  r.limit = n_max;
  IntPoly shifted = g;
  const IntPoly step = one_plus_x_pow(1);
  for (int n = 0; n <= n_max; ++n) {
    r.per_value.push_back(analyze(shifted + h).unimodal);
    shifted *= step;
  }
  finish(r);
  return r;
}

std::vector<FibonacciRow> fibonacci_real_roots_scan(int n_max) {
  if (n_max < 0) throw GraphError("fibonacci_real_roots_scan: negative n_max");
  std::vector<FibonacciRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    const MarkedGraph f = fibonacci_tree(n);
    const IntPoly p = indpoly_tree_dp(f.graph).poly;
    rows.push_back({n, f.graph.vertex_count(), p.degree(), check_real_roots(p)});
  }
  return rows;
}

std::vector<SequenceVerdict> direct_family_scan(const MarkedPolys& m, int n_max) {
  std::vector<SequenceVerdict> out;
  for (const auto& p : concat_sequence(m, n_max)) out.push_back(analyze(p));
  return out;
}

std::vector<SequenceVerdict> direct_family_scan(const MarkedGraph& g, int n_max, Engine engine) {
  return direct_family_scan(marked_polys(g, engine), n_max);
}

}  // namespace indseq
