#include "indseq/indpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "indseq/error.hpp"

namespace indseq {

IndPolyResult IndPolyResult::from_poly(IntPoly p) {
  IndPolyResult r;
  r.alpha = p.degree();
  r.total_count = 0;
  for (const auto& c : p.coeffs()) r.total_count += c;
  r.poly = std::move(p);
  return r;
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::kAuto:
      return "auto";
    case Engine::kBruteForce:
      return "brute";
    case Engine::kTreeDp:
      return "tree";
    case Engine::kDeletion:
      return "deletion";
  }
  return "auto";
}

Engine parse_engine(const std::string& name) {
  if (name == "auto") return Engine::kAuto;
  if (name == "brute" || name == "bruteforce") return Engine::kBruteForce;
  if (name == "tree" || name == "tree-dp") return Engine::kTreeDp;
  if (name == "deletion") return Engine::kDeletion;
  throw Error("unknown engine '" + name + "' (expected auto, brute, tree or deletion)");
}

// --- brute force ----------------------------------------------------------

namespace {

struct SubsetCounter {
  std::vector<std::uint64_t> closed;  // closed neighborhood masks
  std::vector<std::uint64_t> counts;

  void run(std::uint64_t candidates, int size) {
    ++counts[size];
    while (candidates != 0) {
      const int v = __builtin_ctzll(candidates);
      candidates &= candidates - 1;
      run(candidates & ~closed[v], size + 1);
    }
  }
};

}  // namespace

IndPolyResult indpoly_bruteforce(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 62) {
    throw BudgetExceeded("brute force engine limited to " + std::to_string(std::min(cap, 62)) + " vertices, got " +
                         std::to_string(n));
  }
  SubsetCounter sc;
  sc.closed.assign(static_cast<std::size_t>(n), 0);
  sc.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    sc.closed[v] = std::uint64_t{1} << v;
    for (int u : g.neighbors(v)) sc.closed[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  sc.run(all, 0);
  std::vector<BigInt> coeffs;
  for (auto c : sc.counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IndPolyResult::from_poly(IntPoly(std::move(coeffs)));
}

// --- tree DP ----------------------------------------------------------------

IndPolyResult indpoly_tree_dp(const Graph& g) {
  if (!g.is_forest()) throw GraphError("tree DP requires a forest");
  const int n = g.vertex_count();
  const IntPoly x = IntPoly::monomial(1, 1);
  std::vector<IntPoly> excl(static_cast<std::size_t>(n));
  std::vector<IntPoly> incl(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  IntPoly total = IntPoly::constant(1);
  for (const auto& comp : g.components()) {
    // Root at the smallest vertex; comp[0] is the smallest.
    std::vector<int> order{comp.front()};
    parent[comp.front()] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int u = order[i];
      for (int c : g.neighbors(u)) {
        if (c != parent[u]) {
          parent[c] = u;
          order.push_back(c);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int u = *it;
      IntPoly out = IntPoly::constant(1);
      IntPoly in = x;
      for (int c : g.neighbors(u)) {
        if (c == parent[u]) continue;
        out *= excl[c] + incl[c];
        in *= excl[c];
        excl[c] = IntPoly();
        incl[c] = IntPoly();
      }
      excl[u] = std::move(out);
      incl[u] = std::move(in);
    }
    total *= excl[comp.front()] + incl[comp.front()];
  }
  return IndPolyResult::from_poly(std::move(total));
}

// --- deletion recurrence ----------------------------------------------------

namespace {

class DeletionEngine {
 public:
  explicit DeletionEngine(const EngineOptions& opts) : opts_(opts) {}

  IntPoly solve(const Graph& g) {
    if (++calls_ > opts_.deletion_budget) {
      throw BudgetExceeded("deletion engine exceeded its budget of " + std::to_string(opts_.deletion_budget) + " calls");
    }
    const int n = g.vertex_count();
    if (g.edge_count() == 0) return one_plus_x_pow(static_cast<unsigned>(n));

    const auto comps = g.components();
    if (comps.size() > 1) {
      IntPoly out = IntPoly::constant(1);
      unsigned isolated = 0;
      for (const auto& c : comps) {
        if (c.size() == 1) {
          ++isolated;
        } else {
          out *= solve(g.induced(c));
        }
      }
      return out * one_plus_x_pow(isolated);
    }

    const std::string key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int a = 0;
    for (int v = 1; v < n; ++v) {
      if (g.degree(v) > g.degree(a)) a = v;
    }
    int b = g.neighbors(a).front();
    for (int u : g.neighbors(a)) {
      if (g.degree(u) > g.degree(b)) b = u;
    }

    Graph without_edge = g;
    without_edge.remove_edge(a, b);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    gone[a] = gone[b] = 1;
    for (int u : g.neighbors(a)) gone[u] = 1;
    for (int u : g.neighbors(b)) gone[u] = 1;
    std::vector<int> keep;
    for (int u = 0; u < n; ++u) {
      if (!gone[u]) keep.push_back(u);
    }

    IntPoly out = solve(without_edge) - solve(g.induced(keep)).shifted(2);
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::string memo_key(const Graph& g) const {
    if (g.vertex_count() <= opts_.canonical_limit) {
      if (g.is_forest()) return "t" + forest_canonical_form(g);
      if (auto k = canonical_key(g, 2000)) return "c" + *k;
    }
    return "l" + labeled_key(g);
  }

  const EngineOptions& opts_;
  std::size_t calls_ = 0;
  std::unordered_map<std::string, IntPoly> memo_;
};

}  // namespace

IndPolyResult indpoly_deletion(const Graph& g, const EngineOptions& opts) {
  DeletionEngine engine(opts);
  return IndPolyResult::from_poly(engine.solve(g));
}

IndPolyResult indpoly(const Graph& g, Engine engine, const EngineOptions& opts) {
  switch (engine) {
    case Engine::kBruteForce:
      return indpoly_bruteforce(g, opts.brute_force_cap);
    case Engine::kTreeDp:
      return indpoly_tree_dp(g);
    case Engine::kDeletion:
      return indpoly_deletion(g, opts);
    case Engine::kAuto:
      break;
  }
  if (g.is_forest()) return indpoly_tree_dp(g);
  return indpoly_deletion(g, opts);
}

// --- closed forms -----------------------------------------------------------

namespace {

// sum_j C(m - j, j) x^j; the path on m - 1 vertices (m = 0 gives 1).
IntPoly fibonacci_sum(int m) {
  std::vector<BigInt> c;
  for (int j = 0; 2 * j <= m; ++j) c.push_back(binomial(m - j, j));
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly path_indpoly_closed_form(int k) {
  if (k < 0) throw GraphError("path_indpoly_closed_form: negative size");
  return fibonacci_sum(k + 1);
}

MarkedPolys marked_polys(const MarkedGraph& g, Engine engine) {
  g.validate(true);
  return {indpoly(g.graph, engine).poly, indpoly(delete_closed_neighborhood(g.graph, g.v), engine).poly,
          indpoly(delete_closed_neighborhood(g.graph, *g.w), engine).poly};
}

MarkedPolys marked_path_polys(int k) {
  if (k < 2) throw GraphError("marked_path_polys: needs k >= 2");
  return {fibonacci_sum(k + 1), fibonacci_sum(k - 2), fibonacci_sum(k - 1)};
}

MarkedPolys double_star_polys(int l1, int l2) {
  if (l1 < 0 || l2 < 0) throw GraphError("double_star_polys: negative size");
  const IntPoly x = IntPoly::monomial(1, 1);
  const IntPoly a = one_plus_x_pow(static_cast<unsigned>(l1));
  const IntPoly b = one_plus_x_pow(static_cast<unsigned>(l2));
  return {one_plus_x_pow(static_cast<unsigned>(l1 + l2)) + x * b + x * a, b, a};
}

IntPoly concat_recurrence(const IntPoly& pG, const IntPoly& pGv, const IntPoly& pGw, int n) {
  if (n < 0) throw PolyError("concat_recurrence: negative n");
  const IntPoly tail = (pGv * pGw).shifted(2);
  IntPoly prev = IntPoly::constant(1);
  if (n == 0) return prev;
  IntPoly cur = pG;
  for (int i = 2; i <= n; ++i) {
    IntPoly next = pG * cur - tail * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<IntPoly> concat_sequence(const MarkedPolys& m, int n_max) {
  if (n_max < 0) throw PolyError("concat_sequence: negative n");
  const IntPoly tail = (m.pv * m.pw).shifted(2);
  std::vector<IntPoly> out{IntPoly::constant(1)};
  if (n_max >= 1) out.push_back(m.p);
  for (int i = 2; i <= n_max; ++i) out.push_back(m.p * out[i - 1] - tail * out[i - 2]);
  return out;
}

}  // namespace indseq
