#pragma once

// Independence polynomials: three engines, family closed forms and the
// numerical cross-checks of the product formulas.

#include <cstddef>
#include <string>
#include <vector>

#include "indseq/graph.hpp"
#include "indseq/poly.hpp"

namespace indseq {

struct IndPolyResult {
  IntPoly poly;
  int alpha = 0;
  BigInt total_count;

  static IndPolyResult from_poly(IntPoly p);
};

enum class Engine { kAuto, kBruteForce, kTreeDp, kDeletion };

std::string to_string(Engine e);
/// Accepts auto, brute, tree, deletion; throws Error otherwise.
Engine parse_engine(const std::string& name);

struct EngineOptions {
  int brute_force_cap = 26;
  /// Maximum number of recursive calls in the deletion engine.
  std::size_t deletion_budget = 5'000'000;
  /// Graphs up to this size are memoized by canonical form.
  int canonical_limit = 12;
};

/// Exhaustive enumeration; throws BudgetExceeded above `cap` vertices.
IndPolyResult indpoly_bruteforce(const Graph& g, int cap = 26);
/// Two-state DP over a forest; throws GraphError if g has a cycle.
IndPolyResult indpoly_tree_dp(const Graph& g);
/// p(H) = p(H - ab) - x^2 p(H - N[a] - N[b]) with memoization.
IndPolyResult indpoly_deletion(const Graph& g, const EngineOptions& opts = {});

/// Tree DP for forests, deletion otherwise (unless another engine is named).
IndPolyResult indpoly(const Graph& g, Engine engine = Engine::kAuto, const EngineOptions& opts = {});

/// sum_j C(k + 1 - j, j) x^j, the polynomial of the path on k vertices.
IntPoly path_indpoly_closed_form(int k);

/// p(T), p(T - N[v]), p(T - N[w]) for a marked graph.
struct MarkedPolys {
  IntPoly p;
  IntPoly pv;
  IntPoly pw;
};

MarkedPolys marked_polys(const MarkedGraph& g, Engine engine = Engine::kAuto);
/// Closed forms for marked_path(k): T_w = P_{k-2}, T_v = P_{k-3}.
MarkedPolys marked_path_polys(int k);
/// Closed forms for double_star(l1, l2).
MarkedPolys double_star_polys(int l1, int l2);

/// p_n from p_n = p p_{n-1} - x^2 p_v p_w p_{n-2}, p_0 = 1, p_1 = p.
IntPoly concat_recurrence(const IntPoly& pG, const IntPoly& pGv, const IntPoly& pGw, int n);
/// p_0 .. p_{n_max}.
std::vector<IntPoly> concat_sequence(const MarkedPolys& m, int n_max);

/// Maximum relative residual between p_n and its cosine product form,
/// evaluated at the given sample points in 100-bit floating point.
double cosine_factorization_check(const IntPoly& pG, const IntPoly& pGv, const IntPoly& pGw, int n,
                                  const std::vector<Rational>& samples = {Rational(1, 2), Rational(1)});

/// Maximum relative residual between p(G_v[H]) and the product over the
/// roots of x^n p(G, 1/x). Requires |V(g)| <= 30.
double rooted_product_factor_check(const Graph& g, const MarkedGraph& h,
                                   const std::vector<Rational>& samples = {Rational(1, 2), Rational(1)});

}  // namespace indseq
