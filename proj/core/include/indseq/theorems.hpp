#pragma once

// Verification drivers for the caterpillar families and the pendant
// augmentation searches.

#include <optional>
#include <string>
#include <vector>

#include "indseq/clustering.hpp"
#include "indseq/relations.hpp"

namespace indseq {

enum class Route { kRelations, kDirectFq, kClustering, kPairProduct, kDirect, kNone };

std::string to_string(Route r);

struct Thm8Item1Verdict {
  int s = 0;
  int e = 0;
  bool certified = false;
  Route route = Route::kNone;
  RelationReport relations;
  /// f_q checked directly, always computed as a cross-check of the relations.
  IntervalVerdict direct_fq;
  bool p_lc_plus = false;
  /// Per-n certificates when the clustering route is used (n = 1..n_max).
  std::vector<ClusterCertificate> clusters;
  int n_max = 0;
  std::string note;
  /// Relations claim LC+ but the direct check disagrees.
  bool contradiction = false;
};

/// Double star with l1 = s, l2 = s + e concatenated n times.
Thm8Item1Verdict verify_thm8_item1(int s, int e, int n_max = 40);

/// True for (0,1), (0,2), (0,3).
bool is_item1_exception(int s, int e);

struct Thm8Item2Verdict {
  int k = 0;
  bool certified = false;
  Route route = Route::kNone;
  IntervalVerdict direct;
  /// Pair products over the whole unit square (pair-product route).
  std::optional<BoxCertificate> full_box;
  /// f_q on the range of every unpaired q_s (pair-product route).
  std::optional<IntervalVerdict> singleton;
  std::vector<ClusterCertificate> clusters;
  int n_max = 0;
  std::string note;
};

/// Path P_k (w a leaf, v its neighbor) concatenated n times.
Thm8Item2Verdict verify_thm8_item2(int k, int n_max = 40);

/// True for k = 3, 5.
bool is_item2_exception(int k);

struct MinimalSearch {
  /// Smallest parameter value with the property, if any up to the limit.
  std::optional<int> first;
  int start = 0;
  int limit = 0;
  /// Verdict for every value start..limit.
  std::vector<bool> per_value;
  /// Values after `first` where the property fails again.
  std::vector<int> relapses;
  /// Closed-form polynomials disagreed with direct graph construction.
  bool cross_check_failed = false;
};

/// Smallest k <= k_max with G_k LC+.
MinimalSearch minimal_k_pendants_everywhere(const Graph& g, int k_max);
/// Smallest n <= n_max with G^1_n (variant 1) or G^2_n (variant 2) LC+.
MinimalSearch minimal_n_pendant_star(const Graph& g, int v, int variant, int n_max);
/// Smallest n <= n_max with g (1+x)^n + h unimodal.
MinimalSearch minimal_n_binomial_shift(const IntPoly& g, const IntPoly& h, int n_max);

/// p(G_k) = sum_t i_t(G) x^t (1+x)^{k(|V|-t)}.
IntPoly pendants_everywhere_poly(const IntPoly& pG, int vertices, int k);

struct FibonacciRow {
  int n = 0;
  int vertices = 0;
  int degree = 0;
  bool real_roots = false;
};

std::vector<FibonacciRow> fibonacci_real_roots_scan(int n_max);

/// p_0..p_{n_max} from the recurrence, each analysed.
std::vector<SequenceVerdict> direct_family_scan(const MarkedPolys& m, int n_max);
std::vector<SequenceVerdict> direct_family_scan(const MarkedGraph& g, int n_max, Engine engine = Engine::kAuto);

}  // namespace indseq
