#pragma once

// Certificates for p_n that pair up factors f_{q_s} of the cosine product.

#include <optional>
#include <string>
#include <vector>

#include "indseq/indpoly.hpp"
#include "indseq/pair_product.hpp"
#include "indseq/param_lc.hpp"

namespace indseq {

/// Rational interval of width <= 2^-64 containing cos^2(s pi / (n + 1)).
RationalInterval cos_squared_enclosure(int s, int n);

/// The fixed pairing over s = 1..floor(n/2): s <-> floor(n/2) + 1 - s, with
/// the middle index alone when floor(n/2) is odd. Singletons have second = 0.
std::vector<std::pair<int, int>> pairing_scheme(int n);

enum class ClusterKind { kPair, kSingleton, kLeadingFactor };

std::string to_string(ClusterKind kind);

struct Cluster {
  ClusterKind kind = ClusterKind::kPair;
  /// s indices (empty for the leading factor p(G)).
  std::vector<int> members;
  std::vector<RationalInterval> enclosures;
  bool holds = false;
  std::optional<BoxCertificate> box;
  std::optional<IntervalVerdict> single;
};

struct ClusterCertificate {
  int n = 0;
  std::vector<Cluster> clusters;
  bool certified = false;
  /// Index into `clusters` of the first failure.
  std::optional<int> failing_cluster;
  /// p_n from the recurrence, analysed directly.
  SequenceVerdict direct;
};

ClusterCertificate cluster_certify_family(const MarkedPolys& m, int n);
ClusterCertificate cluster_certify_family(const MarkedGraph& g, int n, Engine engine = Engine::kAuto);

}  // namespace indseq
