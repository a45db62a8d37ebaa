#pragma once

// Unimodality, log-concavity, LC+ and the real-roots property of sequences.

#include <optional>
#include <string>
#include <vector>

#include "indseq/graph.hpp"
#include "indseq/indpoly.hpp"
#include "indseq/poly.hpp"

namespace indseq {

enum class ViolationKind {
  kUnimodality,   // index = valley before the first rise after a descent
  kNegative,      // index = first negative entry
  kLogConcavity,  // index = first k with a_k^2 < a_{k-1} a_{k+1}
  kInternalZero,  // index = first zero strictly between nonzero entries
  kPositivity,    // index = first entry that is not strictly positive
};

std::string to_string(ViolationKind kind);

struct Violation {
  int index = 0;
  ViolationKind kind = ViolationKind::kUnimodality;
};

struct SequenceVerdict {
  bool unimodal = false;
  /// Smallest m with a_0 <= ... <= a_m >= ... >= a_n.
  std::optional<int> mode_index;
  /// a_k^2 >= a_{k-1} a_{k+1} for all interior k, no negative entries and
  /// no internal zeros.
  bool log_concave = false;
  bool lc_plus = false;
  /// Only filled when requested.
  std::optional<bool> real_roots;
  std::optional<Violation> first_violation;
  int sequence_length = 0;
};

/// Throws PolyError for an empty sequence.
SequenceVerdict analyze(const std::vector<BigInt>& seq, bool with_real_roots = false);
SequenceVerdict analyze(const std::vector<Rational>& seq);
/// Coefficient sequence a_0..a_deg of p.
SequenceVerdict analyze(const IntPoly& p, bool with_real_roots = false);
SequenceVerdict analyze(const RatPoly& p);

/// Real roots counted with multiplicity equal the degree. Throws for p = 0.
bool check_real_roots(const IntPoly& p);

struct FinalThirdResult {
  bool holds = false;
  int alpha = 0;
  /// ceil((2 alpha - 1) / 3)
  int start_index = 0;
  /// First i >= start_index with i_i < i_{i+1}, if any.
  std::optional<int> violation_index;
};

FinalThirdResult final_third_decreasing(const IntPoly& p);
FinalThirdResult final_third_decreasing(const Graph& g, Engine engine = Engine::kAuto);

}  // namespace indseq
