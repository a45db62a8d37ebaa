#pragma once

// The binomial relations behind LC+ of f_q for the double-star family,
// with l1 = s and l2 = s + e.

#include <string>
#include <vector>

#include "indseq/positivity.hpp"

namespace indseq {

struct RelationVerdict {
  std::string name;
  std::string statement;
  RationalInterval q_range;
  bool strict = false;
  bool q_dependent = false;
  IntervalVerdict verdict;
};

struct RelationReport {
  int s = 0;
  int e = 0;
  bool case_s_ge_e = true;
  bool all_hold = false;
  std::vector<RelationVerdict> relations;
};

/// Evaluates every relation of the nested LC+ argument at (s, e): two for
/// p(T), then the chain for f_q in the case s >= e or s < e. Relations
/// involving q are decided exactly over their q ranges.
RelationReport verify_nine_relations(int s, int e);

}  // namespace indseq
