#pragma once

// The parametric polynomial f_q = p^2 - 4 q x^2 p_v p_w and its LC+ check.

#include "indseq/graph.hpp"
#include "indseq/indpoly.hpp"
#include "indseq/positivity.hpp"
#include "indseq/sequence.hpp"

namespace indseq {

ParamPoly build_fq(const MarkedPolys& m);
/// Requires v and w adjacent.
ParamPoly build_fq(const MarkedGraph& g, Engine engine = Engine::kAuto);
/// f_q for marked_path(k), from the path closed forms.
ParamPoly marked_path_fq(int k);
/// f_q for double_star(s, s + e).
ParamPoly double_star_fq(int s, int e);

/// c_j^2 - c_{j-1} c_{j+1}.
QCoeff lc_constraint(const ParamPoly& f, int j);

/// Decides, for every q in the range, that all c_j(q) > 0 and
/// c_j(q)^2 >= c_{j-1}(q) c_{j+1}(q). A top coefficient may vanish at an
/// isolated q when every higher one vanishes there too; that q is recorded
/// as a degenerate point and the trimmed polynomial is re-checked.
IntervalVerdict fq_lc_plus_on_interval(const ParamPoly& f, const RationalInterval& range);
IntervalVerdict fq_lc_plus_on_unit_interval(const ParamPoly& f);

struct Thm7Verdict {
  bool certified = false;
  IntPoly p;
  SequenceVerdict p_verdict;
  ParamPoly fq;
  IntervalVerdict fq_verdict;
};

/// p(G) LC+ and f_q LC+ on [0, 1]: then every G^n(v, w) is log-concave.
Thm7Verdict thm7_certify(const MarkedGraph& g, Engine engine = Engine::kAuto);
Thm7Verdict thm7_certify(const MarkedPolys& m);

}  // namespace indseq
