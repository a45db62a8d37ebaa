#pragma once

// Exact sign analysis of parameter polynomials c(q) over rational intervals.

#include <optional>
#include <string>
#include <vector>

#include "indseq/algebraic.hpp"
#include "indseq/poly.hpp"

namespace indseq {

/// Closed interval [lo, hi] with rational ends.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

inline RationalInterval unit_interval() { return {Rational(0), Rational(1)}; }

/// Where and how a univariate c(q) is signed on a closed interval.
struct SignProfile {
  bool identically_zero = false;
  bool nonnegative = false;
  bool positive = false;
  /// Left end of the first region where c < 0 (or c(lo) < 0 gives lo itself).
  std::optional<AlgebraicNumber> first_negative;
  /// A rational with c < 0, chosen on a coarse decimal grid.
  std::optional<Rational> negative_witness;
  /// All zeros of c inside the interval, ascending.
  std::vector<AlgebraicNumber> zeros;
};

SignProfile sign_profile(const QCoeff& c, const RationalInterval& range);

enum class ConstraintKind { kPositivity, kLogConcavity, kRelation };

std::string to_string(ConstraintKind kind);

struct ViolatedConstraint {
  int index = 0;
  ConstraintKind kind = ConstraintKind::kPositivity;
};

/// A point where a coefficient vanishes (trimmed and re-checked) or a
/// log-concavity inequality holds with equality.
struct DegeneratePoint {
  AlgebraicNumber q;
  int index = 0;
  std::string reason;
};

/// Outcome of a "for every q in the interval" check.
struct IntervalVerdict {
  bool holds = false;
  /// Smallest q at which the checked condition stops holding.
  std::optional<AlgebraicNumber> threshold;
  std::optional<Rational> witness_q;
  std::optional<ViolatedConstraint> violated;
  std::vector<DegeneratePoint> degenerate_points;
};

/// Decides c(q) > 0 (strict) or c(q) >= 0 for all q in [0, 1].
IntervalVerdict qcoeff_nonneg_on_unit_interval(const QCoeff& c, bool strict);
IntervalVerdict qcoeff_nonneg_on_interval(const QCoeff& c, const RationalInterval& range, bool strict);

/// Smallest zero of c in [0, 1]; requires c(0) > 0 (PolyError otherwise).
std::optional<AlgebraicNumber> smallest_violation_threshold(const QCoeff& c);

}  // namespace indseq
