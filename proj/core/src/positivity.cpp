#include "indseq/positivity.hpp"

#include "indseq/error.hpp"
#include "indseq/sturm.hpp"

namespace indseq {

namespace {

const Rational& fine_width() {
  static const Rational w(1, BigInt(1) << 56);
  return w;
}

// Exact minimum of a polynomial of degree <= 2 over [lo, hi].
Rational quadratic_minimum(const QCoeff& c, const RationalInterval& range) {
  Rational best = eval_at(c, range.lo);
  Rational at_hi = eval_at(c, range.hi);
  if (at_hi < best) best = at_hi;
  if (c.degree() == 2 && sgn(c[2]) > 0) {
    Rational vertex(-c[1], 2 * c[2]);
    vertex.canonicalize();
    if (range.lo < vertex && vertex < range.hi) {
      Rational v = eval_at(c, vertex);
      if (v < best) best = v;
    }
  }
  return best;
}

Rational witness_between(const QCoeff& c, AlgebraicNumber left, AlgebraicNumber right, const Rational& sample) {
  left.refine(fine_width());
  right.refine(fine_width());
  const Rational lo = left.upper();
  const Rational hi = right.lower();
  if (!(lo <= hi)) return sample;
  Rational w = simple_rational_in(lo, hi, sign_at(c, lo) < 0, sign_at(c, hi) < 0);
  return sign_at(c, w) < 0 ? w : sample;
}

}  // namespace

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kPositivity:
      return "positivity";
    case ConstraintKind::kLogConcavity:
      return "log-concavity";
    case ConstraintKind::kRelation:
      return "relation";
  }
  return "unknown";
}

SignProfile sign_profile(const QCoeff& c, const RationalInterval& range) {
  SignProfile out;
  if (range.hi < range.lo) throw PolyError("sign_profile: empty interval");
  if (c.is_zero()) {
    out.identically_zero = true;
    out.nonnegative = true;
    out.zeros.push_back(AlgebraicNumber::from_rational(range.lo));
    return out;
  }
  if (c.degree() <= 2 && sgn(quadratic_minimum(c, range)) > 0) {
    out.nonnegative = out.positive = true;
    return out;
  }
  out.zeros = isolate_real_roots(c, range.lo, range.hi);

  std::vector<AlgebraicNumber> points;
  points.push_back(AlgebraicNumber::from_rational(range.lo));
  for (const auto& z : out.zeros) {
    if (compare(z, points.back()) > 0) points.push_back(z);
  }
  if (compare(points.back(), AlgebraicNumber::from_rational(range.hi)) < 0) {
    points.push_back(AlgebraicNumber::from_rational(range.hi));
  }

  out.nonnegative = true;
  if (points.size() == 1) {
    out.nonnegative = sign_at(c, range.lo) >= 0;
    if (!out.nonnegative) {
      out.first_negative = points.front();
      out.negative_witness = range.lo;
    }
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational t = rational_between(points[i], points[i + 1]);
    if (sign_at(c, t) >= 0) continue;
    out.nonnegative = false;
    out.first_negative = points[i];
    out.negative_witness = witness_between(c, points[i], points[i + 1], t);
    break;
  }
  out.positive = out.nonnegative && out.zeros.empty();
  return out;
}

IntervalVerdict qcoeff_nonneg_on_interval(const QCoeff& c, const RationalInterval& range, bool strict) {
  IntervalVerdict v;
  const SignProfile prof = sign_profile(c, range);
  const ViolatedConstraint violated{0, ConstraintKind::kPositivity};
  if (prof.identically_zero) {
    v.holds = !strict;
    if (strict) {
      v.threshold = AlgebraicNumber::from_rational(range.lo);
      v.witness_q = range.lo;
      v.violated = violated;
    }
    return v;
  }
  if (!strict) {
    v.holds = prof.nonnegative;
    for (const auto& z : prof.zeros) v.degenerate_points.push_back({z, 0, "equality"});
    if (!v.holds) {
      v.threshold = prof.first_negative;
      v.witness_q = prof.negative_witness;
      v.violated = violated;
    }
    return v;
  }
  v.holds = prof.positive;
  if (v.holds) return v;
  v.violated = violated;
  // Strict failure starts at the first zero or the first negative stretch.
  if (!prof.zeros.empty() &&
      (!prof.first_negative || compare(prof.zeros.front(), *prof.first_negative) <= 0)) {
    v.threshold = prof.zeros.front();
    if (prof.zeros.front().is_rational()) {
      v.witness_q = prof.zeros.front().rational_value();
    } else {
      v.witness_q = prof.negative_witness;
    }
  } else {
    v.threshold = prof.first_negative;
    v.witness_q = prof.negative_witness;
  }
  return v;
}

IntervalVerdict qcoeff_nonneg_on_unit_interval(const QCoeff& c, bool strict) {
  return qcoeff_nonneg_on_interval(c, unit_interval(), strict);
}

std::optional<AlgebraicNumber> smallest_violation_threshold(const QCoeff& c) {
  if (sign_at(c, Rational(0)) <= 0) throw PolyError("smallest_violation_threshold: requires c(0) > 0");
  auto roots = isolate_real_roots(c, Rational(0), Rational(1));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace indseq
