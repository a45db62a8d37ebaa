#include "indseq/param_lc.hpp"

#include "indseq/error.hpp"

namespace indseq {

ParamPoly build_fq(const MarkedPolys& m) {
  const IntPoly tail = (m.pv * m.pw).shifted(2);
  std::vector<QCoeff> sub;
  for (const auto& a : tail.coeffs()) sub.push_back(QCoeff{BigInt(0), 4 * a});
  return lift(m.p * m.p) - ParamPoly(std::move(sub));
}

ParamPoly build_fq(const MarkedGraph& g, Engine engine) { return build_fq(marked_polys(g, engine)); }

ParamPoly marked_path_fq(int k) { return build_fq(marked_path_polys(k)); }

ParamPoly double_star_fq(int s, int e) {
  if (s < 0 || e < 0) throw GraphError("double_star_fq: negative parameter");
  return build_fq(double_star_polys(s, s + e));
}

QCoeff lc_constraint(const ParamPoly& f, int j) {
  const QCoeff cj = f.coeff(static_cast<std::size_t>(j));
  const QCoeff lo = j >= 1 ? f.coeff(static_cast<std::size_t>(j - 1)) : QCoeff{};
  return cj * cj - lo * f.coeff(static_cast<std::size_t>(j + 1));
}

namespace {

struct Failure {
  AlgebraicNumber at;
  std::optional<Rational> witness;
  ViolatedConstraint constraint;
};

std::optional<Rational> rational_or(const AlgebraicNumber& z, const std::optional<Rational>& fallback) {
  if (z.is_rational()) return z.rational_value();
  return fallback;
}

}  // namespace

IntervalVerdict fq_lc_plus_on_interval(const ParamPoly& f, const RationalInterval& range) {
  IntervalVerdict out;
  std::optional<Failure> first;
  auto consider = [&](Failure fl) {
    if (!first || compare(fl.at, first->at) < 0) first = std::move(fl);
  };
  const AlgebraicNumber lo = AlgebraicNumber::from_rational(range.lo);

  const int d = f.degree();
  if (d < 0) {
    consider({lo, range.lo, {0, ConstraintKind::kPositivity}});
  }
  for (int j = 0; j <= d; ++j) {
    const SignProfile prof = sign_profile(f[j], range);
    const ViolatedConstraint pos{j, ConstraintKind::kPositivity};
    if (prof.identically_zero) {
      consider({lo, range.lo, pos});
      continue;
    }
    if (!prof.nonnegative) consider({*prof.first_negative, prof.negative_witness, pos});
    for (const auto& z : prof.zeros) {
      bool trimmed_ok = j >= 1;
      for (int i = j + 1; i <= d && trimmed_ok; ++i) trimmed_ok = z.sign_of(f[i]) == 0;
      if (trimmed_ok && z.is_rational()) {
        trimmed_ok = analyze(substitute_q(f, z.rational_value())).lc_plus;
      }
      if (!trimmed_ok) {
        consider({z, rational_or(z, prof.negative_witness), pos});
        break;
      }
      out.degenerate_points.push_back({z, j, "coefficient vanishes; trimmed sequence re-checked"});
    }
  }
  for (int j = 1; j < d; ++j) {
    const SignProfile prof = sign_profile(lc_constraint(f, j), range);
    if (prof.identically_zero) continue;
    if (!prof.nonnegative) {
      consider({*prof.first_negative, prof.negative_witness, {j, ConstraintKind::kLogConcavity}});
    }
    for (const auto& z : prof.zeros) out.degenerate_points.push_back({z, j, "log-concavity holds with equality"});
  }

  out.holds = !first;
  if (first) {
    out.threshold = first->at;
    out.witness_q = first->witness;
    out.violated = first->constraint;
  }
  return out;
}

IntervalVerdict fq_lc_plus_on_unit_interval(const ParamPoly& f) { return fq_lc_plus_on_interval(f, unit_interval()); }

Thm7Verdict thm7_certify(const MarkedPolys& m) {
  Thm7Verdict v;
  v.p = m.p;
  v.p_verdict = analyze(m.p);
  v.fq = build_fq(m);
  v.fq_verdict = fq_lc_plus_on_unit_interval(v.fq);
  v.certified = v.p_verdict.lc_plus && v.fq_verdict.holds;
  return v;
}

Thm7Verdict thm7_certify(const MarkedGraph& g, Engine engine) { return thm7_certify(marked_polys(g, engine)); }

}  // namespace indseq
