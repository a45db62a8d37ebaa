#include "indseq/relations.hpp"

#include "indseq/error.hpp"

namespace indseq {

namespace {

BigInt C(long n, long k) { return binomial(n, k); }

QCoeff constant(const BigInt& c) { return QCoeff{c}; }

}  // namespace

RelationReport verify_nine_relations(int s, int e) {
  if (s < 0 || e < 0) throw PolyError("verify_nine_relations: s and e must be non-negative");
  RelationReport rep;
  rep.s = s;
  rep.e = e;
  rep.case_s_ge_e = s >= e;

  const RationalInterval unit = unit_interval();
  const RationalInterval low{Rational(0), Rational(1, 2)};
  const RationalInterval high{Rational(1, 2), Rational(1)};
  auto add = [&](std::string name, std::string statement, const QCoeff& lhs_minus_rhs, RationalInterval range,
                 bool strict = false) {
    RelationVerdict r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.q_range = range;
    r.strict = strict;
    r.q_dependent = lhs_minus_rhs.degree() >= 1;
    r.verdict = qcoeff_nonneg_on_interval(lhs_minus_rhs, range, strict);
    rep.relations.push_back(std::move(r));
  };
  auto sq = [](const BigInt& v) { return BigInt(v * v); };
  const long S = s;
  const long E = e;

  add("pT-1", "C(s,2)^2 >= C(s,3)(s+1)", constant(sq(C(S, 2)) - C(S, 3) * (S + 1)), unit);
  add("pT-2", "(C(s+e,2)+e)^2 >= (C(s+e,3)+C(e,2))(s+e+2)",
      constant(sq(C(S + E, 2) + E) - (C(S + E, 3) + C(E, 2)) * (S + E + 2)), unit);
  add("a", "C(s,2)^2 >= C(s,3)(s+2)", constant(sq(C(S, 2)) - C(S, 3) * (S + 2)), unit);

  if (rep.case_s_ge_e) {
    add("b", "(C(s+e,2)+2e)^2 >= (C(s+e,3)+2C(e,2))(s+e+4)",
        constant(sq(C(S + E, 2) + 2 * E) - (C(S + E, 3) + 2 * C(E, 2)) * (S + E + 4)), unit);
    const BigInt quad = C(2 * S, 2) + 4 * S - 2 * E + 1;
    add("c1", "(2s+4)^2 >= C(2s,2)+4s-2e+1", constant(BigInt((2 * S + 4) * (2 * S + 4)) - quad), unit);
    add("c2",
        "(C(2s,3)+2C(s,2)+2C(s-e,2))^2 >= (C(2s,4)+2C(s,3)+2C(s-e,3))(C(2s,2)+4s-2e+1)",
        constant(sq(C(2 * S, 3) + 2 * C(S, 2) + 2 * C(S - E, 2)) -
                 (C(2 * S, 4) + 2 * C(S, 3) + 2 * C(S - E, 3)) * quad),
        unit);
  } else {
    const BigInt quad = C(2 * S, 2) + 2 * S + 1;
    add("b1", "(C(2s,3)+2C(s,2))^2 >= (C(2s,4)+2C(s,3))(C(2s,2)+2s+1)",
        constant(sq(C(2 * S, 3) + 2 * C(S, 2)) - (C(2 * S, 4) + 2 * C(S, 3)) * quad), unit);
    add("b2", "(2s+2)^2 >= C(2s,2)+2s+1", constant(BigInt((2 * S + 2) * (2 * S + 2)) - quad), unit);
    add("c", "(C(s+e,2)+2e+1)^2 >= (C(s+e,3)+2C(e,2)+e-s)(s+e+4)",
        constant(sq(C(S + E, 2) + 2 * E + 1) - (C(S + E, 3) + 2 * C(E, 2) + E - S) * (S + E + 4)), unit);
  }

  // Shared tail: the polynomial (1+x)^{2s+e} + 2x(1+x)^{s+e} + 2x(1+x)^s + x^2(1+x)^e + 2x^2(1-2q).
  const QCoeff q2 = QCoeff{C(2 * S + E, 2) + 4 * S + 2 * E + 3, BigInt(-4)};
  const QCoeff lin = constant(BigInt(2 * S + E + 4));
  const QCoeff b3 = constant(C(2 * S + E, 3) + 2 * C(S + E, 2) + 2 * C(S, 2) + E);
  const QCoeff b4 = constant(C(2 * S + E, 4) + 2 * C(S + E, 3) + 2 * C(S, 3) + C(E, 2));
  add("d1", "(2s+e+4)^2 >= C(2s+e,2)+4s+2e+3-4q", lin * lin - q2, low);
  add("d2",
      "(C(2s+e,3)+2C(s+e,2)+2C(s,2)+e)^2 >= (C(2s+e,4)+2C(s+e,3)+2C(s,3)+C(e,2))(C(2s+e,2)+4s+2e+3-4q)",
      b3 * b3 - b4 * q2, low);
  add("d3", "(C(2s+e,2)+4s+2e+3-4q)^2 >= (C(2s+e,3)+2C(s+e,2)+2C(s,2)+e)(2s+e+4)", q2 * q2 - b3 * lin, high);
  add("d4", "C(2s+e,2)+4s+2e+3-4q > 0", q2, high, true);

  const QCoeff e_quad = QCoeff{C(2 * S + 2 * E, 2) + 4 * S + 6 * E + 4, BigInt(-4)};
  const QCoeff e_lin = constant(BigInt(2 * S + 2 * E + 4));
  const QCoeff e_cub = QCoeff{C(2 * S + 2 * E, 3) + 2 * C(S + 2 * E, 2) + 2 * C(S + E, 2) + 4 * E, BigInt(-4 * E)};
  const QCoeff e_qrt = QCoeff{C(2 * S + 2 * E, 4) + 2 * C(S + 2 * E, 3) + 2 * C(S + E, 3) + C(2 * E, 2) + 2 * C(E, 2),
                              BigInt(-4) * C(E, 2)};
  add("e1", "(2s+2e+4)^2 >= C(2s+2e,2)+4s+6e+4-4q", e_lin * e_lin - e_quad, unit);
  add("e2",
      "(C(2s+2e,3)+2C(s+2e,2)+2C(s+e,2)+4e(1-q))^2 >= "
      "(C(2s+2e,4)+2C(s+2e,3)+2C(s+e,3)+C(2e,2)+2C(e,2)(1-2q))(C(2s+2e,2)+4s+6e+4-4q)",
      e_cub * e_cub - e_qrt * e_quad, unit);

  rep.all_hold = true;
  for (const auto& r : rep.relations) rep.all_hold = rep.all_hold && r.verdict.holds;
  return rep;
}

}  // namespace indseq
