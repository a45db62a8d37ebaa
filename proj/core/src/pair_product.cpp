#include "indseq/pair_product.hpp"

#include <deque>

#include "indseq/error.hpp"
#include "indseq/sturm.hpp"

namespace indseq {

std::string to_string(BoxMethod m) { return m == BoxMethod::kElimination ? "elimination" : "subdivision"; }

DensePoly<BiPoly> pair_product(const ParamPoly& f) {
  std::vector<BiPoly> in_q1;
  std::vector<BiPoly> in_q2;
  for (const auto& c : f.coeffs()) {
    std::vector<IntPoly> outer;
    for (const auto& a : c.coeffs()) outer.push_back(IntPoly::constant(a));
    in_q1.emplace_back(std::move(outer));
    in_q2.push_back(BiPoly::constant(c));
  }
  return DensePoly<BiPoly>(std::move(in_q1)) * DensePoly<BiPoly>(std::move(in_q2));
}

namespace {

struct Constraint {
  BiPoly g;
  ViolatedConstraint id;
  bool strict = false;
};

std::vector<Constraint> product_constraints(const ParamPoly& f) {
  const auto prod = pair_product(f);
  std::vector<Constraint> out;
  const int d = prod.degree();
  for (int j = 0; j <= d; ++j) out.push_back({prod[j], {j, ConstraintKind::kPositivity}, true});
  for (int j = 1; j < d; ++j) {
    BiPoly l = prod[j] * prod[j] - prod[j - 1] * prod[j + 1];
    out.push_back({std::move(l), {j, ConstraintKind::kLogConcavity}, false});
  }
  return out;
}

void require_unit_box(const RationalInterval& r) {
  if (r.lo < 0 || r.hi > 1 || r.hi < r.lo) throw PolyError("pair_product_lc_box: boxes must lie inside [0, 1]");
}

Rational power(const Rational& r, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= r;
  return out;
}

// g(q1 = a, q2) as a positive multiple in Z[q2].
IntPoly at_q1(const BiPoly& g, const Rational& a) {
  RatPoly acc;
  for (int i = 0; i <= g.degree(); ++i) acc += to_rational(g[i]).scaled(power(a, i));
  return acc.is_zero() ? IntPoly{} : clear_denominators(acc);
}

Rational eval2(const BiPoly& g, const Rational& q1, const Rational& q2) {
  Rational acc = 0;
  for (int i = g.degree(); i >= 0; --i) acc = acc * q1 + eval_at(g[i], q2);
  return acc;
}

// --- exact elimination ------------------------------------------------------

struct Sweep {
  bool holds = true;
  std::optional<AlgebraicNumber> first_fail;
  std::optional<std::pair<Rational, Rational>> witness;
  std::optional<Rational> smallest_sample;
};

class Eliminator {
 public:
  Eliminator(const BiPoly& g, const RationalInterval& q1, const RationalInterval& q2) : g_(g), q1_(q1), q2_(q2) {
    if (g.degree() > 2) throw PolyError("elimination needs degree <= 2 in q1");
    A_ = g.coeff(2);
    B_ = g.coeff(1);
    C_ = g.coeff(0);
  }

  // Minimum of g(., q2) over the q1 box, and a minimizer.
  std::pair<Rational, Rational> minimum_at(const Rational& q2) const {
    Rational best_q1 = q1_.lo;
    Rational best = eval2(g_, q1_.lo, q2);
    const Rational at_hi = eval2(g_, q1_.hi, q2);
    if (at_hi < best) {
      best = at_hi;
      best_q1 = q1_.hi;
    }
    const Rational a = eval_at(A_, q2);
    if (sgn(a) > 0) {
      Rational v = -eval_at(B_, q2) / (2 * a);
      v.canonicalize();
      if (q1_.lo < v && v < q1_.hi) {
        const Rational val = eval2(g_, v, q2);
        if (val < best) {
          best = val;
          best_q1 = v;
        }
      }
    }
    return {best, best_q1};
  }

  Sweep run_nonstrict() const {
    Sweep out;
    auto note = [&](const Rational& value) {
      if (!out.smallest_sample || value < *out.smallest_sample) out.smallest_sample = value;
    };
    if (q2_.lo == q2_.hi) {
      const auto [m, arg] = minimum_at(q2_.lo);
      note(m);
      if (sgn(m) < 0) {
        out.holds = false;
        out.first_fail = AlgebraicNumber::from_rational(q2_.lo);
        out.witness = std::make_pair(arg, q2_.lo);
      }
      return out;
    }
    const auto points = breakpoints();
    for (const auto& p : points) {
      if (p.is_rational()) note(minimum_at(p.rational_value()).first);
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      const Rational t = rational_between(points[i], points[i + 1]);
      const auto [m, arg] = minimum_at(t);
      note(m);
      if (sgn(m) >= 0) continue;
      out.holds = false;
      out.first_fail = points[i];
      out.witness = std::make_pair(arg, t);
      Rational nice = nice_point(points[i], points[i + 1]);
      if (auto [mn, argn] = minimum_at(nice); sgn(mn) < 0) out.witness = std::make_pair(argn, nice);
      break;
    }
    return out;
  }

 private:
  std::vector<AlgebraicNumber> breakpoints() const {
    std::vector<IntPoly> cands{at_q1(g_, q1_.lo), at_q1(g_, q1_.hi), A_ * C_.scaled(4) - B_ * B_, A_};
    for (const Rational& e : {q1_.lo, q1_.hi}) {
      RatPoly edge = to_rational(B_) + to_rational(A_).scaled(2 * e);
      if (!edge.is_zero()) cands.push_back(clear_denominators(edge));
    }
    std::vector<AlgebraicNumber> pts{AlgebraicNumber::from_rational(q2_.lo), AlgebraicNumber::from_rational(q2_.hi)};
    for (const auto& c : cands) {
      if (c.degree() < 1) continue;
      for (auto& r : isolate_real_roots(c, q2_.lo, q2_.hi)) pts.push_back(std::move(r));
    }
    std::sort(pts.begin(), pts.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; });
    std::vector<AlgebraicNumber> out;
    for (auto& p : pts) {
      if (out.empty() || compare(out.back(), p) != 0) out.push_back(std::move(p));
    }
    return out;
  }

  static Rational nice_point(AlgebraicNumber lo, AlgebraicNumber hi) {
    const Rational width(1, BigInt(1) << 56);
    lo.refine(width);
    hi.refine(width);
    if (!(lo.upper() < hi.lower())) return rational_between(lo, hi);
    return simple_rational_in(lo.upper(), hi.lower(), true, true);
  }

  const BiPoly& g_;
  RationalInterval q1_;
  RationalInterval q2_;
  IntPoly A_;
  IntPoly B_;
  IntPoly C_;
};

struct StrictResult {
  bool holds = true;
  std::optional<AlgebraicNumber> first_fail;
  std::optional<std::pair<Rational, Rational>> witness;
  std::optional<Rational> margin;
};

// g has degree <= 1 in q1, so its minimum over the q1 box sits at an end.
StrictResult strict_on_box(const BiPoly& g, const RationalInterval& q1, const RationalInterval& q2) {
  if (g.degree() > 1) throw PolyError("strict elimination needs degree <= 1 in q1");
  StrictResult out;
  for (const Rational& e : {q1.lo, q1.hi}) {
    const IntPoly edge = at_q1(g, e);
    const IntervalVerdict v = qcoeff_nonneg_on_interval(edge, q2, true);
    for (const Rational& c : {q2.lo, q2.hi}) {
      const Rational val = eval2(g, e, c);
      if (!out.margin || val < *out.margin) out.margin = val;
    }
    if (v.holds) continue;
    out.holds = false;
    if (!out.first_fail || compare(*v.threshold, *out.first_fail) < 0) {
      out.first_fail = v.threshold;
      if (v.witness_q) out.witness = std::make_pair(e, *v.witness_q);
    }
  }
  // A bilinear g attains its minimum at a corner; otherwise the corner
  // minimum is not a certified margin.
  for (const auto& col : g.coeffs()) {
    if (col.degree() > 1) out.margin.reset();
  }
  return out;
}

// --- subdivision ------------------------------------------------------------

using Grid = std::vector<std::vector<Rational>>;  // grid[i][k] multiplies q1^i q2^k

RatPoly taylor_shift(const RatPoly& p, const Rational& a) {
  std::vector<Rational> c = p.coeffs();
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    for (int j = n - 2; j >= i; --j) c[j] += a * c[j + 1];
  }
  return RatPoly(std::move(c));
}

// Coefficients of g(a + u, c + w) in u, w.
Grid shifted_grid(const BiPoly& g, const Rational& a, const Rational& c) {
  const int d1 = g.degree();
  int d2 = 0;
  for (const auto& col : g.coeffs()) d2 = std::max(d2, col.degree());
  Grid grid(static_cast<std::size_t>(d1 + 1), std::vector<Rational>(static_cast<std::size_t>(d2 + 1)));
  for (int i = 0; i <= d1; ++i) {
    const RatPoly row = taylor_shift(to_rational(g[i]), c);
    for (int k = 0; k <= row.degree(); ++k) grid[i][k] = row[k];
  }
  for (int k = 0; k <= d2; ++k) {
    std::vector<Rational> col;
    for (int i = 0; i <= d1; ++i) col.push_back(grid[i][k]);
    const RatPoly shifted = taylor_shift(RatPoly(std::move(col)), a);
    for (int i = 0; i <= d1; ++i) grid[i][k] = shifted.coeff(static_cast<std::size_t>(i));
  }
  return grid;
}

// Lower bound of g over [a, b] x [c, d] from the corner expansion.
Rational lower_bound(const BiPoly& g, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const Grid grid = shifted_grid(g, a, c);
  const Rational du = b - a;
  const Rational dw = d - c;
  // u, w >= 0, so only negative terms can pull the value below grid[0][0].
  Rational lb = grid[0][0];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t k = 0; k < grid[i].size(); ++k) {
      const Rational& coef = grid[i][k];
      if ((i == 0 && k == 0) || sgn(coef) >= 0) continue;
      lb += coef * power(du, static_cast<int>(i)) * power(dw, static_cast<int>(k));
    }
  }
  return lb;
}

struct Box {
  Rational a, b, c, d;
  std::vector<std::size_t> pending;
};

BoxCertificate subdivide(const std::vector<Constraint>& cons, const RationalInterval& q1, const RationalInterval& q2,
                         std::size_t budget) {
  BoxCertificate cert;
  cert.method = BoxMethod::kSubdivision;
  std::vector<std::size_t> all(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) all[i] = i;
  std::vector<std::optional<Rational>> margins(cons.size());
  std::deque<Box> queue{{q1.lo, q1.hi, q2.lo, q2.hi, all}};
  while (!queue.empty()) {
    if (++cert.boxes_examined > budget) {
      cert.holds = false;
      cert.conclusive = false;
      return cert;
    }
    Box box = std::move(queue.front());
    queue.pop_front();
    std::vector<std::size_t> open;
    for (std::size_t idx : box.pending) {
      const Constraint& con = cons[idx];
      const Rational lb = lower_bound(con.g, box.a, box.b, box.c, box.d);
      if (sgn(lb) > 0 || (!con.strict && sgn(lb) == 0)) {
        if (!margins[idx] || lb < *margins[idx]) margins[idx] = lb;
        continue;
      }
      Rational mid1 = (box.a + box.b) / 2;
      Rational mid2 = (box.c + box.d) / 2;
      mid1.canonicalize();
      mid2.canonicalize();
      for (const auto& [x, y] : {std::pair{box.a, box.c}, std::pair{box.b, box.d}, std::pair{box.a, box.d},
                                  std::pair{box.b, box.c}, std::pair{mid1, mid2}}) {
        const Rational val = eval2(con.g, x, y);
        if (sgn(val) < 0 || (con.strict && sgn(val) == 0)) {
          cert.holds = false;
          cert.violated = con.id;
          cert.witness = std::make_pair(x, y);
          return cert;
        }
      }
      open.push_back(idx);
    }
    if (open.empty()) continue;
    Rational m1 = (box.a + box.b) / 2;
    Rational m2 = (box.c + box.d) / 2;
    m1.canonicalize();
    m2.canonicalize();
    const bool split1 = box.a < box.b;
    const bool split2 = box.c < box.d;
    if (!split1 && !split2) continue;  // a point that passed the exact corner test
    for (int s1 = 0; s1 < (split1 ? 2 : 1); ++s1) {
      for (int s2 = 0; s2 < (split2 ? 2 : 1); ++s2) {
        Box child;
        child.a = split1 ? (s1 == 0 ? box.a : m1) : box.a;
        child.b = split1 ? (s1 == 0 ? m1 : box.b) : box.b;
        child.c = split2 ? (s2 == 0 ? box.c : m2) : box.c;
        child.d = split2 ? (s2 == 0 ? m2 : box.d) : box.d;
        child.pending = open;
        queue.push_back(std::move(child));
      }
    }
  }
  cert.holds = true;
  for (std::size_t i = 0; i < cons.size(); ++i) cert.margins.push_back({cons[i].id.index, cons[i].id.kind, margins[i]});
  return cert;
}

}  // namespace

BoxCertificate pair_product_lc_box(const ParamPoly& f, const RationalInterval& q1_box, const RationalInterval& q2_box,
                                   BoxMethod method, std::size_t box_budget) {
  require_unit_box(q1_box);
  require_unit_box(q2_box);
  const auto cons = product_constraints(f);
  if (method == BoxMethod::kSubdivision) return subdivide(cons, q1_box, q2_box, box_budget);

  BoxCertificate cert;
  cert.method = BoxMethod::kElimination;
  cert.boxes_examined = 1;
  std::optional<AlgebraicNumber> first;
  try {
    for (const auto& con : cons) {
      ConstraintMargin margin{con.id.index, con.id.kind, std::nullopt};
      bool ok = true;
      std::optional<AlgebraicNumber> fail_at;
      std::optional<std::pair<Rational, Rational>> witness;
      if (con.strict) {
        const StrictResult r = strict_on_box(con.g, q1_box, q2_box);
        ok = r.holds;
        fail_at = r.first_fail;
        witness = r.witness;
        margin.margin = r.margin;
      } else {
        const Sweep r = Eliminator(con.g, q1_box, q2_box).run_nonstrict();
        ok = r.holds;
        fail_at = r.first_fail;
        witness = r.witness;
        margin.margin = r.smallest_sample;
      }
      cert.margins.push_back(margin);
      if (ok) continue;
      if (!first || compare(*fail_at, *first) < 0) {
        first = fail_at;
        cert.violated = con.id;
        cert.witness = witness;
      }
    }
  } catch (const PolyError&) {
    return subdivide(cons, q1_box, q2_box, box_budget);
  }
  cert.holds = !first;
  return cert;
}

std::optional<AlgebraicNumber> pair_threshold_q2(const ParamPoly& f) {
  const RationalInterval unit = unit_interval();
  std::optional<AlgebraicNumber> first;
  for (const auto& con : product_constraints(f)) {
    std::optional<AlgebraicNumber> at;
    if (con.strict) {
      at = strict_on_box(con.g, unit, unit).first_fail;
    } else {
      at = Eliminator(con.g, unit, unit).run_nonstrict().first_fail;
    }
    if (at && (!first || compare(*at, *first) < 0)) first = at;
  }
  return first;
}

}  // namespace indseq
