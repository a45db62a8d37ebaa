#include "indseq/sturm.hpp"

#include "indseq/error.hpp"

namespace indseq {

int sign_at(const IntPoly& p, const Rational& r) {
  if (p.is_zero()) return 0;
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

int sign_at_plus_infinity(const IntPoly& p) { return p.is_zero() ? 0 : sgn(p.leading()); }

int sign_at_minus_infinity(const IntPoly& p) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PolyError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const BigInt lc = abs(b.leading());
  const int lc_sign = sgn(b.leading());
  std::vector<BigInt> r = a.coeffs();
  int dr = a.degree();
  while (dr >= db) {
    // r <- |lc| r - sign(lc) r_top x^(dr-db) b cancels the top term and
    // keeps r a positive multiple of the true remainder.
    BigInt top = r[dr];
    if (lc_sign < 0) top = -top;
    for (int i = 0; i < dr; ++i) r[i] *= lc;
    const int shift = dr - db;
    for (int j = 0; j < db; ++j) r[shift + j] -= top * b[j];
    r.pop_back();
    --dr;
    while (dr >= 0 && sgn(r[dr]) == 0) {
      r.pop_back();
      --dr;
    }
  }
  return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = primitive_part(a_in);
  IntPoly b = primitive_part(b_in);
  if (a.is_zero()) return b.is_zero() ? IntPoly{} : b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(signed_pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) throw PolyError("square_free_part of the zero polynomial");
  if (p.degree() <= 1) return primitive_part(p);
  IntPoly g = poly_gcd(p, p.derivative());
  return primitive_part(exact_div(primitive_part(p), g));
}

SturmChain::SturmChain(const IntPoly& square_free) {
  if (square_free.is_zero()) throw PolyError("Sturm chain of the zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() == 0) return;
  chain_.push_back(primitive_part(square_free.derivative()));
  while (chain_.back().degree() > 0) {
    IntPoly r = signed_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps the signs that Sturm's theorem relies on.
    BigInt c = content(r);
    IntPoly next = -r;
    if (c != 1) {
      std::vector<BigInt> v = next.coeffs();
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      next = IntPoly(std::move(v));
    }
    chain_.push_back(std::move(next));
  }
}

namespace {

template <typename SignFn>
int count_variations(const std::vector<IntPoly>& chain, SignFn sign_of) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int SturmChain::variations_at(const Rational& r) const {
  return count_variations(chain_, [&](const IntPoly& p) { return sign_at(p, r); });
}

int SturmChain::variations_at_plus_infinity() const {
  return count_variations(chain_, [](const IntPoly& p) { return sign_at_plus_infinity(p); });
}

int SturmChain::variations_at_minus_infinity() const {
  return count_variations(chain_, [](const IntPoly& p) { return sign_at_minus_infinity(p); });
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const {
  return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int sturm_count_real_roots(const IntPoly& p, const RootWindow& window) {
  if (p.is_zero()) throw PolyError("sturm_count_real_roots: zero polynomial");
  SturmChain chain(square_free_part(p));
  const int lo = window.lo ? chain.variations_at(*window.lo) : chain.variations_at_minus_infinity();
  const int hi = window.hi ? chain.variations_at(*window.hi) : chain.variations_at_plus_infinity();
  if (window.lo && window.hi && *window.hi <= *window.lo) return 0;
  return lo - hi;
}

RealRootCount count_real_roots_with_multiplicity(const IntPoly& p) {
  if (p.is_zero()) throw PolyError("count_real_roots_with_multiplicity: zero polynomial");
  RealRootCount out;
  out.degree = p.degree();
  // g_k carries exactly the roots of p of multiplicity > k, each with
  // multiplicity reduced by k; its square-free part lists them once.
  IntPoly g = primitive_part(p);
  bool first = true;
  while (g.degree() > 0) {
    IntPoly next = g.degree() == 1 ? IntPoly{1} : poly_gcd(g, g.derivative());
    IntPoly sf = primitive_part(exact_div(g, next));
    const int n = SturmChain(sf).count_all_roots();
    if (first) out.distinct = n;
    first = false;
    out.with_multiplicity += n;
    g = std::move(next);
  }
  return out;
}

bool has_real_roots_property(const IntPoly& p) { return count_real_roots_with_multiplicity(p).all_real(); }

}  // namespace indseq
