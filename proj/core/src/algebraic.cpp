#include "indseq/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "indseq/error.hpp"
#include "indseq/sturm.hpp"

namespace indseq {

namespace {

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

BigInt pow10(int k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return out;
}

// Splits n > 0 as k^2 * m with m free of small square factors.
void split_square(const BigInt& n, BigInt& k, BigInt& m) {
  k = 1;
  m = n;
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_sqrt(k.get_mpz_t(), m.get_mpz_t());
    m = 1;
    return;
  }
  for (unsigned long p = 2; p < 100000 && p * p <= m; ++p) {
    const unsigned long pp = p * p;
    while (mpz_divisible_ui_p(m.get_mpz_t(), pp)) {
      m /= pp;
      k *= p;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    k *= r;
    m = 1;
  }
}

}  // namespace

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  if (sgn(b) == 0) {
    os << a;
    if (d != 1) os << '/' << d;
    return os.str();
  }
  std::ostringstream root;
  BigInt mag = abs(b);
  if (mag != 1) root << mag << '*';
  root << "sqrt(" << c << ')';
  std::ostringstream num;
  if (sgn(a) != 0) {
    num << a << (sgn(b) < 0 ? "-" : "+") << root.str();
  } else {
    num << (sgn(b) < 0 ? "-" : "") << root.str();
  }
  if (d == 1) return num.str();
  if (sgn(a) != 0) return "(" + num.str() + ")/" + d.get_str();
  return num.str() + "/" + d.get_str();
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  AlgebraicNumber out;
  out.poly_ = IntPoly{-r.get_num(), r.get_den()};
  out.lo_ = r;
  out.hi_ = r;
  out.exact_ = true;
  return out;
}

AlgebraicNumber::AlgebraicNumber(IntPoly poly, Rational lo, Rational hi)
    : poly_(primitive_part(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw PolyError("AlgebraicNumber: defining polynomial must be non-constant");
  if (!(lo_ < hi_)) throw PolyError("AlgebraicNumber: empty isolating interval");
  if (poly_.degree() == 1) {
    Rational r(-poly_[0], poly_[1]);
    r.canonicalize();
    lo_ = hi_ = r;
    exact_ = true;
  }
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!exact_) throw PolyError("AlgebraicNumber is not known to be rational");
  return lo_;
}

void AlgebraicNumber::refine(const Rational& max_width) {
  if (exact_) return;
  int s_lo = sign_at(poly_, lo_);
  while (hi_ - lo_ > max_width) {
    Rational m = midpoint(lo_, hi_);
    const int s = sign_at(poly_, m);
    if (s == 0) {
      lo_ = hi_ = m;
      exact_ = true;
      return;
    }
    if (s == s_lo) {
      lo_ = m;
    } else {
      hi_ = m;
    }
    s_lo = sign_at(poly_, lo_);
  }
}

int AlgebraicNumber::sign_of(const IntPoly& h) const {
  if (h.is_zero()) return 0;
  if (exact_) return sign_at(h, lo_);
  IntPoly g = poly_gcd(poly_, h);
  if (g.degree() >= 1 && sign_at(g, lo_) != sign_at(g, hi_)) return 0;
  SturmChain chain(square_free_part(h));
  AlgebraicNumber copy = *this;
  while (!copy.exact_ && chain.count_roots(copy.lo_, copy.hi_) != 0) {
    copy.refine((copy.hi_ - copy.lo_) / 2);
  }
  return copy.exact_ ? sign_at(h, copy.lo_) : sign_at(h, copy.hi_);
}

int AlgebraicNumber::compare(const Rational& r) const {
  if (exact_) return cmp(lo_, r) < 0 ? -1 : (cmp(lo_, r) > 0 ? 1 : 0);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  if (sign_at(poly_, r) == 0) return 0;
  AlgebraicNumber copy = *this;
  while (!copy.exact_ && copy.lo_ < r && r < copy.hi_) copy.refine((copy.hi_ - copy.lo_) / 2);
  return copy.compare(r);
}

double AlgebraicNumber::approx() const {
  AlgebraicNumber copy = *this;
  copy.refine(Rational(1, BigInt(1) << 64));
  return midpoint(copy.lo_, copy.hi_).get_d();
}

std::string AlgebraicNumber::decimal(int digits) const {
  AlgebraicNumber copy = *this;
  const BigInt scale = pow10(digits);
  copy.refine(Rational(1, scale * 100));
  Rational m = midpoint(copy.lo_, copy.hi_) * scale;
  BigInt rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  if (Rational(rounded * 2 + 1, 2) <= m) rounded += 1;
  const bool neg = sgn(rounded) < 0;
  std::string s = BigInt(abs(rounded)).get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return neg ? "-" + s : s;
}

std::optional<QuadraticSurd> AlgebraicNumber::closed_form() const {
  if (exact_) return QuadraticSurd{lo_.get_num(), 0, 0, lo_.get_den()};
  if (poly_.degree() != 2) return std::nullopt;
  const BigInt& A = poly_[2];
  const BigInt& B = poly_[1];
  const BigInt& C = poly_[0];
  const BigInt disc = B * B - 4 * A * C;
  BigInt k, m;
  split_square(disc, k, m);
  // Roots (-B + s*sqrt(disc)) / (2A); the smaller lies left of the vertex.
  Rational vertex(-B, 2 * A);
  vertex.canonicalize();
  const bool smaller = compare(vertex) < 0;
  const int s = smaller ? (sgn(A) > 0 ? -1 : 1) : (sgn(A) > 0 ? 1 : -1);
  BigInt a = -B;
  BigInt b = s * k;
  BigInt d = 2 * A;
  if (sgn(d) < 0) {
    a = -a;
    b = -b;
    d = -d;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  if (g > 1) {
    a /= g;
    b /= g;
    d /= g;
  }
  return QuadraticSurd{a, b, m, d};
}

std::string AlgebraicNumber::to_string() const {
  if (auto cf = closed_form()) return cf->to_string();
  std::ostringstream os;
  os << "root of " << indseq::to_string(poly_, 'q') << " in (" << lo_ << ", " << hi_ << ")";
  return os.str();
}

int compare(const AlgebraicNumber& a_in, const AlgebraicNumber& b_in) {
  if (a_in.is_rational()) return -b_in.compare(a_in.rational_value());
  if (b_in.is_rational()) return a_in.compare(b_in.rational_value());
  AlgebraicNumber a = a_in;
  AlgebraicNumber b = b_in;
  const IntPoly g = poly_gcd(a.defining_polynomial(), b.defining_polynomial());
  const bool may_coincide = g.degree() >= 1;
  for (;;) {
    if (a.is_rational()) return -b.compare(a.rational_value());
    if (b.is_rational()) return a.compare(b.rational_value());
    if (a.upper() <= b.lower()) return -1;
    if (b.upper() <= a.lower()) return 1;
    if (may_coincide) {
      const Rational lo = std::max<Rational>(a.lower(), b.lower());
      const Rational hi = std::min<Rational>(a.upper(), b.upper());
      if (SturmChain(g).count_roots(lo, hi) > 0) return 0;
    }
    a.refine((a.upper() - a.lower()) / 2);
    b.refine((b.upper() - b.lower()) / 2);
  }
}

namespace {

void isolate_in(const SturmChain& chain, const IntPoly& sf, const Rational& a, const Rational& b, int count,
                const Rational& max_width, std::vector<AlgebraicNumber>& out) {
  if (count <= 0) return;
  if (count == 1) {
    if (sign_at(sf, b) == 0) {
      out.push_back(AlgebraicNumber::from_rational(b));
      return;
    }
    Rational lo = a;
    Rational hi = b;
    while (sign_at(sf, lo) == 0) {
      // lo is a neighbouring root counted elsewhere; move off it.
      Rational m = midpoint(lo, hi);
      if (sign_at(sf, m) == 0) {
        out.push_back(AlgebraicNumber::from_rational(m));
        return;
      }
      if (chain.count_roots(m, hi) == 1) {
        lo = m;
      } else {
        hi = m;
      }
    }
    AlgebraicNumber root(sf, lo, hi);
    root.refine(max_width);
    out.push_back(std::move(root));
    return;
  }
  const Rational m = midpoint(a, b);
  const int left = chain.count_roots(a, m);
  isolate_in(chain, sf, a, m, left, max_width, out);
  isolate_in(chain, sf, m, b, count - left, max_width, out);
}

}  // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi,
                                                const Rational& max_width) {
  if (p.is_zero()) throw PolyError("isolate_real_roots: zero polynomial");
  std::vector<AlgebraicNumber> out;
  if (p.degree() == 0 || hi < lo) return out;
  const IntPoly sf = square_free_part(p);
  if (sign_at(sf, lo) == 0) out.push_back(AlgebraicNumber::from_rational(lo));
  if (lo == hi) return out;
  SturmChain chain(sf);
  isolate_in(chain, sf, lo, hi, chain.count_roots(lo, hi), max_width, out);
  return out;
}

Rational rational_between(const AlgebraicNumber& a_in, const AlgebraicNumber& b_in) {
  AlgebraicNumber a = a_in;
  AlgebraicNumber b = b_in;
  for (;;) {
    const Rational& u = a.upper();
    const Rational& l = b.lower();
    if (u < l) return midpoint(u, l);
    if (a.is_rational() && b.is_rational()) throw PolyError("rational_between: arguments not ordered");
    a.refine((a.upper() - a.lower()) / 2);
    b.refine((b.upper() - b.lower()) / 2);
  }
}

Rational simple_rational_in(const Rational& lo, const Rational& hi, bool include_lo, bool include_hi,
                            int max_digits) {
  for (int m = 1; m <= max_digits; ++m) {
    const BigInt scale = pow10(m);
    Rational scaled = lo * scale;
    BigInt k;
    mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational cand(k, scale);
    cand.canonicalize();
    if (cand == lo && !include_lo) {
      cand = Rational(k + 1, scale);
      cand.canonicalize();
    }
    if (cand < hi || (include_hi && cand == hi)) return cand;
  }
  return midpoint(lo, hi);
}

}  // namespace indseq
