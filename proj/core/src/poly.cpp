#include "indseq/poly.hpp"

#include <cstdint>
#include <sstream>

#include "indseq/error.hpp"

namespace indseq {

namespace {

constexpr std::size_t kWordBits = 64;

// Each coefficient occupies `words` little-endian 64-bit words.
BigInt pack(const std::vector<BigInt>& c, std::size_t words) {
  std::vector<std::uint64_t> buf(c.size() * words, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t count = 0;
    mpz_export(buf.data() + i * words, &count, -1, sizeof(std::uint64_t), 0, 0, c[i].get_mpz_t());
  }
  BigInt r;
  mpz_import(r.get_mpz_t(), buf.size(), -1, sizeof(std::uint64_t), 0, 0, buf.data());
  return r;
}

std::vector<BigInt> unpack(const BigInt& x, std::size_t words, std::size_t n) {
  const std::size_t have = (mpz_sizeinbase(x.get_mpz_t(), 2) + kWordBits - 1) / kWordBits;
  std::vector<std::uint64_t> buf(std::max(have, n * words) + 1, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(std::uint64_t), 0, 0, x.get_mpz_t());
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_import(out[i].get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data() + i * words);
  }
  return out;
}

std::size_t max_bits(const std::vector<BigInt>& c) {
  std::size_t m = 0;
  for (const auto& v : c) m = std::max(m, mpz_sizeinbase(v.get_mpz_t(), 2));
  return m;
}

}  // namespace

namespace detail {

std::vector<BigInt> kronecker_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  // Split into magnitudes of the positive and negative parts.
  auto split = [](const std::vector<BigInt>& c, std::vector<BigInt>& pos, std::vector<BigInt>& neg) {
    pos.assign(c.size(), 0);
    neg.assign(c.size(), 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i]) >= 0) {
        pos[i] = c[i];
      } else {
        neg[i] = -c[i];
        any_neg = true;
      }
    }
    return any_neg;
  };
  std::vector<BigInt> ap, an, bp, bn;
  const bool a_neg = split(a, ap, an);
  const bool b_neg = split(b, bp, bn);
  const std::size_t n = a.size() + b.size() - 1;
  std::size_t len_bits = 1;
  while ((std::size_t{1} << len_bits) < std::min(a.size(), b.size())) ++len_bits;
  const std::size_t bits = max_bits(a) + max_bits(b) + len_bits + 1;
  const std::size_t words = (bits + kWordBits - 1) / kWordBits;

  auto product = [&](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    BigInt px = pack(x, words);
    BigInt py = pack(y, words);
    return unpack(BigInt(px * py), words, n);
  };
  std::vector<BigInt> out = product(ap, bp);
  auto accumulate = [&](const std::vector<BigInt>& part, int sign) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sign > 0) {
        out[i] += part[i];
      } else {
        out[i] -= part[i];
      }
    }
  };
  if (a_neg && b_neg) accumulate(product(an, bn), 1);
  if (a_neg) accumulate(product(an, bp), -1);
  if (b_neg) accumulate(product(ap, bn), -1);
  return out;
}

}  // namespace detail

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

IntPoly one_plus_x_pow(unsigned n) {
  std::vector<BigInt> v(n + 1);
  for (unsigned k = 0; k <= n; ++k) v[k] = binomial(n, k);
  return IntPoly(std::move(v));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<BigInt> v = p.coeffs();
  if (g != 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PolyError("exact_div: division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PolyError("exact_div: divisor does not divide dividend");
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> quot(a.degree() - db + 1);
  BigInt r;
  for (int i = a.degree() - db; i >= 0; --i) {
    BigInt& top = rem[i + db];
    if (sgn(top) == 0) continue;
    mpz_tdiv_r(r.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    if (sgn(r) != 0) throw PolyError("exact_div: divisor does not divide dividend");
    BigInt qi = top / b.leading();
    for (int j = 0; j <= db; ++j) rem[i + j] -= qi * b[j];
    quot[i] = std::move(qi);
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) throw PolyError("exact_div: divisor does not divide dividend");
  }
  return IntPoly(std::move(quot));
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

IntPoly clear_denominators(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (l / c.get_den()));
  IntPoly out(std::move(v));
  BigInt g = content(out);
  if (g != 1) {
    std::vector<BigInt> w = out.coeffs();
    for (auto& c : w) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out = IntPoly(std::move(w));
  }
  return out;
}

Rational eval_at(const IntPoly& p, const Rational& r) {
  // Homogenised Horner keeps everything integral until the final division.
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  if (p.is_zero()) return 0;
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * den_pow;
    den_pow *= den;
  }
  // acc = sum p_i num^i den^(d-i); divide by den^d.
  den_pow /= den;
  Rational out(acc, den_pow);
  out.canonicalize();
  return out;
}

namespace {

template <typename C>
void append_term(std::ostringstream& os, bool& first, const C& c, std::size_t k, char var) {
  if (sgn(c) == 0) return;
  std::ostringstream term;
  C mag = abs(c);
  const bool unit = (mag == 1);
  if (first) {
    if (sgn(c) < 0) os << '-';
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  if (k == 0 || !unit) term << mag;
  if (k >= 1) term << var;
  if (k >= 2) term << '^' << k;
  os << term.str();
  first = false;
}

template <typename P>
std::string render(const P& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) append_term(os, first, p[k], k, var);
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, char var) { return render(p, var); }
std::string to_string(const RatPoly& p, char var) { return render(p, var); }

std::string to_string(const ParamPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const QCoeff& c = f[k];
    if (c.is_zero()) continue;
    if (c.degree() == 0) {
      append_term(os, first, c[0], k, 'x');
      continue;
    }
    if (!first) os << " + ";
    os << '(' << to_string(c, 'q') << ')';
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

ParamPoly lift(const IntPoly& p) {
  std::vector<QCoeff> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(QCoeff::constant(c));
  return ParamPoly(std::move(v));
}

RatPoly substitute_q(const ParamPoly& f, const Rational& r) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(eval_at(c, r));
  return RatPoly(std::move(v));
}

}  // namespace indseq
