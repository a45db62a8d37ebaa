#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "indseq/error.hpp"
#include "indseq/indpoly.hpp"
#include "indseq/sturm.hpp"

namespace indseq {

namespace {

namespace mp = boost::multiprecision;
using Float = mp::number<mp::cpp_bin_float<100, mp::digit_base_2>>;
using Complex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<100, mp::digit_base_2>>>;

Float to_float(const Rational& r) { return Float(r.get_num().get_str()) / Float(r.get_den().get_str()); }

Float relative_gap(const Float& exact, const Complex& approx) {
  const Float diff = abs(approx - Complex(exact));
  const Float scale = abs(exact);
  return scale > 0 ? diff / scale : diff;
}

// All complex roots of a square-free polynomial (Durand–Kerner).
std::vector<Complex> complex_roots(const IntPoly& p) {
  const int d = p.degree();
  std::vector<Complex> a(static_cast<std::size_t>(d) + 1);
  const Float lead = to_float(Rational(p.leading()));
  for (int i = 0; i <= d; ++i) a[i] = Complex(to_float(Rational(p[i])) / lead);
  Float radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, Float(abs(a[i])));
  radius += 1;

  std::vector<Complex> z(static_cast<std::size_t>(d));
  const Complex seed(Float("0.4"), Float("0.9"));
  Complex cur(radius);
  for (int i = 0; i < d; ++i) {
    z[i] = cur;
    cur *= seed;
  }
  const Float tol("1e-26");
  Float worst = 1;
  for (int iter = 0; iter < 5000 && worst > tol; ++iter) {
    worst = 0;
    for (int i = 0; i < d; ++i) {
      Complex num = a[d];
      for (int k = d - 1; k >= 0; --k) num = num * z[i] + a[k];
      Complex den(1);
      for (int j = 0; j < d; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      if (abs(den) == 0) den = Complex(Float("1e-40"));
      const Complex step = num / den;
      z[i] -= step;
      worst = std::max(worst, Float(abs(step) / (1 + abs(z[i]))));
    }
  }
  if (worst > Float("1e-12")) throw NumericError("root finder did not converge");
  return z;
}

}  // namespace

double cosine_factorization_check(const IntPoly& pG, const IntPoly& pGv, const IntPoly& pGw, int n,
                                  const std::vector<Rational>& samples) {
  if (n < 0) throw PolyError("cosine_factorization_check: negative n");
  const IntPoly pn = concat_recurrence(pG, pGv, pGw, n);
  const Float pi = boost::math::constants::pi<Float>();
  Float worst = 0;
  for (const auto& x : samples) {
    const Rational P = eval_at(pG, x);
    const Rational VW = eval_at(pGv, x) * eval_at(pGw, x);
    if (sgn(P * P - 4 * x * x * VW) <= 0) {
      throw NumericError("cosine_factorization_check: p^2 - 4x^2 p_v p_w must be positive at the sample");
    }
    const Float pf = to_float(P);
    const Float t = to_float(4 * x * x * VW);
    Float prod = (n % 2 == 1) ? pf : Float(1);
    for (int s = 1; s <= n / 2; ++s) {
      const Float c = cos(pi * s / (n + 1));
      prod *= pf * pf - t * c * c;
    }
    worst = std::max(worst, relative_gap(to_float(eval_at(pn, x)), Complex(prod)));
  }
  return worst.convert_to<double>();
}

double rooted_product_factor_check(const Graph& g, const MarkedGraph& h, const std::vector<Rational>& samples) {
  h.validate(false);
  const int n = g.vertex_count();
  if (n > 30) throw NumericError("rooted_product_factor_check: G has more than 30 vertices");
  const IntPoly pg = indpoly(g).poly;
  const IntPoly exact = indpoly(rooted_product(g, h)).poly;
  const IntPoly h_minus_v = indpoly(delete_vertex(h.graph, h.v)).poly;
  const IntPoly h_minus_nv = indpoly(delete_closed_neighborhood(h.graph, h.v)).poly;

  // Roots of x^n p(G, 1/x): zero n - alpha times, then the reversed polynomial's roots.
  std::vector<BigInt> rev(pg.coeffs().rbegin(), pg.coeffs().rend());
  std::vector<Complex> lambdas(static_cast<std::size_t>(n - pg.degree()), Complex(0));
  // Each level g_{k-1} / g_k of the gcd tower is square free and holds the
  // roots of multiplicity at least k, so the root finder never sees a repeat.
  IntPoly level(rev);
  while (level.degree() > 0) {
    const IntPoly next = poly_gcd(level, level.derivative());
    for (auto& r : complex_roots(exact_div(level, next))) lambdas.push_back(r);
    level = next;
  }

  Float worst = 0;
  for (const auto& x : samples) {
    const Complex a(to_float(eval_at(h_minus_v, x)));
    const Complex b(to_float(x * eval_at(h_minus_nv, x)));
    Complex prod(1);
    for (const auto& l : lambdas) prod *= a - l * b;
    worst = std::max(worst, relative_gap(to_float(eval_at(exact, x)), prod));
  }
  return worst.convert_to<double>();
}

}  // namespace indseq
