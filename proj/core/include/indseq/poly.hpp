#pragma once

// Dense univariate polynomials over exact coefficient rings.
//
// DensePoly<T> is the single workhorse: with T = BigInt it is an integer
// polynomial in x (an independence polynomial), with T = IntPoly it is a
// polynomial in x whose coefficients are themselves polynomials in a
// parameter q, and so on. Coefficient index equals degree; the vector is
// kept trimmed so the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace indseq {

using BigInt = mpz_class;
using Rational = mpq_class;

template <typename T>
class DensePoly;

namespace detail {
inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
template <typename T>
bool is_zero(const DensePoly<T>& p) {
  return p.is_zero();
}
/// Product of integer coefficient vectors by Kronecker substitution.
std::vector<BigInt> kronecker_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
inline constexpr std::size_t kKroneckerThreshold = 24;
}  // namespace detail

template <typename T>
class DensePoly {
 public:
  using value_type = T;

  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static DensePoly constant(T c) { return DensePoly(std::vector<T>{std::move(c)}); }
  static DensePoly monomial(T c, std::size_t degree) {
    std::vector<T> v(degree + 1);
    v[degree] = std::move(c);
    return DensePoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  const T& leading() const { return coeffs_.back(); }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if constexpr (std::is_same_v<T, BigInt>) {
      if (std::min(a.coeffs_.size(), b.coeffs_.size()) >= detail::kKroneckerThreshold) {
        return DensePoly(detail::kronecker_mul(a.coeffs_, b.coeffs_));
      }
    }
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(out));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  /// Multiplies every coefficient by `s`.
  DensePoly scaled(const T& s) const {
    std::vector<T> v = coeffs_;
    for (auto& c : v) c *= s;
    return DensePoly(std::move(v));
  }

  /// Multiplies by x^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(v));
  }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return DensePoly(std::move(v));
  }

  /// Horner evaluation in a ring S that T converts into.
  template <typename S>
  S eval(const S& at) const {
    S acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc *= at;
      acc += S(coeffs_[i]);
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Integer polynomial in x.
using IntPoly = DensePoly<BigInt>;
/// Rational polynomial; appears after substituting a rational parameter.
using RatPoly = DensePoly<Rational>;
/// Polynomial in the parameter q with integer coefficients.
using QCoeff = IntPoly;
/// Polynomial in x whose coefficients are QCoeffs.
using ParamPoly = DensePoly<QCoeff>;
/// Polynomial in q1 whose coefficients are polynomials in q2.
using BiPoly = DensePoly<IntPoly>;

// --- integer polynomial helpers -------------------------------------------

/// C(n, k), zero whenever k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);

/// (1 + x)^n.
IntPoly one_plus_x_pow(unsigned n);

/// gcd of the coefficients, non-negative; zero for the zero polynomial.
BigInt content(const IntPoly& p);

/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Exact division in Z[x]; throws PolyError when `b` does not divide `a`.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

RatPoly to_rational(const IntPoly& p);

/// Positive integer multiple of a rational polynomial with coprime coefficients.
IntPoly clear_denominators(const RatPoly& p);

/// Exact value p(r).
Rational eval_at(const IntPoly& p, const Rational& r);

/// Human-readable form such as "1 + 4x + 3x^2".
std::string to_string(const IntPoly& p, char var = 'x');
std::string to_string(const RatPoly& p, char var = 'x');
/// "1 + 8x + (22 - 4q)x^2 + ..."
std::string to_string(const ParamPoly& p);

// --- parametric polynomials -----------------------------------------------

/// Constant-in-q lift of an integer polynomial.
ParamPoly lift(const IntPoly& p);

/// Coefficient-wise evaluation of every c_j(q) at q = r.
RatPoly substitute_q(const ParamPoly& f, const Rational& r);

/// The same product as operator*, named for call-site readability.
inline ParamPoly param_mul(const ParamPoly& a, const ParamPoly& b) { return a * b; }

}  // namespace indseq
