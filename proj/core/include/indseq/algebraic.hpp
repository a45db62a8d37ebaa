#pragma once

// Real algebraic numbers represented by an isolating interval.

#include <optional>
#include <string>

#include "indseq/poly.hpp"

namespace indseq {

/// (a + b*sqrt(c)) / d with d > 0; b == 0 encodes a rational.
struct QuadraticSurd {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt d;

  std::string to_string() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// A real root of a square-free integer polynomial, pinned down either
/// exactly (a rational) or by an open interval (lo, hi) whose endpoints are
/// not roots and which contains exactly one root.
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(const Rational& r);
  /// `poly` must be square-free with exactly one root in (lo, hi) and p(lo), p(hi) != 0.
  AlgebraicNumber(IntPoly poly, Rational lo, Rational hi);

  bool is_rational() const { return exact_; }
  /// Throws PolyError unless is_rational().
  const Rational& rational_value() const;

  const IntPoly& defining_polynomial() const { return poly_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }

  /// Bisects until the interval is at most `max_width` wide (or the root is found exactly).
  void refine(const Rational& max_width);

  /// Sign of h at this number.
  int sign_of(const IntPoly& h) const;

  /// -1, 0, 1 comparing this number with r.
  int compare(const Rational& r) const;

  double approx() const;
  /// Decimal expansion truncated toward zero after `digits` places.
  std::string decimal(int digits) const;

  /// Closed form when the defining polynomial has degree at most two.
  std::optional<QuadraticSurd> closed_form() const;

  /// Closed form when available, otherwise "root of <poly> in (lo, hi)".
  std::string to_string() const;

 private:
  AlgebraicNumber() = default;

  IntPoly poly_;
  Rational lo_;
  Rational hi_;
  bool exact_ = false;
};

/// Exact comparison of two algebraic numbers: -1, 0 or 1.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// All real roots of p in the closed interval [lo, hi], ascending, each
/// with an isolating interval no wider than `max_width`.
std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi,
                                                const Rational& max_width = Rational(1, 1024));

/// A rational strictly between a and b (requires a < b).
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// The first grid point k/10^m (m = 1, 2, ...) inside the interval from lo to
/// hi, each end open or closed as requested; falls back to the midpoint.
Rational simple_rational_in(const Rational& lo, const Rational& hi, bool include_lo, bool include_hi,
                            int max_digits = 12);

}  // namespace indseq
