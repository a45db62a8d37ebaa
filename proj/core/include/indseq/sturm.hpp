#pragma once

// Exact real-root counting for integer polynomials.

#include <optional>
#include <utility>
#include <vector>

#include "indseq/poly.hpp"

namespace indseq {

/// Sign (-1, 0, 1) of p(r), computed without leaving the integers.
int sign_at(const IntPoly& p, const Rational& r);

/// Sign of p at +infinity / -infinity; 0 only for the zero polynomial.
int sign_at_plus_infinity(const IntPoly& p);
int sign_at_minus_infinity(const IntPoly& p);

/// Positive integer multiple of the remainder of a by b (a pseudo-remainder
/// whose sign pattern matches the true one).
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (1 when coprime).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), primitive.
IntPoly square_free_part(const IntPoly& p);

/// Sturm chain of a square-free polynomial. Counting uses the convention
/// that V(lo) - V(hi) is the number of distinct roots in (lo, hi].
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& square_free);

  int variations_at(const Rational& r) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;

  int count_roots(const Rational& lo, const Rational& hi) const;
  int count_all_roots() const;

  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

/// A half-open counting window (lo, hi]; an absent bound means infinity.
struct RootWindow {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// Number of distinct real roots of p in the window. Throws PolyError for p = 0.
int sturm_count_real_roots(const IntPoly& p, const RootWindow& window = {});

struct RealRootCount {
  int distinct = 0;
  int with_multiplicity = 0;
  int degree = 0;
  bool all_real() const { return with_multiplicity == degree; }
};

/// Real roots counted with multiplicity via the tower g_0 = p, g_{k+1} = gcd(g_k, g_k').
RealRootCount count_real_roots_with_multiplicity(const IntPoly& p);

/// True iff p splits into linear factors over the reals. Throws for p = 0.
bool has_real_roots_property(const IntPoly& p);

}  // namespace indseq
