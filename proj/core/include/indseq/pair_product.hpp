#pragma once

// LC+ of the product f(q1) f(q2) over a box of parameter values.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indseq/positivity.hpp"

namespace indseq {

/// f(q1) * f(q2) as a polynomial in x with coefficients in Z[q1][q2].
DensePoly<BiPoly> pair_product(const ParamPoly& f);

enum class BoxMethod { kElimination, kSubdivision };

std::string to_string(BoxMethod m);

struct ConstraintMargin {
  int index = 0;
  ConstraintKind kind = ConstraintKind::kPositivity;
  /// Exact minimum over the box when found by elimination at a rational
  /// point, otherwise a rational lower bound.
  std::optional<Rational> margin;
};

struct BoxCertificate {
  bool holds = false;
  /// False when subdivision ran out of budget; never reported as a pass.
  bool conclusive = true;
  BoxMethod method = BoxMethod::kElimination;
  std::size_t boxes_examined = 0;
  std::optional<ViolatedConstraint> violated;
  /// A (q1, q2) where the product is not LC+.
  std::optional<std::pair<Rational, Rational>> witness;
  std::vector<ConstraintMargin> margins;
};

/// Decides whether f(q1) f(q2) is LC+ for all q1 in `q1_box`, q2 in `q2_box`.
/// Each constraint has degree at most two in q1; q1 is eliminated exactly
/// and the remaining univariate conditions are settled by root isolation.
BoxCertificate pair_product_lc_box(const ParamPoly& f, const RationalInterval& q1_box, const RationalInterval& q2_box,
                                   BoxMethod method = BoxMethod::kElimination, std::size_t box_budget = 100000);

/// Smallest q2 in [0, 1] beyond which f(q1) f(q2) fails to be LC+ for some
/// q1 in [0, 1]; nullopt when the product is LC+ on the whole unit square.
std::optional<AlgebraicNumber> pair_threshold_q2(const ParamPoly& f);

}  // namespace indseq
