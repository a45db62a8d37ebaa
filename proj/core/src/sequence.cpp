#include "indseq/sequence.hpp"

#include <cmath>
#include <type_traits>

#include "indseq/error.hpp"
#include "indseq/sturm.hpp"

namespace indseq {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnimodality:
      return "unimodality";
    case ViolationKind::kNegative:
      return "negative";
    case ViolationKind::kLogConcavity:
      return "log-concavity";
    case ViolationKind::kInternalZero:
      return "internal-zero";
    case ViolationKind::kPositivity:
      return "positivity";
  }
  return "unknown";
}

namespace {

// log2 of a positive integer to within about 1e-12 for the sizes seen here.
double log2_approx(const BigInt& v) {
  long exp = 0;
  const double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return static_cast<double>(exp) + std::log2(d);
}

// a_k^2 < a_{k-1} a_{k+1}; a cheap logarithmic comparison settles all but
// near-ties, which are decided exactly.
template <typename T>
bool lc_fails(const T& prev, const T& mid, const T& next) {
  if constexpr (std::is_same_v<T, BigInt>) {
    if (sgn(prev) > 0 && sgn(mid) > 0 && sgn(next) > 0 && mpz_sizeinbase(mid.get_mpz_t(), 2) > 256) {
      const double gap = 2 * log2_approx(mid) - log2_approx(prev) - log2_approx(next);
      if (gap > 1e-6) return false;
      if (gap < -1e-6) return true;
    }
  }
  return mid * mid < prev * next;
}

template <typename T>
SequenceVerdict analyze_impl(const std::vector<T>& a) {
  if (a.empty()) throw PolyError("analyze: empty sequence");
  const int n = static_cast<int>(a.size());
  SequenceVerdict v;
  v.sequence_length = n;

  int rise_end = 0;
  while (rise_end + 1 < n && a[rise_end] <= a[rise_end + 1]) ++rise_end;
  int fall_start = n - 1;
  while (fall_start > 0 && a[fall_start - 1] >= a[fall_start]) --fall_start;
  v.unimodal = fall_start <= rise_end;
  std::optional<Violation> uni_violation;
  if (v.unimodal) {
    v.mode_index = fall_start;
  } else {
    int i = rise_end + 1;
    while (i + 1 < n && !(a[i] < a[i + 1])) ++i;
    uni_violation = Violation{i, ViolationKind::kUnimodality};
  }

  std::optional<Violation> lc_violation;
  for (int i = 0; i < n && !lc_violation; ++i) {
    if (sgn(a[i]) < 0) lc_violation = Violation{i, ViolationKind::kNegative};
  }
  for (int k = 1; k + 1 < n && !lc_violation; ++k) {
    if (lc_fails(a[k - 1], a[k], a[k + 1])) lc_violation = Violation{k, ViolationKind::kLogConcavity};
  }
  if (!lc_violation) {
    int first_nz = 0;
    while (first_nz < n && sgn(a[first_nz]) == 0) ++first_nz;
    int last_nz = n - 1;
    while (last_nz >= 0 && sgn(a[last_nz]) == 0) --last_nz;
    for (int i = first_nz + 1; i < last_nz; ++i) {
      if (sgn(a[i]) == 0) {
        lc_violation = Violation{i, ViolationKind::kInternalZero};
        break;
      }
    }
  }
  v.log_concave = !lc_violation;

  std::optional<Violation> pos_violation;
  for (int i = 0; i < n; ++i) {
    if (sgn(a[i]) <= 0) {
      pos_violation = Violation{i, ViolationKind::kPositivity};
      break;
    }
  }
  v.lc_plus = v.log_concave && !pos_violation;

  if (uni_violation) {
    v.first_violation = uni_violation;
  } else if (lc_violation) {
    v.first_violation = lc_violation;
  } else if (pos_violation) {
    v.first_violation = pos_violation;
  }
  return v;
}

}  // namespace

SequenceVerdict analyze(const std::vector<BigInt>& seq, bool with_real_roots) {
  SequenceVerdict v = analyze_impl(seq);
  if (with_real_roots) {
    const IntPoly p(seq);
    if (!p.is_zero()) v.real_roots = check_real_roots(p);
  }
  return v;
}

SequenceVerdict analyze(const std::vector<Rational>& seq) { return analyze_impl(seq); }

SequenceVerdict analyze(const IntPoly& p, bool with_real_roots) { return analyze(p.coeffs(), with_real_roots); }

SequenceVerdict analyze(const RatPoly& p) { return analyze_impl(p.coeffs()); }

bool check_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw PolyError("check_real_roots: zero polynomial");
  return has_real_roots_property(p);
}

FinalThirdResult final_third_decreasing(const IntPoly& p) {
  if (p.is_zero()) throw PolyError("final_third_decreasing: zero polynomial");
  FinalThirdResult r;
  r.alpha = p.degree();
  r.start_index = (2 * r.alpha + 1) / 3;  // ceil((2 alpha - 1) / 3) for alpha >= 0
  for (int i = r.start_index; i < r.alpha; ++i) {
    if (p[i] < p[i + 1]) {
      r.violation_index = i;
      break;
    }
  }
  r.holds = !r.violation_index;
  return r;
}

FinalThirdResult final_third_decreasing(const Graph& g, Engine engine) {
  return final_third_decreasing(indpoly(g, engine).poly);
}

}  // namespace indseq
