#include "indseq/clustering.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "indseq/error.hpp"

namespace indseq {

namespace {

namespace mp = boost::multiprecision;
using Float = mp::number<mp::cpp_bin_float<200, mp::digit_base_2>>;

constexpr unsigned kScaleBits = 80;

}  // namespace

RationalInterval cos_squared_enclosure(int s, int n) {
  if (n < 1 || s < 0 || s > n) throw PolyError("cos_squared_enclosure: need 0 <= s <= n");
  const Float pi = boost::math::constants::pi<Float>();
  const Float c = cos(pi * s / (n + 1));
  const Float scaled = floor(ldexp(c * c, static_cast<int>(kScaleBits)));
  const BigInt k(scaled.convert_to<mp::cpp_int>().str());
  const BigInt den = BigInt(1) << kScaleBits;
  // 200-bit cosine error is far below the 2^-80 padding.
  Rational lo(k - 2, den);
  Rational hi(k + 3, den);
  lo.canonicalize();
  hi.canonicalize();
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return {lo, hi};
}

std::vector<std::pair<int, int>> pairing_scheme(int n) {
  if (n < 0) throw PolyError("pairing_scheme: negative n");
  const int m = n / 2;
  std::vector<std::pair<int, int>> out;
  for (int s = 1; 2 * s <= m; ++s) out.emplace_back(s, m + 1 - s);
  if (m % 2 == 1) out.emplace_back((m + 1) / 2, 0);
  return out;
}

std::string to_string(ClusterKind kind) {
  switch (kind) {
    case ClusterKind::kPair:
      return "pair";
    case ClusterKind::kSingleton:
      return "singleton";
    case ClusterKind::kLeadingFactor:
      return "leading-factor";
  }
  return "pair";
}

ClusterCertificate cluster_certify_family(const MarkedPolys& m, int n) {
  if (n < 0) throw PolyError("cluster_certify_family: negative n");
  ClusterCertificate cert;
  cert.n = n;
  const ParamPoly f = build_fq(m);
  if (n % 2 == 1) {
    Cluster lead;
    lead.kind = ClusterKind::kLeadingFactor;
    lead.holds = analyze(m.p).lc_plus;
    cert.clusters.push_back(std::move(lead));
  }
  for (const auto& [s1, s2] : pairing_scheme(n)) {
    Cluster c;
    c.members.push_back(s1);
    c.enclosures.push_back(cos_squared_enclosure(s1, n));
    if (s2 == 0) {
      c.kind = ClusterKind::kSingleton;
      c.single = fq_lc_plus_on_interval(f, c.enclosures[0]);
      c.holds = c.single->holds;
    } else {
      c.kind = ClusterKind::kPair;
      c.members.push_back(s2);
      c.enclosures.push_back(cos_squared_enclosure(s2, n));
      c.box = pair_product_lc_box(f, c.enclosures[0], c.enclosures[1]);
      c.holds = c.box->holds;
    }
    cert.clusters.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < cert.clusters.size(); ++i) {
    if (!cert.clusters[i].holds) {
      cert.failing_cluster = static_cast<int>(i);
      break;
    }
  }
  cert.certified = !cert.failing_cluster;
  cert.direct = analyze(concat_recurrence(m.p, m.pv, m.pw, n));
  return cert;
}

ClusterCertificate cluster_certify_family(const MarkedGraph& g, int n, Engine engine) {
  return cluster_certify_family(marked_polys(g, engine), n);
}

}  // namespace indseq
