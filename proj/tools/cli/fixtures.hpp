#pragma once

#include "report.hpp"

namespace indseq::cli {

/// Reference polynomials checked by `selftest`; the same layout is accepted
/// from a file via --fixtures.
Json builtin_fixtures();

struct SelftestOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Runs every check and returns the report; "failed" counts failures.
Json run_selftest(const Json& fixtures, const SelftestOptions& opts);

}  // namespace indseq::cli
