#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "curvlab/expr.hpp"
#include "curvlab/symbols.hpp"

namespace curvlab {

enum class ZeroVerdict : std::uint8_t { ProvedZero, ProvedNonzero, ProbablyZero };

const char* zero_verdict_name(ZeroVerdict v);

/// Outcome of zero-testing an expression. ProvedZero is issued only for the
/// canonical zero (complete for rational functions of symbols and distinct
/// kernel instances). ProvedNonzero carries an assignment at which the
/// evaluation exceeds tolerance; ProbablyZero carries the sampling effort.
struct ZeroCertificate {
  ZeroVerdict verdict = ZeroVerdict::ProvedZero;
  std::map<std::string, Rational> witness;  // for ProvedNonzero
  int samples = 0;
  unsigned digits = 0;
  bool by_canonical_form = false;

  bool is_zero_like() const { return verdict != ZeroVerdict::ProvedNonzero; }
};

struct ZeroTestConfig {
  int samples = 8;
  unsigned digits = 50;
  int tolerance_exp10 = -30;  // tolerance = 10^exp, relative to term scale
  std::uint64_t seed = 0x5eed5eed1234ULL;
  int max_retries = 40;       // resampling budget on singular points
  int rational_bound = 999;   // |numerator|, denominator <= bound (spec cap 10^4)
};

/// Randomized polynomial-identity tester over a fixed symbol table. Sampling
/// respects assumptions: positive symbols are drawn > 0, nonzero symbols are
/// drawn away from 0 by the 10^-2 margin. Deterministic for a fixed seed and
/// call sequence.
class ZeroTester {
 public:
  ZeroTester(SymbolTablePtr symbols, ZeroTestConfig config);

  ZeroCertificate test(const Expr& e);

  /// One random rational respecting an assumption.
  Rational random_rational(Assumption a);
  /// Assignment for every registered symbol.
  std::map<std::string, Rational> sample_point();

  const ZeroTestConfig& config() const { return config_; }
  const SymbolTablePtr& symbols() const { return symbols_; }

 private:
  SymbolTablePtr symbols_;
  ZeroTestConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace curvlab
