#include "curvlab/zerotest.hpp"

#include "curvlab/numeric.hpp"

namespace curvlab {

const char* zero_verdict_name(ZeroVerdict v) {
  switch (v) {
    case ZeroVerdict::ProvedZero: return "proved-zero";
    case ZeroVerdict::ProvedNonzero: return "proved-nonzero";
    case ZeroVerdict::ProbablyZero: return "probably-zero";
  }
  return "?";
}

ZeroTester::ZeroTester(SymbolTablePtr symbols, ZeroTestConfig config)
    : symbols_(std::move(symbols)), config_(config), rng_(config.seed) {}

Rational ZeroTester::random_rational(Assumption a) {
  const int bound = config_.rational_bound;
  std::uniform_int_distribution<long> num_dist(-bound, bound);
  std::uniform_int_distribution<long> den_dist(1, bound);
  for (int tries = 0; tries < 1000; ++tries) {
    long n = num_dist(rng_);
    const long d = den_dist(rng_);
    if (a == Assumption::Positive && n <= 0) n = -n + 1;
    Rational q(n, d);
    if (a != Assumption::None) {
      // stay clear of the excluded locus by the sampling margin
      if (abs(q) < Rational(1, 100)) continue;
    }
    return q;
  }
  return Rational(1);
}

std::map<std::string, Rational> ZeroTester::sample_point() {
  std::map<std::string, Rational> point;
  for (const auto& c : symbols_->coordinates())
    point[c] = random_rational(Assumption::None);
  for (const auto& [p, a] : symbols_->parameters()) point[p] = random_rational(a);
  return point;
}

ZeroCertificate ZeroTester::test(const Expr& e) {
  ZeroCertificate cert;
  cert.digits = config_.digits;
  if (e.is_zero()) {
    cert.verdict = ZeroVerdict::ProvedZero;
    cert.by_canonical_form = true;
    return cert;
  }
  if (e.is_rational()) {
    cert.verdict = ZeroVerdict::ProvedNonzero;
    cert.by_canonical_form = true;
    return cert;
  }

  const BigFloat tol = pow(BigFloat(10), config_.tolerance_exp10);
  int taken = 0, retries = 0;
  while (taken < config_.samples && retries < config_.max_retries) {
    auto point = sample_point();
    try {
      const NumericValue v = eval_numeric(e, point, config_.digits);
      ++taken;
      if (abs(v.value) > tol * v.term_scale) {
        cert.verdict = ZeroVerdict::ProvedNonzero;
        cert.witness = std::move(point);
        cert.samples = taken;
        return cert;
      }
    } catch (const EvalSingularity&) {
      ++retries;
    }
  }
  cert.verdict = ZeroVerdict::ProbablyZero;
  cert.samples = taken;
  return cert;
}

}  // namespace curvlab
