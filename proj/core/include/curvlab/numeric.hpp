#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "curvlab/expr.hpp"

namespace curvlab {

using BigFloat = boost::multiprecision::mpfr_float;

struct EvalSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of a high-precision evaluation, gathering the magnitude of the
/// terms that were summed so callers can judge cancellation.
struct NumericValue {
  BigFloat value;
  BigFloat term_scale;  // max(1, sum of |monomial values|) across num and den
};

/// Evaluates the expression at a rational assignment of its *symbols*,
/// computing kernels as real functions, with `digits` decimal digits of
/// working precision. Throws EvalSingularity on division by (numerically)
/// zero and on sqrt of a negative value.
NumericValue eval_numeric(const Expr& e, const std::map<std::string, Rational>& point,
                          unsigned digits);

/// Correctly-rounded convenience wrapper: exact rational arithmetic when the
/// expression is kernel-free, otherwise the mpfr path.
BigFloat eval_scalar(const Expr& e, const std::map<std::string, Rational>& point,
                     unsigned digits);

}  // namespace curvlab
