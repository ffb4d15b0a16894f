#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace curvlab {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

}  // namespace curvlab
