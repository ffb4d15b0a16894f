#include "curvlab/numeric.hpp"

#include <cmath>

namespace curvlab {

namespace {

struct Evaluator {
  const std::map<std::string, Rational>& point;
  std::map<Atom, BigFloat> cache;

  const BigFloat& atom_value(const Atom& a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    BigFloat v;
    if (a.is_symbol()) {
      auto p = point.find(a.symbol_name());
      if (p == point.end())
        throw ExprError("unassigned symbol in evaluation: " + a.symbol_name());
      v = BigFloat(p->second);
    } else {
      const BigFloat arg = expr_value(a.kernel_argument());
      switch (a.kernel_kind()) {
        case Kernel::Exp: v = exp(arg); break;
        case Kernel::Sinh: v = sinh(arg); break;
        case Kernel::Cosh: v = cosh(arg); break;
        case Kernel::Sin: v = sin(arg); break;
        case Kernel::Cos: v = cos(arg); break;
        case Kernel::Sqrt:
          if (arg < 0) throw EvalSingularity("sqrt of negative value");
          v = sqrt(arg);
          break;
      }
    }
    return cache.emplace(a, std::move(v)).first->second;
  }

  // value and sum of |term| for one polynomial
  std::pair<BigFloat, BigFloat> poly_value(const detail::Poly& p) {
    BigFloat acc(0), scale(0);
    for (const auto& t : p.terms()) {
      BigFloat v(t.coeff);
      for (const auto& [a, e] : t.mono.factors) {
        const BigFloat& base = atom_value(a);
        for (int k = 0; k < e; ++k) v *= base;
      }
      acc += v;
      scale += abs(v);
    }
    return {acc, scale};
  }

  BigFloat expr_value(const Expr& e) {
    auto [nv, ns] = poly_value(e.num());
    auto [dv, ds] = poly_value(e.den());
    if (dv == 0) throw EvalSingularity("division by zero");
    return nv / dv;
  }
};

}  // namespace

NumericValue eval_numeric(const Expr& e, const std::map<std::string, Rational>& point,
                          unsigned digits) {
  BigFloat::default_precision(digits);
  Evaluator ev{point, {}};
  auto [nv, ns] = ev.poly_value(e.num());
  auto [dv, ds] = ev.poly_value(e.den());
  BigFloat scale = ns > ds ? ns : ds;
  if (scale < 1) scale = 1;
  // treat a denominator drowned in cancellation noise as singular
  BigFloat dscale = ds < 1 ? BigFloat(1) : ds;
  if (abs(dv) <= dscale * pow(BigFloat(10), -static_cast<int>(digits) + 10))
    throw EvalSingularity("denominator vanishes at sample point");
  return NumericValue{nv / dv, std::move(scale)};
}

BigFloat eval_scalar(const Expr& e, const std::map<std::string, Rational>& point,
                     unsigned digits) {
  BigFloat::default_precision(digits);
  if (!e.has_kernels()) {
    std::map<Atom, Rational> atom_point;
    for (const auto& [name, v] : point) atom_point.emplace(Atom::symbol(name), v);
    return BigFloat(e.eval_rational(atom_point));
  }
  return eval_numeric(e, point, digits).value;
}

}  // namespace curvlab
