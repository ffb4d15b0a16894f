#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/rational.hpp"

namespace curvlab {

class Expr;

/// Unary function kernels admitted in expressions. Kernel applications are
/// opaque for canonicalization: two kernel nodes are equal exactly when the
/// kind and the canonical argument agree, and no identities between distinct
/// kernels (cosh^2 - sinh^2 = 1 and the like) are ever rewritten.
enum class Kernel : std::uint8_t { Exp, Sinh, Cosh, Sin, Cos, Sqrt };

const char* kernel_name(Kernel k);

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
struct AtomNode;
}

/// An indeterminate of the rational-function engine: either a named symbol
/// (coordinate or parameter) or a kernel applied to an expression.
class Atom {
 public:
  static Atom symbol(std::string name);
  static Atom kernel(Kernel k, Expr argument);

  bool is_symbol() const;
  bool is_kernel() const;
  const std::string& symbol_name() const;
  Kernel kernel_kind() const;
  const Expr& kernel_argument() const;

  std::string str() const;

  // Structural total order: symbols (by name) before kernels (by kind, then
  // canonical argument). Deterministic across processes.
  static int compare(const Atom& a, const Atom& b);
  friend bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Atom& a, const Atom& b) { return compare(a, b) != 0; }
  friend bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

 private:
  explicit Atom(std::shared_ptr<const detail::AtomNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::AtomNode> node_;
  friend struct detail::AtomNode;
};

namespace detail {

/// Product of atom powers, factors sorted ascending by atom order, all
/// exponents >= 1. The empty monomial is 1.
struct Monomial {
  std::vector<std::pair<Atom, int>> factors;

  int total_degree() const;
  int degree_in(const Atom& a) const;
  bool is_unit() const { return factors.empty(); }

  // Graded lexicographic order (admissible monomial order).
  static int compare(const Monomial& a, const Monomial& b);
  static Monomial mul(const Monomial& a, const Monomial& b);
  // Componentwise division; nullopt when b does not divide a.
  static std::optional<Monomial> div(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q; terms sorted descending by
/// monomial order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly constant(Rational c);
  static Poly atom(const Atom& a);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Rational& constant_value() const;  // requires is_constant, nonzero handled by caller
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const { return terms_.front(); }

  static int compare(const Poly& a, const Poly& b);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(int e) const;  // e >= 0
  Poly scaled(const Rational& c) const;

  int max_degree_in(const Atom& a) const;
  void collect_atoms(std::set<Atom>& out) const;

  // Exact division: quotient when b divides a, nullopt otherwise.
  static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
  // Monic gcd in Q[atoms]; gcd with any nonzero constant is 1.
  static Poly gcd(const Poly& a, const Poly& b);

  static Poly from_terms(std::vector<Term> terms);  // normalizes (sorts, merges)

 private:
  std::vector<Term> terms_;
};

}  // namespace detail

/// Canonical symbolic scalar: a reduced rational function num/den over Q in
/// symbol and kernel atoms. Canonical form: gcd(num, den) = 1, den monic
/// under the fixed monomial order, zero represented as 0/1. Two expressions
/// equal as rational functions of their atoms compare equal.
class Expr {
 public:
  Expr() : Expr(Rational(0)) {}
  Expr(int v) : Expr(Rational(v)) {}
  Expr(long v) : Expr(Rational(v)) {}
  explicit Expr(Rational v);

  static Expr symbol(const std::string& name) { return from_atom(Atom::symbol(name)); }
  static Expr from_atom(const Atom& a);
  /// Kernel application with rational-constant folding for the handful of
  /// exact cases (exp(0), sinh(0), cos(0), sqrt of a perfect square, ...).
  static Expr kernel(Kernel k, const Expr& argument);

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);  // throws ExprError on zero divisor
  Expr operator-() const;
  Expr& operator+=(const Expr& b) { return *this = *this + b; }
  Expr& operator-=(const Expr& b) { return *this = *this - b; }
  Expr& operator*=(const Expr& b) { return *this = *this * b; }
  Expr& operator/=(const Expr& b) { return *this = *this / b; }
  Expr pow(int e) const;  // any integer exponent

  /// Partial derivative with respect to a symbol atom; kernels follow the
  /// chain rule (sqrt introduces the sqrt atom in the denominator).
  Expr derivative(const std::string& symbol) const;

  bool has_kernels() const;
  void collect_atoms(std::set<Atom>& out) const;
  std::set<Atom> atoms() const;

  /// Exact evaluation: every atom of the expression must be assigned.
  /// Throws ExprError on division by zero.
  Rational eval_rational(const std::map<Atom, Rational>& point) const;

  static int compare(const Expr& a, const Expr& b);
  friend bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Expr& a, const Expr& b) { return compare(a, b) != 0; }
  friend bool operator<(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

  std::string str() const;

  const detail::Poly& num() const { return num_; }
  const detail::Poly& den() const { return den_; }
  static Expr from_fraction(detail::Poly num, detail::Poly den);  // reduces

 private:
  detail::Poly num_;
  detail::Poly den_;
};

inline Expr operator+(const Expr& a, long b) { return a + Expr(b); }
inline Expr operator*(long a, const Expr& b) { return Expr(a) * b; }

}  // namespace curvlab
