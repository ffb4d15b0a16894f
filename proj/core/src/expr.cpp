#include "curvlab/expr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace curvlab {

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Exp: return "exp";
    case Kernel::Sinh: return "sinh";
    case Kernel::Cosh: return "cosh";
    case Kernel::Sin: return "sin";
    case Kernel::Cos: return "cos";
    case Kernel::Sqrt: return "sqrt";
  }
  return "?";
}

namespace detail {

struct AtomNode {
  // symbol when argument is null, kernel otherwise
  std::string name;
  Kernel kind = Kernel::Exp;
  std::shared_ptr<const Expr> argument;

  static Atom wrap(std::shared_ptr<const AtomNode> n) { return Atom(std::move(n)); }
};

}  // namespace detail

using detail::AtomNode;
using detail::Monomial;
using detail::Poly;
using detail::Term;

Atom Atom::symbol(std::string name) {
  auto node = std::make_shared<AtomNode>();
  node->name = std::move(name);
  return AtomNode::wrap(std::move(node));
}

Atom Atom::kernel(Kernel k, Expr argument) {
  auto node = std::make_shared<AtomNode>();
  node->kind = k;
  node->argument = std::make_shared<const Expr>(std::move(argument));
  return AtomNode::wrap(std::move(node));
}

bool Atom::is_symbol() const { return node_->argument == nullptr; }
bool Atom::is_kernel() const { return node_->argument != nullptr; }
const std::string& Atom::symbol_name() const { return node_->name; }
Kernel Atom::kernel_kind() const { return node_->kind; }
const Expr& Atom::kernel_argument() const { return *node_->argument; }

int Atom::compare(const Atom& a, const Atom& b) {
  if (a.node_ == b.node_) return 0;
  const bool asym = a.is_symbol(), bsym = b.is_symbol();
  if (asym != bsym) return asym ? -1 : 1;
  if (asym) {
    const int c = a.symbol_name().compare(b.symbol_name());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.kernel_kind() != b.kernel_kind())
    return static_cast<int>(a.kernel_kind()) < static_cast<int>(b.kernel_kind()) ? -1 : 1;
  return Expr::compare(a.kernel_argument(), b.kernel_argument());
}

std::string Atom::str() const {
  if (is_symbol()) return symbol_name();
  return std::string(kernel_name(kernel_kind())) + "(" + kernel_argument().str() + ")";
}

namespace detail {

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [a, e] : factors) d += e;
  return d;
}

int Monomial::degree_in(const Atom& a) const {
  for (const auto& [b, e] : factors)
    if (b == a) return e;
  return 0;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // graded part equal: lexicographic scan in ascending atom order,
  // treating a missing atom as exponent 0
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    const int c = Atom::compare(a.factors[i].first, b.factors[j].first);
    if (c < 0) return 1;   // a has a positive exponent on an earlier atom
    if (c > 0) return -1;
    if (a.factors[i].second != b.factors[j].second)
      return a.factors[i].second < b.factors[j].second ? -1 : 1;
    ++i, ++j;
  }
  if (i < a.factors.size()) return 1;
  if (j < b.factors.size()) return -1;
  return 0;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size()) { out.factors.push_back(a.factors[i++]); continue; }
    if (i == a.factors.size()) { out.factors.push_back(b.factors[j++]); continue; }
    const int c = Atom::compare(a.factors[i].first, b.factors[j].first);
    if (c < 0) out.factors.push_back(a.factors[i++]);
    else if (c > 0) out.factors.push_back(b.factors[j++]);
    else {
      out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i, ++j;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::div(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [atom, e] : b.factors) {
    while (i < a.factors.size() && Atom::compare(a.factors[i].first, atom) < 0)
      out.factors.push_back(a.factors[i++]);
    if (i == a.factors.size() || a.factors[i].first != atom || a.factors[i].second < e)
      return std::nullopt;
    if (a.factors[i].second > e)
      out.factors.emplace_back(atom, a.factors[i].second - e);
    ++i;
  }
  while (i < a.factors.size()) out.factors.push_back(a.factors[i++]);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    const int c = Atom::compare(a.factors[i].first, b.factors[j].first);
    if (c < 0) ++i;
    else if (c > 0) ++j;
    else {
      out.factors.emplace_back(a.factors[i].first, std::min(a.factors[i].second, b.factors[j].second));
      ++i, ++j;
    }
  }
  return out;
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{Monomial{}, std::move(c)});
  return p;
}

Poly Poly::atom(const Atom& a) {
  Poly p;
  Monomial m;
  m.factors.emplace_back(a, 1);
  p.terms_.push_back(Term{std::move(m), Rational(1)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_unit());
}

const Rational& Poly::constant_value() const {
  static const Rational kZero(0);
  return terms_.empty() ? kZero : terms_.front().coeff;
}

int Poly::compare(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = Monomial::compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    const int cc = a.terms_[i].coeff.compare(b.terms_[i].coeff);
    if (cc != 0) return cc < 0 ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return Monomial::compare(x.mono, y.mono) > 0;
  });
  Poly out;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!out.terms_.empty() && Monomial::compare(out.terms_.back().mono, t.mono) == 0) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) c = -1;
    else if (j == b.terms_.size()) c = 1;
    else c = Monomial::compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) out.terms_.push_back(a.terms_[i++]);
    else if (c < 0) out.terms_.push_back(b.terms_[j++]);
    else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (s != 0) out.terms_.push_back(Term{a.terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      terms.push_back(Term{Monomial::mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
  return Poly::from_terms(std::move(terms));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::pow(int e) const {
  assert(e >= 0);
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int Poly::max_degree_in(const Atom& a) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(a));
  return d;
}

void Poly::collect_atoms(std::set<Atom>& out) const {
  for (const auto& t : terms_)
    for (const auto& [a, e] : t.mono.factors) out.insert(a);
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly rem = a;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    auto m = Monomial::div(rem.leading().mono, b.leading().mono);
    if (!m) return std::nullopt;
    Term t{std::move(*m), rem.leading().coeff / b.leading().coeff};
    rem = rem - b * Poly::from_terms({t});
    quot.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(quot));
}

namespace {

// Univariate view of a Poly in a chosen main atom: coefficients by degree.
std::vector<Poly> coefficients_in(const Poly& p, const Atom& v) {
  std::vector<Poly> coeffs(static_cast<std::size_t>(p.max_degree_in(v)) + 1);
  std::vector<std::vector<Term>> buckets(coeffs.size());
  for (const auto& t : p.terms()) {
    Monomial rest;
    int deg = 0;
    for (const auto& [a, e] : t.mono.factors) {
      if (a == v) deg = e;
      else rest.factors.emplace_back(a, e);
    }
    buckets[static_cast<std::size_t>(deg)].push_back(Term{std::move(rest), t.coeff});
  }
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    coeffs[d] = Poly::from_terms(std::move(buckets[d]));
  return coeffs;
}

Poly recompose(const std::vector<Poly>& coeffs, const Atom& v) {
  Poly vat = Poly::atom(v);
  Poly out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    out = out + coeffs[d] * vat.pow(static_cast<int>(d));
  }
  return out;
}

int degree_in(const std::vector<Poly>& coeffs) {
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
    if (!coeffs[static_cast<std::size_t>(d)].is_zero()) return d;
  return -1;
}

// Pseudo-remainder of a by b in the main variable (coefficients are Polys).
std::vector<Poly> pseudo_rem(std::vector<Poly> a, const std::vector<Poly>& b) {
  const int db = degree_in(b);
  const Poly& lb = b[static_cast<std::size_t>(db)];
  int da = degree_in(a);
  while (da >= db) {
    const Poly la = a[static_cast<std::size_t>(da)];
    // a := lb*a - la * x^(da-db) * b
    for (auto& c : a) c = lb * c;
    for (int i = 0; i <= db; ++i) {
      const std::size_t k = static_cast<std::size_t>(da - db + i);
      a[k] = a[k] - la * b[static_cast<std::size_t>(i)];
    }
    int nd = da - 1;
    while (nd >= 0 && a[static_cast<std::size_t>(nd)].is_zero()) --nd;
    a.resize(static_cast<std::size_t>(std::max(nd, -1) + 1));
    da = nd;
    if (da < 0) break;
  }
  return a;
}

Poly content_of(const std::vector<Poly>& coeffs) {
  Poly c;
  for (const auto& p : coeffs) {
    if (p.is_zero()) continue;
    c = c.is_zero() ? p : Poly::gcd(c, p);
    if (c.is_constant()) break;
  }
  if (c.is_zero()) return Poly::constant(1);
  return c;
}

std::vector<Poly> divide_coeffs(const std::vector<Poly>& coeffs, const Poly& d) {
  std::vector<Poly> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    auto q = Poly::divide_exact(coeffs[i], d);
    assert(q.has_value());
    out[i] = std::move(*q);
  }
  return out;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading().coeff);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);

  // Split off monomial content so the recursion sees smaller supports.
  Monomial ma = a.terms_.front().mono, mb = b.terms_.front().mono;
  for (const auto& t : a.terms_) ma = Monomial::gcd(ma, t.mono);
  for (const auto& t : b.terms_) mb = Monomial::gcd(mb, t.mono);
  const Monomial mg = Monomial::gcd(ma, mb);
  Poly pa = a, pb = b;
  if (!ma.factors.empty()) {
    Poly dm = Poly::from_terms({Term{ma, Rational(1)}});
    pa = *divide_exact(pa, dm);
  }
  if (!mb.factors.empty()) {
    Poly dm = Poly::from_terms({Term{mb, Rational(1)}});
    pb = *divide_exact(pb, dm);
  }
  Poly mono_gcd = Poly::from_terms({Term{mg, Rational(1)}});

  if (pa.is_constant() || pb.is_constant()) return make_monic(mono_gcd);

  // Main variable: the largest atom present in either part.
  std::set<Atom> atoms;
  pa.collect_atoms(atoms);
  pb.collect_atoms(atoms);
  const Atom v = *atoms.rbegin();

  auto ca = coefficients_in(pa, v);
  auto cb = coefficients_in(pb, v);
  if (degree_in(ca) == 0 || degree_in(cb) == 0) {
    // v-free factor on one side: gcd divides the contents
    Poly g = Poly::gcd(content_of(ca), content_of(cb));
    return make_monic(mono_gcd * g);
  }

  const Poly conta = content_of(ca);
  const Poly contb = content_of(cb);
  auto ppa = divide_coeffs(ca, conta);
  auto ppb = divide_coeffs(cb, contb);
  const Poly cont_gcd = Poly::gcd(conta, contb);

  // Primitive polynomial remainder sequence.
  if (degree_in(ppa) < degree_in(ppb)) std::swap(ppa, ppb);
  while (true) {
    auto rem = pseudo_rem(ppa, ppb);
    const int dr = degree_in(rem);
    if (dr < 0) {
      // ppb divides: gcd is primitive part of ppb
      Poly g = recompose(ppb, v);
      return make_monic(mono_gcd * cont_gcd * g);
    }
    if (dr == 0) return make_monic(mono_gcd * cont_gcd);
    rem = divide_coeffs(rem, content_of(rem));
    ppa = std::move(ppb);
    ppb = std::move(rem);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Expr

Expr::Expr(Rational v) : num_(Poly::constant(std::move(v))), den_(Poly::constant(1)) {}

Expr Expr::from_atom(const Atom& a) {
  Expr e(Rational(0));
  e.num_ = Poly::atom(a);
  return e;
}

Expr Expr::from_fraction(Poly num, Poly den) {
  if (den.is_zero()) throw ExprError("division by zero expression");
  Expr e(Rational(0));
  if (num.is_zero()) return e;
  Poly g = Poly::gcd(num, den);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num = *Poly::divide_exact(num, g);
    den = *Poly::divide_exact(den, g);
  }
  const Rational lc = den.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  return e;
}

bool Expr::is_rational() const { return num_.is_constant() && den_.is_constant(); }

Rational Expr::rational_value() const {
  return num_.constant_value() / den_.constant_value();
}

Expr Expr::kernel(Kernel k, const Expr& argument) {
  if (argument.is_rational()) {
    const Rational v = argument.rational_value();
    if (v == 0) {
      switch (k) {
        case Kernel::Exp:
        case Kernel::Cosh:
        case Kernel::Cos: return Expr(Rational(1));
        case Kernel::Sinh:
        case Kernel::Sin:
        case Kernel::Sqrt: return Expr(Rational(0));
      }
    }
    if (k == Kernel::Sqrt) {
      if (v < 0) throw ExprError("sqrt of negative constant");
      const Integer n = numerator(v), d = denominator(v);
      const Integer sn = sqrt(n), sd = sqrt(d);
      if (sn * sn == n && sd * sd == d) return Expr(Rational(sn, sd));
    }
    if (k == Kernel::Exp && v == 0) return Expr(Rational(1));
  }
  return from_atom(Atom::kernel(k, argument));
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)) with g = gcd(b, d)
  const Poly g = Poly::gcd(a.den_, b.den_);
  const Poly bd = *Poly::divide_exact(a.den_, g);
  const Poly dd = *Poly::divide_exact(b.den_, g);
  return Expr::from_fraction(a.num_ * dd + b.num_ * bd, a.den_ * dd);
}

Expr Expr::operator-() const {
  Expr e = *this;
  e.num_ = -e.num_;
  return e;
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  // cross-reduce before multiplying
  const Poly g1 = Poly::gcd(a.num_, b.den_);
  const Poly g2 = Poly::gcd(b.num_, a.den_);
  const Poly n1 = *Poly::divide_exact(a.num_, g1);
  const Poly d2 = *Poly::divide_exact(b.den_, g1);
  const Poly n2 = *Poly::divide_exact(b.num_, g2);
  const Poly d1 = *Poly::divide_exact(a.den_, g2);
  return Expr::from_fraction(n1 * n2, d1 * d2);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw ExprError("division by zero expression");
  Expr binv;
  binv.num_ = b.den_;
  binv.den_ = b.num_;
  // normalize the flipped fraction's leading coefficient
  const Rational lc = binv.den_.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    binv.num_ = binv.num_.scaled(inv);
    binv.den_ = binv.den_.scaled(inv);
  }
  return a * binv;
}

Expr Expr::pow(int e) const {
  if (e == 0) return Expr(Rational(1));
  if (is_zero()) {
    if (e < 0) throw ExprError("zero raised to a negative power");
    return Expr();
  }
  Expr base = *this;
  if (e < 0) {
    base = Expr(Rational(1)) / base;
    e = -e;
  }
  // numerator and denominator are coprime: power them directly
  Expr out;
  out.num_ = base.num_.pow(e);
  out.den_ = base.den_.pow(e);
  const Rational lc = out.den_.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    out.num_ = out.num_.scaled(inv);
    out.den_ = out.den_.scaled(inv);
  }
  return out;
}

namespace {

Expr atom_derivative(const Atom& a, const std::string& symbol) {
  if (a.is_symbol()) return Expr(Rational(a.symbol_name() == symbol ? 1 : 0));
  const Expr du = a.kernel_argument().derivative(symbol);
  if (du.is_zero()) return Expr();
  Expr outer;
  switch (a.kernel_kind()) {
    case Kernel::Exp: outer = Expr::from_atom(a); break;
    case Kernel::Sinh: outer = Expr::kernel(Kernel::Cosh, a.kernel_argument()); break;
    case Kernel::Cosh: outer = Expr::kernel(Kernel::Sinh, a.kernel_argument()); break;
    case Kernel::Sin: outer = Expr::kernel(Kernel::Cos, a.kernel_argument()); break;
    case Kernel::Cos: outer = -Expr::kernel(Kernel::Sin, a.kernel_argument()); break;
    case Kernel::Sqrt:
      outer = Expr(Rational(1)) / (Expr(2) * Expr::from_atom(a));
      break;
  }
  return outer * du;
}

Expr poly_derivative(const Poly& p, const std::string& symbol) {
  Expr acc;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.factors.size(); ++i) {
      const auto& [a, e] = t.mono.factors[i];
      const Expr da = atom_derivative(a, symbol);
      if (da.is_zero()) continue;
      // coeff * e * a^(e-1) * (other factors) * da
      detail::Monomial rest;
      for (std::size_t j = 0; j < t.mono.factors.size(); ++j) {
        if (j == i) {
          if (e > 1) rest.factors.emplace_back(a, e - 1);
        } else {
          rest.factors.push_back(t.mono.factors[j]);
        }
      }
      Expr part;
      Poly rp = Poly::from_terms({Term{std::move(rest), t.coeff * e}});
      part = Expr::from_fraction(std::move(rp), Poly::constant(1));
      acc += part * da;
    }
  }
  return acc;
}

}  // namespace

Expr Expr::derivative(const std::string& symbol) const {
  const Expr dn = poly_derivative(num_, symbol);
  if (den_.is_constant()) {
    return dn / Expr(den_.constant_value());
  }
  const Expr dd = poly_derivative(den_, symbol);
  Expr n = from_fraction(num_, Poly::constant(1));
  Expr d = from_fraction(den_, Poly::constant(1));
  return (dn * d - n * dd) / (d * d);
}

bool Expr::has_kernels() const {
  std::set<Atom> as = atoms();
  for (const auto& a : as)
    if (a.is_kernel()) return true;
  return false;
}

void Expr::collect_atoms(std::set<Atom>& out) const {
  num_.collect_atoms(out);
  den_.collect_atoms(out);
}

std::set<Atom> Expr::atoms() const {
  std::set<Atom> out;
  collect_atoms(out);
  return out;
}

namespace {

Rational eval_poly(const Poly& p, const std::map<Atom, Rational>& point) {
  Rational acc(0);
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (const auto& [a, e] : t.mono.factors) {
      auto it = point.find(a);
      if (it == point.end()) throw ExprError("unassigned atom in evaluation: " + a.str());
      Rational base = it->second;
      for (int k = 0; k < e; ++k) v *= base;
    }
    acc += v;
  }
  return acc;
}

}  // namespace

Rational Expr::eval_rational(const std::map<Atom, Rational>& point) const {
  const Rational d = eval_poly(den_, point);
  if (d == 0) throw ExprError("division by zero at evaluation point");
  return eval_poly(num_, point) / d;
}

int Expr::compare(const Expr& a, const Expr& b) {
  const int c = Poly::compare(a.num_, b.num_);
  if (c != 0) return c;
  return Poly::compare(a.den_, b.den_);
}

namespace {

void print_monomial(std::ostringstream& os, const Monomial& m, bool leading_coeff_one) {
  bool first = leading_coeff_one;
  for (const auto& [a, e] : m.factors) {
    if (!first) os << "*";
    first = false;
    os << a.str();
    if (e != 1) os << "^" << e;
  }
}

void print_poly(std::ostringstream& os, const Poly& p) {
  if (p.is_zero()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.is_unit()) {
      os << c;
    } else {
      const bool unit_coeff = (c == 1);
      if (!unit_coeff) os << c;
      print_monomial(os, t.mono, unit_coeff);
    }
  }
}

bool needs_parens(const Poly& p) {
  return p.terms().size() > 1 ||
         (p.terms().size() == 1 &&
          !(p.terms().front().coeff == 1 || p.terms().front().mono.is_unit()));
}

}  // namespace

std::string Expr::str() const {
  std::ostringstream os;
  if (den_.is_constant() && den_.constant_value() == 1) {
    print_poly(os, num_);
    return os.str();
  }
  if (needs_parens(num_)) {
    os << "(";
    print_poly(os, num_);
    os << ")";
  } else {
    print_poly(os, num_);
  }
  os << "/";
  if (needs_parens(den_)) {
    os << "(";
    print_poly(os, den_);
    os << ")";
  } else {
    print_poly(os, den_);
  }
  return os.str();
}

}  // namespace curvlab
