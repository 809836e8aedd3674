#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "ptchain/errors.hpp"
#include "ptchain/rational.hpp"

namespace ptchain {

/// Dense univariate polynomial over an exact field, coefficients stored in
/// ascending order of degree. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
template <class Field>
class Polynomial {
 public:
  using coefficient_type = Field;

  Polynomial() = default;
  explicit Polynomial(std::vector<Field> ascending) : c_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<Field> ascending) : c_(ascending) { trim(); }

  static Polynomial constant(Field value) { return Polynomial(std::vector<Field>{std::move(value)}); }

  static Polynomial monomial(Field value, std::size_t degree) {
    std::vector<Field> c(degree + 1, Field(0));
    c[degree] = std::move(value);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^k; zero beyond the degree.
  Field operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Field(0); }
  const std::vector<Field>& coefficients() const { return c_; }
  const Field& leading() const { return c_.back(); }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Field operator()(const Field& x) const { return evaluate(x); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Field> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Field(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<Field> c(c_);
    Field lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial(std::move(c));
  }

  /// p(-x)
  Polynomial reflected() const {
    std::vector<Field> c(c_);
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Field> c(std::max(a.c_.size(), b.c_.size()), Field(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Field> c(a.c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> c(a.c_.size() + b.c_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Field& s, const Polynomial& p) {
    std::vector<Field> c(p.c_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const Field& x = p.c_[static_cast<std::size_t>(k)];
      if (x == Field(0)) continue;
      if (!first) os << " + ";
      os << "(" << x << ")";
      if (k > 0) os << "*x^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Field(0)) c_.pop_back();
  }

  std::vector<Field> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Quotient and remainder of a / b; b must be nonzero.
template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<Field>{}, a};
  std::vector<Field> rem(a.coefficients());
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Field> quot(rem.size() - db, Field(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    Field q = rem[k] / bc[db];
    quot[k - db] = q;
    if (q == Field(0)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Polynomial<Field>(std::move(quot)), Polynomial<Field>(std::move(rem))};
}

/// Monic greatest common divisor.
template <class Field>
Polynomial<Field> gcd(Polynomial<Field> a, Polynomial<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots, each simple.
template <class Field>
Polynomial<Field> squarefree_part(const Polynomial<Field>& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace detail {

inline int sign_of(const Rational& x) { return sgn(x) > 0 ? 1 : (sgn(x) < 0 ? -1 : 0); }

inline int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& squarefree) {
    chain_.push_back(squarefree);
    if (squarefree.degree() <= 0) return;
    chain_.push_back(squarefree.derivative());
    while (chain_.back().degree() > 0) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(detail::sign_of(p(x)));
    return detail::count_sign_changes(signs);
  }

  int variations_at_plus_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : detail::sign_of(p.leading()));
    return detail::count_sign_changes(signs);
  }

  /// Number of distinct roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

  /// Number of distinct roots in (a, +inf).
  int count_roots_above(const Rational& a) const { return variations_at(a) - variations_at_plus_infinity(); }

 private:
  std::vector<RationalPolynomial> chain_;
};

/// Cauchy bound: every root satisfies |x| < bound.
inline Rational root_bound(const RationalPolynomial& p) {
  Rational bound(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational ratio = abs(p[static_cast<std::size_t>(k)] / p.leading());
    if (ratio > bound) bound = ratio;
  }
  return bound + 1;
}

/// True when every root of p is real and nonnegative (p nonconstant).
/// Decided exactly with a Sturm count on the squarefree part.
inline bool all_roots_real_nonnegative(const RationalPolynomial& p) {
  if (p.degree() <= 0) return true;
  RationalPolynomial q = squarefree_part(p);
  int distinct = q.degree();
  int found = 0;
  if (is_zero(q[0])) {
    q = divmod(q, RationalPolynomial{Rational(0), Rational(1)}).first;
    ++found;
  }
  if (q.degree() > 0) found += SturmSequence(q).count_roots_above(Rational(0));
  return found == distinct;
}

/// Distinct real roots of p inside (lo, hi], each refined by exact bisection
/// until its bracket is narrower than `width`. Returned in increasing order.
inline std::vector<double> real_roots_in(const RationalPolynomial& p, const Rational& lo, const Rational& hi,
                                         double width = 1e-15) {
  std::vector<double> roots;
  if (p.degree() <= 0 || !(lo < hi)) return roots;
  const RationalPolynomial q = squarefree_part(p);
  const SturmSequence sturm(q);
  const Rational w = from_double(width);

  struct Interval {
    Rational a, b;
  };
  std::vector<Interval> stack{{lo, hi}};
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int n = sturm.count_roots(iv.a, iv.b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rational mid = (iv.a + iv.b) / 2;
    stack.push_back({mid, iv.b});
    stack.push_back({iv.a, mid});
  }

  for (auto& iv : isolated) {
    // q changes sign across a simple root; a root exactly at b is possible.
    if (is_zero(q(iv.b))) {
      roots.push_back(to_double(iv.b));
      continue;
    }
    // q(a) may vanish (a root owned by the neighbouring interval), q(b) not.
    const int sb = detail::sign_of(q(iv.b));
    while (iv.b - iv.a > w * (abs(iv.a) + abs(iv.b) + 1) / 2) {
      Rational mid = (iv.a + iv.b) / 2;
      int sm = detail::sign_of(q(mid));
      if (sm == 0) {
        iv.a = iv.b = mid;
        break;
      }
      if (sm == sb) {
        iv.b = mid;
      } else {
        iv.a = mid;
      }
    }
    roots.push_back(to_double((iv.a + iv.b) / 2));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// All distinct real roots of p.
inline std::vector<double> real_roots(const RationalPolynomial& p, double width = 1e-15) {
  if (p.degree() <= 0) return {};
  Rational b = root_bound(p);
  return real_roots_in(p, Rational(-b), b, width);
}

}  // namespace ptchain
