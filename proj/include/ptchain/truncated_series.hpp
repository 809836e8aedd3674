#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "ptchain/errors.hpp"
#include "ptchain/rational.hpp"

namespace ptchain {

/// Power series in t with exact rational coefficients, truncated after t^K.
/// Every operation keeps exactly the terms t^0 ... t^K.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(static_cast<std::size_t>(check(order)) + 1, Rational(0)) {}

  TruncatedSeries(int order, const Rational& constant) : TruncatedSeries(order) { c_[0] = constant; }

  /// Series of a polynomial in t given by ascending coefficients; terms past
  /// the order are dropped.
  static TruncatedSeries from_coefficients(int order, const std::vector<Rational>& ascending) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k < ascending.size() && k < s.c_.size(); ++k) s.c_[k] = ascending[k];
    return s;
  }

  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of t^k, zero for k beyond the order.
  const Rational& coefficient(int k) const {
    static const Rational zero(0);
    return k >= 0 && k <= order() ? c_[static_cast<std::size_t>(k)] : zero;
  }

  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!ptchain::is_zero(x)) return false;
    return true;
  }

  /// Lowest k with a nonzero coefficient, or -1 for the zero series.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!ptchain::is_zero(c_[k])) return static_cast<int>(k);
    return -1;
  }

  /// Value of the truncated sum at t.
  Rational evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }

  TruncatedSeries& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    const std::size_t n = a.c_.size();
    TruncatedSeries r(a.order());
    for (std::size_t i = 0; i < n; ++i) {
      if (ptchain::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    bool first = true;
    for (std::size_t k = 0; k < s.c_.size(); ++k) {
      if (ptchain::is_zero(s.c_[k])) continue;
      if (!first) os << " + ";
      os << "(" << s.c_[k] << ")";
      if (k > 0) os << "*t^" << k;
      first = false;
    }
    if (first) os << "0";
    return os << " + O(t^" << s.order() + 1 << ")";
  }

 private:
  static int check(int order) {
    if (order < 0) throw InvalidArgument("truncation order must be nonnegative");
    return order;
  }

  void same_order(const TruncatedSeries& o) const {
    if (o.c_.size() != c_.size()) throw InvalidArgument("truncated series of different orders");
  }

  std::vector<Rational> c_;
};

inline bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }

}  // namespace ptchain
