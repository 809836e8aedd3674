#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptchain/errors.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/root_finder.hpp"
#include "ptchain/secular.hpp"

namespace ptchain {

/// Integer coefficients C^(J)_(n), n = 1 ... J, built from the row J = 1
/// (a single 1) by
///   C^(J)_(n) = C^(J-1)_(n-1) + 2 C^(J-1)_(n) + C^(J-1)_(n+1)
/// where the row is continued to n <= 0 by C_(1-n) = -C_(n).
class CoefficientTriangle {
 public:
  explicit CoefficientTriangle(int j_max) {
    if (j_max < 1) throw InvalidArgument("coefficient triangle needs J_max >= 1");
    if (j_max > 30) throw InvalidArgument("coefficient triangle rows beyond J=30 overflow 64-bit entries");
    rows_.push_back({1});
    for (int j = 2; j <= j_max; ++j) {
      std::vector<std::int64_t> row;
      for (int n = 1; n <= j; ++n) row.push_back(at(j - 1, n - 1) + 2 * at(j - 1, n) + at(j - 1, n + 1));
      rows_.push_back(std::move(row));
    }
  }

  int j_max() const { return static_cast<int>(rows_.size()); }

  /// Row J as C_(1) ... C_(J).
  const std::vector<std::int64_t>& row(int j) const {
    if (j < 1 || j > j_max()) throw InvalidArgument("triangle row out of range");
    return rows_[static_cast<std::size_t>(j - 1)];
  }

  /// C^(J)_(n) for any integer n, antisymmetric extension included.
  std::int64_t at(int j, int n) const {
    if (n <= 0) return -at(j, 1 - n);
    const auto& r = row(j);
    return n <= static_cast<int>(r.size()) ? r[static_cast<std::size_t>(n - 1)] : 0;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

inline CoefficientTriangle triangle_rows(int j_max) { return CoefficientTriangle(j_max); }

/// Ordinary Pascal rule started from the row (-1, 1). Row 2(J-1) has the
/// C^(J) coefficients as its right half.
inline std::vector<std::vector<std::int64_t>> pascal_like_triangle(int levels) {
  if (levels < 1) throw InvalidArgument("need at least one level");
  std::vector<std::vector<std::int64_t>> rows{{-1, 1}};
  while (static_cast<int>(rows.size()) < levels) {
    const auto& prev = rows.back();
    std::vector<std::int64_t> next(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] += prev[i];
      next[i + 1] += prev[i];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

namespace detail {

inline void check_g(int j, const std::vector<Rational>& g) {
  if (j < 2) throw InvalidArgument("shift functionals need J >= 2");
  if (static_cast<int>(g.size()) != j)
    throw InvalidArgument("expected " + std::to_string(j) + " rescaled couplings, got " + std::to_string(g.size()));
}

// Center-out view: k = 1 is the innermost coupling g_J.
inline const Rational& center_out(const std::vector<Rational>& g, int k) { return g[g.size() - static_cast<std::size_t>(k)]; }

}  // namespace detail

/// omega^(J) for even N = 2J, with G in coupling order g_1 ... g_J:
///   2 (2J-1) (2J-1)! sum_k (-1)^{J-k+1} C(2J-2, J-2+k) theta(k) Ghat_k,
/// Ghat_k = G_{J+1-k}, theta(1) = 1/2, theta(k > 1) = 1.
inline Rational omega_even(int j, const std::vector<Rational>& g) {
  detail::check_g(j, g);
  Rational sum(0);
  for (int k = 1; k <= j; ++k) {
    Rational term(binomial(static_cast<unsigned>(2 * j - 2), static_cast<unsigned>(j - 2 + k)));
    if (k == 1) term /= 2;
    term *= detail::center_out(g, k);
    if ((j - k + 1) % 2 == 0) sum += term; else sum -= term;
  }
  return Rational(2 * (2 * j - 1)) * Rational(factorial(static_cast<unsigned>(2 * j - 1))) * sum;
}

enum class EpsilonSign {
  corrected,   // (-1)^{J-k+1}, matches the tabulated values
  as_printed,  // (-1)^{J-k}; kept to demonstrate that it fails
};

/// epsilon^(J) for odd N = 2J + 1:
///   2 (2J-1) (2J)! sum_k (-1)^{J-k+1} C^(J)_(k) Ghat_k.
inline Rational epsilon_odd(int j, const std::vector<Rational>& g, EpsilonSign sign = EpsilonSign::corrected) {
  detail::check_g(j, g);
  const CoefficientTriangle tri(j);
  Rational sum(0);
  for (int k = 1; k <= j; ++k) {
    Rational term = Rational(tri.at(j, k)) * detail::center_out(g, k);
    const int exponent = sign == EpsilonSign::corrected ? j - k + 1 : j - k;
    if (exponent % 2 == 0) sum += term; else sum -= term;
  }
  return Rational(2 * (2 * j - 1)) * Rational(factorial(static_cast<unsigned>(2 * j))) * sum;
}

/// omega for even N, epsilon for odd N.
inline Rational shift_functional(int dimension, const std::vector<Rational>& g,
                                 EpsilonSign sign = EpsilonSign::corrected) {
  const int j = dimension / 2;
  return dimension % 2 == 0 ? omega_even(j, g) : epsilon_odd(j, g, sign);
}

/// Base roots of the leading-order polynomial: odd squares 1, 9, 25, ... for
/// even N and even squares 4, 16, 36, ... for odd N.
inline std::vector<std::int64_t> base_roots(int dimension) {
  if (dimension < 2) throw InvalidArgument("chain dimension must be at least 2, got " + std::to_string(dimension));
  std::vector<std::int64_t> r;
  const int j = dimension / 2;
  for (int k = 1; k <= j; ++k) {
    const std::int64_t v = dimension % 2 == 0 ? 2 * k - 1 : 2 * k;
    r.push_back(v * v);
  }
  return r;
}

/// prod_k (L - base_k) + shift, with L = s / t.
struct LeadingOrderPolynomial {
  std::vector<std::int64_t> base_roots;
  Rational shift;
  Parity parity = Parity::even;

  int half_size() const { return static_cast<int>(base_roots.size()); }

  RationalPolynomial product() const {
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (auto b : base_roots) p = p * RationalPolynomial{Rational(-b), Rational(1)};
    return p;
  }

  RationalPolynomial polynomial() const { return product() + RationalPolynomial::constant(shift); }

  Rational value(const Rational& l) const { return polynomial()(l); }
};

inline LeadingOrderPolynomial leading_order_polynomial(int dimension, Rational shift) {
  return {base_roots(dimension), std::move(shift), parity_of(dimension)};
}

inline LeadingOrderPolynomial leading_order_polynomial(int dimension, const std::vector<Rational>& g) {
  return leading_order_polynomial(dimension, shift_functional(dimension, g));
}

/// All J complex roots L, sorted by real then imaginary part.
inline std::vector<Complex> leading_roots(const LeadingOrderPolynomial& poly, double tol = 1e-12) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  auto roots = polynomial_roots(poly.polynomial());
  for (auto& r : roots)
    if (std::abs(r.imag()) <= tol * std::max(1.0, std::abs(r))) r = Complex(r.real(), 0.0);
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

/// L_k(shift) = base_k + slope_k * shift + O(shift^2).
struct LinearizedRoot {
  std::int64_t base;
  Rational slope;  // -1 / prod_{j != k} (base_k - base_j)

  Rational at(const Rational& shift) const { return Rational(base) + slope * shift; }
};

inline std::vector<LinearizedRoot> linearized_roots(const LeadingOrderPolynomial& poly) {
  std::vector<LinearizedRoot> out;
  for (std::size_t k = 0; k < poly.base_roots.size(); ++k) {
    Rational denom(1);
    for (std::size_t j = 0; j < poly.base_roots.size(); ++j)
      if (j != k) denom *= Rational(poly.base_roots[k] - poly.base_roots[j]);
    if (is_zero(denom)) throw InvalidArgument("linearization needs distinct base roots");
    out.push_back({poly.base_roots[k], Rational(-1) / denom});
  }
  return out;
}

enum class CriticalKind { double_root, zero_root };

inline std::string_view to_string(CriticalKind k) { return k == CriticalKind::double_root ? "double_root" : "zero_root"; }

/// A codimension-one event of the leading-order polynomial as the shift varies.
struct CriticalShift {
  double shift = 0;
  double root = 0;                    // L* (0 for a zero root)
  CriticalKind kind = CriticalKind::double_root;
  std::optional<Rational> exact_shift;  // set when the value is rational
  int lower_root = 0;                 // 0-based index of the colliding base root (the lower one for a pair)
};

/// Double roots come from the stationary points L* of prod (L - base):
/// shift* = -prod (L* - base_k). The zero-root event sits at
/// shift* = -prod (0 - base_k). Sorted by shift*.
inline std::vector<CriticalShift> critical_shifts(int dimension, double tol = 1e-15) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const LeadingOrderPolynomial poly = leading_order_polynomial(dimension, Rational(0));
  const RationalPolynomial product = poly.product();
  std::vector<CriticalShift> out;

  // Stationary points interlace the (distinct, real) base roots.
  const RationalPolynomial derivative = product.derivative();
  const auto& base = poly.base_roots;
  for (std::size_t k = 0; k + 1 < base.size(); ++k) {
    const auto roots = real_roots_in(derivative, Rational(base[k]), Rational(base[k + 1]), tol);
    if (roots.size() != 1) throw SolverNonconvergence("stationary point isolation failed");
    const double l_star = roots.front();
    double value = 1;
    for (auto b : base) value *= l_star - static_cast<double>(b);
    CriticalShift c;
    c.shift = -value;
    c.root = l_star;
    c.kind = CriticalKind::double_root;
    c.lower_root = static_cast<int>(k);
    const Rational l_exact = from_double(l_star);
    if (is_zero(derivative(l_exact))) {
      c.exact_shift = -product(l_exact);
      c.shift = to_double(*c.exact_shift);
    }
    out.push_back(c);
  }

  const Rational zero_shift = -product(Rational(0));
  CriticalShift z;
  z.shift = to_double(zero_shift);
  z.root = 0;
  z.kind = CriticalKind::zero_root;
  z.exact_shift = zero_shift;
  z.lower_root = 0;
  out.push_back(z);

  std::sort(out.begin(), out.end(), [](const CriticalShift& a, const CriticalShift& b) { return a.shift < b.shift; });
  return out;
}

/// First-order event estimates from the linearized roots: collisions of
/// neighbouring roots and each root's crossing through zero.
struct LinearizedEvent {
  Rational shift;
  CriticalKind kind = CriticalKind::double_root;
  int lower_root = 0;
};

inline std::vector<LinearizedEvent> linearized_critical_shifts(const LeadingOrderPolynomial& poly) {
  const auto lin = linearized_roots(poly);
  std::vector<LinearizedEvent> out;
  for (std::size_t k = 0; k + 1 < lin.size(); ++k) {
    const Rational dslope = lin[k].slope - lin[k + 1].slope;
    if (is_zero(dslope)) continue;
    out.push_back({Rational(Rational(lin[k + 1].base - lin[k].base) / dslope), CriticalKind::double_root,
                   static_cast<int>(k)});
  }
  for (std::size_t k = 0; k < lin.size(); ++k)
    out.push_back({Rational(Rational(-lin[k].base) / lin[k].slope), CriticalKind::zero_root, static_cast<int>(k)});
  std::sort(out.begin(), out.end(), [](const LinearizedEvent& a, const LinearizedEvent& b) { return a.shift < b.shift; });
  return out;
}

namespace detail {
inline int shift_sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int shift_sign(const Rational& x) { return sgn(x); }
}  // namespace detail

/// Nearest events on either side of shift = 0 in a list sorted by shift:
/// the smallest positive one (upper limit) and the largest negative one
/// (lower limit).
template <class Event>
std::pair<std::optional<Event>, std::optional<Event>> limits_around_zero(const std::vector<Event>& events) {
  std::optional<Event> upper, lower;
  for (const auto& e : events) {
    const int sign = detail::shift_sign(e.shift);
    if (sign > 0 && !upper) upper = e;
    if (sign < 0) lower = e;
  }
  return {upper, lower};
}

}  // namespace ptchain
