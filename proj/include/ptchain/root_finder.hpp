#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "ptchain/errors.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"

namespace ptchain {

using Complex = std::complex<double>;

struct AberthOptions {
  int max_iterations = 2000;
};

namespace detail {

using ComplexLd = std::complex<long double>;

// Horner for p and p' together.
inline void horner2(std::span<const long double> a, ComplexLd z, ComplexLd& p, ComplexLd& dp) {
  p = 0;
  dp = 0;
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
}

// Rounding-error bound on the computed p(z).
inline long double horner_error_bound(std::span<const long double> a, long double r) {
  long double acc = 0;
  for (std::size_t k = a.size(); k-- > 0;) acc = acc * r + std::fabs(a[k]);
  return acc;
}

}  // namespace detail

/// All complex roots of a real polynomial (ascending coefficients, nonzero
/// leading term) by Aberth-Ehrlich simultaneous iteration in long double.
/// Exact zero roots are deflated before iterating.
inline std::vector<Complex> aberth_roots(std::span<const long double> ascending, AberthOptions options = {}) {
  using detail::ComplexLd;
  std::size_t lo = 0;
  while (lo < ascending.size() && ascending[lo] == 0.0L) ++lo;
  std::size_t hi = ascending.size();
  while (hi > lo && ascending[hi - 1] == 0.0L) --hi;
  if (hi == lo) throw InvalidArgument("root finding on the zero polynomial");

  std::vector<Complex> roots(lo, Complex(0.0, 0.0));
  std::vector<long double> a(ascending.begin() + static_cast<std::ptrdiff_t>(lo),
                             ascending.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;
  const long double lead = a.back();
  for (auto& x : a) x /= lead;
  if (n == 1) {
    roots.emplace_back(static_cast<double>(-a[0]), 0.0);
    return roots;
  }

  // Fujiwara bound for the starting circle.
  long double radius = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    long double term = std::pow(std::fabs(a[n - k]), 1.0L / static_cast<long double>(k));
    if (k == n) term = std::pow(std::fabs(a[0]) / 2, 1.0L / static_cast<long double>(n));
    radius = std::max(radius, term);
  }
  radius = radius > 0 ? radius : 1;

  std::vector<ComplexLd> z(n);
  const long double pi = std::numbers::pi_v<long double>;
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * pi * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<bool> done(n, false);
  int iteration = 0;
  for (;; ++iteration) {
    if (iteration >= options.max_iterations)
      throw SolverNonconvergence("Aberth iteration did not converge for a degree-" + std::to_string(n) +
                                 " polynomial");
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      ComplexLd p, dp;
      detail::horner2(a, z[k], p, dp);
      const long double noise = 8 * eps * detail::horner_error_bound(a, std::abs(z[k]));
      if (std::abs(p) <= noise) {
        done[k] = true;
        continue;
      }
      all_done = false;
      ComplexLd sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      const ComplexLd ratio = p / dp;
      const ComplexLd step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      if (std::abs(step) <= eps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) break;
  }

  for (const auto& r : z) roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return roots;
}

/// Rational to long double via a double-double split, so the full long
/// double mantissa is populated.
inline long double to_long_double(const Rational& x) {
  mpf_class f(x, 192);
  const double hi = f.get_d();
  f -= hi;
  return static_cast<long double>(hi) + static_cast<long double>(f.get_d());
}

/// Roots of an exact rational polynomial; coefficients are rounded to long
/// double only after exact zero roots have been removed.
inline std::vector<Complex> polynomial_roots(const RationalPolynomial& p, AberthOptions options = {}) {
  if (p.is_zero()) throw InvalidArgument("root finding on the zero polynomial");
  std::vector<long double> a;
  a.reserve(p.coefficients().size());
  std::size_t zeros = 0;
  while (zeros < p.coefficients().size() && is_zero(p.coefficients()[zeros])) ++zeros;
  for (std::size_t k = zeros; k < p.coefficients().size(); ++k) {
    a.push_back(to_long_double(p.coefficients()[k]));
  }
  auto roots = aberth_roots(a, options);
  roots.insert(roots.begin(), zeros, Complex(0.0, 0.0));
  return roots;
}

}  // namespace ptchain
