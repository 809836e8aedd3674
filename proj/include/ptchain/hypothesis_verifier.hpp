#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptchain/core_model.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/leading_order.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/secular.hpp"

namespace ptchain {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// Outcome of one verifier run. Every comparison is recorded, pass or fail.
struct VerificationReport {
  int dimension = 0;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  void add(std::string name, bool ok, std::string expected, std::string actual) {
    checks.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  }

  void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

/// Elementary symmetric polynomial e_k of integer values.
inline Integer elementary_symmetric(const std::vector<std::int64_t>& values, int k) {
  std::vector<Integer> e(static_cast<std::size_t>(k) + 1, Integer(0));
  e[0] = 1;
  for (auto v : values)
    for (int i = k; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * Integer(static_cast<long>(v));
  return e[static_cast<std::size_t>(k)];
}

namespace detail {

inline std::vector<Rational> unit_vector(int j, int n) {
  std::vector<Rational> g(static_cast<std::size_t>(j), Rational(0));
  if (n >= 1) g[static_cast<std::size_t>(n - 1)] = 1;
  return g;
}

inline std::string str(const Rational& x) { return x.get_str(); }

}  // namespace detail

/// Expands the secular polynomial along the rescaled family at the probe
/// vectors G = 0, e_1, ..., e_J (plus e_1 + e_2 for affinity) and checks:
///   (a) s^{J-k}, k < J: no terms below t^k, and the t^k coefficient is
///       (-1)^k e_k(base roots) for every probe;
///   (b) s^0: no terms below t^J, and the t^J coefficient equals
///       (-1)^J prod(base roots) + shift(G), with shift = omega or epsilon.
/// Together these say the leading-order equation is prod (L - base) + shift = 0.
inline VerificationReport verify_factorization(int dimension, EpsilonSign sign = EpsilonSign::corrected) {
  if (dimension < 4) throw InvalidArgument("factorization check needs N >= 4");
  const int j = dimension / 2;
  const auto base = base_roots(dimension);
  const std::string tag = "N=" + std::to_string(dimension) + " ";
  VerificationReport report;
  report.dimension = dimension;

  std::vector<std::vector<Rational>> probes;
  probes.push_back(detail::unit_vector(j, 0));
  for (int n = 1; n <= j; ++n) probes.push_back(detail::unit_vector(j, n));
  auto mixed = detail::unit_vector(j, 1);
  mixed[1] = 1;
  probes.push_back(mixed);

  std::vector<Rational> constant_terms;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const auto series = char_poly_series(dimension, probes[p], j);
    const std::string probe_tag = tag + "probe " + std::to_string(p) + " ";
    report.add(probe_tag + "monic", series.coefficient(j) == TruncatedSeries(j, Rational(1)), "1",
               series.coefficient(j).coefficient(0).get_str());
    for (int k = 1; k <= j; ++k) {
      const TruncatedSeries& c = series.coefficient(j - k);
      const int v = c.valuation();
      report.add(probe_tag + "s^" + std::to_string(j - k) + " valuation", v == -1 || v >= k, ">= " + std::to_string(k),
                 std::to_string(v));
      if (k < j) {
        Rational expected(elementary_symmetric(base, k));
        if (k % 2 == 1) expected = -expected;
        report.add(probe_tag + "s^" + std::to_string(j - k) + " leading t^" + std::to_string(k),
                   c.coefficient(k) == expected, detail::str(expected), detail::str(c.coefficient(k)));
      }
    }
    constant_terms.push_back(series.coefficient(0).coefficient(j));
  }

  Rational base_product(elementary_symmetric(base, j));
  if (j % 2 == 1) base_product = -base_product;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const Rational expected = base_product + shift_functional(dimension, probes[p], sign);
    report.add(tag + "constant t^" + std::to_string(j) + " probe " + std::to_string(p), constant_terms[p] == expected,
               detail::str(expected), detail::str(constant_terms[p]));
  }
  // Affinity in G: the value at e_1 + e_2 is predicted by the unit probes.
  const Rational predicted = constant_terms[1] + constant_terms[2] - constant_terms[0];
  report.add(tag + "constant term affine in G", constant_terms.back() == predicted, detail::str(predicted),
             detail::str(constant_terms.back()));
  return report;
}

/// Table entries as printed: omega^(J) / [2 (2J-1) (2J-1)!] and
/// epsilon^(J) / [2 (2J-1) (2J)!], coefficients on (A, B, C, ...) where A is
/// the innermost coupling.
inline const std::vector<std::vector<std::int64_t>>& printed_omega_table() {
  static const std::vector<std::vector<std::int64_t>> t{
      {1, -1},
      {-3, 4, -1},
      {10, -15, 6, -1},
      {-35, 56, -28, 8, -1},
      {126, -210, 120, -45, 10, -1},
  };
  return t;
}

inline const std::vector<std::vector<std::int64_t>>& printed_epsilon_table() {
  static const std::vector<std::vector<std::int64_t>> t{
      {1, -1},
      {-2, 3, -1},
      {5, -9, 5, -1},
      {-14, 28, -20, 7, -1},
      {42, -90, 75, -35, 9, -1},
  };
  return t;
}

/// C^(J)_(n), n = 1 ... J, for J = 1 ... 5.
inline const std::vector<std::vector<std::int64_t>>& printed_triangle_table() {
  static const std::vector<std::vector<std::int64_t>> t{
      {1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1},
  };
  return t;
}

/// Full rows of the Pascal-like triangle for J = 1 ... 4 (with the
/// intermediate half-step rows between them).
inline const std::vector<std::vector<std::int64_t>>& printed_pascal_like_table() {
  static const std::vector<std::vector<std::int64_t>> t{
      {-1, 1},
      {-1, 0, 1},
      {-1, -1, 1, 1},
      {-1, -2, 0, 2, 1},
      {-1, -3, -2, 2, 3, 1},
      {-1, -4, -5, 0, 5, 4, 1},
      {-1, -5, -9, -5, 5, 9, 5, 1},
  };
  return t;
}

namespace detail {

template <class Fn>
std::vector<Rational> center_out_coefficients(int j, Fn&& functional, const Rational& normalization) {
  std::vector<Rational> coeffs;
  for (int k = 1; k <= j; ++k) coeffs.push_back(functional(unit_vector(j, j + 1 - k)) / normalization);
  return coeffs;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace detail

/// Compares omega_even, epsilon_odd and the coefficient triangle against the
/// printed tables (rows J = 2 ... min(J_max, 6); triangle rows up to 5).
inline VerificationReport verify_tables(int j_max) {
  if (j_max < 2) throw InvalidArgument("table check needs J_max >= 2");
  VerificationReport report;
  report.dimension = 2 * j_max + 1;

  for (int j = 2; j <= std::min(j_max, 6); ++j) {
    const auto& om_row = printed_omega_table()[static_cast<std::size_t>(j - 2)];
    const auto& ep_row = printed_epsilon_table()[static_cast<std::size_t>(j - 2)];
    const Rational om_norm = Rational(2 * (2 * j - 1)) * Rational(factorial(static_cast<unsigned>(2 * j - 1)));
    const Rational ep_norm = Rational(2 * (2 * j - 1)) * Rational(factorial(static_cast<unsigned>(2 * j)));
    const auto om = detail::center_out_coefficients(j, [&](const auto& g) { return omega_even(j, g); }, om_norm);
    const auto ep = detail::center_out_coefficients(j, [&](const auto& g) { return epsilon_odd(j, g); }, ep_norm);
    std::vector<Rational> om_expected(om_row.begin(), om_row.end());
    std::vector<Rational> ep_expected(ep_row.begin(), ep_row.end());
    report.add("omega table J=" + std::to_string(j), om == om_expected, detail::join(om_expected), detail::join(om));
    report.add("epsilon table J=" + std::to_string(j), ep == ep_expected, detail::join(ep_expected), detail::join(ep));
  }

  const int tri_rows = std::min(j_max, 5);
  const CoefficientTriangle tri(5);
  for (int j = 1; j <= tri_rows; ++j) {
    const auto& expected = printed_triangle_table()[static_cast<std::size_t>(j - 1)];
    report.add("triangle row J=" + std::to_string(j), tri.row(j) == expected, detail::join(expected),
               detail::join(tri.row(j)));
  }

  const auto pascal = pascal_like_triangle(static_cast<int>(printed_pascal_like_table().size()));
  for (std::size_t r = 0; r < pascal.size(); ++r) {
    report.add("pascal-like row " + std::to_string(r), pascal[r] == printed_pascal_like_table()[r],
               detail::join(printed_pascal_like_table()[r]), detail::join(pascal[r]));
  }
  // Right half of every second row is a triangle row.
  for (int j = 2; j <= 4; ++j) {
    const auto& row = pascal[static_cast<std::size_t>(2 * (j - 1))];
    std::vector<std::int64_t> right(row.end() - j, row.end());
    report.add("pascal-like underlined J=" + std::to_string(j), right == tri.row(j), detail::join(tri.row(j)),
               detail::join(right));
  }
  return report;
}

/// det(E - H) = E^N exactly at the maximal-coupling vertex, N = 2 ... N_max.
inline VerificationReport verify_eep_degeneracy(int n_max) {
  if (n_max < 2) throw InvalidArgument("EEP check needs N_max >= 2");
  VerificationReport report;
  report.dimension = n_max;
  for (int n = 2; n <= n_max; ++n) {
    const RationalPolynomial p = char_poly(eep_model(n));
    const RationalPolynomial expected = RationalPolynomial::monomial(Rational(1), static_cast<std::size_t>(n));
    std::ostringstream want, actual;
    want << expected;
    actual << p;
    report.add("EEP char poly N=" + std::to_string(n), p == expected, want.str(), actual.str());
  }
  return report;
}

/// Everything above for N = 4 ... N_max (tables up to J = N_max / 2).
inline VerificationReport verify_all(int n_max) {
  if (n_max < 4) throw InvalidArgument("verification needs N_max >= 4");
  VerificationReport report;
  report.dimension = n_max;
  report.append(verify_eep_degeneracy(n_max));
  report.append(verify_tables(n_max / 2));
  for (int n = 4; n <= n_max; ++n) report.append(verify_factorization(n));
  return report;
}

}  // namespace ptchain
