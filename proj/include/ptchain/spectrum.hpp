#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptchain/core_model.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/root_finder.hpp"
#include "ptchain/secular.hpp"

namespace ptchain {

inline constexpr double kDefaultRealityTolerance = 1e-9;

struct EnergySpectrum {
  std::vector<Complex> eigenvalues;  // N values, sorted by real then imaginary part
  std::vector<Complex> s_roots;      // J roots in s = E^2, same order convention
  bool all_real = false;
  bool zero_mode = false;  // the exact E = 0 level of odd N
};

/// Total order used for every listing of complex levels.
inline bool level_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// Energies from the numeric roots of the exact secular polynomial. An
/// s-root counts as real when |Im s| <= tol and Re s >= -tol; such roots are
/// snapped onto [0, inf) before E = +-sqrt(s) is taken.
inline EnergySpectrum energies(const SecularPolynomial& secular, double tol = kDefaultRealityTolerance) {
  if (!(tol > 0)) throw InvalidArgument("reality tolerance must be positive");
  EnergySpectrum out;
  out.zero_mode = secular.parity() == Parity::odd;
  out.s_roots = polynomial_roots(secular.polynomial());
  out.all_real = true;
  for (auto& s : out.s_roots) {
    const bool real = std::abs(s.imag()) <= tol && s.real() >= -tol;
    if (real) {
      s = Complex(std::max(s.real(), 0.0), 0.0);
    } else {
      out.all_real = false;
    }
  }
  std::sort(out.s_roots.begin(), out.s_roots.end(), level_less);
  for (const auto& s : out.s_roots) {
    const Complex e = s.imag() == 0.0 && s.real() >= 0.0 ? Complex(std::sqrt(s.real()), 0.0) : std::sqrt(s);
    out.eigenvalues.push_back(e);
    out.eigenvalues.push_back(-e);
  }
  if (out.zero_mode) out.eigenvalues.emplace_back(0.0, 0.0);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), level_less);
  return out;
}

inline EnergySpectrum energies(const ChainModel& m, double tol = kDefaultRealityTolerance) {
  return energies(secular_polynomial(m), tol);
}

/// Exact reality test: every s-root real and nonnegative, decided by a Sturm
/// count on rational coefficients with no tolerance involved.
inline bool spectrum_is_real(const ChainModel& m) {
  return all_roots_real_nonnegative(secular_polynomial(m).polynomial());
}

enum class RegimeLabel { unobservable, quasi_hermitian_pt, pseudo_hermitian_complex, hermitian };

inline std::string_view to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::unobservable: return "UNOBSERVABLE";
    case RegimeLabel::quasi_hermitian_pt: return "QUASI_HERMITIAN_PT";
    case RegimeLabel::pseudo_hermitian_complex: return "PSEUDO_HERMITIAN_COMPLEX";
    case RegimeLabel::hermitian: return "HERMITIAN";
  }
  return "?";
}

/// Four-way split of the t axis at fixed rescaled couplings G: non-real
/// spectrum first; otherwise by the size of xi_n(t) relative to 1.
inline RegimeLabel classify_regime(const RescaledPoint& p, double tol = kDefaultRealityTolerance) {
  const ChainModel m = couplings_from_rescaled(p);
  if (!energies(m, tol).all_real) return RegimeLabel::unobservable;
  Rational max_xi = p.xi(1);
  Rational min_xi = max_xi;
  for (int n = 2; n <= p.half_size(); ++n) {
    Rational x = p.xi(n);
    if (x > max_xi) max_xi = x;
    if (x < min_xi) min_xi = x;
  }
  if (max_xi <= 1) return RegimeLabel::quasi_hermitian_pt;
  if (min_xi > 1) return RegimeLabel::hermitian;
  return RegimeLabel::pseudo_hermitian_complex;
}

struct CurveRow {
  double t = 0;
  std::vector<Complex> levels;  // N sorted levels; empty when `error` is set
  bool all_real = false;
  std::optional<std::string> error;
};

/// One spectrum evaluation of the family (N, G) at a single grid value.
/// Solver failures are captured in the row.
inline CurveRow energy_curve_row(int dimension, const std::vector<Rational>& g, double t,
                                 double tol = kDefaultRealityTolerance) {
  CurveRow row;
  row.t = t;
  try {
    const EnergySpectrum s = energies(couplings_from_rescaled(RescaledPoint(dimension, from_double(t), g)), tol);
    row.levels = s.eigenvalues;
    row.all_real = s.all_real;
  } catch (const SolverNonconvergence& e) {
    row.error = e.what();
  }
  return row;
}

/// Uniform grid t_i = t_min + i (t_max - t_min) / (steps - 1), i = 0 ... steps-1.
inline std::vector<double> uniform_grid(double t_min, double t_max, int steps) {
  if (!(t_min < t_max)) throw InvalidArgument("grid needs t_min < t_max");
  if (steps < 2) throw InvalidArgument("grid needs at least 2 steps");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid.push_back(i == steps - 1 ? t_max : t_min + (t_max - t_min) * static_cast<double>(i) / (steps - 1));
  }
  return grid;
}

/// Energies along t for fixed (N, G). Rows are independent, so callers may
/// evaluate `energy_curve_row` concurrently; this overload is sequential.
inline std::vector<CurveRow> energy_curve(int dimension, const std::vector<Rational>& g, double t_min, double t_max,
                                          int steps, double tol = kDefaultRealityTolerance) {
  RescaledPoint(dimension, Rational(0), g);  // validates N and |G|
  std::vector<CurveRow> rows;
  for (double t : uniform_grid(t_min, t_max, steps)) rows.push_back(energy_curve_row(dimension, g, t, tol));
  return rows;
}

/// Leading coefficients of E(t) = E^(0) t^{1/2} + E^(1) t^{3/2} + ... for the
/// upper (E3) and lower (E2) positive levels of N = 4, with (A, B) the
/// rescaled couplings on (g_2, g_1).
struct PerturbationCoeffsN4 {
  double e3_0 = 0, e3_1 = 0, e2_0 = 0, e2_1 = 0;
};

inline PerturbationCoeffsN4 perturbation_coeffs_n4(const Rational& a_coupling, const Rational& b_coupling) {
  const double a = to_double(a_coupling);
  const double b = to_double(b_coupling);
  const Rational disc_exact = 9 * b_coupling - 9 * a_coupling + 4;
  if (sgn(disc_exact) <= 0) throw DomainError("9B - 9A + 4 must be positive (point is on or beyond the boundary)");
  const double root = std::sqrt(to_double(disc_exact));
  const double upper = 2 * root + 5;
  const double lower = 5 - 2 * root;
  if (!(lower > 0)) throw DomainError("5 - 2 sqrt(9B - 9A + 4) must be positive (lower pair at zero energy)");
  PerturbationCoeffsN4 c;
  c.e3_0 = std::sqrt(upper);
  c.e3_1 = ((3 * b + 5 * a) / root + 3 * b + 2 * a) / (2 * c.e3_0);
  c.e2_0 = std::sqrt(lower);
  c.e2_1 = (2 * a + 3 * b - (3 * b + 5 * a) / root) / (2 * c.e2_0);
  return c;
}

}  // namespace ptchain
