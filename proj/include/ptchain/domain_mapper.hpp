#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptchain/core_model.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/leading_order.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/spectrum.hpp"

namespace ptchain {

inline constexpr double kDefaultBisectionTolerance = 1e-10;

/// Exact reality of the spectrum at a rescaled point.
inline bool rescaled_spectrum_is_real(int dimension, const std::vector<Rational>& g, const Rational& t) {
  return spectrum_is_real(couplings_from_rescaled(RescaledPoint(dimension, t, g)));
}

namespace detail {

// Bisect a predicate change on [lo, hi] (values differ at the ends) down to
// an absolute width `tol`. Returns the final bracket.
template <class Predicate>
std::pair<double, double> bisect_change(Predicate&& pred, double lo, double hi, bool at_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (pred(mid) == at_lo) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

}  // namespace detail

struct ThresholdSearchOptions {
  double tolerance = kDefaultBisectionTolerance;
  int scan_points = 400;  // uniform samples on (0, t_hi] used to bracket changes
};

/// Reality-loss threshold t_QH on (0, t_hi]: the spectrum is non-real below it
/// and real above it. Returns nullopt when the spectrum is real on the whole
/// scanned window. Throws DomainError when it is non-real on the whole
/// window, and NonMonotonePredicate when the scan sees anything other than a
/// single non-real -> real change.
inline std::optional<double> find_t_qh(int dimension, const std::vector<Rational>& g, double t_hi,
                                       ThresholdSearchOptions options = {}) {
  if (!(t_hi > 0)) throw InvalidArgument("t_hi must be positive");
  if (!(options.tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  if (options.scan_points < 2) throw InvalidArgument("need at least two scan points");
  auto real_at = [&](double t) { return rescaled_spectrum_is_real(dimension, g, from_double(t)); };

  std::vector<double> ts;
  std::vector<bool> real;
  for (int i = 1; i <= options.scan_points; ++i) {
    ts.push_back(t_hi * i / options.scan_points);
    real.push_back(real_at(ts.back()));
  }
  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (real[i] != real[i - 1]) brackets.emplace_back(ts[i - 1], ts[i]);

  if (brackets.empty()) {
    if (real.front()) return std::nullopt;
    throw DomainError("spectrum is non-real on the whole window (0, " + std::to_string(t_hi) + "]; enlarge t_hi");
  }
  if (brackets.size() > 1 || real.front())
    throw NonMonotonePredicate("reality predicate changes " + std::to_string(brackets.size()) +
                                   " time(s) on (0, t_hi] and is " + (real.front() ? "real" : "non-real") +
                                   " near t = 0",
                               brackets);

  auto [lo, hi] = detail::bisect_change(real_at, brackets.front().first, brackets.front().second, false,
                                        options.tolerance);
  return (lo + hi) / 2;
}

/// Smallest positive t with max_n xi_n(t) = 1: the end of the real-matrix
/// (PT-symmetric) window. Throws DomainError if no xi_n ever reaches 1.
inline double find_t_ph(int dimension, const std::vector<Rational>& g) {
  RescaledPoint(dimension, Rational(0), g);
  const int j = dimension / 2;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& gn : g) {
    auto c = xi_polynomial(j, gn);
    c[0] -= 1;
    const RationalPolynomial p(c);
    if (p.degree() <= 0) continue;
    const auto roots = real_roots_in(p, Rational(0), root_bound(p));
    if (!roots.empty()) best = std::min(best, roots.front());
  }
  if (!std::isfinite(best)) throw DomainError("no xi_n(t) reaches 1 at positive t");
  return best;
}

/// Smallest positive t with min_n xi_n(t) = 1, i.e. where the last coupling
/// turns imaginary. Throws DomainError if that never happens.
inline double find_t_h(int dimension, const std::vector<Rational>& g) {
  RescaledPoint(dimension, Rational(0), g);
  const int j = dimension / 2;
  std::vector<double> candidates;
  for (const auto& gn : g) {
    auto c = xi_polynomial(j, gn);
    c[0] -= 1;
    const RationalPolynomial p(c);
    if (p.degree() <= 0) continue;
    for (double r : real_roots_in(p, Rational(0), root_bound(p))) candidates.push_back(r);
  }
  std::sort(candidates.begin(), candidates.end());
  for (double tau : candidates) {
    // min_n xi_n(tau) == 1 up to the root refinement accuracy.
    const RescaledPoint p(dimension, from_double(tau), g);
    double min_xi = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= j; ++n) min_xi = std::min(min_xi, to_double(p.xi(n)));
    if (std::abs(min_xi - 1) <= 1e-12 * std::max(1.0, tau * tau)) return tau;
  }
  throw DomainError("min_n xi_n(t) never reaches 1 at positive t");
}

/// Two boundary branches of the N = 4 domain in the (beta, alpha) plane,
/// g_1^2 = 3 (1 - beta), g_2^2 = 4 (1 - alpha).
struct BoundaryRowN4 {
  double beta = 0;
  double alpha_lower = 0;  // s_- = 0:  alpha = beta - beta^2 / 4
  double alpha_upper = 0;  // s_+ = s_-: alpha^2 + (3 beta - 9) alpha + 9 beta = 0
};

inline BoundaryRowN4 boundary_n4_row(double beta) {
  if (!(beta > 0 && beta < 1)) throw InvalidArgument("beta must lie in (0, 1)");
  BoundaryRowN4 row;
  row.beta = beta;
  // 36 alpha = 36 beta - 9 beta^2 zeroes the constant term of the secular quadratic.
  row.alpha_lower = beta - beta * beta / 4;
  // Smaller root of the discriminant quadratic; the rationalized form avoids
  // cancellation at small beta.
  const double b = 9 - 3 * beta;
  const double disc = b * b - 36 * beta;
  if (disc < 0) throw InvalidArgument("beta outside the range where the collision branch exists");
  row.alpha_upper = 18 * beta / (b + std::sqrt(disc));
  return row;
}

inline std::vector<BoundaryRowN4> boundary_n4(const std::vector<double>& beta_grid) {
  std::vector<BoundaryRowN4> rows;
  rows.reserve(beta_grid.size());
  for (double beta : beta_grid) rows.push_back(boundary_n4_row(beta));
  return rows;
}

struct SpikeFit {
  double coefficient = 0;  // limit of (alpha - beta) / beta^2 as beta -> 0
  double slope = 0;        // first correction in beta
  double residual = 0;     // RMS residual of the fit
};

/// Least-squares fit of y = (alpha - beta) / beta^2 by c0 + c1 beta on the
/// points with beta <= 0.05; c0 is the quadratic spike coefficient.
inline SpikeFit spike_fit(const std::vector<std::pair<double, double>>& beta_alpha) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [beta, alpha] : beta_alpha)
    if (beta > 0 && beta <= 0.05) pts.emplace_back(beta, (alpha - beta) / (beta * beta));
  if (pts.size() < 5) throw InvalidArgument("spike fit needs at least 5 points with 0 < beta <= 0.05");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double det = n * sxx - sx * sx;
  SpikeFit fit;
  fit.slope = det != 0 ? (n * sxy - sx * sy) / det : 0;
  fit.coefficient = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (const auto& [x, y] : pts) {
    const double r = y - fit.coefficient - fit.slope * x;
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

enum class BoundaryKind { reality_loss, ph_threshold, h_threshold };

/// Levels that merge at a reality-loss point. Levels are indexed 0 ... N-1 in
/// ascending order of their values on the real side.
struct Collision {
  bool at_zero = false;  // the smallest s-root reaches 0 (levels merge at E = 0)
  int s_index = 0;       // lower s-root of the colliding pair (0 when at_zero)
  std::pair<int, int> levels{0, 0};  // positive-side pair (or the pair straddling E = 0)
};

struct BoundaryPoint {
  double t = 0;
  std::vector<double> g;
  BoundaryKind kind = BoundaryKind::reality_loss;
  std::optional<Collision> colliding_pair;
  double scale = 0;            // multiple of the scan direction
  double shift = 0;            // omega (even N) or epsilon (odd N) at the point
  bool real_below = false;     // orientation: real for smaller scale values
};

namespace detail {

inline int level_of_positive_root(int dimension, int s_index) {
  const int j = dimension / 2;
  return dimension % 2 == 0 ? j + s_index : j + 1 + s_index;
}

inline int level_of_negative_root(int dimension, int s_index) { return dimension / 2 - 1 - s_index; }

// Nearest-feature matching on the real side of a reality-loss point.
inline Collision identify_collision(int dimension, const std::vector<Complex>& s_roots) {
  std::vector<double> s;
  for (const auto& r : s_roots) s.push_back(r.real());
  std::sort(s.begin(), s.end());
  Collision c;
  double best = s.empty() ? 0 : std::abs(s.front());
  c.at_zero = true;
  c.s_index = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double gap = s[i + 1] - s[i];
    if (gap < best) {
      best = gap;
      c.at_zero = false;
      c.s_index = static_cast<int>(i);
    }
  }
  if (c.at_zero) {
    c.levels = {level_of_negative_root(dimension, 0), level_of_positive_root(dimension, 0)};
  } else {
    c.levels = {level_of_positive_root(dimension, c.s_index), level_of_positive_root(dimension, c.s_index + 1)};
  }
  return c;
}

inline std::vector<Rational> scaled(const std::vector<Rational>& direction, double scale) {
  const Rational k = from_double(scale);
  std::vector<Rational> g;
  for (const auto& d : direction) g.emplace_back(d * k);
  return g;
}

}  // namespace detail

/// Scan G = scale * direction at fixed t over `scales` (ascending), bracket
/// every change of the exact reality predicate, refine it by bisection to
/// `tol` in scale, and record which levels collide.
inline std::vector<BoundaryPoint> boundary_scan(int dimension, const std::vector<Rational>& direction,
                                                const std::vector<double>& scales, const Rational& t,
                                                double tol = kDefaultBisectionTolerance) {
  RescaledPoint(dimension, t, direction);
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  if (!std::is_sorted(scales.begin(), scales.end())) throw InvalidArgument("scan scales must be ascending");
  auto real_at = [&](double scale) {
    return rescaled_spectrum_is_real(dimension, detail::scaled(direction, scale), t);
  };

  std::vector<bool> real;
  real.reserve(scales.size());
  for (double s : scales) real.push_back(real_at(s));

  std::vector<BoundaryPoint> out;
  for (std::size_t i = 1; i < scales.size(); ++i) {
    if (real[i] == real[i - 1]) continue;
    auto [lo, hi] = detail::bisect_change(real_at, scales[i - 1], scales[i], real[i - 1], tol);
    BoundaryPoint p;
    p.t = to_double(t);
    p.kind = BoundaryKind::reality_loss;
    p.real_below = real[i - 1];
    p.scale = (lo + hi) / 2;
    const auto g = detail::scaled(direction, p.scale);
    for (const auto& x : g) p.g.push_back(to_double(x));
    p.shift = dimension >= 4 ? to_double(shift_functional(dimension, g)) : 0.0;
    const double real_side = p.real_below ? lo : hi;
    const auto spec = energies(couplings_from_rescaled(RescaledPoint(dimension, t, detail::scaled(direction, real_side))));
    p.colliding_pair = detail::identify_collision(dimension, spec.s_roots);
    out.push_back(std::move(p));
  }
  return out;
}

/// Regime thresholds along t for fixed G.
struct Thresholds {
  std::optional<double> t_qh;
  std::optional<double> t_ph;
  std::optional<double> t_h;
};

inline Thresholds find_thresholds(int dimension, const std::vector<Rational>& g, double t_hi,
                                  ThresholdSearchOptions options = {}) {
  Thresholds th;
  th.t_qh = find_t_qh(dimension, g, t_hi, options);
  try {
    th.t_ph = find_t_ph(dimension, g);
  } catch (const DomainError&) {
  }
  try {
    th.t_h = find_t_h(dimension, g);
  } catch (const DomainError&) {
  }
  return th;
}

}  // namespace ptchain
