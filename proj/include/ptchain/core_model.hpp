#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ptchain/errors.hpp"
#include "ptchain/rational.hpp"

namespace ptchain {

/// Up-down symmetric tridiagonal chain Hamiltonian of dimension N.
///
/// The diagonal is the equidistant ladder 1-N, 3-N, ..., N-1. Only the
/// J = floor(N/2) independent squared couplings c_n = g_n^2 are stored; the
/// full coupling list follows from g_{N-k} = g_k. A negative c_n encodes a
/// purely imaginary coupling.
class ChainModel {
 public:
  ChainModel(int dimension, std::vector<Rational> squared_couplings)
      : dimension_(dimension), couplings_(std::move(squared_couplings)) {
    if (dimension_ < 2) throw InvalidArgument("chain dimension must be at least 2, got " + std::to_string(dimension_));
    if (static_cast<int>(couplings_.size()) != half_size())
      throw InvalidArgument("expected " + std::to_string(half_size()) + " squared couplings for N=" +
                            std::to_string(dimension_) + ", got " + std::to_string(couplings_.size()));
  }

  int dimension() const { return dimension_; }
  int half_size() const { return dimension_ / 2; }

  /// c_1 ... c_J.
  const std::vector<Rational>& squared_couplings() const { return couplings_; }

  /// c_n for n = 1 ... N-1, up-down symmetry applied.
  Rational coupling(int n) const {
    if (n < 1 || n >= dimension_) throw InvalidArgument("coupling index out of range");
    const int m = n <= half_size() ? n : dimension_ - n;
    return couplings_[static_cast<std::size_t>(m - 1)];
  }

  std::vector<Rational> full_couplings() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(dimension_ - 1));
    for (int n = 1; n < dimension_; ++n) out.push_back(coupling(n));
    return out;
  }

  /// H[k][k] = 2k - 1 - N for k = 1 ... N.
  int diagonal(int k) const { return 2 * k - 1 - dimension_; }

  std::vector<Rational> diagonal_entries() const {
    std::vector<Rational> d;
    d.reserve(static_cast<std::size_t>(dimension_));
    for (int k = 1; k <= dimension_; ++k) d.emplace_back(diagonal(k));
    return d;
  }

  bool has_real_couplings() const {
    for (const auto& c : couplings_)
      if (sgn(c) < 0) return false;
    return true;
  }

  friend bool operator==(const ChainModel& a, const ChainModel& b) {
    return a.dimension_ == b.dimension_ && a.couplings_ == b.couplings_;
  }

 private:
  int dimension_;
  std::vector<Rational> couplings_;
};

/// Point of the rescaled parametrization
///   c_n = n (N - n) (1 - xi_n(t)),  xi_n(t) = t + t^2 + ... + t^{J-1} + G_n t^J,
/// with G_n attached to coupling g_n.
class RescaledPoint {
 public:
  RescaledPoint(int dimension, Rational t, std::vector<Rational> g)
      : dimension_(dimension), t_(std::move(t)), g_(std::move(g)) {
    if (dimension_ < 2) throw InvalidArgument("chain dimension must be at least 2, got " + std::to_string(dimension_));
    if (static_cast<int>(g_.size()) != half_size())
      throw InvalidArgument("expected " + std::to_string(half_size()) + " rescaled couplings for N=" +
                            std::to_string(dimension_) + ", got " + std::to_string(g_.size()));
  }

  int dimension() const { return dimension_; }
  int half_size() const { return dimension_ / 2; }
  const Rational& t() const { return t_; }
  const std::vector<Rational>& g() const { return g_; }

  /// lambda = 1 - t
  Rational lambda() const { return Rational(1 - t_); }

  /// xi_n(t) for n = 1 ... J.
  Rational xi(int n) const {
    if (n < 1 || n > half_size()) throw InvalidArgument("rescaled coupling index out of range");
    const int j = half_size();
    Rational acc(0);
    Rational tp(1);
    for (int k = 1; k < j; ++k) {
      tp *= t_;
      acc += tp;
    }
    tp *= t_;
    return acc + g_[static_cast<std::size_t>(n - 1)] * tp;
  }

 private:
  int dimension_;
  Rational t_;
  std::vector<Rational> g_;
};

/// Ascending coefficients of xi_n(t) as a polynomial in t.
inline std::vector<Rational> xi_polynomial(int half_size, const Rational& g) {
  std::vector<Rational> c(static_cast<std::size_t>(half_size) + 1, Rational(0));
  for (int k = 1; k < half_size; ++k) c[static_cast<std::size_t>(k)] = 1;
  c[static_cast<std::size_t>(half_size)] += g;
  return c;
}

/// g_n^2 = n (N - n), n = 1 ... J: the maximal-coupling vertex where all
/// N levels merge at zero.
inline std::vector<Rational> eep_couplings(int dimension) {
  if (dimension < 2) throw InvalidArgument("chain dimension must be at least 2, got " + std::to_string(dimension));
  std::vector<Rational> c;
  for (int n = 1; n <= dimension / 2; ++n) c.emplace_back(n * (dimension - n));
  return c;
}

inline ChainModel eep_model(int dimension) { return ChainModel(dimension, eep_couplings(dimension)); }

inline ChainModel couplings_from_rescaled(const RescaledPoint& p) {
  const int n_dim = p.dimension();
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(p.half_size()));
  for (int n = 1; n <= p.half_size(); ++n) c.emplace_back(Rational(n * (n_dim - n)) * (1 - p.xi(n)));
  return ChainModel(n_dim, std::move(c));
}

/// Dense matrix of the model. `real` is set when every coupling is real, in
/// which case all imaginary parts are zero.
struct ChainMatrix {
  Eigen::MatrixXcd entries;
  bool real = true;
};

/// H[k][k] = 2k-1-N, H[k][k+1] = g_k, H[k+1][k] = -g_k with g_k the
/// principal square root of c_k (imaginary for c_k < 0).
inline ChainMatrix build_matrix(const ChainModel& m) {
  const int n = m.dimension();
  ChainMatrix out{Eigen::MatrixXcd::Zero(n, n), m.has_real_couplings()};
  for (int k = 0; k < n; ++k) out.entries(k, k) = static_cast<double>(m.diagonal(k + 1));
  for (int k = 1; k < n; ++k) {
    const std::complex<double> g = std::sqrt(std::complex<double>(to_double(m.coupling(k)), 0.0));
    out.entries(k - 1, k) = g;
    out.entries(k, k - 1) = -g;
  }
  return out;
}

struct TraceBound {
  Rational p1;
  bool inside = false;
};

/// P_1 = sum_k d_k^2 / 2 - sum_{n=1}^{N-1} c_n, the sum of the squared-energy
/// roots. The half trace of the squared diagonal is (N^3 - N) / 6. A real
/// spectrum requires P_1 >= 0.
inline TraceBound trace_bound(const ChainModel& m) {
  const int n = m.dimension();
  Rational p1(n * n * n - n, 6);
  p1.canonicalize();
  for (int k = 1; k < n; ++k) p1 -= m.coupling(k);
  return {p1, sgn(p1) >= 0};
}

}  // namespace ptchain
