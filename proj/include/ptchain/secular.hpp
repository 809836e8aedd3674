#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ptchain/core_model.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/polynomial.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/truncated_series.hpp"

namespace ptchain {

enum class Parity { even, odd };

inline Parity parity_of(int dimension) { return dimension % 2 == 0 ? Parity::even : Parity::odd; }

/// Monic det(E - H) of a tridiagonal matrix with diagonal d_1..d_N and
/// off-diagonal products H[k][k+1] H[k+1][k] = -c_k, from
///   D_k = (E - d_k) D_{k-1} + c_{k-1} D_{k-2},  D_0 = 1, D_{-1} = 0.
/// Works over any commutative ring; `zero` and `one` fix the ring element
/// shape (e.g. the truncation order of a series).
template <class Ring>
std::vector<Ring> tridiagonal_char_poly(const std::vector<Ring>& diagonal, const std::vector<Ring>& couplings,
                                        const Ring& zero, const Ring& one) {
  if (couplings.size() + 1 != diagonal.size())
    throw InvalidArgument("tridiagonal recurrence needs N diagonal entries and N-1 couplings");
  std::vector<Ring> prev2;           // D_{k-2}
  std::vector<Ring> prev1{one};      // D_{k-1}
  for (std::size_t k = 0; k < diagonal.size(); ++k) {
    std::vector<Ring> next(prev1.size() + 1, zero);
    for (std::size_t i = 0; i < prev1.size(); ++i) {
      next[i + 1] += prev1[i];
      next[i] -= diagonal[k] * prev1[i];
    }
    if (k >= 1) {
      const Ring& c = couplings[k - 1];
      for (std::size_t i = 0; i < prev2.size(); ++i) next[i] += c * prev2[i];
    }
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

/// Characteristic polynomial det(E - H) of the chain model, monic of degree N.
inline RationalPolynomial char_poly(const ChainModel& m) {
  return RationalPolynomial(
      tridiagonal_char_poly<Rational>(m.diagonal_entries(), m.full_couplings(), Rational(0), Rational(1)));
}

/// Coefficients of a characteristic polynomial in s = E^2, with the zero
/// root divided out first for odd N. Throws ParityViolation when a
/// coefficient that must vanish does not.
template <class Ring>
std::vector<Ring> reduce_coefficients_to_s(const std::vector<Ring>& e_coeffs, int dimension) {
  if (static_cast<int>(e_coeffs.size()) != dimension + 1)
    throw InvalidArgument("characteristic polynomial has wrong degree for N=" + std::to_string(dimension));
  const std::size_t offset = dimension % 2 == 0 ? 0 : 1;
  std::vector<Ring> s_coeffs;
  for (std::size_t k = 0; k < e_coeffs.size(); ++k) {
    const bool kept = (k % 2) == offset;
    if (kept) {
      s_coeffs.push_back(e_coeffs[k]);
    } else if (!is_zero(e_coeffs[k])) {
      throw ParityViolation("coefficient of E^" + std::to_string(k) + " is nonzero for N=" +
                            std::to_string(dimension) + (offset ? " (odd N must be odd in E)" : " (even N must be even in E)"));
    }
  }
  return s_coeffs;
}

/// Monic secular polynomial s^J - P_1 s^{J-1} + P_2 s^{J-2} - ... + (-1)^J P_J.
class SecularPolynomial {
 public:
  SecularPolynomial(RationalPolynomial in_s, Parity parity) : poly_(std::move(in_s)), parity_(parity) {
    if (poly_.is_zero() || poly_.leading() != 1) throw InvalidArgument("secular polynomial must be monic");
  }

  int half_size() const { return poly_.degree(); }
  Parity parity() const { return parity_; }

  /// Ascending coefficients in s.
  const RationalPolynomial& polynomial() const { return poly_; }
  const std::vector<Rational>& coeffs() const { return poly_.coefficients(); }

  /// P_k, k = 0 ... J (P_0 = 1), sign convention of the monic form above.
  Rational p(int k) const {
    if (k < 0 || k > half_size()) throw InvalidArgument("secular coefficient index out of range");
    Rational c = poly_[static_cast<std::size_t>(half_size() - k)];
    return k % 2 == 0 ? c : Rational(-c);
  }

  /// Binomially weighted coefficients Q_k with s^J - C(J,1) Q_1 s^{J-1} +
  /// C(J,2) Q_2 s^{J-2} - ..., the convention used when writing the N = 6
  /// cubic as s^3 - 3 Q_1 s^2 + 3 Q_2 s - Q_3. Entry 0 is Q_0 = 1.
  std::vector<Rational> binomial_weighted() const {
    std::vector<Rational> q;
    for (int k = 0; k <= half_size(); ++k)
      q.emplace_back(p(k) / Rational(binomial(static_cast<unsigned>(half_size()), static_cast<unsigned>(k))));
    return q;
  }

  friend bool operator==(const SecularPolynomial& a, const SecularPolynomial& b) {
    return a.parity_ == b.parity_ && a.poly_ == b.poly_;
  }

 private:
  RationalPolynomial poly_;
  Parity parity_;
};

inline SecularPolynomial reduce_to_s(const RationalPolynomial& char_polynomial, int dimension) {
  std::vector<Rational> e(char_polynomial.coefficients());
  e.resize(static_cast<std::size_t>(dimension) + 1, Rational(0));
  if (char_polynomial.degree() != dimension)
    throw InvalidArgument("characteristic polynomial has wrong degree for N=" + std::to_string(dimension));
  return SecularPolynomial(RationalPolynomial(reduce_coefficients_to_s(e, dimension)), parity_of(dimension));
}

inline SecularPolynomial secular_polynomial(const ChainModel& m) { return reduce_to_s(char_poly(m), m.dimension()); }

/// Secular polynomial in s whose coefficients are truncated power series in t.
class TruncatedSeriesPolynomial {
 public:
  TruncatedSeriesPolynomial(std::vector<TruncatedSeries> ascending, Parity parity)
      : c_(std::move(ascending)), parity_(parity) {}

  int half_size() const { return static_cast<int>(c_.size()) - 1; }
  int order() const { return c_.front().order(); }
  Parity parity() const { return parity_; }

  /// Series coefficient of s^power.
  const TruncatedSeries& coefficient(int power) const {
    if (power < 0 || power > half_size()) throw InvalidArgument("power of s out of range");
    return c_[static_cast<std::size_t>(power)];
  }

  const std::vector<TruncatedSeries>& coefficients() const { return c_; }

  /// Polynomial in s obtained by summing every truncated coefficient at t.
  RationalPolynomial evaluate_at(const Rational& t) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& s : c_) v.push_back(s.evaluate(t));
    return RationalPolynomial(std::move(v));
  }

 private:
  std::vector<TruncatedSeries> c_;
  Parity parity_;
};

/// Secular polynomial along the rescaled family c_n(t) = n(N-n)(1 - xi_n(t)),
/// expanded in t through order K >= J with exact coefficients.
inline TruncatedSeriesPolynomial char_poly_series(int dimension, const std::vector<Rational>& g, int order) {
  if (dimension < 2) throw InvalidArgument("chain dimension must be at least 2, got " + std::to_string(dimension));
  const int j = dimension / 2;
  if (static_cast<int>(g.size()) != j)
    throw InvalidArgument("expected " + std::to_string(j) + " rescaled couplings, got " + std::to_string(g.size()));
  if (order < j)
    throw InvalidArgument("truncation order " + std::to_string(order) + " is below J=" + std::to_string(j));

  const TruncatedSeries zero(order);
  const TruncatedSeries one(order, Rational(1));
  std::vector<TruncatedSeries> half;
  for (int n = 1; n <= j; ++n) {
    TruncatedSeries xi = TruncatedSeries::from_coefficients(order, xi_polynomial(j, g[static_cast<std::size_t>(n - 1)]));
    half.push_back(Rational(n * (dimension - n)) * (one - xi));
  }
  std::vector<TruncatedSeries> couplings;
  for (int n = 1; n < dimension; ++n) couplings.push_back(half[static_cast<std::size_t>((n <= j ? n : dimension - n) - 1)]);
  std::vector<TruncatedSeries> diagonal;
  for (int k = 1; k <= dimension; ++k) diagonal.emplace_back(order, Rational(2 * k - 1 - dimension));

  auto e = tridiagonal_char_poly<TruncatedSeries>(diagonal, couplings, zero, one);
  return TruncatedSeriesPolynomial(reduce_coefficients_to_s(e, dimension), parity_of(dimension));
}

}  // namespace ptchain
