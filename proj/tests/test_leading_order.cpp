#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ptchain/leading_order.hpp"

using namespace ptchain;

namespace {

std::vector<Rational> unit(int j, int n) {
  std::vector<Rational> g(static_cast<std::size_t>(j), Rational(0));
  g[static_cast<std::size_t>(n - 1)] = 1;
  return g;
}

}  // namespace

TEST_CASE("coefficient triangle rows") {
  const auto tri = triangle_rows(12);
  CHECK(tri.row(1) == std::vector<std::int64_t>{1});
  CHECK(tri.row(3) == std::vector<std::int64_t>{2, 3, 1});
  CHECK(tri.row(5) == std::vector<std::int64_t>{14, 28, 20, 7, 1});
  CHECK(tri.at(3, 0) == -2);
  CHECK(tri.at(3, -1) == -3);
  CHECK(tri.at(3, 4) == 0);
  CHECK_THROWS_AS(triangle_rows(0), InvalidArgument);
  CHECK_THROWS_AS(tri.row(13), InvalidArgument);
}

TEST_CASE("triangle recurrence and row sums") {
  const auto tri = triangle_rows(12);
  for (int j = 2; j <= 12; ++j) {
    const auto& prev = tri.row(j - 1);
    // Independent re-derivation from the stored previous row.
    auto ext = [&](int n) -> std::int64_t {
      if (n >= 1) return n <= j - 1 ? prev[static_cast<std::size_t>(n - 1)] : 0;
      const int m = 1 - n;
      return m <= j - 1 ? -prev[static_cast<std::size_t>(m - 1)] : 0;
    };
    std::vector<std::int64_t> next;
    for (int n = 1; n <= j; ++n) next.push_back(ext(n - 1) + 2 * ext(n) + ext(n + 1));
    CHECK(next == tri.row(j));
    std::int64_t sum = 0;
    for (auto v : tri.row(j)) sum += v;
    CHECK(Integer(static_cast<long>(sum)) == binomial(static_cast<unsigned>(2 * j - 2), static_cast<unsigned>(j - 1)));
  }
}

TEST_CASE("Pascal-like triangle carries the coefficient rows") {
  const auto rows = pascal_like_triangle(23);
  const auto tri = triangle_rows(12);
  CHECK(rows[0] == std::vector<std::int64_t>{-1, 1});
  CHECK(rows[3] == std::vector<std::int64_t>{-1, -2, 0, 2, 1});
  for (int j = 1; j <= 12; ++j) {
    const auto& row = rows[static_cast<std::size_t>(2 * (j - 1))];
    CHECK(std::vector<std::int64_t>(row.end() - j, row.end()) == tri.row(j));
  }
}

TEST_CASE("omega for even N") {
  const Rational a(3, 7), b(-2, 5), c(5, 3), d(1, 11);
  CHECK(omega_even(2, {b, a}) == 36 * (a - b));
  CHECK(omega_even(3, {c, b, a}) == 1200 * (-3 * a + 4 * b - c));
  CHECK(omega_even(4, {d, c, b, a}) == 2 * 7 * 5040 * (10 * a - 15 * b + 6 * c - d));
  CHECK_THROWS_AS(omega_even(3, {a, b}), InvalidArgument);
  CHECK_THROWS_AS(omega_even(1, {a}), InvalidArgument);
}

TEST_CASE("epsilon for odd N") {
  const Rational a(3, 7), b(-2, 5), c(5, 3);
  CHECK(epsilon_odd(2, {b, a}) == 144 * (a - b));
  CHECK(epsilon_odd(3, {c, b, a}) == 7200 * (-2 * a + 3 * b - c));
  // J = 6 row: 42A - 90B + 75C - 35D + 9E - F, normalized by 2 * 11 * 12!
  const Rational norm = Rational(2 * 11) * Rational(factorial(12));
  const std::vector<std::int64_t> row{42, -90, 75, -35, 9, -1};
  for (int k = 1; k <= 6; ++k) CHECK(epsilon_odd(6, unit(6, 7 - k)) / norm == row[static_cast<std::size_t>(k - 1)]);
  CHECK(epsilon_odd(2, {b, a}, EpsilonSign::as_printed) == -144 * (a - b));
}

TEST_CASE("shift functionals are linear") {
  std::mt19937_64 rng(31);
  for (int j = 2; j <= 8; ++j) {
    std::vector<Rational> g1, g2, sum;
    for (int k = 0; k < j; ++k) {
      g1.push_back(oracle::random_rational(rng, -4, 4));
      g2.push_back(oracle::random_rational(rng, -4, 4));
      sum.push_back(g1.back() + g2.back());
    }
    CHECK(omega_even(j, g1) + omega_even(j, g2) == omega_even(j, sum));
    CHECK(epsilon_odd(j, g1) + epsilon_odd(j, g2) == epsilon_odd(j, sum));
    CHECK(shift_functional(2 * j, g1) == omega_even(j, g1));
    CHECK(shift_functional(2 * j + 1, g1) == epsilon_odd(j, g1));
  }
}

TEST_CASE("leading-order polynomial and its roots") {
  CHECK(base_roots(6) == std::vector<std::int64_t>{1, 9, 25});
  CHECK(base_roots(7) == std::vector<std::int64_t>{4, 16, 36});

  SECTION("N=4 closed form") {
    for (const Rational w : {Rational(-20), Rational(3), Rational(15), Rational(25)}) {
      const auto roots = leading_roots(leading_order_polynomial(4, w));
      const Complex r = std::sqrt(Complex(to_double(16 - w), 0));
      CHECK(std::abs(roots[0] - (5.0 - r)) + std::abs(roots[1] - (5.0 + r)) ==
            Catch::Approx(0).margin(1e-12));
    }
  }
  SECTION("shift zero reproduces the base roots") {
    const auto r6 = leading_roots(leading_order_polynomial(6, Rational(0)));
    const auto r7 = leading_roots(leading_order_polynomial(7, Rational(0)));
    for (int k = 0; k < 3; ++k) {
      CHECK(r6[static_cast<std::size_t>(k)] == Complex((2 * k + 1) * (2 * k + 1), 0));
      CHECK(r7[static_cast<std::size_t>(k)].real() == Catch::Approx(4.0 * (k + 1) * (k + 1)).epsilon(1e-14));
    }
  }
  SECTION("value") {
    const auto p = leading_order_polynomial(6, Rational(7));
    CHECK(p.value(Rational(2)) == Rational(1 * -7 * -23 + 7));
  }
}

TEST_CASE("linearized roots") {
  auto slopes = [](int n) {
    std::vector<Rational> s;
    for (const auto& r : linearized_roots(leading_order_polynomial(n, Rational(0)))) s.push_back(r.slope);
    return s;
  };
  CHECK(slopes(4) == std::vector<Rational>{Rational(1, 8), Rational(-1, 8)});
  CHECK(slopes(6) == std::vector<Rational>{Rational(-1, 192), Rational(1, 128), Rational(-1, 384)});
  CHECK(slopes(7) == std::vector<Rational>{Rational(-1, 384), Rational(1, 240), Rational(-1, 640)});
}

TEST_CASE("linearization error is second order in the shift") {
  for (int n = 4; n <= 13; ++n) {
    const auto base_poly = leading_order_polynomial(n, Rational(0));
    const auto lin = linearized_roots(base_poly);
    // Scale the probe shifts to the size of the slopes so every N is tested
    // in its own linear regime.
    Rational smallest_gap_over_slope = 0;
    for (const auto& l : lin) {
      const Rational q = 1 / abs(l.slope);
      if (smallest_gap_over_slope == 0 || q < smallest_gap_over_slope) smallest_gap_over_slope = q;
    }
    std::vector<Rational> ratios;
    for (int m = 2; m <= 7; ++m) {
      const Rational shift = smallest_gap_over_slope / Rational(power(Integer(10), static_cast<unsigned>(m)));
      const auto poly = leading_order_polynomial(n, shift).polynomial();
      const auto dpoly = poly.derivative();
      Rational worst = 0;
      for (const auto& l : lin) {
        const Rational x = l.at(shift);
        // One exact Newton step from the linearized root measures the
        // distance to the true root up to a relative O(shift) correction.
        const Rational err = abs(poly(x) / dpoly(x));
        if (err > worst) worst = err;
      }
      ratios.push_back(worst / (shift * shift));
    }
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      CHECK(ratios[i] > 0);
      CHECK(to_double(ratios[i] / ratios[i - 1]) == Catch::Approx(1.0).margin(0.05));
    }
  }
}

TEST_CASE("linearized roots approximate the numeric roots") {
  for (int n = 4; n <= 7; ++n) {
    const Rational shift(1, 1000);
    const auto poly = leading_order_polynomial(n, shift);
    const auto roots = leading_roots(poly);
    const auto lin = linearized_roots(poly);
    for (std::size_t k = 0; k < lin.size(); ++k)
      CHECK(roots[k].real() == Catch::Approx(to_double(lin[k].at(shift))).margin(1e-9));
  }
}

TEST_CASE("critical shifts") {
  SECTION("N=4") {
    const auto c = critical_shifts(4);
    REQUIRE(c.size() == 2);
    CHECK(c[0].kind == CriticalKind::zero_root);
    CHECK(c[0].exact_shift == Rational(-9));
    CHECK(c[1].kind == CriticalKind::double_root);
    CHECK(c[1].shift == Catch::Approx(16).epsilon(1e-15));
    CHECK(c[1].root == Catch::Approx(5).epsilon(1e-15));
  }
  SECTION("N=6") {
    const auto c = critical_shifts(6);
    REQUIRE(c.size() == 3);
    CHECK(c[0].shift == Catch::Approx(-323.138718433740198).epsilon(1e-14));
    CHECK(std::sqrt(c[0].root) == Catch::Approx(2.147400716485186).epsilon(1e-14));
    CHECK(c[1].kind == CriticalKind::zero_root);
    CHECK(c[1].exact_shift == Rational(225));
    CHECK(c[2].shift == Catch::Approx(1081.657236952258717).epsilon(1e-14));
    CHECK(std::sqrt(c[2].root) == Catch::Approx(4.326893053470613).epsilon(1e-14));
    // The printed values, at the precision they are printed with.
    CHECK(std::abs(c[0].shift - -323.1387184) <= 1e-6);
    CHECK(std::abs(std::sqrt(c[0].root) - 2.147400716) <= 1e-8);
    CHECK(std::abs(std::sqrt(c[2].root) - 4.326893054) <= 1e-8);
  }
  SECTION("stationary values match an independent closed form for N=6") {
    // d/dL (L-1)(L-9)(L-25) = 3L^2 - 70L + 259
    for (double sign : {-1.0, 1.0}) {
      const double l = (70 + sign * std::sqrt(70.0 * 70 - 12 * 259)) / 6;
      const double w = -(l - 1) * (l - 9) * (l - 25);
      bool found = false;
      for (const auto& c : critical_shifts(6))
        if (std::abs(c.shift - w) < 1e-9 * std::abs(w)) found = true;
      CHECK(found);
    }
  }
  SECTION("limits around zero") {
    auto [upper4, lower4] = limits_around_zero(critical_shifts(4));
    REQUIRE(upper4);
    REQUIRE(lower4);
    CHECK(upper4->shift == Catch::Approx(16));
    CHECK(lower4->shift == -9);
    auto [upper6, lower6] = limits_around_zero(critical_shifts(6));
    CHECK(upper6->shift == 225);
    CHECK(lower6->shift == Catch::Approx(-323.1387184));
  }
  SECTION("linearized thresholds for N=4") {
    const auto events = linearized_critical_shifts(leading_order_polynomial(4, Rational(0)));
    auto [upper, lower] = limits_around_zero(events);
    REQUIRE(upper);
    REQUIRE(lower);
    CHECK(upper->shift == 32);
    CHECK(upper->kind == CriticalKind::double_root);
    CHECK(lower->shift == -8);
    CHECK(lower->kind == CriticalKind::zero_root);
  }
  SECTION("every event is a genuine double or zero root") {
    for (int n = 4; n <= 13; ++n) {
      for (const auto& c : critical_shifts(n)) {
        const auto poly = leading_order_polynomial(n, from_double(c.shift)).polynomial();
        const double scale = std::abs(c.shift) + 1;
        CHECK(std::abs(to_double(poly(from_double(c.root)))) <= 1e-9 * scale);
        if (c.kind == CriticalKind::double_root)
          CHECK(std::abs(to_double(poly.derivative()(from_double(c.root)))) <= 1e-6 * scale);
      }
    }
  }
}
