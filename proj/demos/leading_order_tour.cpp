// Leading-order picture for N = 4 ... 9: base roots, linearized slopes and
// the critical shifts at which the spectrum stops being real.

#include <cmath>
#include <iostream>

#include "ptchain/cli.hpp"
#include "ptchain/ptchain.hpp"

using namespace ptchain;

int main() {
  for (int n = 4; n <= 9; ++n) {
    const auto poly = leading_order_polynomial(n, Rational(0));
    std::cout << "N=" << n << (n % 2 == 0 ? "  shift = omega\n" : "  shift = epsilon\n");
    std::cout << "  linearized roots:";
    for (const auto& r : linearized_roots(poly)) std::cout << "  " << r.base << " + (" << r.slope << ") shift";
    std::cout << "\n  critical shifts:\n";
    for (const auto& c : critical_shifts(n))
      std::cout << "    " << to_string(c.kind) << "  shift " << cli::format_number(c.shift) << "  sqrt(L) "
                << cli::format_number(std::sqrt(c.root)) << "\n";
    auto [upper, lower] = limits_around_zero(critical_shifts(n));
    if (upper && lower)
      std::cout << "  real window: " << cli::format_number(lower->shift) << " < shift < "
                << cli::format_number(upper->shift) << "\n";
  }
  return 0;
}
