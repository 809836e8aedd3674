// Energy curves E(t) of the N = 4 chain at B = 0 for two values of A: one
// inside the quasi-Hermitian domain, one just outside its spike.
//
//   energy_curves [out_dir]
//
// Writes inside.csv and outside.csv (default: current directory).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "ptchain/cli.hpp"
#include "ptchain/ptchain.hpp"

using namespace ptchain;

namespace {

void write_curve(const std::string& path, const std::vector<Rational>& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open " + path);
  out << "t";
  for (int k = 1; k <= 4; ++k) out << ",re_E" << k << ",im_E" << k;
  out << "\n";
  for (const auto& row : energy_curve(4, g, 0.0, 0.5, 201)) {
    out << cli::format_number(row.t);
    for (const auto& e : row.levels) out << "," << cli::format_number(e.real()) << "," << cli::format_number(e.imag());
    out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) std::filesystem::create_directories(argv[1]);
  const std::string dir = argc > 1 ? std::string(argv[1]) + "/" : "";
  const std::vector<Rational> inside{Rational(0), Rational(4, 9) - Rational(1, 5)};
  const std::vector<Rational> outside{Rational(0), Rational(4, 9) + Rational(1, 50)};
  try {
    write_curve(dir + "inside.csv", inside);
    write_curve(dir + "outside.csv", outside);
    const auto t_qh = find_t_qh(4, outside, 1.0);
    std::cout << "A = 4/9 - 1/5: real for every t in (0, 0.5]  -> " << dir << "inside.csv\n";
    std::cout << "A = 4/9 + 1/50: complex below t_QH = " << (t_qh ? cli::format_number(*t_qh) : "none") << "  -> "
              << dir << "outside.csv\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
