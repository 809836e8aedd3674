#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptchain/core_model.hpp"
#include "ptchain/domain_mapper.hpp"
#include "ptchain/errors.hpp"
#include "ptchain/hypothesis_verifier.hpp"
#include "ptchain/leading_order.hpp"
#include "ptchain/rational.hpp"
#include "ptchain/secular.hpp"
#include "ptchain/spectrum.hpp"

namespace ptchain::cli {

enum ExitCode : int { ok = 0, bad_arguments = 1, verification_failed = 2, solver_failed = 3 };

/// Fixed 12-significant-digit rendering used in every CSV cell.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace detail {

inline std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

inline void check_dimension(int n) {
  if (n < 2) throw InvalidArgument("--dim must be at least 2");
}

inline std::vector<Rational> parse_g(const std::string& text, int dimension) {
  auto g = parse_rational_list(text);
  if (static_cast<int>(g.size()) != dimension / 2)
    throw InvalidArgument("--g needs " + std::to_string(dimension / 2) + " values for N=" + std::to_string(dimension) +
                          " (coupling order g_1 ... g_J)");
  return g;
}

inline void write_levels_header(std::ostream& out, int dimension) {
  std::vector<std::string> cells{"t"};
  for (int k = 1; k <= dimension; ++k) {
    cells.push_back("re_E" + std::to_string(k));
    cells.push_back("im_E" + std::to_string(k));
  }
  out << join_csv(cells);
}

}  // namespace detail

/// Parses and runs one command line. Data goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra, secular polynomials and reality-domain boundaries of PT-symmetric chain models"};
  app.require_subcommand(1);

  int dim = 0;
  std::string g_text, raw_text, t_text, shift_text, out_path, format = "json";
  double t_min = 0, t_max = 0, beta_max = 0, t_hi = 1.0, tol = kDefaultRealityTolerance,
         bisect_tol = kDefaultBisectionTolerance;
  int steps = 0, dim_max = 0;

  auto* eep = app.add_subcommand("eep", "Maximal-coupling vertex g_n^2 = n (N - n)");
  eep->add_option("--dim", dim, "Dimension N")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Energies of one model");
  spectrum->add_option("--dim", dim, "Dimension N")->required();
  auto* t_opt = spectrum->add_option("--t", t_text, "Rescaling parameter t");
  auto* g_opt = spectrum->add_option("--g", g_text, "Rescaled couplings G_1,...,G_J");
  auto* raw_opt = spectrum->add_option("--raw", raw_text, "Squared couplings c_1,...,c_J");
  spectrum->add_option("--tol", tol, "Reality tolerance on s = E^2");
  g_opt->needs(t_opt);
  t_opt->needs(g_opt);
  raw_opt->excludes(g_opt);
  raw_opt->excludes(t_opt);

  auto* curve = app.add_subcommand("curve", "Energies along t for fixed G");
  curve->add_option("--dim", dim, "Dimension N")->required();
  curve->add_option("--g", g_text, "Rescaled couplings G_1,...,G_J")->required();
  curve->add_option("--t-min", t_min, "First grid value")->required();
  curve->add_option("--t-max", t_max, "Last grid value")->required();
  curve->add_option("--steps", steps, "Number of grid points")->required();
  curve->add_option("--out", out_path, "CSV file (stdout when omitted)");
  curve->add_option("--tol", tol, "Reality tolerance on s = E^2");

  auto* leading = app.add_subcommand("leading", "Leading-order roots L and their linearizations");
  leading->add_option("--dim", dim, "Dimension N")->required();
  auto* lg_opt = leading->add_option("--g", g_text, "Rescaled couplings G_1,...,G_J");
  auto* ls_opt = leading->add_option("--shift", shift_text, "Shift omega (even N) or epsilon (odd N)");
  lg_opt->excludes(ls_opt);

  auto* critical = app.add_subcommand("critical", "Critical shifts of the leading-order polynomial");
  critical->add_option("--dim", dim, "Dimension N")->required();

  auto* boundary = app.add_subcommand("boundary-n4", "Both N = 4 boundary branches alpha(beta)");
  boundary->add_option("--beta-max", beta_max, "Largest beta (<= 0.5)")->required();
  boundary->add_option("--steps", steps, "Number of beta values")->required();

  auto* thresholds = app.add_subcommand("thresholds", "t_QH, t_PH and t_H for fixed G");
  thresholds->add_option("--dim", dim, "Dimension N")->required();
  thresholds->add_option("--g", g_text, "Rescaled couplings G_1,...,G_J")->required();
  thresholds->add_option("--t-hi", t_hi, "Upper end of the t_QH search window");
  thresholds->add_option("--tol", bisect_tol, "Bisection tolerance in t");

  auto* verify = app.add_subcommand("verify", "Exact checks of EEP degeneracy, tables and factorization");
  verify->add_option("--dim-max", dim_max, "Largest dimension N (>= 4)")->required();
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));

  std::vector<std::string> argv_storage{"ptchain"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  }

  try {
    if (*eep) {
      detail::check_dimension(dim);
      out << detail::join_csv({"n", "g_squared", "g"});
      const auto c = eep_couplings(dim);
      for (std::size_t n = 0; n < c.size(); ++n)
        out << detail::join_csv({std::to_string(n + 1), c[n].get_str(), format_number(std::sqrt(to_double(c[n])))});
      return ok;
    }

    if (*spectrum) {
      detail::check_dimension(dim);
      std::optional<ChainModel> model;
      if (!raw_text.empty()) {
        model.emplace(dim, parse_rational_list(raw_text));
      } else if (!g_text.empty()) {
        model.emplace(couplings_from_rescaled(RescaledPoint(dim, parse_rational(t_text), detail::parse_g(g_text, dim))));
      } else {
        throw InvalidArgument("spectrum needs either --t with --g, or --raw");
      }
      const auto s = energies(*model, tol);
      out << detail::join_csv({"level", "re_E", "im_E"});
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k)
        out << detail::join_csv({std::to_string(k + 1), format_number(s.eigenvalues[k].real()),
                                 format_number(s.eigenvalues[k].imag())});
      err << "all_real=" << (s.all_real ? "true" : "false") << "\n";
      return ok;
    }

    if (*curve) {
      detail::check_dimension(dim);
      const auto g = detail::parse_g(g_text, dim);
      const auto rows = energy_curve(dim, g, t_min, t_max, steps, tol);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw InvalidArgument("cannot open " + out_path + " for writing");
        sink = &file;
      }
      detail::write_levels_header(*sink, dim);
      bool any_failed = false;
      for (const auto& row : rows) {
        std::vector<std::string> cells{format_number(row.t)};
        for (int k = 0; k < dim; ++k) {
          if (row.error) {
            cells.push_back("nan");
            cells.push_back("nan");
          } else {
            cells.push_back(format_number(row.levels[static_cast<std::size_t>(k)].real()));
            cells.push_back(format_number(row.levels[static_cast<std::size_t>(k)].imag()));
          }
        }
        *sink << detail::join_csv(cells);
        if (row.error) {
          any_failed = true;
          err << "warning: t=" << format_number(row.t) << ": " << *row.error << "\n";
        }
      }
      return any_failed ? solver_failed : ok;
    }

    if (*leading) {
      detail::check_dimension(dim);
      if (dim < 4) throw InvalidArgument("leading-order analysis needs N >= 4");
      Rational shift;
      if (!g_text.empty()) {
        shift = shift_functional(dim, detail::parse_g(g_text, dim));
      } else if (!shift_text.empty()) {
        shift = parse_rational(shift_text);
      } else {
        throw InvalidArgument("leading needs --g or --shift");
      }
      const auto poly = leading_order_polynomial(dim, shift);
      const auto roots = leading_roots(poly);
      const auto lin = linearized_roots(poly);
      err << "shift=" << shift.get_str() << "\n";
      out << detail::join_csv({"k", "base", "re_L", "im_L", "slope", "linearized_L"});
      for (std::size_t k = 0; k < roots.size(); ++k)
        out << detail::join_csv({std::to_string(k + 1), std::to_string(lin[k].base), format_number(roots[k].real()),
                                 format_number(roots[k].imag()), lin[k].slope.get_str(),
                                 format_number(to_double(lin[k].at(shift)))});
      return ok;
    }

    if (*critical) {
      detail::check_dimension(dim);
      if (dim < 4) throw InvalidArgument("critical shifts need N >= 4");
      out << detail::join_csv({"kind", "shift", "L", "sqrt_L"});
      for (const auto& c : critical_shifts(dim))
        out << detail::join_csv({std::string(to_string(c.kind)),
                                 c.exact_shift ? c.exact_shift->get_str() : format_number(c.shift),
                                 format_number(c.root), format_number(std::sqrt(c.root))});
      return ok;
    }

    if (*boundary) {
      if (!(beta_max > 0 && beta_max <= 0.5)) throw InvalidArgument("--beta-max must lie in (0, 0.5]");
      if (steps < 1) throw InvalidArgument("--steps must be positive");
      std::vector<double> grid;
      for (int i = 1; i <= steps; ++i) grid.push_back(beta_max * i / steps);
      out << detail::join_csv({"beta", "alpha_lower", "alpha_upper"});
      for (const auto& r : boundary_n4(grid))
        out << detail::join_csv({format_number(r.beta), format_number(r.alpha_lower), format_number(r.alpha_upper)});
      return ok;
    }

    if (*thresholds) {
      detail::check_dimension(dim);
      ThresholdSearchOptions opts;
      opts.tolerance = bisect_tol;
      const auto th = find_thresholds(dim, detail::parse_g(g_text, dim), t_hi, opts);
      auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
      out << detail::join_csv({"t_qh", "t_ph", "t_h"});
      out << detail::join_csv({cell(th.t_qh), cell(th.t_ph), cell(th.t_h)});
      return ok;
    }

    if (*verify) {
      if (dim_max < 4) throw InvalidArgument("--dim-max must be at least 4");
      const auto report = verify_all(dim_max);
      nlohmann::ordered_json j;
      j["dimension"] = report.dimension;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : report.checks)
        j["checks"].push_back(
            {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"expected", c.expected}, {"actual", c.actual}});
      out << j.dump(2) << "\n";
      return report.passed() ? ok : verification_failed;
    }
  } catch (const SolverNonconvergence& e) {
    err << "error: " << e.what() << "\n";
    return solver_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  }
  return bad_arguments;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ptchain::cli
