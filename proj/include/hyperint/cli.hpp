#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// tests drive it with string vectors and captured streams.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 domain error, 3 verification
// failure.

#include "hyperint/canonical.hpp"
#include "hyperint/io.hpp"
#include "hyperint/reduction.hpp"
#include "hyperint/special.hpp"
#include "hyperint/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperint {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_domain = 2, exit_verify = 3 };

/// Malformed command-line input, as opposed to a mathematically invalid one.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace cli {

inline Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

/// "p/q" exactly, otherwise a decimal float taken at its binary value.
inline Rational number_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError(std::string(what) + ": malformed number '" + text + "'");
  return Rational(v);
}

inline double double_arg(const std::string& text, const char* what) { return to_double(number_arg(text, what)); }

inline std::vector<Rational> rational_list(const std::vector<std::string>& items, const char* what) {
  std::vector<Rational> out;
  for (const std::string& s : items) out.push_back(rational_arg(s, what));
  return out;
}

inline std::vector<double> double_list(const std::vector<std::string>& items, const char* what) {
  std::vector<double> out;
  for (const std::string& s : items) out.push_back(double_arg(s, what));
  return out;
}

inline std::optional<double> env_tolerance() {
  const char* raw = std::getenv("HYPERINT_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const double v = double_arg(raw, "HYPERINT_TOLERANCE");
  if (!(v > 0.0)) throw UsageError("HYPERINT_TOLERANCE must be positive");
  return v;
}

inline IntegrandKind kind_arg(const std::string& text) {
  try {
    return parse_integrand_kind(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Kept as given when cyclically monotonous, otherwise sorted ascending.
inline std::vector<Rational> cyclic_order(std::vector<Rational> roots) {
  if (roots.size() < 3 || classify_cycle(roots) != Orientation::not_monotonous) return roots;
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct PolySpec {
  std::vector<std::string> coeffs, roots;
  std::string leading = "1";

  RationalPolynomial build() const {
    if (coeffs.empty() == roots.empty()) throw UsageError("give exactly one of --coeffs or --roots");
    if (!coeffs.empty()) return RationalPolynomial(rational_list(coeffs, "--coeffs"));
    const std::vector<Rational> r = rational_list(roots, "--roots");
    return poly_from_roots(rational_arg(leading, "--leading"), std::span<const Rational>(r));
  }
};

inline void add_poly_options(CLI::App* app, PolySpec& spec) {
  auto* c = app->add_option("--coeffs", spec.coeffs, "Q coefficients, constant term first")->delimiter(',');
  auto* r = app->add_option("--roots", spec.roots, "roots of Q")->delimiter(',');
  c->excludes(r);
  app->add_option("--leading", spec.leading, "leading coefficient with --roots");
}

inline void print_value(std::ostream& out, const std::string& fmt, const std::string& fn, double v) {
  if (fmt == "text") {
    out << format_double(v) << '\n';
    return;
  }
  Json j;
  j["fn"] = fn;
  j["value"] = v;
  out << j.dump() << '\n';
}

inline void print_reduction(std::ostream& out, const std::string& fmt, const ReductionResult& r) {
  if (fmt == "json") {
    out << to_json(r).dump() << '\n';
    return;
  }
  out << "degree " << r.degree << "\np " << to_string(r.pole) << '\n';
  for (const auto& [index, c] : r.basic) out << basis_key(index) << ' ' << to_string(c) << '\n';
  out << "elementary " << format_laurent(r.elementary) << " * sqrt(Q)\n";
}

inline void print_canonical(std::ostream& out, const std::string& fmt, const CanonicalForm<Rational>& f) {
  if (fmt == "json") {
    out << to_json(f).dump() << '\n';
    return;
  }
  out << "k";
  for (const Rational& k : f.k) out << ' ' << to_string(k);
  out << "\nC " << to_string(f.C) << "\nepsilon " << f.epsilon << "\nprefactor_sq " << to_string(f.prefactor_sq)
      << "\nprefactor " << format_double(f.prefactor) << "\nhomography " << to_string(f.H.a()) << ' '
      << to_string(f.H.b()) << ' ' << to_string(f.H.c()) << ' ' << to_string(f.H.d()) << '\n';
}

inline void print_combination(std::ostream& out, const std::string& fmt, const EllipticCombination& c) {
  if (fmt == "json") {
    out << to_json(c).dump() << '\n';
    return;
  }
  out << c.label << ' ' << format_double(c.value()) << '\n';
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyperint: reduction and elliptic evaluation of hyperelliptic integrals"};
  app.require_subcommand(1);
  std::string fmt = "json";
  app.add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "text"}));

  // reduce
  cli::PolySpec reduce_poly;
  std::string reduce_p = "0";
  long reduce_n = 0;
  bool root_pole = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce \\int (x-p)^n dx / sqrt(Q) to basic integrals");
  cli::add_poly_options(reduce_cmd, reduce_poly);
  reduce_cmd->add_option("--p", reduce_p, "pole / shift point p/q");
  auto* n_opt = reduce_cmd->add_option("--n", reduce_n, "exponent n");
  reduce_cmd->add_flag("--root-pole", root_pole, "p is a simple root of Q (n = -1 only)");
  reduce_cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "text"}));

  // canonical
  std::vector<std::string> canon_roots;
  std::string canon_leading = "1";
  auto* canon_cmd = app.add_subcommand("canonical", "canonical form of an even-degree radicand");
  canon_cmd->add_option("--roots", canon_roots, "roots of Q")->delimiter(',')->required();
  canon_cmd->add_option("--leading", canon_leading, "leading coefficient");
  canon_cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "text"}));

  // eval
  std::string eval_fn;
  std::string phi = "0", l = "0", h = "0", t = "0", k = "0", fd_a, fd_c;
  std::vector<std::string> fd_b, fd_x;
  cli::PolySpec def_poly;
  std::string def_kind = "const", def_u, def_p;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate F, Pi, I0, P, FD or a definite elliptic integral");
  eval_cmd->set_help_flag("--help", "print this help message and exit");  // frees "h" for --h
  eval_cmd->add_option("fn", eval_fn, "function")
      ->required()
      ->check(CLI::IsMember({"F", "Pi", "I0", "P", "FD", "definite"}));
  eval_cmd->add_option("--phi", phi, "amplitude");
  eval_cmd->add_option("--l", l, "modulus l");
  eval_cmd->add_option("--h", h, "characteristic");
  eval_cmd->add_option("--t", t, "upper limit t");
  eval_cmd->add_option("--k", k, "parameter k = l^2");
  eval_cmd->add_option("--a", fd_a, "F_D parameter a");
  eval_cmd->add_option("--b", fd_b, "F_D parameters b")->delimiter(',');
  eval_cmd->add_option("--c", fd_c, "F_D parameter c");
  eval_cmd->add_option("--x", fd_x, "F_D arguments x")->delimiter(',');
  cli::add_poly_options(eval_cmd, def_poly);
  eval_cmd->add_option("--kind", def_kind, "const, x or pole");
  eval_cmd->add_option("--u", def_u, "arc end point");
  eval_cmd->add_option("--p", def_p, "pole for kind=pole");
  eval_cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "text"}));

  // orbit
  std::vector<std::string> orbit_roots;
  std::string orbit_leading = "1", orbit_kind = "const", orbit_u, orbit_p;
  auto* orbit_cmd = app.add_subcommand("orbit", "the eight D4 forms of a definite quartic integral");
  orbit_cmd->add_option("--roots", orbit_roots, "the four roots of Q")->delimiter(',')->required();
  orbit_cmd->add_option("--leading", orbit_leading, "leading coefficient");
  orbit_cmd->add_option("--kind", orbit_kind, "const, x or pole");
  orbit_cmd->add_option("--u", orbit_u, "arc end point")->required();
  orbit_cmd->add_option("--p", orbit_p, "pole for kind=pole");
  orbit_cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "text"}));

  // verify
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::optional<int> count;
  std::string tol_text;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites, one JSON line per case");
  verify_cmd->add_option("--suite", suite, "suite name or all")
      ->check(CLI::IsMember([] {
        std::vector<std::string> names = suite_names();
        names.push_back("all");
        return names;
      }()));
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--count", count, "cases per random suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tolerance", tol_text, "numeric tolerance (overrides HYPERINT_TOLERANCE)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (reduce_cmd->parsed()) {
      const RationalPolynomial q = reduce_poly.build();
      const Rational p = cli::rational_arg(reduce_p, "--p");
      if (root_pole) {
        if (n_opt->count() > 0 && reduce_n != -1) throw std::domain_error("--root-pole reduces n = -1 only");
        cli::print_reduction(out, fmt, reduce_root_pole(q, p));
      } else {
        if (n_opt->count() == 0) throw UsageError("--n is required");
        cli::print_reduction(out, fmt, reduce(q, p, reduce_n));
      }
    } else if (canon_cmd->parsed()) {
      const std::vector<Rational> roots = cli::cyclic_order(cli::rational_list(canon_roots, "--roots"));
      const Rational leading = cli::rational_arg(canon_leading, "--leading");
      cli::print_canonical(out, fmt, canonical_form(leading, roots));
    } else if (eval_cmd->parsed()) {
      if (eval_fn == "F") {
        cli::print_value(out, fmt, eval_fn, ellip_F(cli::double_arg(phi, "--phi"), cli::double_arg(l, "--l")));
      } else if (eval_fn == "Pi") {
        cli::print_value(out, fmt, eval_fn,
                         ellip_Pi(cli::double_arg(phi, "--phi"), cli::double_arg(h, "--h"), cli::double_arg(l, "--l")));
      } else if (eval_fn == "I0") {
        cli::print_value(out, fmt, eval_fn, canonical_I0(cli::double_arg(t, "--t"), cli::double_arg(k, "--k")));
      } else if (eval_fn == "P") {
        cli::print_value(out, fmt, eval_fn,
                         canonical_P(cli::double_arg(t, "--t"), cli::double_arg(h, "--h"), cli::double_arg(k, "--k")));
      } else if (eval_fn == "FD") {
        if (fd_a.empty() || fd_c.empty() || fd_b.empty() || fd_b.size() != fd_x.size())
          throw UsageError("FD needs --a, --c and --b, --x of equal length");
        cli::print_value(out, fmt, eval_fn,
                         lauricella_fd(cli::double_arg(fd_a, "--a"), cli::double_list(fd_b, "--b"),
                                       cli::double_arg(fd_c, "--c"), cli::double_list(fd_x, "--x")));
      } else {
        if (def_poly.roots.empty()) throw UsageError("definite needs --roots");
        if (def_u.empty()) throw UsageError("definite needs --u");
        const IntegrandKind kind = cli::kind_arg(def_kind);
        std::optional<Rational> p;
        if (!def_p.empty()) p = cli::number_arg(def_p, "--p");
        const std::vector<Rational> roots = cli::rational_list(def_poly.roots, "--roots");
        cli::print_combination(out, fmt,
                               elliptic_definite(kind, cli::rational_arg(def_poly.leading, "--leading"), roots,
                                                 cli::number_arg(def_u, "--u"), p));
      }
    } else if (orbit_cmd->parsed()) {
      const IntegrandKind kind = cli::kind_arg(orbit_kind);
      std::optional<Rational> p;
      if (!orbit_p.empty()) p = cli::number_arg(orbit_p, "--p");
      const auto variants = d4_orbit(kind, cli::rational_arg(orbit_leading, "--leading"),
                                     cli::rational_list(orbit_roots, "--roots"), cli::number_arg(orbit_u, "--u"), p);
      for (const auto& v : variants) {
        if (fmt == "json")
          out << to_json(v).dump() << '\n';
        else
          out << v.element.name() << ' ' << format_double(v.formula.value()) << '\n';
      }
    } else if (verify_cmd->parsed()) {
      std::optional<double> tol = cli::env_tolerance();
      if (!tol_text.empty()) tol = cli::double_arg(tol_text, "--tolerance");
      if (tol && !(*tol > 0.0)) throw UsageError("--tolerance must be positive");
      const auto reports = run_suite(suite, seed, count, tol);
      long passed = 0;
      for (const auto& r : reports) {
        out << to_json(r).dump() << '\n';
        passed += r.pass ? 1 : 0;
      }
      Json summary;
      summary["summary"] = suite;
      summary["seed"] = seed;
      summary["cases"] = reports.size();
      summary["passed"] = passed;
      summary["failed"] = static_cast<long>(reports.size()) - passed;
      out << summary.dump() << '\n';
      return passed == static_cast<long>(reports.size()) ? exit_ok : exit_verify;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_ok;
}

}  // namespace hyperint
