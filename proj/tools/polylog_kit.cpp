// polylog-kit: evaluate polylogarithms, run identity suites, print the
// constant catalog and the d2 ledger.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polylog/constants.hpp"
#include "polylog/continuation.hpp"
#include "polylog/generating_function.hpp"
#include "polylog/report.hpp"
#include "polylog/series.hpp"
#include "polylog/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<double> tol;
  int points = 50;
  std::uint64_t seed = 0;
  std::string format = "text";

  std::string function;
  std::string arg;
  std::optional<int> order;
  std::string suite;
};

polylog::EvalResult evaluate(const Options& o, polylog::Complex z) {
  using namespace polylog;
  if (o.function == "li2") return li2(z);
  if (o.function == "li3") {
    QuadratureSpec spec = kDoubleIntegralSpec;
    if (o.tol) spec.abs_tol = spec.rel_tol = *o.tol;
    return li3(z, spec);
  }
  if (o.function == "lip") return li_n(*o.order, z);
  // F: the closed form on the real interval, the Taylor series elsewhere.
  if (z.imag() == 0.0 && z.real() >= -1.0 && z.real() <= 1.0) return harmonic_gf_unified(z.real());
  SeriesParams params;
  if (o.tol) params.tol = *o.tol;
  return harmonic_gf_taylor(z, params);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Polylogarithm evaluation and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "Tolerance (eval accuracy target, verify override)")
      ->check(CLI::PositiveNumber);
  app.add_option("--points", o.points, "Sample points per identity")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled points");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* eval = app.add_subcommand("eval", "Evaluate li2, li3, lip or F at a complex point");
  eval->add_option("function", o.function, "li2 | li3 | lip | F")
      ->required()
      ->check(CLI::IsMember({"li2", "li3", "lip", "F"}));
  eval->add_option("arg", o.arg, "a, a+bi, a-bi, bi or re,im")->required();
  eval->add_option("--order,-n", o.order, "Order for lip")->check(CLI::Range(1, 1000));

  CLI::App* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", o.suite, "core | prop1 | prop2 | prop3 | d2 | soliton | all")
      ->required()
      ->check(CLI::IsMember(polylog::suite_names()));

  app.add_subcommand("constants", "Closed-form constant catalog");
  app.add_subcommand("d2", "Relations tied to d2 = Li2(-1/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const polylog::Format format = *polylog::parse_format(o.format);
  try {
    if (*eval) {
      const auto z = polylog::parse_complex_literal(o.arg);
      if (!z) {
        std::cerr << "error: cannot parse complex literal '" << o.arg << "'\n";
        return kExitUsage;
      }
      if (o.function == "lip" && !o.order) {
        std::cerr << "error: lip requires --order\n";
        return kExitUsage;
      }
      std::cout << polylog::format_eval(o.function, evaluate(o, *z), format);
      return kExitOk;
    }
    if (*verify) {
      const auto rows = polylog::verify_all(polylog::suite_records(o.suite), o.points, o.seed, o.tol);
      std::cout << polylog::format_report(rows, format);
      return polylog::report_ok(rows) ? kExitOk : kExitFailure;
    }
    if (app.got_subcommand("constants")) {
      std::cout << polylog::format_constants(polylog::constant_catalog(), format);
      return kExitOk;
    }
    std::cout << polylog::format_d2(polylog::d2_constant().value.real(), polylog::d2_ledger(), format);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
