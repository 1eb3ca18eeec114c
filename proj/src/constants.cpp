#include "polylog/constants.hpp"

#include <cmath>
#include <numbers>

#include "polylog/continuation.hpp"
#include "polylog/generating_function.hpp"
#include "polylog/series.hpp"

namespace polylog {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
const double kLn2 = std::numbers::ln2;
const double kLn3 = std::log(3.0);

std::vector<ConstantEntry> build_catalog() {
  const double z3 = zeta_int(3);
  const double g = catalan_constant();
  std::vector<ConstantEntry> c;
  c.push_back({"Li2(1)", {kPi2 / 6.0, 0.0}, "pi^2/6", "zeta(2)",
               [] { return li2(1.0); }});
  c.push_back({"Li2(-1)", {-kPi2 / 12.0, 0.0}, "-pi^2/12", "-eta(2) = -(1 - 2^-1) zeta(2)",
               [] { return li2(-1.0); }});
  c.push_back({"Li3(-1)", {-0.75 * z3, 0.0}, "-3 zeta(3)/4", "-eta(3) = -(1 - 2^-2) zeta(3)",
               [] { return li3(-1.0); }});
  c.push_back({"Li2(1/2)", {kPi2 / 12.0 - 0.5 * kLn2 * kLn2, 0.0}, "pi^2/12 - ln^2(2)/2",
               "reflection at t = 1/2", [] { return li2(0.5); }});
  c.push_back({"Li3(1/2)", {7.0 * z3 / 8.0 - kPi2 * kLn2 / 12.0 + kLn2 * kLn2 * kLn2 / 6.0, 0.0},
               "7 zeta(3)/8 - pi^2 ln(2)/12 + ln^3(2)/6", "trilogarithm Landen identity at t = 1/2",
               [] { return li3(0.5); }});
  c.push_back({"sum H_n / ((n+1)^2 2^(n+1))", {z3 / 8.0 - kLn2 * kLn2 * kLn2 / 6.0, 0.0},
               "zeta(3)/8 - ln^3(2)/6", "harmonic generating function at t = 1/2",
               [] { return harmonic_gf_ramanujan(0.5); }});
  c.push_back({"sum (-1)^(n+1) H_n/(n+1)^2", {z3 / 8.0, 0.0}, "zeta(3)/8",
               "alternating generating function at t = 1",
               [] { return harmonic_gf_alternating(1.0); }});
  c.push_back({"sum (-1)^(n-1) H_n/n^2", {5.0 * z3 / 8.0, 0.0}, "5 zeta(3)/8",
               "eta(3) minus the alternating sum at t = 1", [] {
                 const EvalResult a = li3(-1.0);
                 const EvalResult b = harmonic_gf_alternating(1.0);
                 return EvalResult{-a.value - b.value, a.err_estimate + b.err_estimate,
                                   a.terms_or_evals + b.terms_or_evals, Method::landen};
               }});
  c.push_back({"Li2(2)", {kPi2 / 4.0, -kPi * kLn2}, "pi^2/4 - i pi ln(2)",
               "inversion, limit from below the cut", [] { return li2(2.0); }});
  c.push_back({"Li3(2)", {kPi2 * kLn2 / 4.0 + 7.0 * z3 / 8.0, -0.5 * kPi * kLn2 * kLn2},
               "pi^2 ln(2)/4 + 7 zeta(3)/8 - i pi ln^2(2)/2",
               "inversion, limit from below the cut", [] { return li3(2.0); }});
  c.push_back({"Im Li2(+-i)", {g, 0.0}, "+-G", "Catalan's constant; Im Li2(-i) = -G",
               [] {
                 EvalResult r = li2(Complex{0.0, 1.0});
                 r.value = Complex{r.value.imag(), 0.0};
                 return r;
               }});
  c.push_back({"Li3(i)", {-3.0 * z3 / 32.0, kPi * kPi2 / 32.0}, "-3 zeta(3)/32 + i 3 pi zeta(2)/16",
               "Re = Li3(-1)/8, Im = beta(3) = pi^3/32",
               [] { return li3(Complex{0.0, 1.0}); }});
  return c;
}

std::vector<D2Relation> build_ledger() {
  const double l2sq = kLn2 * kLn2;
  const double l3sq = kLn3 * kLn3;
  const double l32 = std::log(1.5);
  return {
      {{0.25, 0.0}, 2.0, kPi2 / 6.0 - l2sq, 0.0, "Li2(1/4)",
       "Li2(x) + Li2(-x) = Li2(x^2)/2 at x = 1/2"},
      {{-2.0, 0.0}, -1.0, -kPi2 / 6.0 - 0.5 * l2sq, 0.0, "Li2(-2)",
       "inversion Li2(x) + Li2(1/x) = -pi^2/6 - ln^2(-x)/2 at x = -2"},
      {{2.0 / 3.0, 0.0}, 1.0, kPi2 / 6.0 + 0.5 * l2sq - 0.5 * l3sq, 0.0, "Li2(2/3)",
       "reflection from Li2(1/3)"},
      {{4.0, 0.0}, -2.0, kPi2 / 6.0 - l2sq, -2.0 * kPi * kLn2, "Li2(4)",
       "inversion from Li2(1/4), limit from below the cut"},
      {{4.0 / 3.0, 0.0}, 2.0, kPi2 / 3.0 + l2sq - 0.5 * l3sq, kPi * kLn3 - 2.0 * kPi * kLn2,
       "Li2(4/3)", "inversion to Li2(3/4), reflection to Li2(1/4), limit from below the cut"},
      {{1.0 / 3.0, 0.0}, -1.0, -0.5 * l32 * l32, 0.0, "Li2(1/3)",
       "Landen identity Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2 at x = -1/2"},
  };
}

}  // namespace

const std::vector<ConstantEntry>& constant_catalog() {
  static const std::vector<ConstantEntry> catalog = build_catalog();
  return catalog;
}

const ConstantEntry& constant_by_name(std::string_view name) {
  for (const ConstantEntry& e : constant_catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("constant_by_name: no entry " + std::string(name));
}

EvalResult d2_constant() { return polylog_series(2, Complex{-0.5, 0.0}); }

const std::vector<D2Relation>& d2_ledger() {
  static const std::vector<D2Relation> ledger = build_ledger();
  return ledger;
}

}  // namespace polylog
