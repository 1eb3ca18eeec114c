#include "polylog/suites.hpp"

#include <cmath>
#include <numbers>

#include "polylog/bernoulli.hpp"
#include "polylog/constants.hpp"
#include "polylog/continuation.hpp"
#include "polylog/generating_function.hpp"
#include "polylog/inversion.hpp"
#include "polylog/quadrature.hpp"
#include "polylog/series.hpp"
#include "polylog/soliton.hpp"

namespace polylog {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

Complex re(double v) { return {v, 0.0}; }
double t_of(const SamplePoint& p) { return p.z.real(); }
Evaluator constant(Complex v) { return [v](const SamplePoint&) { return v; }; }

IdentityRecord make(std::string id, Evaluator lhs, Evaluator rhs, Sampler s, double tol,
                    std::string notes = {}, bool expected_fail = false) {
  return {std::move(id), std::move(lhs), std::move(rhs), std::move(s), tol, expected_fail,
          std::move(notes)};
}

// Points with Re z > 1 off the real axis, lower or upper half-plane.
Sampler right_half(double sign) {
  return [sign](int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ur(1.1, 4.0), ui(0.05, 2.0);
    std::vector<SamplePoint> pts;
    for (int k = 0; k < n; ++k) {
      const double x = ur(rng);
      pts.push_back({Complex{x, sign * ui(rng)}, 0});
    }
    return pts;
  };
}

// Box |Re|, |Im| <= 3 so every li2 dispatch branch is exercised; the real
// ray z >= 1 is avoided by construction of the continuous sampler.
Sampler dispatch_mix() {
  return [](int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<SamplePoint> pts;
    const std::vector<Complex> anchors = {{0.5, 0.866}, {0.5, -0.866}, {-0.9, 0.2},
                                          {1.3, 1.2},   {0.9, 0.1},    {2.5, -0.4}};
    for (const Complex& a : anchors) pts.push_back({a, 0});
    while (static_cast<int>(pts.size()) < n) {
      const Complex z{u(rng), u(rng)};
      if (std::abs(z.imag()) < 1e-3) continue;
      pts.push_back({z, 0});
    }
    pts.resize(std::min<std::size_t>(pts.size(), static_cast<std::size_t>(std::max(n, 1))));
    return pts;
  };
}

std::vector<IdentityRecord> core_suite() {
  std::vector<IdentityRecord> v;
  v.push_back(make(
      "core.reflection",
      [](const SamplePoint& p) {
        const double t = t_of(p);
        return li2(1.0 - t).value + li2(t).value + std::log(t) * std::log1p(-t);
      },
      constant(re(kZeta2)), real_grid(0.0, 1.0), 1e-11,
      "Li2(1-t) + Li2(t) + log t log(1-t) = pi^2/6"));
  v.push_back(make(
      "core.landen_dilog",
      [](const SamplePoint& p) { return li2(p.z).value; },
      [](const SamplePoint& p) {
        const Complex l = principal_log(1.0 - p.z);
        return -li2(p.z / (p.z - 1.0)).value - 0.5 * l * l;
      },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = disk(0.95)(2 * n, rng);
        std::vector<SamplePoint> kept;
        for (const auto& q : pts)
          if (q.z.real() >= 0.0 && static_cast<int>(kept.size()) < n) kept.push_back(q);
        return kept;
      },
      1e-11, "Li2(z) = -Li2(z/(z-1)) - 1/2 log^2(1-z), Re z >= 0, |z| < 0.95"));
  v.push_back(make(
      "core.landen_trilog",
      [](const SamplePoint& p) { return li3(-t_of(p) / (1.0 - t_of(p))).value; },
      [](const SamplePoint& p) {
        const double t = t_of(p);
        const double l1 = std::log1p(-t);
        return re(l1 * l1 * l1 / 6.0 - 0.5 * std::log(t) * l1 * l1 + kZeta2 * l1 + zeta_int(3)) -
               li3(1.0 - t).value - li3(t).value;
      },
      real_grid(1e-3, 1.0 - 1e-3), 1e-10, "six-term trilogarithm Landen identity"));
  v.push_back(make(
      "core.d2_landen",
      [](const SamplePoint&) { return li2(-0.5).value; },
      [](const SamplePoint&) {
        const double l = std::log(1.5);
        return -li2(1.0 / 3.0).value - 0.5 * l * l;
      },
      fixed({{}}), 1e-12, "Li2(-1/2) = -Li2(1/3) - 1/2 ln^2(3/2)"));
  v.push_back(make(
      "core.li2_vs_integral", [](const SamplePoint& p) { return li2(p.z).value; },
      [](const SamplePoint& p) { return dilog_via_integral(-p.z).value; }, dispatch_mix(), 1e-9,
      "li2 dispatch against the Arg-corrected integral across all regions"));
  v.push_back(make(
      "core.li3_vs_integral", [](const SamplePoint& p) { return li3(p.z).value; },
      [](const SamplePoint& p) { return trilog_via_double_integral(-p.z).value; },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = disk(0.75)(n / 2, rng);
        for (double x : {0.8, 0.95, -0.8, -0.999, -1.5, -3.0}) pts.push_back({re(x), 0});
        return pts;
      },
      1e-8, "li3 series and real-axis chains against the double integral"));
  v.push_back(make(
      "core.conjugation_li2", [](const SamplePoint& p) { return li2(std::conj(p.z)).value; },
      [](const SamplePoint& p) { return std::conj(li2(p.z).value); }, dispatch_mix(), 1e-13,
      "Li2(conj z) = conj Li2(z) off z > 1"));
  v.push_back(make(
      "core.conjugation_li3", [](const SamplePoint& p) { return li3(std::conj(p.z)).value; },
      [](const SamplePoint& p) { return std::conj(li3(p.z).value); },
      [](int n, std::mt19937_64& rng) { return box(-2.0, 2.0, 0.05, 2.0)(std::min(n, 20), rng); },
      1e-12, "Li3(conj z) = conj Li3(z) off z > 1"));
  v.push_back(make(
      "core.derivative_li2",
      [](const SamplePoint& p) {
        const double h = 1e-6;
        return (polylog_series(2, p.z + h).value - polylog_series(2, p.z - h).value) / (2.0 * h);
      },
      [](const SamplePoint& p) { return polylog_series(1, p.z).value / p.z; },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = disk(0.4)(n, rng);
        for (auto& q : pts)
          if (std::abs(q.z) < 0.05) q.z = 0.05;
        return pts;
      },
      1e-8, "central difference of Li2 against Li1(z)/z"));
  v.push_back(make(
      "core.derivative_li3",
      [](const SamplePoint& p) {
        const double h = 1e-6;
        return (polylog_series(3, p.z + h).value - polylog_series(3, p.z - h).value) / (2.0 * h);
      },
      [](const SamplePoint& p) { return polylog_series(2, p.z).value / p.z; },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = disk(0.4)(n, rng);
        for (auto& q : pts)
          if (std::abs(q.z) < 0.05) q.z = 0.05;
        return pts;
      },
      1e-8, "central difference of Li3 against Li2(z)/z"));
  v.push_back(make(
      "core.constants",
      [](const SamplePoint& p) { return constant_catalog().at(p.order).evaluate().value; },
      [](const SamplePoint& p) { return constant_catalog().at(p.order).value; },
      [](int, std::mt19937_64&) {
        std::vector<SamplePoint> pts;
        for (int k = 0; k < static_cast<int>(constant_catalog().size()); ++k) pts.push_back({{}, k});
        return pts;
      },
      1e-10, "catalog closed forms against the library evaluation path"));
  v.push_back(make(
      "core.li2_inversion_lower_half",
      [](const SamplePoint& p) { return li2(p.z).value; },
      [](const SamplePoint& p) {
        const Complex l = principal_log(p.z);
        return kPi * kPi / 3.0 - 0.5 * l * l - Complex{0.0, kPi} * l - li2(1.0 / p.z).value;
      },
      right_half(-1.0), 1e-11, "real-axis dilog inversion extended to Im z < 0, Re z > 1"));
  v.push_back(make(
      "core.li2_inversion_upper_half",
      [](const SamplePoint& p) { return li2(p.z).value; },
      [](const SamplePoint& p) {
        const Complex l = principal_log(p.z);
        return kPi * kPi / 3.0 - 0.5 * l * l - Complex{0.0, kPi} * l - li2(1.0 / p.z).value;
      },
      right_half(1.0), 1e-11,
      "expected to fail: for Im z > 0 the sign of i pi log z flips, residual 2 pi |log z|", true));
  v.push_back(make(
      "core.li3_inversion_lower_half",
      [](const SamplePoint& p) { return li3(p.z).value; },
      [](const SamplePoint& p) {
        const Complex l = principal_log(p.z);
        return li3(1.0 / p.z).value + kPi * kPi / 3.0 * l - l * l * l / 6.0 -
               Complex{0.0, 0.5 * kPi} * l * l;
      },
      [](int n, std::mt19937_64& rng) { return right_half(-1.0)(std::min(n, 20), rng); }, 1e-8,
      "real-axis trilog inversion extended to Im z < 0, Re z > 1"));
  v.push_back(make(
      "core.li3_inversion_upper_half",
      [](const SamplePoint& p) { return li3(p.z).value; },
      [](const SamplePoint& p) {
        const Complex l = principal_log(p.z);
        return li3(1.0 / p.z).value + kPi * kPi / 3.0 * l - l * l * l / 6.0 -
               Complex{0.0, 0.5 * kPi} * l * l;
      },
      [](int n, std::mt19937_64& rng) { return right_half(1.0)(std::min(n, 20), rng); }, 1e-8,
      "expected to fail: for Im z > 0 the formula is off by i pi log^2 z", true));
  return v;
}

std::vector<IdentityRecord> prop1_suite() {
  const double z3 = zeta_int(3);
  std::vector<IdentityRecord> v;
  v.push_back(make(
      "prop1.unified_vs_taylor", [](const SamplePoint& p) { return harmonic_gf_unified(t_of(p)).value; },
      [](const SamplePoint& p) { return harmonic_gf_taylor(p.z).value; }, real_grid(-0.9, 0.9), 1e-10,
      "single-formula F(t) against its Taylor series"));
  v.push_back(make(
      "prop1.ramanujan_vs_unified",
      [](const SamplePoint& p) { return harmonic_gf_ramanujan(t_of(p)).value; },
      [](const SamplePoint& p) { return harmonic_gf_unified(t_of(p)).value; }, real_grid(0.0, 1.0),
      1e-10, "two closed forms of F on (0, 1)"));
  v.push_back(make(
      "prop1.ramanujan_vs_taylor",
      [](const SamplePoint& p) { return harmonic_gf_ramanujan(t_of(p)).value; },
      [](const SamplePoint& p) { return harmonic_gf_taylor(p.z).value; }, real_grid(0.0, 0.9), 1e-10,
      "closed form of F against its Taylor series"));
  v.push_back(make(
      "prop1.alternating_vs_unified",
      [](const SamplePoint& p) { return harmonic_gf_alternating(t_of(p)).value; },
      [](const SamplePoint& p) { return harmonic_gf_unified(-t_of(p)).value; },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = real_grid(0.0, 1.0)(n, rng);
        pts.push_back({re(1.0), 0});
        return pts;
      },
      1e-10, "the alternating sum is F(-t)"));
  v.push_back(make(
      "prop1.endpoints",
      [](const SamplePoint& p) {
        switch (p.order) {
          case 0: return harmonic_gf_unified(1.0).value;
          case 1: return harmonic_gf_unified(-1.0).value;
          case 2: return harmonic_gf_alternating(1.0).value;
          default: return harmonic_gf_ramanujan(1.0).value;
        }
      },
      [z3](const SamplePoint& p) { return re(p.order == 0 || p.order == 3 ? z3 : z3 / 8.0); },
      fixed({{{}, 0}, {{}, 1}, {{}, 2}, {{}, 3}}), 1e-11, "F(1) = zeta(3), F(-1) = zeta(3)/8"));
  v.push_back(make(
      "prop1.li3_one_minus",
      [](const SamplePoint& p) { return li3_one_minus_via_landen(t_of(p)).value; },
      [](const SamplePoint& p) { return li3(1.0 - t_of(p)).value; }, real_grid(0.0, 1.0), 1e-11,
      "Li3(1-t) from the Landen rearrangement"));
  v.push_back(make(
      "prop1.li3_one_minus_at_minus_one",
      [](const SamplePoint&) { return li3_one_minus_via_landen(-1.0).value; },
      [](const SamplePoint&) { return constant_by_name("Li3(2)").value; }, fixed({{}}), 1e-12,
      "continuation to t = -1 with log(-1) = i pi gives Li3(2)"));
  v.push_back(make(
      "prop1.euler_sums_series",
      [](const SamplePoint& p) {
        switch (p.order) {
          case 0: return harmonic_gf_taylor(0.5).value;
          case 1:
            return re(alternating_sum_accelerated(
                [](std::int64_t k) {
                  const double n = static_cast<double>(k + 2);
                  return harmonic_number(k + 1) / (n * n);
                },
                40));
          default: return hsum_alternating_n2().value;
        }
      },
      [z3](const SamplePoint& p) {
        const double l2 = std::numbers::ln2;
        switch (p.order) {
          case 0: return re(z3 / 8.0 - l2 * l2 * l2 / 6.0);
          case 1: return re(z3 / 8.0);
          default: return re(5.0 * z3 / 8.0);
        }
      },
      fixed({{{}, 0}, {{}, 1}, {{}, 2}}), 1e-9, "three harmonic Euler sums from (accelerated) series"));
  return v;
}

std::vector<IdentityRecord> prop2_suite() {
  std::vector<IdentityRecord> v;
  v.push_back(make(
      "prop2.cartesian_vs_series", [](const SamplePoint& p) { return dilog_via_integral(p.z).value; },
      [](const SamplePoint& p) { return polylog_series(2, -p.z).value; }, disk(0.7), 1e-10,
      "integral Li2(-z) against the series, |z| <= 0.7"));
  v.push_back(make(
      "prop2.polar_vs_cartesian",
      [](const SamplePoint& p) { return dilog_via_integral_polar(std::abs(p.z), std::arg(p.z)).value; },
      [](const SamplePoint& p) { return dilog_via_integral(p.z).value; }, box(-0.9, 3.0, -3.0, 3.0),
      1e-12, "same point in polar and Cartesian form"));
  v.push_back(make(
      "prop2.real_purity", [](const SamplePoint& p) { return re(dilog_via_integral(p.z).value.imag()); },
      constant({}), real_grid(-0.99, 5.0), 1e-12, "Im Li2(-x) = 0 for x > -1"));
  v.push_back(make(
      "prop2.imag_axis", [](const SamplePoint& p) { return re(im_li2_imag_axis(t_of(p))); },
      [](const SamplePoint& p) { return re(polylog_series(2, Complex{0.0, t_of(p)}).value.imag()); },
      real_grid(-0.75, 0.75), 1e-11, "Im Li2(iy) = int arctan(yt)/t dt"));
  v.push_back(make(
      "prop2.imag_axis_real_part",
      [](const SamplePoint& p) { return re(dilog_via_integral(Complex{0.0, t_of(p)}).value.real()); },
      [](const SamplePoint& p) { return re(0.25 * li2(-t_of(p) * t_of(p)).value.real()); },
      real_grid(-1.0, 1.0), 1e-10, "Re Li2(-iy) = Li2(-y^2)/4"));
  v.push_back(make(
      "prop2.diagonal",
      [](const SamplePoint& p) { return re(im_li2_diagonal(t_of(p), 1)); },
      [](const SamplePoint& p) { return re(dilog_via_integral(Complex{t_of(p), t_of(p)}).value.imag()); },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = real_grid(-0.7, 3.0)(n, rng);
        pts.push_back({re(1.0), 0});
        return pts;
      },
      1e-9, "Im Li2(-x-ix) from the reduced diagonal integral"));
  v.push_back(make(
      "prop2.diagonal_antisymmetry",
      [](const SamplePoint& p) { return re(im_li2_diagonal(t_of(p), -1)); },
      [](const SamplePoint& p) { return re(-im_li2_diagonal(t_of(p), 1)); }, real_grid(-0.7, 3.0),
      0.0, "Im Li2(-x+ix) = -Im Li2(-x-ix)"));
  v.push_back(make(
      "prop2.trilog_vs_series",
      [](const SamplePoint& p) { return trilog_via_double_integral(p.z).value; },
      [](const SamplePoint& p) { return polylog_series(3, -p.z).value; }, disk(0.7), 1e-8,
      "double integral Li3(-z) against the series, |z| <= 0.7"));
  v.push_back(make(
      "prop2.trilog_at_i", [](const SamplePoint&) { return trilog_via_double_integral(Complex{0, -1}).value; },
      [](const SamplePoint&) { return constant_by_name("Li3(i)").value; }, fixed({{}}), 1e-8,
      "Li3(i) from the double integral"));
  v.push_back(make(
      "prop2.plain_arctan_inside", [](const SamplePoint& p) { return dilog_plain_arctan(p.z).value; },
      [](const SamplePoint& p) { return polylog_series(2, p.z).value; }, disk(0.75), 1e-10,
      "plain arctan form is fine while Re w < 1"));
  v.push_back(make(
      "prop2.plain_arctan_witness", [](const SamplePoint& p) { return dilog_plain_arctan(p.z).value; },
      [](const SamplePoint& p) { return li2(p.z).value; },
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts{{Complex{2.0, 1.0}, 0}};
        std::vector<SamplePoint> more = box(1.2, 3.0, 0.3, 2.0)(n - 1, rng);
        pts.insert(pts.end(), more.begin(), more.end());
        return pts;
      },
      1e-10,
      "expected to fail: the plain arctan loses pi once 1 + zt leaves the right half-plane "
      "(w = 2+i residual about pi ln 2)",
      true));
  return v;
}

std::vector<IdentityRecord> prop3_suite() {
  std::vector<IdentityRecord> v;
  for (int p = 1; p <= 3; ++p) {
    for (Parity par : {Parity::even, Parity::odd}) {
      const std::string id = std::string("prop3.") + (par == Parity::even ? "even" : "odd") + "_p" +
                             std::to_string(p);
      v.push_back(make(
          id, [p, par](const SamplePoint& s) { return inversion_lhs(p, par, s.z); },
          [p, par](const SamplePoint& s) { return inversion_rhs(p, par, s.z); },
          [](int n, std::mt19937_64& rng) {
            std::vector<SamplePoint> pts;
            for (const SamplePoint& q : real_grid(0.0, 1.0)(n, rng))
              pts.push_back({std::polar(1.0, 2.0 * kPi * q.z.real()), 0});
            return pts;
          },
          1e-9, "inversion identity on the unit circle x = e^{2 pi i t}"));
    }
  }
  v.push_back(make(
      "prop3.off_circle",
      [](const SamplePoint& s) { return inversion_lhs(s.order, Parity::even, s.z) - inversion_rhs(s.order, Parity::even, s.z); },
      constant({}),
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts = box(-3.0, 3.0, -3.0, 3.0)(n, rng);
        for (std::size_t k = 0; k < pts.size(); ++k) pts[k].order = 2 + static_cast<int>(k % 2);
        return pts;
      },
      1e-9, "even identity for orders 4 and 6 off the unit circle"));
  v.push_back(make(
      "prop3.zeta_even_numeric",
      [](const SamplePoint& s) { return 0.5 * inversion_rhs(s.order, Parity::even, 1.0); },
      [](const SamplePoint& s) { return re(zeta_int(2 * s.order)); }, fixed({{{}, 1}, {{}, 2}, {{}, 3}}),
      1e-13, "half the x = 1 closure is zeta(2p)"));
  v.push_back(make(
      "prop3.zeta_even_exact",
      [](const SamplePoint& s) {
        const Rational r = zeta_even_over_pi_power(s.order);
        const Rational expected = s.order == 1 ? Rational(1, 6) : s.order == 2 ? Rational(1, 90) : Rational(1, 945);
        return re(r == expected ? 0.0 : 1.0);
      },
      constant({}), fixed({{{}, 1}, {{}, 2}, {{}, 3}}), 0.0,
      "zeta(2p)/pi^{2p} = 1/6, 1/90, 1/945 exactly"));
  v.push_back(make(
      "prop3.naive_closure", [](const SamplePoint&) { return inversion_lhs(1, Parity::even, 1.0); },
      [](const SamplePoint&) { return inversion_rhs_naive(2, 1.0); }, fixed({{}}), 1e-9,
      "expected to fail: -2 pi i/n! B_n(log x/(2 pi i)) at x = 1, n = 2 misses by |pi^2/3 + i pi/6|",
      true));
  v.push_back(make(
      "bernoulli.reflection_symmetry",
      [](const SamplePoint& s) {
        const BernoulliPoly& b = bernoulli_poly(s.order);
        const BernoulliPoly r = reflect_argument(b);
        bool same = true;
        for (int k = 0; k <= b.degree; ++k) {
          const Rational expected = s.order % 2 == 0 ? b.coeffs[k] : -b.coeffs[k];
          same = same && r.coeffs[k] == expected;
        }
        return re(same ? 0.0 : 1.0);
      },
      constant({}),
      [](int, std::mt19937_64&) {
        std::vector<SamplePoint> pts;
        for (int n = 0; n <= 20; ++n) pts.push_back({{}, n});
        return pts;
      },
      0.0, "B_n(1-x) = (-1)^n B_n(x) as exact polynomials, n <= 20"));
  v.push_back(make(
      "bernoulli.fourier_rate",
      [](const SamplePoint& s) {
        const int p = s.order;
        const double t = s.z.real();
        double worst = 0.0;
        // Larger N would measure rounding, about 1e-16 N^{2p-1}.
        for (std::int64_t n : {8, 32, 128}) {
          const double err = std::abs(fourier_bernoulli_partial(p, t, Parity::even, n) -
                                      bernoulli_eval(2 * p, t).real());
          worst = std::max(worst, err * std::pow(static_cast<double>(n), 2 * p - 1));
        }
        return re(worst);
      },
      constant({}),
      [](int n, std::mt19937_64& rng) {
        std::vector<SamplePoint> pts;
        for (int p = 1; p <= 3; ++p)
          for (const SamplePoint& q : real_grid(0.0, 1.0)(std::min(n, 20), rng)) pts.push_back({q.z, p});
        return pts;
      },
      0.2, "N^{2p-1} |partial sum - B_{2p}(t)| stays bounded"));
  return v;
}

std::vector<IdentityRecord> d2_suite() {
  std::vector<IdentityRecord> v;
  const auto& ledger = d2_ledger();
  for (std::size_t k = 0; k < ledger.size(); ++k) {
    v.push_back(make(
        "d2." + ledger[k].label, [k](const SamplePoint&) { return li2(d2_ledger()[k].target).value; },
        [k](const SamplePoint&) { return d2_ledger()[k].predicted(d2_constant().value.real()); },
        fixed({{}}), 1e-11, ledger[k].derivation));
  }
  return v;
}

std::vector<IdentityRecord> soliton_suite() {
  std::vector<IdentityRecord> v;
  v.push_back(make(
      "soliton.closed_vs_quadrature",
      [](const SamplePoint& s) { return re(soliton_moment_closed(s.order, s.z.real())); },
      [](const SamplePoint& s) { return re(sech2_moment_quadrature(s.order, s.z.real())); },
      [](int, std::mt19937_64&) {
        std::vector<SamplePoint> pts;
        for (int n = 0; n <= 6; ++n)
          for (double t : {0.0, 0.5, 1.0, 2.0}) pts.push_back({re(t), n});
        return pts;
      },
      1e-8, "closed Bernoulli moment against quadrature"));
  auto grid = [](int, std::mt19937_64&) {
    std::vector<SamplePoint> pts;
    for (int p = 1; p <= 2; ++p)
      for (double t : {0.0, 0.5}) pts.push_back({re(t), p});
    return pts;
  };
  for (Parity par : {Parity::even, Parity::odd}) {
    const bool even = par == Parity::even;
    v.push_back(make(
        std::string("soliton.real_exponent_") + (even ? "even" : "odd"),
        [par](const SamplePoint& s) {
          return re(soliton_moment_polylog(s.order, s.z.real(), par, MomentForm::real_exponent));
        },
        [even](const SamplePoint& s) {
          return re(sech2_moment_quadrature(even ? 2 * s.order : 2 * s.order + 1, s.z.real()));
        },
        grid, 1e-8, "polylog moment form with arguments -e^{-+2t}"));
  }
  v.push_back(make(
      "soliton.oscillatory_even",
      [](const SamplePoint&) { return re(soliton_moment_polylog(1, 0.0, Parity::even, MomentForm::oscillatory)); },
      [](const SamplePoint&) { return re(sech2_moment_quadrature(2, 0.0)); }, fixed({{}}), 1e-8,
      "expected to fail: prefactor (-1)^{p+1} with arguments -e^{-+2it} gives -pi^2/6 at p = 1, t = 0",
      true));
  v.push_back(make(
      "soliton.oscillatory_odd_t0",
      [](const SamplePoint& s) { return re(soliton_moment_polylog(s.order, 0.0, Parity::odd, MomentForm::oscillatory)); },
      constant({}), fixed({{{}, 1}, {{}, 2}}), 1e-12, "odd moments vanish at t = 0 in either form"));
  v.push_back(make(
      "soliton.even_moment_t0",
      [](const SamplePoint& s) { return re(std::abs(soliton_moment_closed(2 * s.order, 0.0))); },
      [](const SamplePoint& s) {
        const int p = s.order;
        return re(2.0 * factorial(2 * p) / std::ldexp(1.0, 2 * p - 1) *
                  (1.0 - std::ldexp(1.0, 1 - 2 * p)) * zeta_int(2 * p));
      },
      fixed({{{}, 1}, {{}, 2}, {{}, 3}}), 1e-10, "even moments at t = 0 through eta(2p)"));
  return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"core", "prop1", "prop2", "prop3", "d2", "soliton", "all"};
  return names;
}

std::vector<IdentityRecord> suite_records(std::string_view name) {
  if (name == "core") return core_suite();
  if (name == "prop1") return prop1_suite();
  if (name == "prop2") return prop2_suite();
  if (name == "prop3") return prop3_suite();
  if (name == "d2") return d2_suite();
  if (name == "soliton") return soliton_suite();
  if (name == "all") {
    std::vector<IdentityRecord> all;
    for (auto suite : {core_suite, prop1_suite, prop2_suite, prop3_suite, d2_suite, soliton_suite}) {
      for (auto& r : suite()) all.push_back(std::move(r));
    }
    return all;
  }
  throw DomainError("unknown suite: " + std::string(name));
}

}  // namespace polylog
