#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "neph/nephroid.hpp"
#include "neph/specfun.hpp"
#include "neph/subord.hpp"

using namespace neph::subord;
namespace specfun = neph::specfun;
namespace nephroid = neph::nephroid;

namespace {

constexpr double kPi = std::numbers::pi;

const BetaRoot& sqrt_root() {
    static const BetaRoot r = solve_sharp_beta(SubordCase::Sqrt);
    return r;
}

const BetaRoot& exp_root() {
    static const BetaRoot r = solve_sharp_beta(SubordCase::Exp);
    return r;
}

} // namespace

TEST_CASE("solution_value: normalization and fixed points") {
    for (SubordCase c : {SubordCase::Sqrt, SubordCase::Linear, SubordCase::Exp})
        CHECK(std::abs(solution_value({c, 0.7}, {0.0, 0.0}) - Complex(1.0, 0.0)) < 1e-15);

    CHECK(solution_value({SubordCase::Linear, 0.5}, {1.0, 0.0}).real() ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(solution_value({SubordCase::Exp, 1.0}, {1.0, 0.0}).real() ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

    // at the solved sharp constant the sqrt curve reaches the nephroid vertex 1/3
    const double beta_l = sqrt_root().beta_star;
    CHECK(std::abs(solution_value({SubordCase::Sqrt, beta_l}, {-1.0, 0.0}).real() - 1.0 / 3.0) <
          2e-6);

    CHECK_THROWS_AS(solution_value({SubordCase::Sqrt, -1.0}, {0.0, 0.0}), neph::ParameterError);
}

TEST_CASE("linear solution equals the terminating hypergeometric route") {
    std::mt19937 rng(31847);
    std::uniform_real_distribution<double> ub(0.05, 5.0);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double beta = ub(rng);
        const Complex z = std::polar(ur(rng), 2.0 * kPi * ur(rng));
        const Complex closed = solution_value({SubordCase::Linear, beta}, z);
        const Complex series =
            specfun::gauss_2f1({-1.0, 1.0 / beta, 1.0 / beta + 1.0}, -z).value;
        CHECK(std::abs(closed - series) < 1e-14);
    }
}

TEST_CASE("ode residual: the curves solve q + beta z q' = target") {
    CHECK(ode_residual({SubordCase::Linear, 0.8}, {0.5, 0.0}) < 1e-16);
    CHECK(ode_residual({SubordCase::Sqrt, 0.3}, {0.4, 0.3}) < 1e-9);
    CHECK(ode_residual({SubordCase::Exp, 2.0}, {-0.7, 0.0}) < 1e-9);

    for (double beta : {0.2, 0.5, 1.14016}) {
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                const Complex z{-0.65 + 0.325 * i, -0.65 + 0.325 * j};
                for (SubordCase c : {SubordCase::Sqrt, SubordCase::Linear, SubordCase::Exp})
                    CHECK(ode_residual({c, beta}, z) < 1e-9);
            }
        }
    }

    CHECK_THROWS_AS(ode_residual({SubordCase::Sqrt, 1.0}, {0.99, 0.0}), neph::ParameterError);
}

TEST_CASE("coefficient_C: closed forms and recurrence oracle") {
    const double g_half_neg = -2.0 * std::sqrt(kPi); // Gamma(-1/2)
    CHECK(coefficient_C(0, 0.77) == doctest::Approx(g_half_neg).epsilon(1e-15));
    CHECK(coefficient_C(1, 1.0) == doctest::Approx(-std::sqrt(kPi) / 2.0).epsilon(1e-15));

    // independent recurrence for r_j = Gamma(j-1/2)/j!
    const double beta = 0.41;
    double r = g_half_neg;
    for (int j = 0; j <= 40; ++j) {
        const double expected = ((j % 2 == 0) ? 1.0 : -1.0) * r / (1.0 + j * beta);
        CHECK(coefficient_C(j, beta) == doctest::Approx(expected).epsilon(1e-12));
        r *= (j - 0.5) / (j + 1.0);
    }
}

TEST_CASE("the root condition: sum of Gamma(j-1/2)/(j!(1+j beta)) reaches 1/3") {
    // equivalently sum_j (-1)^j C(j, beta) / Gamma(-1/2), the theta = pi sum
    const double beta = sqrt_root().beta_star;
    const double g_half_neg = -2.0 * std::sqrt(kPi);
    double r = g_half_neg; // r_j = Gamma(j - 1/2) / j!
    double sum = 0.0;
    for (long j = 0; j < 2'000'000; ++j) {
        sum += r / (1.0 + j * beta) / g_half_neg;
        r *= (j - 0.5) / (j + 1.0);
    }
    CHECK(std::abs(sum - 1.0 / 3.0) < 2e-6);
    // spot-check the identity against coefficient_C itself
    for (int j : {0, 1, 5, 17})
        CHECK(coefficient_C(j, beta) * ((j % 2 == 0) ? 1.0 : -1.0) ==
              doctest::Approx(specfun::pochhammer(-0.5, j) * g_half_neg /
                              (specfun::pochhammer(1.0, j) * (1.0 + j * beta)))
                  .epsilon(1e-12));
}

TEST_CASE("criterion limits") {
    CHECK(std::abs(tau(1e6) - 2.0 / 3.0) < 1e-5);
    CHECK(std::abs(delta(1e-4) - (5.0 / 3.0 - std::sqrt(2.0))) < 1e-3);
    CHECK(std::abs(mu(1e-6) - (1.0 / std::exp(1.0) - 1.0 / 3.0)) < 1e-5);
    CHECK(std::abs(rho(1e-6) - (5.0 / 3.0 - std::exp(1.0))) < 1e-5);
}

TEST_CASE("criteria vanish at the solved roots") {
    CHECK(std::abs(tau(sqrt_root().beta_star)) < 5e-9);
    CHECK(std::abs(rho(exp_root().beta_star)) < 1e-9);
    // the headline constants are stated to 6 digits; the roots agree at that scale
    CHECK(std::abs(tau(0.158379)) < 1e-5);
}

TEST_CASE("monotonicity of the criteria along a beta grid") {
    double prev_tau = tau(0.05);
    double prev_mu = mu(0.05);
    double prev_rho = rho(0.05);
    CHECK(delta(0.05) > 0.0);
    for (int i = 2; i <= 20; ++i) { // coarse version; the acceptance suite runs the full grid
        const double beta = 0.05 + 0.25 * (i - 1);
        const double t = tau(beta);
        const double m = mu(beta);
        const double rr = rho(beta);
        CHECK(t > prev_tau);
        CHECK(m > prev_mu);
        CHECK(rr > prev_rho);
        CHECK(delta(beta) > 0.0);
        prev_tau = t;
        prev_mu = m;
        prev_rho = rr;
    }
}

TEST_CASE("solve_sharp_beta: linear is exact, others match their criteria") {
    const BetaRoot lin = solve_sharp_beta(SubordCase::Linear);
    CHECK(lin.beta_star == 0.5);
    CHECK(lin.residual == 0.0);
    CHECK(lin.bracket_lo <= lin.beta_star);
    CHECK(lin.beta_star <= lin.bracket_hi);
    const auto gaps = linear_necessity(0.5);
    CHECK(std::abs(gaps.first) < 1e-15);
    CHECK(std::abs(gaps.second) < 1e-15);

    const BetaRoot& bl = sqrt_root();
    CHECK(std::abs(bl.beta_star - 0.158379) < 1e-5);
    CHECK(bl.bracket_lo <= bl.beta_star);
    CHECK(bl.beta_star <= bl.bracket_hi);
    CHECK(bl.bracket_hi - bl.bracket_lo <= 1e-9);
    CHECK(std::abs(bl.residual) < 1e-9);
    CHECK(bl.iterations > 0);

    const BetaRoot& be = exp_root();
    CHECK(be.bracket_hi - be.bracket_lo <= 1e-9);
    CHECK(std::abs(rho(be.bracket_lo)) >= 0.0); // evaluable at the bracket
    CHECK(rho(be.bracket_lo) * rho(be.bracket_hi) <= 0.0);
    CHECK(std::abs(be.residual) < 1e-9);
}

TEST_CASE("d2 and d: closed forms and cross-checks") {
    for (double theta : {0.0, 0.7, kPi / 2.0, 2.9, kPi})
        CHECK(d2(SubordCase::Linear, theta, 0.5) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));

    // d2 at theta = 0 equals |q(1) - 1|^2 through the series route
    for (double beta : {0.2, 0.7, 1.5}) {
        const Complex q1 = solution_value({SubordCase::Sqrt, beta}, {1.0, 0.0});
        CHECK(std::abs(d2(SubordCase::Sqrt, 0.0, beta) - std::norm(q1 - Complex(1.0, 0.0))) <
              1e-10);
    }

    const double beta_e = exp_root().beta_star;
    CHECK(std::abs(d2(SubordCase::Exp, 0.0, beta_e) - 4.0 / 9.0) < 1e-6);

    // symmetry in theta about the real axis
    std::mt19937 rng(8675309);
    std::uniform_real_distribution<double> ut(0.0, kPi);
    for (int i = 0; i < 12; ++i) {
        const double theta = ut(rng);
        for (SubordCase c : {SubordCase::Sqrt, SubordCase::Linear, SubordCase::Exp})
            CHECK(std::abs(d(c, theta, 0.9) - d(c, 2.0 * kPi - theta, 0.9)) < 1e-12);
    }
}

TEST_CASE("sharpness touching values of d") {
    const double beta_l = sqrt_root().beta_star;
    CHECK(std::abs(d(SubordCase::Sqrt, kPi, beta_l)) < 1e-7);
    const double beta_e = exp_root().beta_star;
    CHECK(std::abs(d(SubordCase::Exp, 0.0, beta_e)) < 1e-6);
    CHECK(nephroid::d1(0.0) == doctest::Approx(d2(SubordCase::Linear, 0.0, 0.5)).epsilon(1e-13));
}

TEST_CASE("overlay curves touch the nephroid at the sharp constants") {
    CHECK(std::abs(boundary_point(SubordCase::Sqrt, kPi, sqrt_root().beta_star) -
                   nephroid::phi_ne({-1.0, 0.0})) < 1e-6);
    CHECK(std::abs(boundary_point(SubordCase::Exp, 0.0, exp_root().beta_star) -
                   nephroid::phi_ne({1.0, 0.0})) < 1e-6);
}

TEST_CASE("reference table rows reproduce") {
    // reference values for the sqrt case; column parameters as printed
    CHECK(std::abs(d(SubordCase::Sqrt, 3.0, 0.158379) - 0.0893992) < 5e-6);
    CHECK(std::abs(d(SubordCase::Sqrt, 3.14159, 0.1583737) - (-2.22177e-7)) < 5e-12);
}

TEST_CASE("containment scans and verdicts") {
    const double beta_l = sqrt_root().beta_star;

    const ContainmentReport ok = containment_scan(SubordCase::Sqrt, beta_l, 512);
    CHECK(ok.verdict);
    CHECK(std::abs(ok.argmin_theta - kPi) < 1e-2);
    CHECK(ok.theta_grid.front() == 0.0);
    CHECK(ok.theta_grid.back() == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(ok.theta_grid.size() == 512);
    CHECK(ok.d_values.size() == 512);
    CHECK(ok.min_d >= -1e-9);

    const ContainmentReport bad = containment_scan(SubordCase::Sqrt, 0.1583737, 512);
    CHECK_FALSE(bad.verdict);
    CHECK(std::abs(bad.min_d - (-2.39248e-7)) < 5e-12);
    CHECK(std::abs(bad.argmin_theta - kPi) < 1e-3);

    const ContainmentReport lin = containment_scan(SubordCase::Linear, 0.5, 128);
    CHECK(lin.verdict);
    CHECK(std::abs(lin.min_d) < 1e-12);

    CHECK_THROWS_AS(containment_scan(SubordCase::Sqrt, beta_l, 32), neph::ParameterError);
}

TEST_CASE("sampled solution boundaries stay inside the nephroid for beta >= root") {
    const nephroid::BoundaryCurve dense = nephroid::dense_boundary_polyline(4096);
    struct Pick {
        SubordCase c;
        double beta;
    };
    const Pick picks[] = {{SubordCase::Sqrt, sqrt_root().beta_star},
                          {SubordCase::Sqrt, 2.0 * sqrt_root().beta_star},
                          {SubordCase::Linear, 0.5},
                          {SubordCase::Exp, exp_root().beta_star},
                          {SubordCase::Exp, 2.0 * exp_root().beta_star}};
    for (const Pick& pick : picks) {
        for (int i = 0; i <= 64; ++i) {
            const double theta = kPi * i / 64.0;
            const Complex w = boundary_point(pick.c, theta, pick.beta);
            const nephroid::PlanePoint p{w.real(), w.imag()};
            if (nephroid::distance_to_boundary(p, dense) < 1e-7)
                continue; // sharpness touching point
            CHECK(nephroid::contains(p, dense));
        }
    }
}

TEST_CASE("kustner_bounds") {
    const auto [lo1, hi1] = kustner_bounds(0.5, 2.0, 3.0);
    CHECK(lo1 == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(hi1 == doctest::Approx(1.0 - 1.0 / 6.0).epsilon(1e-15));

    const auto [lo2, hi2] = kustner_bounds(1.0, 1.0, 1.0);
    CHECK(lo2 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(hi2 == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(kustner_bounds(2.0, 1.0, 3.0), neph::ParameterError);
    CHECK_THROWS_AS(kustner_bounds(0.0, 1.0, 2.0), neph::ParameterError);

    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> u(0.01, 5.0);
    for (int i = 0; i < 100; ++i) {
        double a = u(rng), b = u(rng), c = u(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        const auto [lo, hi] = kustner_bounds(a, b, c);
        CHECK(lo <= hi + 1e-15);
    }

    // the sqrt-case lower bound equals (3 + 5 beta) / (2 (2 + 3 beta))
    std::uniform_real_distribution<double> ub(0.05, 5.0);
    for (int i = 0; i < 20; ++i) {
        const double beta = ub(rng);
        const auto [lo, hi] = kustner_bounds(0.5, 1.0 / beta + 1.0, 1.0 / beta + 2.0);
        CHECK(std::abs(lo - (3.0 + 5.0 * beta) / (2.0 * (2.0 + 3.0 * beta))) < 1e-14);
    }
}

TEST_CASE("mm_N and mm_condition") {
    CHECK(mm_N(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(mm_N(1.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(mm_N(1.0 / 3.0) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(mm_N(std::nextafter(1.0 / 3.0, 0.0)) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));

    for (double beta : {0.1, 2.0, 6.0})
        CHECK(mm_condition(1.0 / beta + 1.0, 1.0 / beta + 2.0));
    CHECK_FALSE(mm_condition(1.0, 1.0));
}

TEST_CASE("numeric starlikeness scan") {
    ThetaEvaluator identity;
    identity.value = [](Complex z) { return z; };
    CHECK(numeric_starlikeness_scan(identity, 256) == doctest::Approx(1.0).epsilon(1e-9));

    const double beta_l = sqrt_root().beta_star;
    const auto [lo, hi] = kustner_bounds(0.5, 1.0 / beta_l + 1.0, 1.0 / beta_l + 2.0);
    const double min_re = numeric_starlikeness_scan(theta_evaluator({SubordCase::Sqrt, beta_l}), 256);
    CHECK(min_re >= lo - 1e-6);
    CHECK(min_re <= hi + 1e-6);

    CHECK(numeric_starlikeness_scan(theta_evaluator({SubordCase::Linear, 0.7}), 256) ==
          doctest::Approx(1.0).epsilon(1e-9));

    ThetaEvaluator vanishing;
    vanishing.value = [](Complex z) { return z - Complex(0.999, 0.0); };
    CHECK_THROWS_AS(numeric_starlikeness_scan(vanishing, 256), neph::Error);
    CHECK_THROWS_AS(numeric_starlikeness_scan(identity, 100), neph::ParameterError);
}

TEST_CASE("starlikeness_check bundles the premises per case") {
    const StarlikenessCheck sq = starlikeness_check({SubordCase::Sqrt, 1.0}, 256);
    CHECK(sq.has_kustner);
    CHECK(sq.lower_bound == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(sq.lower_bound <= sq.upper_bound);
    CHECK(sq.numeric_min_re >= sq.lower_bound - 1e-6);

    const StarlikenessCheck ex = starlikeness_check({SubordCase::Exp, 2.0}, 256);
    CHECK(ex.has_mm);
    CHECK(ex.mm_condition_met);
    CHECK(ex.numeric_min_re >= -1e-9);
}

TEST_CASE("g_operator") {
    const std::vector<double> ident{0.0, 1.0};
    CHECK(std::abs(g_operator(ident, {0.3, -0.4})) < 1e-15);
    CHECK(std::abs(g_operator(ident, {0.0, 0.0})) == 0.0);

    // f = z + z^2/2 at z = 1/2: hand value 2/15
    const std::vector<double> fq{0.0, 1.0, 0.5};
    CHECK(g_operator(fq, {0.5, 0.0}).real() == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
    CHECK(std::abs(g_operator(fq, {0.5, 0.0}).imag()) < 1e-15);

    // Koebe-type rational oracle: f = z/(1-z), G = 1 - 1/(1-z) + 2z/(1-z)
    std::vector<double> koebe(60, 1.0);
    koebe[0] = 0.0;
    const Complex z{0.0, 0.3};
    const Complex expected =
        Complex(1.0, 0.0) - 1.0 / (Complex(1.0, 0.0) - z) + 2.0 * z / (Complex(1.0, 0.0) - z);
    CHECK(std::abs(g_operator(koebe, z) - expected) < 1e-10);

    // f' vanishes inside the disk: f = z - z^2 has f'(1/2) = 0
    const std::vector<double> bad{0.0, 1.0, -1.0};
    CHECK_THROWS_AS(g_operator(bad, {0.5, 0.0}), neph::Error);
    CHECK_THROWS_AS(g_operator(std::vector<double>{0.0, 2.0}, {0.1, 0.0}), neph::ParameterError);
}

TEST_CASE("target_membership") {
    for (SubordCase c : {SubordCase::Sqrt, SubordCase::Linear, SubordCase::Exp})
        CHECK(target_membership(c, {1.0, 0.0}));

    CHECK_FALSE(target_membership(SubordCase::Sqrt, {std::sqrt(2.0), 0.0}));
    CHECK(target_membership(SubordCase::Sqrt, {1.2, 0.0}));
    CHECK_FALSE(target_membership(SubordCase::Sqrt, {0.0, 1.0}));

    CHECK(target_membership(SubordCase::Linear, {1.9, 0.0}));
    CHECK_FALSE(target_membership(SubordCase::Linear, {2.1, 0.0}));

    CHECK_FALSE(target_membership(SubordCase::Exp, {std::exp(1.0), 0.0}));
    CHECK(target_membership(SubordCase::Exp, {std::exp(0.999), 0.0}));
    CHECK_THROWS_AS(target_membership(SubordCase::Exp, {-0.5, 0.0}), neph::ParameterError);
    CHECK_THROWS_AS(target_membership(SubordCase::Exp, {0.0, 0.0}), neph::ParameterError);
}

TEST_CASE("containment verdict flips across the sharp constant") {
    const double beta_l = sqrt_root().beta_star;
    CHECK_FALSE(containment_scan(SubordCase::Sqrt, beta_l * 0.999, 256).verdict);
    CHECK(containment_scan(SubordCase::Sqrt, beta_l * 1.001, 256).verdict);
}
