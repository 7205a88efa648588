#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "neph/errors.hpp"

namespace neph::subord {

using Complex = std::complex<double>;

// The three right-hand sides of p(z) + beta z p'(z) < target:
// sqrt(1+z), 1+z, and e^z.
enum class SubordCase { Sqrt, Linear, Exp };

std::string_view case_name(SubordCase c);
SubordCase case_from_name(std::string_view name);

// One analytic solution q of q(z) + beta z q'(z) = target(z), q(0) = 1,
// tagged by case and beta > 0.
struct SolutionCurve {
    SubordCase kind = SubordCase::Sqrt;
    double beta = 1.0;
};

// A solved sharp constant with its bracketing interval, the criterion residual
// at beta_star, and the bisection count.
struct BetaRoot {
    SubordCase kind = SubordCase::Sqrt;
    double beta_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// theta-grid scan of d(theta, beta) over [0, pi] with refined minimum and the
// containment verdict.
struct ContainmentReport {
    SubordCase kind = SubordCase::Sqrt;
    double beta = 0.0;
    std::vector<double> theta_grid;
    std::vector<double> d_values;
    double min_d = 0.0;
    double argmin_theta = 0.0;
    bool verdict = false;
};

// Starlikeness premises for a case's Theta function: the analytic bounds that
// apply to it plus an empirical grid minimum of Re(z Theta'/Theta).
struct StarlikenessCheck {
    bool has_kustner = false;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    bool has_mm = false;
    bool mm_condition_met = false;
    double numeric_min_re = 0.0;
};

// Target function of the case: sqrt(1+z) (principal branch), 1+z, or e^z.
Complex target_value(SubordCase c, Complex z);

// Solution-curve value: SqrtCase F(-1/2, 1/b; 1/b+1; -z), LinearCase
// 1 + z/(1+b) in closed form, ExpCase Phi(1/b; 1/b+1; z).
Complex solution_value(const SolutionCurve& s, Complex z);

// dq/dz via the hypergeometric derivative identities (closed form for linear).
Complex solution_derivative(const SolutionCurve& s, Complex z);

// |q(z) + beta z q'(z) - target(z)| for |z| <= 0.95.
double ode_residual(const SolutionCurve& s, Complex z);

// C(j, beta) = (-1)^j Gamma(-1/2 + j) / (j! (1 + j beta)), the j-th boundary
// Fourier coefficient of the sqrt-case curve up to the 1/Gamma(-1/2) prefactor.
double coefficient_C(int j, double beta);

// Sharp-constant criteria. tau and delta are the sqrt-case endpoint gaps,
// mu and rho the exp-case ones; all evaluated as hypergeometric series at
// z = +-1 under the specfun truncation rule.
double tau(double beta);
double delta(double beta);
double mu(double beta);
double rho(double beta);

// The two linear-case necessity gaps, evaluated through the terminating
// series: F(-1,1/b;1/b+1;1) - 1/3 and 5/3 - F(-1,1/b;1/b+1;-1).
// Both vanish exactly at beta = 1/2.
std::pair<double, double> linear_necessity(double beta);

// Sharp constant of the case: bisection on tau (bracket [0.01, 10]) or rho
// ([0.1, 10]) to bracket width 1e-9; the sqrt root is then polished against
// the integral-representation criterion. LinearCase returns exactly 1/2.
BetaRoot solve_sharp_beta(SubordCase c);

// Boundary point of the solution curve at angle theta, evaluated by the
// route that certifies the most accuracy on |z| = 1: the Euler integral for
// the sqrt case, the (entire) Kummer series for the exp case, closed form
// for the linear case.
Complex boundary_point(SubordCase c, double theta, double beta);

// Squared distance from (1, 0) to the case's boundary point at theta.
// LinearCase: 1/(1+beta)^2 for every theta.
double d2(SubordCase c, double theta, double beta);

// d(theta, beta) = d1(theta) - d2(theta, beta).
double d(SubordCase c, double theta, double beta);

// Scan d over a uniform n-point grid on [0, pi] (endpoints included), refine
// around the coarse argmin by golden section to 1e-10 in theta, and verdict
// min_d >= -verdict_tol. Every sampled curve point is cross-checked against
// nephroid::contains; a conflict with the d-criterion raises DiscrepancyError.
ContainmentReport containment_scan(SubordCase c, double beta, int n, double verdict_tol = 1e-9);

// Kustner's starlikeness-order bounds for zF(a,b;c;z), 0 < a <= b <= c:
// (1 - ab/(b+c), 1 - ab/(2c)).
std::pair<double, double> kustner_bounds(double a, double b, double c);

// N(a) = |a| + 1/2 for |a| >= 1/3, 3 a^2 / 2 + 2/3 for |a| <= 1/3.
double mm_N(double a);

// The inequality the exp-case proof uses: c - 1 >= N(a - 1).
bool mm_condition(double a, double c);

// Evaluator for a Theta function on |z| <= 0.999. If derivative is empty,
// the scan falls back to central differences with step 1e-5.
struct ThetaEvaluator {
    std::function<Complex(Complex)> value;
    std::function<Complex(Complex)> derivative;
};

// Theta(z) = beta z q'(z) of the case, with its analytic derivative.
ThetaEvaluator theta_evaluator(const SolutionCurve& s);

// Empirical minimum of Re(z Theta'(z)/Theta(z)) over 8 rings of n >= 256
// points with outer radius 0.999. A lower estimate of the starlikeness
// order, not a certificate.
double numeric_starlikeness_scan(const ThetaEvaluator& ev, int n);

// Bundle the analytic premises and the numeric scan for a case's Theta.
StarlikenessCheck starlikeness_check(const SolutionCurve& s, int n = 256);

// G(z) = 1 - z f'(z)/f(z) + z f''(z)/f'(z) from the power-series coefficients
// of a normalized f (coeffs[0] = 0, coeffs[1] = 1). G(0) = 0 by the limit.
Complex g_operator(std::span<const double> f_coeffs, Complex z);

// Membership of w in the open target domain of the case: the right lemniscate
// lobe |w^2-1| < 1, Re w > 0; the disk |w-1| < 1; or |log w| < 1 (principal
// branch; the closed negative real axis is an error).
bool target_membership(SubordCase c, Complex w);

} // namespace neph::subord
