#include "neph/subord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "neph/nephroid.hpp"
#include "neph/specfun.hpp"

namespace neph::subord {

namespace {

constexpr double kPi = std::numbers::pi;

using specfun::GaussParams;
using specfun::KummerParams;

void require_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw ParameterError("beta must be finite and strictly positive");
}

GaussParams sqrt_params(double beta) {
    return {-0.5, 1.0 / beta, 1.0 / beta + 1.0};
}

KummerParams exp_params(double beta) {
    return {1.0 / beta, 1.0 / beta + 1.0};
}

Complex unit_point(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    // The sharpness checks evaluate exactly at theta in {0, pi}; snap the
    // rounding dust so the boundary routes see the real axis exactly.
    if (std::abs(s) < 1e-14) {
        s = 0.0;
        c = (c > 0.0) ? 1.0 : -1.0;
    }
    return {c, s};
}

struct BisectResult {
    double lo = 0.0;
    double hi = 0.0;
    double root = 0.0;
};

BisectResult bisect(const std::function<double(double)>& f, double lo, double hi, double width_tol,
                    int& iterations, const char* what) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0)
        return {lo, lo, lo};
    if (fhi == 0.0)
        return {hi, hi, hi};
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketError(std::string(what) + ": criterion has the same sign at both endpoints");
    while (hi - lo > width_tol) {
        const double mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi))
            break;
        const double fmid = f(mid);
        ++iterations;
        if (fmid == 0.0)
            return {mid, mid, mid};
        if ((fmid > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return {lo, hi, 0.5 * (lo + hi)};
}

struct GoldenMin {
    double theta;
    double value;
};

GoldenMin golden_minimize(const std::function<double(double)>& f, double a, double b,
                          double theta_tol) {
    constexpr double invphi = 0.6180339887498948482;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > theta_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 <= f2) ? GoldenMin{x1, f1} : GoldenMin{x2, f2};
}

} // namespace

std::string_view case_name(SubordCase c) {
    switch (c) {
    case SubordCase::Sqrt: return "sqrt";
    case SubordCase::Linear: return "linear";
    case SubordCase::Exp: return "exp";
    }
    throw ParameterError("unknown case tag");
}

SubordCase case_from_name(std::string_view name) {
    if (name == "sqrt")
        return SubordCase::Sqrt;
    if (name == "linear")
        return SubordCase::Linear;
    if (name == "exp")
        return SubordCase::Exp;
    throw ParameterError("unknown case name: " + std::string(name));
}

Complex target_value(SubordCase c, Complex z) {
    switch (c) {
    case SubordCase::Sqrt: return std::sqrt(Complex(1.0, 0.0) + z);
    case SubordCase::Linear: return Complex(1.0, 0.0) + z;
    case SubordCase::Exp: return std::exp(z);
    }
    throw ParameterError("unknown case tag");
}

Complex solution_value(const SolutionCurve& s, Complex z) {
    require_beta(s.beta);
    switch (s.kind) {
    case SubordCase::Sqrt: return specfun::gauss_2f1(sqrt_params(s.beta), -z).value;
    case SubordCase::Linear: return Complex(1.0, 0.0) + z / (1.0 + s.beta);
    case SubordCase::Exp: return specfun::kummer_1f1(exp_params(s.beta), z).value;
    }
    throw ParameterError("unknown case tag");
}

Complex solution_derivative(const SolutionCurve& s, Complex z) {
    require_beta(s.beta);
    switch (s.kind) {
    case SubordCase::Sqrt:
        // d/dz F(a,b;c;-z) = -(ab/c) F(a+1,b+1;c+1;-z)
        return -specfun::gauss_2f1_derivative(sqrt_params(s.beta), -z).value;
    case SubordCase::Linear: return Complex(1.0 / (1.0 + s.beta), 0.0);
    case SubordCase::Exp: return specfun::kummer_1f1_derivative(exp_params(s.beta), z).value;
    }
    throw ParameterError("unknown case tag");
}

double ode_residual(const SolutionCurve& s, Complex z) {
    if (std::abs(z) > 0.95 + 1e-12)
        throw ParameterError("ode_residual requires |z| <= 0.95");
    const Complex lhs = solution_value(s, z) + s.beta * z * solution_derivative(s, z);
    return std::abs(lhs - target_value(s.kind, z));
}

double coefficient_C(int j, double beta) {
    require_beta(beta);
    if (j < 0)
        throw ParameterError("coefficient index must be non-negative");
    // r_j = Gamma(j - 1/2) / j!, grown by recurrence from Gamma(-1/2).
    double r = -2.0 * std::sqrt(kPi);
    for (int k = 0; k < j; ++k)
        r *= (k - 0.5) / (k + 1.0);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * r / (1.0 + j * beta);
}

double tau(double beta) {
    require_beta(beta);
    return specfun::gauss_2f1(sqrt_params(beta), Complex(1.0, 0.0)).value.real() - 1.0 / 3.0;
}

double delta(double beta) {
    require_beta(beta);
    return 5.0 / 3.0 - specfun::gauss_2f1(sqrt_params(beta), Complex(-1.0, 0.0)).value.real();
}

double mu(double beta) {
    require_beta(beta);
    return specfun::kummer_1f1(exp_params(beta), Complex(-1.0, 0.0)).value.real() - 1.0 / 3.0;
}

double rho(double beta) {
    require_beta(beta);
    return 5.0 / 3.0 - specfun::kummer_1f1(exp_params(beta), Complex(1.0, 0.0)).value.real();
}

std::pair<double, double> linear_necessity(double beta) {
    require_beta(beta);
    const GaussParams p{-1.0, 1.0 / beta, 1.0 / beta + 1.0};
    const double at_plus = specfun::gauss_2f1(p, Complex(1.0, 0.0)).value.real();
    const double at_minus = specfun::gauss_2f1(p, Complex(-1.0, 0.0)).value.real();
    return {at_plus - 1.0 / 3.0, 5.0 / 3.0 - at_minus};
}

BetaRoot solve_sharp_beta(SubordCase c) {
    BetaRoot out;
    out.kind = c;
    constexpr double kWidthTol = 1e-9;

    if (c == SubordCase::Linear) {
        // Both necessity gaps reduce to beta >= 1/2 in closed form, so the
        // root and its residual are exact.
        out.beta_star = 0.5;
        out.bracket_lo = 0.5 - 5e-10;
        out.bracket_hi = 0.5 + 5e-10;
        out.residual = 0.0;
        out.iterations = 0;
        return out;
    }

    if (c == SubordCase::Exp) {
        int iters = 0;
        const BisectResult r = bisect([](double b) { return rho(b); }, 0.1, 10.0, kWidthTol, iters,
                                      "solve_sharp_beta(exp)");
        out.beta_star = r.root;
        out.bracket_lo = r.lo;
        out.bracket_hi = r.hi;
        out.residual = rho(r.root);
        out.iterations = iters;
        return out;
    }

    // Sqrt: series criterion first, then polish against the independent
    // integral route, whose root carries no series-truncation bias.
    int iters = 0;
    const BisectResult stage1 = bisect([](double b) { return tau(b); }, 0.01, 10.0, kWidthTol,
                                       iters, "solve_sharp_beta(sqrt)");

    auto f_int = [](double b) {
        return specfun::gauss_2f1_euler_integral(sqrt_params(b), Complex(1.0, 0.0), 1e-13).real() -
               1.0 / 3.0;
    };
    double width = 2e-8;
    double lo = stage1.root - width, hi = stage1.root + width;
    while ((f_int(lo) > 0.0) == (f_int(hi) > 0.0)) {
        width *= 4.0;
        if (width > 1e-4)
            throw BracketError("solve_sharp_beta(sqrt refine): no sign change near series root");
        lo = stage1.root - width;
        hi = stage1.root + width;
    }
    const BisectResult stage2 = bisect(f_int, lo, hi, 2e-14, iters, "solve_sharp_beta(sqrt refine)");
    out.beta_star = stage2.root;
    out.bracket_lo = stage2.lo;
    out.bracket_hi = stage2.hi;
    out.residual = f_int(stage2.root);
    out.iterations = iters;
    return out;
}

Complex boundary_point(SubordCase c, double theta, double beta) {
    require_beta(beta);
    const Complex w = unit_point(theta);
    switch (c) {
    case SubordCase::Sqrt:
        return specfun::gauss_2f1_euler_integral(sqrt_params(beta), -w, 2e-13);
    case SubordCase::Linear: return Complex(1.0, 0.0) + w / (1.0 + beta);
    case SubordCase::Exp: return specfun::kummer_1f1(exp_params(beta), w).value;
    }
    throw ParameterError("unknown case tag");
}

double d2(SubordCase c, double theta, double beta) {
    require_beta(beta);
    if (c == SubordCase::Linear) {
        const double r = 1.0 + beta;
        return 1.0 / (r * r);
    }
    const Complex w = boundary_point(c, theta, beta) - Complex(1.0, 0.0);
    return std::norm(w);
}

double d(SubordCase c, double theta, double beta) {
    return nephroid::d1(theta) - d2(c, theta, beta);
}

ContainmentReport containment_scan(SubordCase c, double beta, int n, double verdict_tol) {
    require_beta(beta);
    if (n < 64)
        throw ParameterError("containment scan needs n >= 64");
    if (!(verdict_tol > 0.0))
        throw ParameterError("verdict tolerance must be positive");

    ContainmentReport rep;
    rep.kind = c;
    rep.beta = beta;
    rep.theta_grid.reserve(n);
    rep.d_values.reserve(n);

    std::vector<Complex> points;
    points.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double theta = kPi * i / (n - 1);
        const Complex w = boundary_point(c, theta, beta);
        rep.theta_grid.push_back(theta);
        points.push_back(w);
        rep.d_values.push_back(nephroid::d1(theta) - std::norm(w - Complex(1.0, 0.0)));
    }

    size_t imin = 0;
    for (size_t i = 1; i < rep.d_values.size(); ++i)
        if (rep.d_values[i] < rep.d_values[imin])
            imin = i;
    rep.min_d = rep.d_values[imin];
    rep.argmin_theta = rep.theta_grid[imin];

    const double lo = rep.theta_grid[imin > 0 ? imin - 1 : 0];
    const double hi = rep.theta_grid[std::min(imin + 1, rep.theta_grid.size() - 1)];
    if (hi > lo) {
        auto dval = [&](double theta) { return d(c, theta, beta); };
        const GoldenMin refined = golden_minimize(dval, lo, hi, 1e-10);
        if (refined.value < rep.min_d) {
            rep.min_d = refined.value;
            rep.argmin_theta = refined.theta;
        }
    }
    rep.verdict = rep.min_d >= -verdict_tol;

    // Independent geometric check of every sampled curve point. Points inside
    // the touching band are adjudicated by d alone. Near the cusps the same-
    // theta distance comparison can flag an interior point as outside (it is
    // a one-sided criterion there), so only the dangerous direction -- a point
    // actually outside while d clears the margin -- is a reportable conflict.
    const nephroid::BoundaryCurve polyline = nephroid::dense_boundary_polyline(4096);
    for (size_t i = 0; i < points.size(); ++i) {
        const nephroid::PlanePoint p{points[i].real(), points[i].imag()};
        if (nephroid::distance_to_boundary(p, polyline) < 1e-7)
            continue;
        const bool inside = nephroid::contains(p, polyline);
        if (rep.d_values[i] > 1e-5 && !inside)
            throw DiscrepancyError("curve point escapes the region although the distance "
                                   "criterion clears it, at theta = " +
                                   std::to_string(rep.theta_grid[i]));
        if (!inside && rep.verdict)
            throw DiscrepancyError("containment verdict is positive but a sampled point lies "
                                   "outside, at theta = " +
                                   std::to_string(rep.theta_grid[i]));
    }
    return rep;
}

std::pair<double, double> kustner_bounds(double a, double b, double c) {
    if (!(0.0 < a && a <= b && b <= c))
        throw ParameterError("Kustner bounds require 0 < a <= b <= c");
    return {1.0 - a * b / (b + c), 1.0 - a * b / (2.0 * c)};
}

double mm_N(double a) {
    if (!std::isfinite(a))
        throw ParameterError("argument must be finite");
    const double m = std::abs(a);
    if (m >= 1.0 / 3.0)
        return m + 0.5;
    return 1.5 * a * a + 2.0 / 3.0;
}

bool mm_condition(double a, double c) {
    return c - 1.0 >= mm_N(a - 1.0);
}

ThetaEvaluator theta_evaluator(const SolutionCurve& s) {
    require_beta(s.beta);
    const double beta = s.beta;
    ThetaEvaluator ev;
    switch (s.kind) {
    case SubordCase::Sqrt: {
        const double scale = beta / (2.0 * (1.0 + beta));
        const GaussParams p{0.5, 1.0 / beta + 1.0, 1.0 / beta + 2.0};
        ev.value = [scale, p](Complex z) {
            return scale * z * specfun::gauss_2f1(p, -z).value;
        };
        ev.derivative = [scale, p](Complex z) {
            const Complex f = specfun::gauss_2f1(p, -z).value;
            const Complex fprime = specfun::gauss_2f1_derivative(p, -z).value;
            return scale * (f - z * fprime);
        };
        break;
    }
    case SubordCase::Linear: {
        const double scale = beta / (1.0 + beta);
        ev.value = [scale](Complex z) { return scale * z; };
        ev.derivative = [scale](Complex) { return Complex(scale, 0.0); };
        break;
    }
    case SubordCase::Exp: {
        const double scale = beta / (1.0 + beta);
        const KummerParams p{1.0 / beta + 1.0, 1.0 / beta + 2.0};
        ev.value = [scale, p](Complex z) {
            return scale * z * specfun::kummer_1f1(p, z).value;
        };
        ev.derivative = [scale, p](Complex z) {
            const Complex f = specfun::kummer_1f1(p, z).value;
            const Complex fprime = specfun::kummer_1f1_derivative(p, z).value;
            return scale * (f + z * fprime);
        };
        break;
    }
    }
    return ev;
}

double numeric_starlikeness_scan(const ThetaEvaluator& ev, int n) {
    if (!ev.value)
        throw ParameterError("Theta evaluator is empty");
    if (n < 256)
        throw ParameterError("starlikeness scan needs n >= 256 points per ring");

    constexpr double kRmax = 0.999;
    constexpr int kRings = 8;
    double min_re = std::numeric_limits<double>::infinity();
    for (int ring = 1; ring <= kRings; ++ring) {
        const double r = kRmax * ring / kRings;
        for (int i = 0; i < n; ++i) {
            const double phi = 2.0 * kPi * i / n;
            const Complex z{r * std::cos(phi), r * std::sin(phi)};
            const Complex theta = ev.value(z);
            if (std::abs(theta) < 1e-12)
                throw Error("Theta vanishes away from the origin at |z| = " + std::to_string(r));
            Complex dtheta;
            if (ev.derivative) {
                dtheta = ev.derivative(z);
            } else {
                const double h = 1e-5;
                dtheta = (ev.value(z + h) - ev.value(z - h)) / (2.0 * h);
            }
            min_re = std::min(min_re, (z * dtheta / theta).real());
        }
    }
    return min_re;
}

StarlikenessCheck starlikeness_check(const SolutionCurve& s, int n) {
    StarlikenessCheck out;
    const double beta = s.beta;
    switch (s.kind) {
    case SubordCase::Sqrt: {
        const auto [lo, hi] = kustner_bounds(0.5, 1.0 / beta + 1.0, 1.0 / beta + 2.0);
        out.has_kustner = true;
        out.lower_bound = lo;
        out.upper_bound = hi;
        break;
    }
    case SubordCase::Linear:
        break; // Theta is const * z; the scan alone settles it
    case SubordCase::Exp:
        out.has_mm = true;
        out.mm_condition_met = mm_condition(1.0 / beta + 1.0, 1.0 / beta + 2.0);
        break;
    }
    out.numeric_min_re = numeric_starlikeness_scan(theta_evaluator(s), n);
    return out;
}

Complex g_operator(std::span<const double> f_coeffs, Complex z) {
    if (f_coeffs.size() < 2)
        throw ParameterError("need at least the z^0 and z^1 coefficients");
    if (f_coeffs[0] != 0.0 || f_coeffs[1] != 1.0)
        throw ParameterError("f must be normalized: f(0) = 0, f'(0) = 1");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParameterError("argument must be finite");
    if (z == Complex(0.0, 0.0))
        return {0.0, 0.0}; // limit value: z f'/f -> 1 and z f''/f' -> 0

    const size_t n = f_coeffs.size();
    Complex f = 0.0, fp = 0.0, fpp = 0.0;
    for (size_t k = n; k-- > 0;)
        f = f * z + f_coeffs[k];
    for (size_t k = n; k-- > 1;)
        fp = fp * z + static_cast<double>(k) * f_coeffs[k];
    for (size_t k = n; k-- > 2;)
        fpp = fpp * z + static_cast<double>(k) * static_cast<double>(k - 1) * f_coeffs[k];

    if (std::abs(f) < 1e-12 || std::abs(fp) < 1e-12)
        throw Error("g_operator: denominator vanishes away from the origin");
    return Complex(1.0, 0.0) - z * fp / f + z * fpp / fp;
}

bool target_membership(SubordCase c, Complex w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw ParameterError("argument must be finite");
    switch (c) {
    case SubordCase::Sqrt: return std::abs(w * w - Complex(1.0, 0.0)) < 1.0 && w.real() > 0.0;
    case SubordCase::Linear: return std::abs(w - Complex(1.0, 0.0)) < 1.0;
    case SubordCase::Exp:
        if (w.imag() == 0.0 && w.real() <= 0.0)
            throw ParameterError("log is undefined on the closed negative real axis");
        return std::abs(std::log(w)) < 1.0;
    }
    throw ParameterError("unknown case tag");
}

} // namespace neph::subord
