#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "neph/errors.hpp"

namespace neph::quadrature {

struct Result {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    std::complex<double> kronrod;
    double error;
};

template <class F>
Panel gk15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::complex<double> fc = f(mid);
    std::complex<double> k15 = kWgk[7] * fc;
    std::complex<double> g7 = kWg[3] * fc;

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const std::complex<double> fsum = f(mid + dx) + f(mid - dx);
        k15 += kWgk[i] * fsum;
        if (i % 2 == 1) // Kronrod abscissae at odd indices are the Gauss nodes
            g7 += kWg[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::abs(k15 - g7)};
}

template <class F>
void refine(F& f, double a, double b, double tol, int depth, Result& acc, long max_evals) {
    const Panel p = gk15(f, a, b);
    acc.evaluations += 15;
    if (acc.evaluations > max_evals)
        throw QuadratureError("adaptive quadrature exceeded its evaluation budget");
    // Accept when the Gauss/Kronrod discrepancy meets the local budget, or the
    // interval can no longer be split in double precision.
    const double mid = 0.5 * (a + b);
    if (p.error <= tol || depth >= 52 || !(a < mid && mid < b)) {
        acc.value += p.kronrod;
        acc.error_estimate += p.error;
        return;
    }
    refine(f, a, mid, 0.5 * tol, depth + 1, acc, max_evals);
    refine(f, mid, b, 0.5 * tol, depth + 1, acc, max_evals);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of a complex-valued f over [a, b] to an
// absolute tolerance. Endpoint-singular integrands should be substituted away
// by the caller first; the rule never samples a or b themselves.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, long max_evals = 2'000'000) {
    Result acc;
    if (!(a < b))
        return acc;
    if (!(abs_tol > 0.0))
        throw ParameterError("quadrature tolerance must be positive");
    detail::refine(f, a, b, abs_tol, 0, acc, max_evals);
    // Accepted panels keep the accumulated estimate at or below abs_tol; a
    // larger total means depth-limited panels were forced through.
    if (!(acc.error_estimate <= 2.0 * abs_tol))
        throw QuadratureError("adaptive quadrature did not reach the requested tolerance");
    return acc;
}

} // namespace neph::quadrature
