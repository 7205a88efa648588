#pragma once

#include <complex>

#include "neph/errors.hpp"

namespace neph::specfun {

using Complex = std::complex<double>;

// Real parameter triple (a, b; c) of a Gaussian hypergeometric series.
// c must not be a non-positive integer.
struct GaussParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
};

// Real parameter pair (a; c) of a confluent (Kummer) hypergeometric series.
struct KummerParams {
    double a = 0.0;
    double c = 1.0;
};

// A truncated series evaluation together with its truncation provenance:
// terms_used partial-sum terms and a rigorous upper bound on the modulus of
// the discarded remainder.
struct SeriesValue {
    Complex value{0.0, 0.0};
    long terms_used = 0;
    double tail_bound = 0.0;
};

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Gamma function for real x, Lanczos approximation on the positive half-line
// and the reflection formula for x < 0. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

// Rising factorial (x)_j = x (x+1) ... (x+j-1), with (x)_0 = 1.
double pochhammer(double x, int j);

// Gaussian hypergeometric series F(a,b;c;z) for |z| <= 1. On |z| = 1 the
// series is summed directly and requires c-a-b > 0 unless it terminates.
SeriesValue gauss_2f1(const GaussParams& p, Complex z);

// Confluent hypergeometric series Phi(a;c;z) (entire in z).
SeriesValue kummer_1f1(const KummerParams& p, Complex z);

// d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z).
SeriesValue gauss_2f1_derivative(const GaussParams& p, Complex z);

// d/dz Phi(a;c;z) = (a/c) Phi(a+1;c+1;z).
SeriesValue kummer_1f1_derivative(const KummerParams& p, Complex z);

// Euler integral representation of F(a,b;c;z), valid for c > b > 0:
//   Gamma(c)/(Gamma(b)Gamma(c-b)) Int_0^1 t^{b-1} (1-t)^{c-b-1} (1-tz)^{-a} dt.
// Independent of the series path; endpoint singularities are removed by power
// substitutions before adaptive quadrature.
Complex gauss_2f1_euler_integral(const GaussParams& p, Complex z, double abs_tol = 1e-10);

// Integral representation of Phi(a;c;z), valid for c > a > 0:
//   Gamma(c)/(Gamma(a)Gamma(c-a)) Int_0^1 t^{a-1} (1-t)^{c-a-1} e^{tz} dt.
Complex kummer_1f1_integral(const KummerParams& p, Complex z, double abs_tol = 1e-10);

} // namespace neph::specfun
