#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "neph/errors.hpp"

namespace neph::nephroid {

using Complex = std::complex<double>;

// Cartesian point w = u + iv in the image plane.
struct PlanePoint {
    double u = 0.0;
    double v = 0.0;
};

// Sampled closed boundary curve: strictly increasing parameters in [0, 2*pi)
// paired with the corresponding curve points.
struct BoundaryCurve {
    std::vector<double> thetas;
    std::vector<PlanePoint> points;
};

// phi_Ne(z) = 1 + z - z^3/3. Entire; maps the unit circle onto the nephroid.
Complex phi_ne(Complex z);

// Left-hand side of ((u-1)^2 + v^2 - 4/9)^3 - 4 v^2 / 3. Zero on the curve,
// negative at interior points such as (1, 0).
double implicit_value(const PlanePoint& p);

// Uniform boundary sampling: points[k] = phi_ne(e^{i 2 pi k / n}). n >= 16.
BoundaryCurve sample_boundary(int n);

// Uniform sampling plus extra resolution near the cusps at (1, +-4/3), where
// the curvature degenerates. This is the polyline contains() tests against.
BoundaryCurve dense_boundary_polyline(int n);

// Minimum distance from p to the closed polyline through the curve's samples.
double distance_to_boundary(const PlanePoint& p, const BoundaryCurve& curve);

// Even-odd ray-casting verdict against a dense boundary polyline (uniform
// sampling plus extra points near the cusps), cross-checked against the sign
// of implicit_value. Points within 1e-9 of the polyline are ambiguous and
// raise AmbiguityError; a ray/implicit disagreement raises DiscrepancyError.
bool contains(const PlanePoint& p, int n = 4096);

// Same verdict against a caller-provided polyline (avoids rebuilding it in
// scan loops).
bool contains(const PlanePoint& p, const BoundaryCurve& dense);

// Squared distance from (1, 0) to the boundary point at angle theta:
// 16/9 - (4/3) cos^2(theta).
double d1(double theta);

// CSV emission with header "theta,u,v", one row per sample.
void write_csv(const BoundaryCurve& curve, std::ostream& out);

} // namespace neph::nephroid
