#include "neph/nephroid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace neph::nephroid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAmbiguousBand = 1e-9;

PlanePoint to_point(Complex w) {
    return {w.real(), w.imag()};
}

double segment_distance(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
    const double dx = b.u - a.u;
    const double dy = b.v - a.v;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0)
        t = std::clamp(((p.u - a.u) * dx + (p.v - a.v) * dy) / len2, 0.0, 1.0);
    const double qx = a.u + t * dx - p.u;
    const double qy = a.v + t * dy - p.v;
    return std::hypot(qx, qy);
}

// Even-odd crossing count of a horizontal ray from p toward +u.
bool ray_cast(const PlanePoint& p, const BoundaryCurve& curve) {
    const size_t m = curve.points.size();
    bool inside = false;
    for (size_t i = 0, j = m - 1; i < m; j = i++) {
        const PlanePoint& a = curve.points[j];
        const PlanePoint& b = curve.points[i];
        if ((b.v > p.v) != (a.v > p.v)) {
            const double x_cross = a.u + (b.u - a.u) * (p.v - a.v) / (b.v - a.v);
            if (p.u < x_cross)
                inside = !inside;
        }
    }
    return inside;
}

} // namespace

Complex phi_ne(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParameterError("phi_ne argument must be finite");
    return 1.0 + z - z * z * z / 3.0;
}

double implicit_value(const PlanePoint& p) {
    if (!std::isfinite(p.u) || !std::isfinite(p.v))
        throw ParameterError("point components must be finite");
    const double du = p.u - 1.0;
    const double r2 = du * du + p.v * p.v - 4.0 / 9.0;
    return r2 * r2 * r2 - 4.0 * p.v * p.v / 3.0;
}

BoundaryCurve sample_boundary(int n) {
    if (n < 16)
        throw ParameterError("boundary sampling needs n >= 16");
    BoundaryCurve curve;
    curve.thetas.reserve(n);
    curve.points.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * kPi * k / n;
        curve.thetas.push_back(theta);
        curve.points.push_back(to_point(phi_ne(Complex(std::cos(theta), std::sin(theta)))));
    }
    return curve;
}

BoundaryCurve dense_boundary_polyline(int n) {
    constexpr double kWindow = 0.05;
    constexpr int kExtraPerSide = 256;

    if (n < 16)
        throw ParameterError("boundary sampling needs n >= 16");
    std::vector<double> thetas;
    thetas.reserve(static_cast<size_t>(n) + 4 * kExtraPerSide + 4);
    for (int k = 0; k < n; ++k)
        thetas.push_back(2.0 * kPi * k / n);
    for (double center : {0.5 * kPi, 1.5 * kPi}) {
        for (int i = -kExtraPerSide; i <= kExtraPerSide; ++i)
            thetas.push_back(center + kWindow * i / kExtraPerSide);
    }
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

    BoundaryCurve curve;
    curve.thetas = std::move(thetas);
    curve.points.reserve(curve.thetas.size());
    for (double t : curve.thetas)
        curve.points.push_back(to_point(phi_ne(Complex(std::cos(t), std::sin(t)))));
    return curve;
}

double distance_to_boundary(const PlanePoint& p, const BoundaryCurve& curve) {
    const size_t m = curve.points.size();
    if (m < 2)
        throw ParameterError("boundary polyline needs at least two samples");
    double best = segment_distance(p, curve.points[m - 1], curve.points[0]);
    for (size_t i = 0; i + 1 < m; ++i)
        best = std::min(best, segment_distance(p, curve.points[i], curve.points[i + 1]));
    return best;
}

bool contains(const PlanePoint& p, int n) {
    return contains(p, dense_boundary_polyline(n));
}

bool contains(const PlanePoint& p, const BoundaryCurve& curve) {
    if (distance_to_boundary(p, curve) < kAmbiguousBand)
        throw AmbiguityError("point lies within the ambiguous band of the boundary");

    const bool by_ray = ray_cast(p, curve);
    const double f = implicit_value(p);
    // The implicit sextic is a cross-check only; its margin stays above the
    // polyline discretisation error so near-curve points are not adjudicated.
    if (std::abs(f) > 1e-5 && by_ray != (f < 0.0))
        throw DiscrepancyError("ray casting and implicit sign disagree");
    return by_ray;
}

double d1(double theta) {
    if (!std::isfinite(theta))
        throw ParameterError("theta must be finite");
    const double c = std::cos(theta);
    return 16.0 / 9.0 - 4.0 * c * c / 3.0;
}

void write_csv(const BoundaryCurve& curve, std::ostream& out) {
    out << "theta,u,v\n";
    char buf[128];
    for (size_t i = 0; i < curve.thetas.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", curve.thetas[i],
                      curve.points[i].u, curve.points[i].v);
        out << buf;
    }
}

} // namespace neph::nephroid
