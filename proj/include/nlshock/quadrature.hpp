#ifndef NLSHOCK_QUADRATURE_HPP
#define NLSHOCK_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "nlshock/mat2.hpp"

namespace nlshock {

using CplxFn = std::function<cplx(cplx)>;

// Oriented piecewise-linear path in the complex plane. Carries the geometry
// for contour integrals and Plemelj-type boundary values; branch-cut metadata
// lives with the functions integrated over it.
struct Contour {
    std::vector<cplx> pts;

    double length() const;
    // closest point on the polyline to k
    cplx nearest(cplx k) const;
    double dist(cplx k) const { return std::abs(k - nearest(k)); }
};

// Fixed-order Gauss-Legendre nodes/weights on [-1,1].
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

// integral of f over the polyline, panels split until two GL orders agree
cplx integrate(const Contour& path, const CplxFn& f, double tol = 1e-12);

// integral of f(s)/(s-k) ds over the polyline. Handles k near or on the
// path: panels refine toward k and the log-singular part is integrated with
// the exact primitive, the branch of ln(s-k) tracked continuously along the
// walk. For k exactly on the path, nudge k to the wanted side first.
cplx cauchy_integral(const Contour& path, const CplxFn& f, cplx k, double tol = 1e-12);

// integral over a segment [bp, end] of f with an integrable 1/sqrt(s-bp)
// endpoint singularity, via s = bp + dir*u^2
cplx sqrt_endpoint_integrate(cplx bp, cplx end, const CplxFn& f, double tol = 1e-12);

// antiderivative values of ln(s-k) at the polyline vertices, continuous
// along the walk, starting from the principal value at pts[0]
std::vector<cplx> log_along(const Contour& path, cplx k);

// round x to the nearest integer multiple of 2*pi away from x
double unwrap_near(double prev, double raw);

} // namespace nlshock

#endif
