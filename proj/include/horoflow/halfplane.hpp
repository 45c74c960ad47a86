#pragma once

#include "horoflow/mat2.hpp"

namespace horoflow {

/// Point re + im*i of the upper half-plane, im > 0.
struct HPoint {
    double re = 0.0;
    double im = 1.0;
};

/// z -> (az+b)/(cz+d).
HPoint mobius(const Mat2& u, const HPoint& z);

/// Hyperbolic distance, computed as 2*asinh(|z-w| / (2*sqrt(Im z * Im w)))
/// which is stable for nearby points.
double hyp_dist(const HPoint& z, const HPoint& w);

/// Unit tangent vector as a frame u in PSL(2,R): base point u(i), direction
/// the image of the upward vector at i.
struct TangentPoint {
    Mat2 u;

    HPoint base() const { return mobius(u, HPoint{0.0, 1.0}); }
    /// Chart direction of the tangent vector at base(), in [0, 2*pi).
    double angle() const;
};

/// Circle distance |a-b| folded to [0, period/2].
double circle_dist(double a, double b, double period);

/// Chart angle at `from` of the unit tangent to the geodesic toward `to`.
/// Undefined for coincident points.
double geodesic_direction(const HPoint& from, const HPoint& to);

/// d(p,q) = d_H(bases) + min-angle after parallel transport of p's direction
/// to q's base along the connecting geodesic. Symmetric and invariant under
/// simultaneous left translation by construction.
double t1_dist(const TangentPoint& p, const TangentPoint& q);

/// Numeric local-weakly-unstable membership: scans t in {0, step, ..., horizon}
/// and checks t1_dist(g_{-t} u, g_{-t} v) < eps at every sample. A true result
/// means "not falsified up to horizon".
bool wwu_membership(const TangentPoint& u, const TangentPoint& v, double eps,
                    double horizon, double step);

/// Algebraic variant: u^{-1} v in B_eps, with
/// B_eps = { [[l,0],[t,1/l]] : |log l| < eps/2, |t| < eps/2 }.
bool wwu_algebraic(const TangentPoint& u, const TangentPoint& v, double eps);

} // namespace horoflow
