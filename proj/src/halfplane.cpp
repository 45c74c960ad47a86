#include "horoflow/halfplane.hpp"

#include "horoflow/errors.hpp"

#include <cmath>
#include <complex>

namespace horoflow {

HPoint mobius(const Mat2& u, const HPoint& z) {
    if (!u.is_finite() || !std::isfinite(z.re) || !(z.im > 0.0))
        throw invalid_input_error("mobius: invalid matrix or point");
    const std::complex<double> w(z.re, z.im);
    const std::complex<double> num = u.a * w + u.b;
    const std::complex<double> den = u.c * w + u.d;
    const std::complex<double> img = num / den;
    return {img.real(), img.imag()};
}

double hyp_dist(const HPoint& z, const HPoint& w) {
    const double dx = z.re - w.re, dy = z.im - w.im;
    const double chord = std::sqrt(dx * dx + dy * dy);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(z.im * w.im)));
}

double TangentPoint::angle() const {
    // Image of the upward vector at i: arg(i / (c*i + d)^2).
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> den = u.c * i + std::complex<double>(u.d, 0.0);
    const std::complex<double> dir = i / (den * den);
    double ang = std::atan2(dir.imag(), dir.real());
    if (ang < 0.0) ang += kTwoPi;
    return ang;
}

double circle_dist(double a, double b, double period) {
    double d = std::fmod(std::fabs(a - b), period);
    return std::fmin(d, period - d);
}

double geodesic_direction(const HPoint& from, const HPoint& to) {
    const double dre = to.re - from.re;
    if (std::fabs(dre) < 1e-14) {
        return to.im > from.im ? kPi / 2.0 : 3.0 * kPi / 2.0;
    }
    // Semicircle centered on the real axis.
    const double c = (to.re * to.re + to.im * to.im - from.re * from.re -
                      from.im * from.im) /
                     (2.0 * dre);
    // Tangent at `from` is perpendicular to the radius; i*(z - c) always has
    // negative real part, so flip when the target lies to the right.
    double vx = -from.im;
    double vy = from.re - c;
    if ((dre > 0.0) == (vx < 0.0)) {
        vx = -vx;
        vy = -vy;
    }
    double ang = std::atan2(vy, vx);
    if (ang < 0.0) ang += kTwoPi;
    return ang;
}

double t1_dist(const TangentPoint& p, const TangentPoint& q) {
    const HPoint z1 = p.base(), z2 = q.base();
    const double db = hyp_dist(z1, z2);
    const double th1 = p.angle(), th2 = q.angle();
    if (db < 1e-12) return db + circle_dist(th1, th2, kTwoPi);
    const double psi12 = geodesic_direction(z1, z2);
    const double psi21 = geodesic_direction(z2, z1);
    // Parallel transport along the connecting geodesic preserves the angle to
    // it; the transported direction of p at z2 is th1 + (psi21 + pi - psi12).
    return db + circle_dist(th1 + psi21 + kPi - psi12, th2, kTwoPi);
}

bool wwu_membership(const TangentPoint& u, const TangentPoint& v, double eps,
                    double horizon, double step) {
    if (!(eps > 0.0) || !(horizon > 0.0) || !(step > 0.0) || step > horizon)
        throw invalid_input_error("wwu_membership: need 0 < step <= horizon, eps > 0");
    Mat2 a = u.u, b = v.u;
    const long n = static_cast<long>(std::floor(horizon / step + 0.5));
    for (long k = 0;; ++k) {
        if (t1_dist(TangentPoint{a}, TangentPoint{b}) >= eps) return false;
        if (k == n) break;
        a = geodesic_flow(a, -step);
        b = geodesic_flow(b, -step);
        if (k % kRenormCadence == kRenormCadence - 1) {
            a = renormalize(a);
            b = renormalize(b);
        }
    }
    return true;
}

bool wwu_algebraic(const TangentPoint& u, const TangentPoint& v, double eps) {
    if (!(eps > 0.0)) throw invalid_input_error("wwu_algebraic: eps must be positive");
    const Mat2 w = u.u.inverse() * v.u;
    BorelElement b;
    if (!try_as_borel(w, b)) return false;
    return std::fabs(std::log(b.lambda)) < eps / 2.0 && std::fabs(b.t) < eps / 2.0;
}

} // namespace horoflow
