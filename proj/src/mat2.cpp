#include "horoflow/mat2.hpp"

#include "horoflow/errors.hpp"

#include <cmath>
#include <complex>

namespace horoflow {

Mat2 Mat2::inverse() const {
    const double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
}

bool Mat2::is_finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
}

double frobenius_norm(const Mat2& m) {
    return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
}

double frobenius_distance(const Mat2& m, const Mat2& n) {
    return frobenius_norm({m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d});
}

double distance_to_pm_identity(const Mat2& m) {
    const Mat2 id = Mat2::identity();
    const Mat2 neg = {-1.0, 0.0, 0.0, -1.0};
    return std::fmin(frobenius_distance(m, id), frobenius_distance(m, neg));
}

Mat2 canonical_sign(const Mat2& m) {
    double lead = m.a;
    if (lead == 0.0) lead = m.b;
    if (lead == 0.0) lead = m.c;
    if (lead == 0.0) lead = m.d;
    if (lead < 0.0) return {-m.a, -m.b, -m.c, -m.d};
    return m;
}

bool psl_equal(const Mat2& m, const Mat2& n, double tol) {
    return frobenius_distance(canonical_sign(m), canonical_sign(n)) <= tol;
}

namespace {

void require_finite_state(const Mat2& u, double param) {
    if (!u.is_finite() || !std::isfinite(param))
        throw invalid_input_error("flow: non-finite state or parameter");
}

} // namespace

Mat2 geodesic_matrix(double t) {
    const double e = std::exp(t / 2.0);
    return {e, 0.0, 0.0, 1.0 / e};
}

Mat2 horocycle_matrix(double s, HoroSign sign) {
    if (sign == HoroSign::plus) return {1.0, s, 0.0, 1.0};
    return {1.0, 0.0, s, 1.0};
}

Mat2 rotation_matrix(double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    return {c, s, -s, c};
}

Mat2 geodesic_flow(const Mat2& u, double t) {
    require_finite_state(u, t);
    const double e = std::exp(t / 2.0);
    return {u.a * e, u.b / e, u.c * e, u.d / e};
}

Mat2 horocycle_flow(const Mat2& u, double s, HoroSign sign) {
    require_finite_state(u, s);
    if (sign == HoroSign::plus)
        return {u.a, u.a * s + u.b, u.c, u.c * s + u.d};
    return {u.a + u.b * s, u.b, u.c + u.d * s, u.d};
}

BorelFactorization borel_factorize(const BorelElement& b0, double s) {
    if (!(b0.lambda > 0.0) || !std::isfinite(b0.lambda) || !std::isfinite(b0.t) ||
        !std::isfinite(s))
        throw invalid_input_error("borel_factorize: invalid element or parameter");
    const double lambda1 = b0.lambda - s * b0.t;
    if (!(lambda1 > 0.0))
        throw degenerate_factorization_error(
            "borel_factorize: lambda0 - s*t0 <= 0, intersection leaves the Borel chart");
    BorelFactorization out;
    out.b1 = BorelElement{lambda1, b0.t};
    out.l = s / (b0.lambda * lambda1);
    return out;
}

bool try_as_borel(const Mat2& m, BorelElement& out, double off_tol) {
    const Mat2 w = canonical_sign(m);
    if (std::fabs(w.b) > off_tol) return false;
    if (!(w.a > 0.0)) return false;
    out.lambda = w.a;
    out.t = w.c;
    return true;
}

IwasawaCoords iwasawa(const Mat2& u) {
    if (!u.is_finite()) throw invalid_input_error("iwasawa: non-finite matrix");
    // Base point u(i) gives x and y; the residual rotation gives theta.
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> den = u.c * i + std::complex<double>(u.d, 0.0);
    const std::complex<double> z = (u.a * i + std::complex<double>(u.b, 0.0)) / den;
    IwasawaCoords q;
    q.x = z.real();
    q.y = z.imag();
    // k = a^{-1} n^{-1} u is in SO(2): read the rotation off one column.
    const double sy = std::sqrt(q.y);
    const Mat2 na_inv = {1.0 / sy, -q.x / sy, 0.0, sy};
    const Mat2 k = na_inv * u;
    // k = [[cos h, sin h], [-sin h, cos h]]; h folded to [0, pi) covers PSO(2).
    double h = std::atan2(k.b, k.a);
    h = std::fmod(h, kPi);
    if (h < 0.0) h += kPi;
    if (h >= kPi) h = 0.0;
    q.theta = h;
    return q;
}

Mat2 from_iwasawa(const IwasawaCoords& q) {
    if (!(q.y > 0.0)) throw invalid_input_error("from_iwasawa: y must be positive");
    const double sy = std::sqrt(q.y);
    const Mat2 n = {1.0, q.x, 0.0, 1.0};
    const Mat2 a = {sy, 0.0, 0.0, 1.0 / sy};
    const double c = std::cos(q.theta), s = std::sin(q.theta);
    const Mat2 k = {c, s, -s, c};
    return n * (a * k);
}

Mat2 renormalize(const Mat2& u) {
    const double dt = u.det();
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw corrupted_state_error("renormalize: determinant not positive");
    const double r = 1.0 / std::sqrt(dt);
    return {u.a * r, u.b * r, u.c * r, u.d * r};
}

} // namespace horoflow
