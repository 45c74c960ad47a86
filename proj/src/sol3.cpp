#include "horoflow/sol3.hpp"

#include "horoflow/errors.hpp"

#include <json.hpp>

#include <cmath>

namespace horoflow {

namespace {

void require_z_range(double z) {
    if (!(std::fabs(z) <= 700.0))
        throw std::range_error("sol: |z| > 700 would overflow e^z");
}

void require_finite(const SolPoint& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw invalid_input_error("sol: non-finite point");
}

} // namespace

SolPoint sol_mul(const SolPoint& p, const SolPoint& q) {
    require_finite(p);
    require_finite(q);
    require_z_range(p.z);
    require_z_range(q.z);
    require_z_range(p.z + q.z);
    const double ez = std::exp(p.z);
    return {p.x + ez * q.x, p.y + q.y / ez, p.z + q.z};
}

SolPoint sol_flow(const SolPoint& p, double s, SolFlow which) {
    require_finite(p);
    if (!std::isfinite(s)) throw invalid_input_error("sol_flow: non-finite parameter");
    require_z_range(p.z);
    switch (which) {
    case SolFlow::hplus:
        return {p.x + std::exp(p.z) * s, p.y, p.z};
    case SolFlow::geodesic:
        require_z_range(p.z + s);
        return {p.x, p.y, p.z + s};
    case SolFlow::vperp:
        return {p.x, p.y + std::exp(-p.z) * s, p.z};
    }
    throw invalid_input_error("sol_flow: unknown flow");
}

SolLattice make_lattice(const std::array<std::array<long, 2>, 2>& A) {
    const long det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    const long tr = A[0][0] + A[1][1];
    if (det != 1 || std::labs(tr) <= 2)
        throw invalid_input_error("make_lattice: need det(A) = 1 and |trace(A)| > 2");
    SolLattice lat;
    lat.A = A;
    // For trace < -2 the expanding eigenvalue of A is negative; the lattice is
    // built from -A, which has the same eigenvectors (the paper's quotient by
    // -Id).
    const double a00 = static_cast<double>(tr > 0 ? A[0][0] : -A[0][0]);
    const double a01 = static_cast<double>(tr > 0 ? A[0][1] : -A[0][1]);
    const double a10 = static_cast<double>(tr > 0 ? A[1][0] : -A[1][0]);
    const double a11 = static_cast<double>(tr > 0 ? A[1][1] : -A[1][1]);
    const double t = a00 + a11;
    const double disc = std::sqrt(t * t - 4.0);
    lat.lambda = (t + disc) / 2.0;
    lat.z_period = std::log(lat.lambda);
    // Eigenvectors (a01, lambda^{+-1} - a00). A triangular hyperbolic integer
    // matrix cannot exist (diagonal entries would multiply to 1), so a01 != 0.
    (void)a10;
    (void)a11;
    if (a01 == 0.0)
        throw invalid_input_error("make_lattice: A must not be triangular");
    const double mu = 1.0 / lat.lambda;
    double v0x = a01, v0y = lat.lambda - a00;
    double v1x = a01, v1y = mu - a00;
    const double n0 = std::hypot(v0x, v0y), n1 = std::hypot(v1x, v1y);
    v0x /= n0; v0y /= n0;
    v1x /= n1; v1y /= n1;
    const Mat2 v{v0x, v1x, v0y, v1y};
    lat.P = v.inverse();
    return lat;
}

std::string SolLattice::to_json() const {
    nlohmann::json j;
    j["A"] = {{A[0][0], A[0][1]}, {A[1][0], A[1][1]}};
    j["lambda"] = lambda;
    j["z_period"] = z_period;
    j["P"] = {{P.a, P.b}, {P.c, P.d}};
    return j.dump(2);
}

SolPoint sol_reduce(const SolLattice& lat, const SolPoint& p) {
    require_finite(p);
    require_z_range(p.z);
    const double k = std::floor(p.z / lat.z_period);
    // Left multiply by (0, 0, -k*z_period): rescales the horizontal part.
    const double scale = std::exp(-k * lat.z_period);
    SolPoint q{p.x * scale, p.y / scale, p.z - k * lat.z_period};
    if (q.z >= lat.z_period) { // guard the floor rounding edge
        q = {q.x / lat.lambda, q.y * lat.lambda, q.z - lat.z_period};
    }
    // Babai rounding on the horizontal lattice P*Z^2.
    const Mat2 pinv = lat.P.inverse();
    const double c0 = pinv.a * q.x + pinv.b * q.y;
    const double c1 = pinv.c * q.x + pinv.d * q.y;
    const double m0 = std::round(c0), m1 = std::round(c1);
    q.x -= lat.P.a * m0 + lat.P.b * m1;
    q.y -= lat.P.c * m0 + lat.P.d * m1;
    return q;
}

double sol_metric_length(std::span<const SolPoint> path) {
    if (path.size() < 2)
        throw invalid_input_error("sol_metric_length: need at least 2 points");
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const SolPoint& p = path[i];
        const SolPoint& q = path[i + 1];
        const double zm = 0.5 * (p.z + q.z);
        const double dx = q.x - p.x, dy = q.y - p.y, dz = q.z - p.z;
        const double wx = std::exp(-zm) * dx;
        const double wy = std::exp(zm) * dy;
        len += std::sqrt(wx * wx + wy * wy + dz * dz);
    }
    return len;
}

} // namespace horoflow
