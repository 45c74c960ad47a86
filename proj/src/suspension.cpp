#include "horoflow/suspension.hpp"

#include "horoflow/errors.hpp"
#include "horoflow/rng.hpp"

#include <json.hpp>

#include <cmath>

namespace horoflow {

namespace {

double mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;
    return r;
}

} // namespace

TorusRep TorusRep::default_rep() {
    TorusRep rep;
    rep.k = 1;
    const double golden_conj = (std::sqrt(5.0) - 1.0) / 2.0;
    const double silver = std::sqrt(2.0) - 1.0;
    const std::array<double, 4> base = {golden_conj, silver, 0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        rep.rot[static_cast<std::size_t>(i)] = {base[static_cast<std::size_t>(i)]};
        rep.rot[static_cast<std::size_t>(i + 4)] = {mod1(-base[static_cast<std::size_t>(i)])};
    }
    return rep;
}

void TorusRep::validate() const {
    if (k < 1) throw invalid_input_error("TorusRep: k must be >= 1");
    for (int g = 0; g < 8; ++g) {
        const auto& r = rot[static_cast<std::size_t>(g)];
        const auto& rinv = rot[static_cast<std::size_t>((g + 4) % 8)];
        if (static_cast<int>(r.size()) != k || static_cast<int>(rinv.size()) != k)
            throw invalid_input_error("TorusRep: rotation vector dimension mismatch");
        for (int j = 0; j < k; ++j) {
            const double a = r[static_cast<std::size_t>(j)];
            const double b = rinv[static_cast<std::size_t>(j)];
            if (!(a >= 0.0 && a < 1.0) || !(b >= 0.0 && b < 1.0))
                throw invalid_input_error("TorusRep: components must lie in [0,1)");
            if (circle_dist(a + b, 0.0, 1.0) > 1e-12)
                throw invalid_input_error("TorusRep: rot(inverse) != -rot mod 1");
        }
    }
}

std::string TorusRep::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    nlohmann::json m = nlohmann::json::object();
    for (int g = 0; g < 8; ++g)
        m[std::to_string(g)] = rot[static_cast<std::size_t>(g)];
    j["rotations"] = m;
    return j.dump(2);
}

SuspensionState susp_flow(const SuspensionState& s, double t, LeafFlow which) {
    SuspensionState out = s;
    switch (which) {
    case LeafFlow::geodesic:
        out.u.u = geodesic_flow(s.u.u, t);
        break;
    case LeafFlow::hplus:
        out.u.u = horocycle_flow(s.u.u, t, HoroSign::plus);
        break;
    case LeafFlow::hminus:
        out.u.u = horocycle_flow(s.u.u, t, HoroSign::minus);
        break;
    }
    return out;
}

double torus_dist(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw invalid_input_error("torus_dist: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::fmax(d, circle_dist(a[i], b[i], 1.0));
    return d;
}

SuspensionState susp_reduce(const FuchsianGroup& group, const TorusRep& rep,
                            const SuspensionState& s) {
    const ReducedTangent red = reduce(group, s.u);
    SuspensionState out;
    out.u = red.rep;
    out.theta = s.theta;
    for (int g : red.word) {
        const auto& r = rep.rot[static_cast<std::size_t>(g)];
        for (std::size_t j = 0; j < out.theta.size(); ++j)
            out.theta[j] = mod1(out.theta[j] + r[j]);
    }
    return out;
}

namespace {

// Distance from the state v to the g-orbit of u near time offset zero,
// minimized over offsets in [-1, 1] by ternary search (the objective is
// unimodal at the scales involved).
double dist_to_geodesic_orbit(const Mat2& u, const Mat2& v) {
    auto f = [&](double delta) {
        return t1_dist(TangentPoint{geodesic_flow(u, delta)}, TangentPoint{v});
    };
    double lo = -1.0, hi = 1.0;
    for (int it = 0; it < 70; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2))
            hi = m2;
        else
            lo = m1;
    }
    return f(0.5 * (lo + hi));
}

} // namespace

WwuProductReport wwu_product_check(const SuspensionState& s, double eps,
                                   double horizon, int trials, std::uint64_t seed) {
    if (!(eps > 0.0)) throw invalid_input_error("wwu_product_check: eps must be positive");
    WwuProductReport report;
    report.trials.reserve(static_cast<std::size_t>(trials));
    Rng rng(seed);
    const double step = 0.25;
    for (int trial = 0; trial < trials; ++trial) {
        const BorelElement b{std::exp(rng.uniform(-eps / 2.0, eps / 2.0)),
                             rng.uniform(-eps / 2.0, eps / 2.0)};
        std::vector<double> theta2 = s.theta;
        for (double& c : theta2) c = mod1(c + rng.uniform(-eps, eps));
        const double dtorus = torus_dist(s.theta, theta2);

        Mat2 a = s.u.u;
        Mat2 v = s.u.u * b.to_mat();
        WwuTrialResult res;
        long steps = static_cast<long>(std::floor(horizon / step + 0.5));
        for (long k = 0; k <= steps; ++k) {
            const double dev = dist_to_geodesic_orbit(a, v) + dtorus;
            res.max_deviation = std::fmax(res.max_deviation, dev);
            a = geodesic_flow(a, -step);
            v = geodesic_flow(v, -step);
        }
        res.pass = res.max_deviation <= 2.0 * eps;
        report.max_deviation = std::fmax(report.max_deviation, res.max_deviation);
        report.trials.push_back(res);
    }
    report.all_pass = true;
    for (const auto& t : report.trials) report.all_pass = report.all_pass && t.pass;
    return report;
}

IntersectionResult intersection_point(const SuspensionState& p,
                                      const SuspensionState& q, double s) {
    const Mat2 rel = p.u.u.inverse() * q.u.u;
    BorelElement b0;
    if (!try_as_borel(rel, b0))
        throw relative_position_error(
            "intersection_point: p^{-1} q is not in the Borel group");
    const BorelFactorization fac = borel_factorize(b0, s);
    IntersectionResult out;
    out.q_prime.u.u = horocycle_flow(p.u.u, s, HoroSign::plus) * fac.b1.to_mat();
    out.q_prime.theta = q.theta;
    out.l = fac.l;
    return out;
}

} // namespace horoflow
