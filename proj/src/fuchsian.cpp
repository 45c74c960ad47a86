#include "horoflow/fuchsian.hpp"

#include "horoflow/errors.hpp"
#include "horoflow/rng.hpp"

#include <json.hpp>

#include <cmath>

namespace horoflow {

namespace {

Mat2 word_product(const std::array<Mat2, 8>& gens, const std::vector<int>& word) {
    Mat2 m = Mat2::identity();
    for (int k : word) m = m * gens[static_cast<std::size_t>(k)];
    return m;
}

// Side-pairing orientation conventions differ across references; candidate
// orderings for the octagon relator, tested against the matrices at build
// time. Indices 4..7 denote inverses.
const std::vector<std::vector<int>> kRelatorCandidates = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 5, 2, 7, 4, 1, 6, 3},
    {0, 1, 4, 5, 2, 3, 6, 7},
    {0, 3, 2, 1, 4, 7, 6, 5},
};

} // namespace

FuchsianGroup build_octagon_group() {
    FuchsianGroup g;
    // Regular octagon, all vertices identified: interior angle pi/4, apothem a
    // with cosh a = cot(pi/8) = 1 + sqrt 2. Pairing translations have length
    // 2a, so cosh(l/2) = 1 + sqrt 2.
    const double cosh_half = 1.0 + std::sqrt(2.0);
    const double half_len = std::acosh(cosh_half);
    const Mat2 t0 = geodesic_matrix(2.0 * half_len);
    for (int k = 0; k < 4; ++k) {
        const Mat2 r = rotation_matrix(static_cast<double>(k) * kPi / 4.0);
        const Mat2 gen = r * t0 * r.inverse();
        g.gens[static_cast<std::size_t>(k)] = gen;
        g.gens[static_cast<std::size_t>(k + 4)] = gen.inverse();
    }
    g.translation_length = 2.0 * half_len;
    // Circumradius: cosh R = cot^2(pi/8) = 3 + 2*sqrt 2.
    g.domain_radius_bound = std::acosh(3.0 + 2.0 * std::sqrt(2.0));

    int found = -1;
    for (std::size_t i = 0; i < kRelatorCandidates.size(); ++i) {
        if (distance_to_pm_identity(word_product(g.gens, kRelatorCandidates[i])) <= 1e-8) {
            if (found >= 0)
                throw construction_error("build_octagon_group: relator ordering ambiguous");
            found = static_cast<int>(i);
        }
    }
    if (found < 0)
        throw construction_error("build_octagon_group: no candidate relator gives +-Id");
    g.relator = kRelatorCandidates[static_cast<std::size_t>(found)];

    for (const Mat2& gen : g.gens) {
        if (std::fabs(gen.trace()) <= 2.0)
            throw construction_error("build_octagon_group: generator not hyperbolic");
    }
    return g;
}

std::string FuchsianGroup::to_json() const {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const Mat2& m : gens)
        j["generators"].push_back({m.a, m.b, m.c, m.d});
    j["relator"] = relator;
    j["center"] = {center.re, center.im};
    j["domain_radius_bound"] = domain_radius_bound;
    j["translation_length"] = translation_length;
    return j.dump(2);
}

ReducedTangent reduce(const FuchsianGroup& group, const TangentPoint& u) {
    ReducedTangent out;
    out.rep = u;
    HPoint z = out.rep.base();
    double dist = hyp_dist(z, group.center);
    // Inside the inscribed disk no generator can improve: d(gamma z, c) >=
    // l - d(z, c) > d(z, c) when d(z, c) < l/2.
    const double half_translation = group.translation_length / 2.0;
    for (long iter = 0; iter < 1000000; ++iter) {
        if (dist < half_translation) return out;
        int best = -1;
        double best_dist = dist - 1e-12;
        for (int k = 0; k < 8; ++k) {
            const double dk =
                hyp_dist(mobius(group.gens[static_cast<std::size_t>(k)], z), group.center);
            if (dk < best_dist) {
                best_dist = dk;
                best = k;
            }
        }
        if (best < 0) return out;
        out.rep.u = group.gens[static_cast<std::size_t>(best)] * out.rep.u;
        out.word.push_back(best);
        z = out.rep.base();
        dist = hyp_dist(z, group.center);
    }
    throw iteration_cap_error("reduce: descent did not terminate (numerical corruption)");
}

Mat2 random_word_element(const FuchsianGroup& group, int length, std::uint64_t seed) {
    if (length < 0) throw invalid_input_error("random_word_element: negative length");
    Rng rng(seed);
    Mat2 m = Mat2::identity();
    int prev = -1;
    for (int i = 0; i < length; ++i) {
        int k;
        do {
            k = static_cast<int>(rng.below(8));
        } while (prev >= 0 && k == group.inverse_index(prev));
        m = m * group.gens[static_cast<std::size_t>(k)];
        prev = k;
    }
    return m;
}

} // namespace horoflow
