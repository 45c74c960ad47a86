#pragma once

#include "horoflow/halfplane.hpp"
#include "horoflow/mat2.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace horoflow {

/// Cocompact genus-2 surface group from the regular hyperbolic octagon with
/// opposite-side pairing. Generators 0..3 are the side pairings, 4..7 their
/// inverses. Immutable after construction.
struct FuchsianGroup {
    std::array<Mat2, 8> gens;
    std::vector<int> relator;     // generator indices whose product is +-Id
    HPoint center{0.0, 1.0};      // Dirichlet center, fixed at i
    double domain_radius_bound = 0.0; // octagon circumradius
    double translation_length = 0.0;  // common translation length of the gens

    int inverse_index(int k) const { return (k + 4) % 8; }

    std::string to_json() const;
};

/// Builds the octagon group: side pairings R_{k*pi/4} T0 R_{k*pi/4}^{-1},
/// k = 0..3, with T0 the translation through i of half-length
/// acosh(1 + sqrt 2). The relator ordering is picked at build time by testing
/// the standard candidate orderings; exactly one must give +-Id within 1e-8,
/// otherwise construction_error is thrown.
FuchsianGroup build_octagon_group();

/// Representative with base point inside the Dirichlet domain, plus the
/// sequence of generator indices that was applied (left multiplications,
/// in application order).
struct ReducedTangent {
    TangentPoint rep;
    std::vector<int> word;
};

/// Greedy Dirichlet descent: while some generator moves the base strictly
/// closer to the center (by more than 1e-12), apply the best one, ties broken
/// by lowest index. Throws iteration_cap_error after 1e6 steps.
ReducedTangent reduce(const FuchsianGroup& group, const TangentPoint& u);

/// Product of `length` seeded-uniform generators with no immediate
/// backtracking. Deterministic given seed.
Mat2 random_word_element(const FuchsianGroup& group, int length, std::uint64_t seed);

} // namespace horoflow
