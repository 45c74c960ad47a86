#pragma once

#include "horoflow/fuchsian.hpp"
#include "horoflow/halfplane.hpp"
#include "horoflow/mat2.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace horoflow {

/// Representation of the octagon group into T^k: each generator index maps to
/// a rotation vector in [0,1)^k, with rot(inverse) = -rot mod 1.
struct TorusRep {
    int k = 1;
    std::array<std::vector<double>, 8> rot;

    /// k = 1, rot(g0) = golden ratio conjugate, rot(g1) = sqrt(2) - 1,
    /// rot(g2) = rot(g3) = 0.
    static TorusRep default_rep();

    void validate() const; // throws invalid_input_error on violations
    std::string to_json() const;
};

/// Point of the suspension Gamma \ (PSL(2,R) x T^k).
struct SuspensionState {
    TangentPoint u;
    std::vector<double> theta;
};

enum class LeafFlow { geodesic, hplus, hminus };

/// Right flows act only on the PSL factor; theta is untouched (bitwise).
SuspensionState susp_flow(const SuspensionState& s, double t, LeafFlow which);

/// Flat torus metric: max over coordinates of circle distance (period 1).
double torus_dist(const std::vector<double>& a, const std::vector<double>& b);

/// Reduces the PSL factor with the Dirichlet descent and rolls the applied
/// word through the representation: theta' = theta + sum rot(w_i) mod 1.
SuspensionState susp_reduce(const FuchsianGroup& group, const TorusRep& rep,
                            const SuspensionState& s);

struct WwuTrialResult {
    double max_deviation = 0.0;
    bool pass = false;
};

struct WwuProductReport {
    std::vector<WwuTrialResult> trials;
    double max_deviation = 0.0;
    bool all_pass = false;
};

/// Product-structure check for the local weakly unstable sets: samples
/// v in u * B_eps and theta' within eps of theta, then verifies that the
/// perturbed state stays within 2*eps of the g_{-t}-orbit of s for
/// t in [0, horizon], in the product metric t1_dist + torus_dist. The
/// distance to the orbit is minimized over a local time window.
WwuProductReport wwu_product_check(const SuspensionState& s, double eps,
                                   double horizon, int trials, std::uint64_t seed);

struct IntersectionResult {
    SuspensionState q_prime;
    double l = 0.0;
};

/// Unique intersection W^{wu}(h_s(p)) cap h_R(q) for q = p * b0 with b0 Borel
/// and matching torus parts: q' = h_s(p) * b1 where (b1, l) solves
/// h_{-s} b0 = b1 h_{-l}. Throws relative_position_error when p^{-1}q is not
/// Borel, degenerate_factorization_error when the chart degenerates.
IntersectionResult intersection_point(const SuspensionState& p,
                                      const SuspensionState& q, double s);

} // namespace horoflow
