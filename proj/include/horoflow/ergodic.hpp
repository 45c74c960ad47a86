#pragma once

#include "horoflow/fuchsian.hpp"
#include "horoflow/sol3.hpp"
#include "horoflow/suspension.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace horoflow {

/// Test function evaluated on reduced states only. All kinds are
/// Gamma-invariant by construction.
struct Observable {
    enum class Kind { torus_fourier, leafwise_height, sol_z_cosine, constant };

    std::string name;
    Kind kind = Kind::constant;
    std::vector<int> fourier_k; // torus_fourier frequency vector
    double value = 0.0;         // constant

    static Observable torus_fourier(std::vector<int> k);
    static Observable leafwise_height();
    static Observable sol_z_cosine();
    static Observable constant(double c);
};

double eval_observable(const Observable& obs, const SuspensionState& reduced);
double eval_observable(const Observable& obs, const SolLattice& lat,
                       const SolPoint& reduced);

/// Per-start time-average trajectory plus cross-start spread statistics.
struct BirkhoffReport {
    std::vector<std::string> start_labels;
    std::vector<double> times;                 // checkpoints, increasing
    std::vector<std::vector<double>> averages; // [start][checkpoint]
    std::vector<double> spread;                // max - min across starts
    bool has_reference = false;
    double reference = 0.0; // target space average where known
};

/// Left-endpoint Riemann average of obs along the flow, reducing every step;
/// returns one average per checkpoint. Checkpoints must lie in (0, T].
std::vector<double> birkhoff(const FuchsianGroup& group, const TorusRep& rep,
                             const SuspensionState& start, LeafFlow flow,
                             const Observable& obs, double T, double dt,
                             std::span<const double> checkpoints);

std::vector<double> birkhoff(const SolLattice& lat, const SolPoint& start,
                             SolFlow flow, const Observable& obs, double T,
                             double dt, std::span<const double> checkpoints);

/// Liouville-distributed unit tangent vectors over the Dirichlet domain:
/// rejection sampling of base points with density dx dy / y^2 over a bounding
/// box, keeping points that reduce with empty word, paired with a uniform
/// fiber angle. Deterministic given seed.
std::vector<TangentPoint> liouville_sample(const FuchsianGroup& group, int n,
                                           std::uint64_t seed);

struct HaarWindowReport {
    long n = 0;
    long count1 = 0, count2 = 0;
    double est1 = 0.0, est2 = 0.0; // box-normalized window measures
    double se1 = 0.0, se2 = 0.0;   // binomial standard errors
    double box_mass = 0.0;         // Haar mass of the sampling box
    bool agree = false;            // |est1 - est2| <= 3 * combined se
};

/// Monte-Carlo check that the Haar measure of h_{(s',s'')} B_eps depends only
/// on s'' - s': compares the windows h_{(0,delta)} B_eps and
/// h_{(c,c+delta)} B_eps. Samples from the fixed box |x| <= 1, y in [1/e, e],
/// theta in [0, pi) with exact density weights.
HaarWindowReport haar_window_test(double eps, double delta, double c, long n,
                                  std::uint64_t seed);

enum class Space { suspension, sol };

struct EquidistConfig {
    Space space = Space::suspension;
    Observable observable;
    int starts = 8;               // suspension: Liouville-seeded states
    std::vector<double> sol_z0;   // sol: start heights (x = y = 0)
    LeafFlow flow = LeafFlow::hplus;
    SolFlow sol_flow_kind = SolFlow::hplus;
    double T = 2e4;
    double dt = 0.01;
    std::vector<double> checkpoints; // empty: {T/100, T/10, T}
    std::uint64_t seed = 1;
};

/// Runs birkhoff per start (starts evaluated concurrently, aggregation fixed
/// by start index) and fills cross-start spreads.
BirkhoffReport equidist_experiment(const EquidistConfig& cfg);

/// CSV rows start_index,checkpoint_T,average,running_spread with
/// 17-significant-digit formatting; `header` lines are prepended verbatim.
std::string to_csv(const BirkhoffReport& report, const std::string& header);
std::string report_summary_json(const BirkhoffReport& report);

/// Round-trip-exact decimal formatting for doubles (17 significant digits).
std::string fmt17(double v);

} // namespace horoflow
