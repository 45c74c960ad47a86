#pragma once

#include "horoflow/mat2.hpp"

#include <array>
#include <span>
#include <string>

namespace horoflow {

/// Point of the solvable group Sol^3 in eigenbasis coordinates; the lattice
/// z-period is log(lambda) in these raw units.
struct SolPoint {
    double x = 0.0, y = 0.0, z = 0.0;
};

/// (x,y,z).(x',y',z') = (x + e^z x', y + e^{-z} y', z + z').
SolPoint sol_mul(const SolPoint& p, const SolPoint& q);

enum class SolFlow { hplus, geodesic, vperp };

/// hplus:    (x + e^z s, y, z)
/// geodesic: (x, y, z + s)
/// vperp:    (x, y + e^{-z} s, z)
SolPoint sol_flow(const SolPoint& p, double s, SolFlow which);

/// Lattice data from a hyperbolic A in SL(2,Z): leading eigenvalue lambda,
/// eigenbasis change matrix P (P * standard = eigen coordinates, so
/// P^{-1} diag(lambda, 1/lambda) P = A), and z-period log(lambda).
struct SolLattice {
    std::array<std::array<long, 2>, 2> A{};
    double lambda = 0.0;
    Mat2 P; // basis matrix: columns are eigen-coordinates of (1,0), (0,1)
    double z_period = 0.0;

    std::string to_json() const;
};

/// Throws invalid_input_error unless det(A) = 1 and |trace(A)| > 2.
SolLattice make_lattice(const std::array<std::array<long, 2>, 2>& A);

/// Canonical representative in the quotient: z folded into [0, z_period) by
/// a lattice z-shift, then (x,y) Babai-rounded into the fundamental cell of
/// the horizontal lattice P*Z^2.
SolPoint sol_reduce(const SolLattice& lat, const SolPoint& p);

/// First-order Riemann-sum length of a polyline under the left-invariant
/// metric e^{-2z} dx^2 + e^{2z} dy^2 + dz^2 (z evaluated at segment midpoints).
double sol_metric_length(std::span<const SolPoint> path);

} // namespace horoflow
