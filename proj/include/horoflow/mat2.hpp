#pragma once

#include <cstdint>

namespace horoflow {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 2x2 real matrix with unit determinant, row-major [[a,b],[c,d]].
/// Values are plain data; the det invariant is maintained by the
/// renormalization policy (renormalize every kRenormCadence composed steps).
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    // Adjugate divided by det; exact inverse for det == 1.
    Mat2 inverse() const;

    bool is_finite() const;
};

double frobenius_norm(const Mat2& m);
double frobenius_distance(const Mat2& m, const Mat2& n);
// min over the projective sign: distance to +Id or -Id.
double distance_to_pm_identity(const Mat2& m);

// Canonical projective representative: first nonzero entry in order
// a, b, c, d is positive. Makes PSL(2,R) equality a plain comparison.
Mat2 canonical_sign(const Mat2& m);
bool psl_equal(const Mat2& m, const Mat2& n, double tol);

/// Right action of diag(e^{t/2}, e^{-t/2}).
Mat2 geodesic_flow(const Mat2& u, double t);

enum class HoroSign { plus, minus };

/// Right action of [[1,s],[0,1]] (plus) or [[1,0],[s,1]] (minus).
Mat2 horocycle_flow(const Mat2& u, double s, HoroSign sign);

Mat2 geodesic_matrix(double t);
Mat2 horocycle_matrix(double s, HoroSign sign);
/// Rotation about i by tangent angle phi (SO(2) parameter phi/2).
Mat2 rotation_matrix(double phi);

/// Element [[lambda, 0], [t, 1/lambda]] of the Borel group, lambda > 0.
struct BorelElement {
    double lambda = 1.0;
    double t = 0.0;

    Mat2 to_mat() const { return {lambda, 0.0, t, 1.0 / lambda}; }
};

struct BorelFactorization {
    BorelElement b1;
    double l = 0.0;
};

/// Solves h_{-s} * b0 = b1 * h_{-l} in the Borel/unipotent chart:
/// lambda1 = lambda0 - s*t0, t1 = t0, l = s / (lambda0 * lambda1).
/// Throws degenerate_factorization_error when lambda0 - s*t0 <= 0.
BorelFactorization borel_factorize(const BorelElement& b0, double s);

/// If m is lower triangular (|b| <= off_tol) with positive diagonal after
/// projective sign fix, returns true and fills out.
bool try_as_borel(const Mat2& m, BorelElement& out, double off_tol = 1e-9);

/// u = [[1,x],[0,1]] * diag(sqrt(y), 1/sqrt(y)) * rotation(theta),
/// theta in [0, pi) (projective).
struct IwasawaCoords {
    double x = 0.0;
    double y = 1.0;
    double theta = 0.0;
};

IwasawaCoords iwasawa(const Mat2& u);
Mat2 from_iwasawa(const IwasawaCoords& q);

/// u / sqrt(det u). Throws corrupted_state_error when det <= 0.
Mat2 renormalize(const Mat2& u);

// Renormalization cadence for long composed-flow orbits: keeps |det - 1|
// below 1e-9 over 1e6 elementary steps.
inline constexpr std::int64_t kRenormCadence = 1000;

} // namespace horoflow
