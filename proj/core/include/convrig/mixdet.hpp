#pragma once

#include "convrig/types.hpp"

#include <span>

namespace convrig {

// Mixed determinants: the symmetric multilinear polarization of det on
// End(V) for dim V in {2,3}, plus the dvol-of-wedge normalization and the
// axial extension of skew maps used by the rotation-field machinery.

/// det(A,B) = (det(A+B) - det A - det B)/2.  det(A,A) = det A.
double polarized_det(const Mat2& a, const Mat2& b);

/// Inclusion-exclusion polarization over subsets of {A,B,C}, divided by 3!.
double polarized_det(const Mat3& a, const Mat3& b, const Mat3& c);

/// Runtime-dimension variant; all operators must be n x n with n in {2,3}
/// and the list must have exactly n entries.
double polarized_det(std::span<const MatX> ops);

/// d/dt det(B + t Bdot) at t = 0, i.e. 2 det(Bdot, B) for 2x2 operators.
double det_derivative(const Mat2& b, const Mat2& bdot);

/// dvol applied to a wedge of n operator-valued 1-forms: n! det(w1,...,wn),
/// scaled by the supplied volume normalization.
double dvol_wedge(std::span<const MatX> forms, double vol_form = 1.0);
double dvol_wedge(const Mat2& w1, const Mat2& w2, double vol_form = 1.0);
double dvol_wedge(const Mat3& w1, const Mat3& w2, const Mat3& w3,
                  double vol_form = 1.0);

/// Rotation by pi/2 as the fixed skew 2x2 matrix.
Mat2 rotation_j();

struct AxialExtension {
  Vec3 axis;            // eta with eta x (.) the unique skew extension
  double skew_residual; // symmetric-part magnitude relative to input scale
};

/// Extends a linear map given on a 2-plane (images m1, m2 of the spanning
/// vectors t1, t2) to the unique skew-symmetric operator of R^3 and returns
/// its axial vector. The map must pair skew-symmetrically with the plane;
/// the residual of that check is reported and enforced against `tol`.
AxialExtension axial_extension(const Vec3& t1, const Vec3& t2, const Vec3& m1,
                               const Vec3& m2, const Vec3& normal,
                               double tol = 1e-8);

} // namespace convrig
