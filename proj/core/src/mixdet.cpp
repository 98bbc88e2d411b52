#include "convrig/mixdet.hpp"

#include <cmath>

namespace convrig {

double polarized_det(const Mat2& a, const Mat2& b) {
  return 0.5 * ((a + b).determinant() - a.determinant() - b.determinant());
}

double polarized_det(const Mat3& a, const Mat3& b, const Mat3& c) {
  const double s3 = (a + b + c).determinant();
  const double s2 =
      (a + b).determinant() + (a + c).determinant() + (b + c).determinant();
  const double s1 = a.determinant() + b.determinant() + c.determinant();
  return (s3 - s2 + s1) / 6.0;
}

static void check_ops(std::span<const MatX> ops) {
  if (ops.empty() || ops.size() > 3)
    throw std::invalid_argument("polarized_det: need 2 or 3 operators");
  const Eigen::Index n = static_cast<Eigen::Index>(ops.size());
  for (const auto& m : ops) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("polarized_det: dimension mismatch");
  }
  if (n != 2 && n != 3)
    throw std::invalid_argument("polarized_det: only dim 2 and 3 supported");
}

double polarized_det(std::span<const MatX> ops) {
  check_ops(ops);
  if (ops.size() == 2) {
    return polarized_det(Mat2(ops[0]), Mat2(ops[1]));
  }
  return polarized_det(Mat3(ops[0]), Mat3(ops[1]), Mat3(ops[2]));
}

double det_derivative(const Mat2& b, const Mat2& bdot) {
  return 2.0 * polarized_det(bdot, b);
}

double dvol_wedge(std::span<const MatX> forms, double vol_form) {
  check_ops(forms);
  const double fact = forms.size() == 2 ? 2.0 : 6.0;
  return fact * polarized_det(forms) * vol_form;
}

double dvol_wedge(const Mat2& w1, const Mat2& w2, double vol_form) {
  return 2.0 * polarized_det(w1, w2) * vol_form;
}

double dvol_wedge(const Mat3& w1, const Mat3& w2, const Mat3& w3,
                  double vol_form) {
  return 6.0 * polarized_det(w1, w2, w3) * vol_form;
}

Mat2 rotation_j() {
  Mat2 j;
  j << 0.0, -1.0, 1.0, 0.0;
  return j;
}

AxialExtension axial_extension(const Vec3& t1, const Vec3& t2, const Vec3& m1,
                               const Vec3& m2, const Vec3& normal,
                               double tol) {
  // Orthonormal frame of the plane; images of e1, e2 by linearity.
  const Vec3 e1 = t1.normalized();
  Vec3 e2 = t2 - t2.dot(e1) * e1;
  const double t2n = e2.norm();
  if (t2n < 1e-14 * t2.norm() || t1.norm() == 0.0)
    throw std::invalid_argument("axial_extension: degenerate tangent plane");
  e2 /= t2n;
  Vec3 e3 = e1.cross(e2);
  if (e3.dot(normal) < 0.0) e3 = -e3;

  // Solve [t1 t2] coefficients for e1, e2 within the plane.
  Eigen::Matrix2d tt;
  tt << t1.dot(t1), t1.dot(t2), t2.dot(t1), t2.dot(t2);
  Eigen::Matrix2d rhs;
  rhs << t1.dot(e1), t1.dot(e2), t2.dot(e1), t2.dot(e2);
  const Eigen::Matrix2d coef = tt.ldlt().solve(rhs); // columns: e1, e2 coords
  const Vec3 de1 = coef(0, 0) * m1 + coef(1, 0) * m2;
  const Vec3 de2 = coef(0, 1) * m1 + coef(1, 1) * m2;

  Mat3 a = Mat3::Zero();
  a.col(0) = Vec3(e1.dot(de1), e2.dot(de1), e3.dot(de1));
  a.col(1) = Vec3(e1.dot(de2), e2.dot(de2), e3.dot(de2));
  a(0, 2) = -a(2, 0);
  a(1, 2) = -a(2, 1);

  const double scale =
      std::max({m1.norm() / std::max(t1.norm(), 1e-300),
                m2.norm() / std::max(t2.norm(), 1e-300), 1e-300});
  const Mat3 sym = 0.5 * (a + a.transpose());
  AxialExtension out;
  out.skew_residual = sym.topLeftCorner<2, 2>().norm() / scale;
  if (out.skew_residual > tol)
    throw NumericalError("axial_extension: map is not skew on the plane "
                         "(not an isometric deformation), residual = " +
                         std::to_string(out.skew_residual));
  const Mat3 skew = 0.5 * (a - a.transpose());
  const Vec3 axis_frame(skew(2, 1), skew(0, 2), skew(1, 0));
  out.axis = axis_frame(0) * e1 + axis_frame(1) * e2 + axis_frame(2) * e3;
  return out;
}

} // namespace convrig
