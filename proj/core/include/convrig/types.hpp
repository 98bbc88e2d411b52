#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace convrig {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;
using Mat42 = Eigen::Matrix<double, 4, 2>;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

/// Numerical precondition or invariant violated (bad geometry, lost
/// convexity, tolerance exceeded). Distinct from std::invalid_argument,
/// which is reserved for caller errors like dimension mismatches.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace convrig
