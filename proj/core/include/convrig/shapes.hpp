#pragma once

#include "convrig/grid.hpp"

#include <nlohmann/json_fwd.hpp>
#include <vector>

namespace convrig {

// Closed shape-spec grammar (no expression evaluation):
//   {"kind":"sphere","radius":r}
//   {"kind":"ellipsoid","axes":[a,b,c]}
//   {"kind":"linear","a":[ax,ay,az]}
//   {"kind":"harmonics","coeffs":[[l,m,c],...]}   real orthonormal Y_lm
//   {"kind":"sum","terms":[...]} | {"kind":"product","terms":[...]}
//   {"kind":"s3_radial","base":<spec>}
struct ShapeSpec {
  enum class Kind { Sphere, Ellipsoid, Linear, Harmonics, Sum, Product,
                    S3Radial };
  Kind kind = Kind::Sphere;
  double radius = 1.0;
  Vec3 axes = Vec3::Ones();
  Vec3 dir = Vec3::Zero();
  std::vector<std::array<double, 3>> harmonics; // (l, m, coeff)
  std::vector<ShapeSpec> terms; // sum/product members, or s3_radial base

  static ShapeSpec sphere(double r);
  static ShapeSpec ellipsoid(const Vec3& axes);
  static ShapeSpec linear(const Vec3& a);
  static ShapeSpec sum(std::vector<ShapeSpec> t);
  static ShapeSpec product(std::vector<ShapeSpec> t);

  static ShapeSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// How a scalar spec is read off a shape.
enum class FieldRole {
  Function, ///< plain function of the direction (sphere -> its radius)
  Radial,   ///< distance function r(x); ellipsoid -> 1/sqrt(sum x_i^2/a_i^2)
  Support   ///< support function h(x); ellipsoid -> sqrt(sum a_i^2 x_i^2)
};

/// Evaluate a spec at every grid node with analytic chart jets attached.
ScalarField synth_field(const SphereGrid& grid, const ShapeSpec& spec,
                        FieldRole role = FieldRole::Function);

/// Gauss curvature indexed by the outward normal direction, for specs that
/// describe a convex body (sphere, ellipsoid). Other specs are taken
/// literally as the curvature function.
ScalarField synth_curvature(const SphereGrid& grid, const ShapeSpec& spec);

/// Exact value of a spec at one direction (no grid), for oracle tests.
double eval_spec(const ShapeSpec& spec, const Vec3& x,
                 FieldRole role = FieldRole::Function);

/// Jet of the spec composed with the chart map at arbitrary chart coords.
Jet3 eval_spec_jet(const ShapeSpec& spec, int chart, const Vec2& u,
                   FieldRole role = FieldRole::Function);

/// Real orthonormal spherical harmonic Y_{l,m} evaluated on a jet of a
/// unit direction (geodesy convention, no Condon-Shortley phase).
Jet3 spherical_harmonic_jet(int l, int m, const JetVec3& x);
double spherical_harmonic(int l, int m, const Vec3& x);

} // namespace convrig
