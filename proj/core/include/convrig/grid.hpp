#pragma once

#include "convrig/jets.hpp"
#include "convrig/types.hpp"

#include <memory>
#include <span>
#include <vector>

namespace convrig {

// Two-chart stereographic discretization of the unit sphere.
//
// Chart 0 projects from the south pole, chart 1 from the north pole; the
// second chart flips u2 so that the transition u' = (u1, -u2)/|u|^2 is
// orientation preserving and both charts are positively oriented with
// respect to the outward normal. Each chart is a uniform (2N+1)^2 grid on
// [-1.5, 1.5]^2 with spacing h = 3/(2N). A smooth partition of unity
// (C^6 polynomial ramp in log|u|, supported in 2/3 <= |u| <= 3/2) makes
// lattice sums into high-order quadrature.

class SphereGrid;

/// Per-node analytic chart derivatives of the inclusion map S^2 -> R^3.
struct ChartJets {
  std::vector<JetVec3> x; // 3-jet of the direction per node
};

struct ScalarJets {
  std::vector<Vec2> d1;
  std::vector<std::array<double, 3>> d2; // (11, 12, 22)
  std::vector<std::array<double, 4>> d3; // (111, 112, 122, 222); may be empty
};

struct ScalarField {
  const SphereGrid* grid = nullptr;
  std::vector<double> v;
  std::shared_ptr<const ScalarJets> jets; // analytic derivatives if known

  double& operator[](int n) { return v[n]; }
  double operator[](int n) const { return v[n]; }
};

struct Vec3Jets {
  std::vector<Mat32> d1;                   // columns d/du1, d/du2
  std::vector<std::array<Vec3, 3>> d2;     // (11, 12, 22)
  std::vector<std::array<Vec3, 4>> d3;     // optional
};

struct Vec3Field {
  const SphereGrid* grid = nullptr;
  std::vector<Vec3> v;
  std::shared_ptr<const Vec3Jets> jets;
};

/// Intrinsic vector field, components in the chart coordinate basis.
struct VectorField {
  const SphereGrid* grid = nullptr;
  std::vector<Vec2> v;
};

/// Per-node (1,1) tensor in chart coordinates.
struct Op2Field {
  const SphereGrid* grid = nullptr;
  std::vector<Mat2> v;
};

struct MetricJets {
  std::vector<std::array<Mat2, 2>> d1; // d g / du_a
  std::vector<std::array<Mat2, 3>> d2; // (11, 12, 22)
};

/// Per-node symmetric positive definite (0,2) tensor in chart coordinates.
struct MetricField {
  const SphereGrid* grid = nullptr;
  std::vector<Mat2> v;
  std::shared_ptr<const MetricJets> jets;
};

/// One row of a finite-difference stencil table: out = sum_k w[k] f[lo+k].
struct StencilRow {
  int lo = 0;
  int n = 0;
  std::array<double, 6> w{};
};

/// Tensor-product Lagrange interpolation plan (6x6 nodes).
struct InterpPlan {
  int lo1 = 0, lo2 = 0;
  std::array<double, 6> w1{}, w2{};
};

class SphereGrid {
public:
  explicit SphereGrid(int n_resolution);

  int resolution() const { return n_; }
  int side() const { return m_; }        // nodes per axis, 2N+1
  int nodes_per_chart() const { return m_ * m_; }
  int num_nodes() const { return 2 * m_ * m_; }
  double spacing() const { return h_; }

  int index(int chart, int i, int j) const {
    return chart * m_ * m_ + i * m_ + j;
  }
  int chart_of(int node) const { return node / (m_ * m_); }
  int i_of(int node) const { return (node % (m_ * m_)) / m_; }
  int j_of(int node) const { return node % m_; }

  Vec2 uv(int node) const { return uv_[node]; }
  const Vec3& direction(int node) const { return dir_[node]; }
  double partition_weight(int node) const { return pw_[node]; }
  /// Round-metric quadrature weight w * sqrt(det g_round) * h^2.
  double round_quad_weight(int node) const { return rqw_[node]; }
  /// Conformal factor of the round metric in chart coordinates.
  double round_conformal(int node) const { return lam_[node]; }
  Mat2 round_metric(int node) const {
    return lam_[node] * Mat2::Identity();
  }

  const JetVec3& direction_jet(int node) const { return chart_jets_.x[node]; }

  // --- static chart geometry -------------------------------------------
  static Vec3 chart_point(int chart, const Vec2& u);
  static JetVec3 chart_jet(int chart, const Vec2& u);
  /// Coordinates of the same sphere point in the other chart.
  static Vec2 transition(const Vec2& u);
  /// Jacobian of the transition map at u.
  static Mat2 transition_jacobian(const Vec2& u);
  static double partition_ramp(double r); // weight profile in |u|

  // --- finite differences ----------------------------------------------
  // Apply 4th-order stencils along one axis of a single chart's array
  // (size m x m, row index = u1). T needs +, * double.
  template <class T>
  void deriv1(std::span<const T> chart_vals, int axis, std::span<T> out) const {
    apply_stencil(st1_, chart_vals, axis, out);
  }
  template <class T>
  void deriv2(std::span<const T> chart_vals, int axis, std::span<T> out) const {
    apply_stencil(st2_, chart_vals, axis, out);
  }

  /// Scalar 2-jets of a per-node field: analytic if carried, else FD.
  ScalarJets scalar_jets2(const ScalarField& f) const;
  Vec3Jets vec3_jets2(const Vec3Field& f) const;

  // --- interpolation and chart consistency ------------------------------
  InterpPlan interp_plan(const Vec2& u) const;
  double interp(std::span<const double> chart_vals, const InterpPlan& p) const;
  Vec3 interp(std::span<const Vec3> chart_vals, const InterpPlan& p) const;

  /// Max disagreement of f between charts over the overlap annulus,
  /// transporting values by interpolation.
  double overlap_residual(const ScalarField& f) const;

  // --- quadrature --------------------------------------------------------
  double integrate_round(const ScalarField& f) const;
  double integrate(const ScalarField& f, const MetricField& g) const;
  /// Integral of per-node values against an explicit area density
  /// (density in chart coordinates, i.e. already includes sqrt(det g)).
  double integrate_density(std::span<const double> f,
                           std::span<const double> density) const;

private:
  template <class T>
  void apply_stencil(const std::vector<StencilRow>& table,
                     std::span<const T> vals, int axis,
                     std::span<T> out) const {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        const StencilRow& row = table[axis == 0 ? i : j];
        T acc = row.w[0] * vals[axis == 0 ? (row.lo * m_ + j)
                                          : (i * m_ + row.lo)];
        for (int k = 1; k < row.n; ++k) {
          const int idx = axis == 0 ? ((row.lo + k) * m_ + j)
                                    : (i * m_ + row.lo + k);
          acc = acc + row.w[k] * vals[idx];
        }
        out[i * m_ + j] = acc;
      }
    }
  }

  int n_ = 0, m_ = 0;
  double h_ = 0.0;
  std::vector<Vec2> uv_;
  std::vector<Vec3> dir_;
  std::vector<double> pw_, rqw_, lam_;
  ChartJets chart_jets_;
  std::vector<StencilRow> st1_, st2_;
};

/// Helpers to slice a field's storage per chart.
template <class T>
std::span<const T> chart_span(const std::vector<T>& v, const SphereGrid& g,
                              int chart) {
  return std::span<const T>(v).subspan(
      static_cast<size_t>(chart) * g.nodes_per_chart(), g.nodes_per_chart());
}
template <class T>
std::span<T> chart_span(std::vector<T>& v, const SphereGrid& g, int chart) {
  return std::span<T>(v).subspan(
      static_cast<size_t>(chart) * g.nodes_per_chart(), g.nodes_per_chart());
}

/// Fornberg finite-difference weights for derivative `order` at point z
/// from nodes xs.
std::vector<double> fd_weights(double z, std::span<const double> xs,
                               int order);

} // namespace convrig
