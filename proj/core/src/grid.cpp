#include "convrig/grid.hpp"

#include <algorithm>
#include <cmath>

namespace convrig {

std::vector<double> fd_weights(double z, std::span<const double> xs,
                               int order) {
  // Fornberg's recursion, weights for derivatives 0..order at z.
  const int n = static_cast<int>(xs.size());
  std::vector<double> c(static_cast<size_t>(n) * (order + 1), 0.0);
  auto at = [&](int i, int k) -> double& { return c[i * (order + 1) + k]; };
  double c1 = 1.0, c4 = xs[0] - z;
  at(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0, c5 = c4;
    c4 = xs[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          at(i, k) = c1 * (k * at(i - 1, k - 1) - c5 * at(i - 1, k)) / c2;
        at(i, 0) = -c1 * c5 * at(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k)
        at(j, k) = (c4 * at(j, k) - k * at(j, k - 1)) / c3;
      at(j, 0) = c4 * at(j, 0) / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = at(i, order);
  return w;
}

// C^6 odd ramp: S(x) = int_0^x (1-t^2)^6 dt, normalized so S(1) = 1.
static double odd_ramp(double x) {
  static const double coef[7] = {1.0,        -6.0 / 3.0,  15.0 / 5.0,
                                 -20.0 / 7.0, 15.0 / 9.0, -6.0 / 11.0,
                                 1.0 / 13.0};
  double num = 0.0, den = 0.0, xp = x;
  for (int j = 0; j < 7; ++j) {
    num += coef[j] * xp;
    den += coef[j];
    xp *= x * x;
  }
  return num / den;
}

double SphereGrid::partition_ramp(double r) {
  static const double kL = std::log(1.5);
  if (r <= 2.0 / 3.0) return 1.0;
  if (r >= 1.5) return 0.0;
  return 0.5 * (1.0 - odd_ramp(std::log(r) / kL));
}

Vec3 SphereGrid::chart_point(int chart, const Vec2& u) {
  const double r2 = u.squaredNorm();
  const double den = 1.0 + r2;
  if (chart == 0)
    return Vec3(2.0 * u.x() / den, 2.0 * u.y() / den, (1.0 - r2) / den);
  return Vec3(2.0 * u.x() / den, -2.0 * u.y() / den, (r2 - 1.0) / den);
}

JetVec3 SphereGrid::chart_jet(int chart, const Vec2& u) {
  const Jet3 u1 = Jet3::variable(u.x(), 0);
  const Jet3 u2 = Jet3::variable(u.y(), 1);
  const Jet3 r2 = u1 * u1 + u2 * u2;
  const Jet3 inv = recip(r2 + 1.0);
  JetVec3 x;
  if (chart == 0) {
    x[0] = 2.0 * (u1 * inv);
    x[1] = 2.0 * (u2 * inv);
    x[2] = (1.0 - r2) * inv;
  } else {
    x[0] = 2.0 * (u1 * inv);
    x[1] = -2.0 * (u2 * inv);
    x[2] = (r2 - 1.0) * inv;
  }
  return x;
}

Vec2 SphereGrid::transition(const Vec2& u) {
  const double r2 = u.squaredNorm();
  return Vec2(u.x() / r2, -u.y() / r2);
}

Mat2 SphereGrid::transition_jacobian(const Vec2& u) {
  const double r2 = u.squaredNorm();
  const double a = u.y() * u.y() - u.x() * u.x();
  const double b = 2.0 * u.x() * u.y();
  Mat2 jac;
  jac << a / (r2 * r2), -b / (r2 * r2), b / (r2 * r2), a / (r2 * r2);
  return jac;
}

SphereGrid::SphereGrid(int n_resolution) : n_(n_resolution) {
  if (n_ < 8) throw std::invalid_argument("SphereGrid: N must be >= 8");
  m_ = 2 * n_ + 1;
  h_ = 3.0 / (2.0 * n_);
  const int total = 2 * m_ * m_;
  uv_.resize(total);
  dir_.resize(total);
  pw_.resize(total);
  rqw_.resize(total);
  lam_.resize(total);
  chart_jets_.x.resize(total);
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        const int id = index(c, i, j);
        const Vec2 u(-1.5 + h_ * i, -1.5 + h_ * j);
        uv_[id] = u;
        const JetVec3 xj = chart_jet(c, u);
        chart_jets_.x[id] = xj;
        dir_[id] = Vec3(xj[0].v, xj[1].v, xj[2].v);
        const double r2 = u.squaredNorm();
        const double lam = 4.0 / ((1.0 + r2) * (1.0 + r2));
        lam_[id] = lam;
        pw_[id] = partition_ramp(u.norm());
        rqw_[id] = pw_[id] * lam * h_ * h_;
      }
    }
  }

  // Stencil tables: centered 5-point in the interior (4th order for both
  // derivative orders), shifted windows near the array edges (6 points for
  // second derivatives to keep 4th order).
  st1_.resize(m_);
  st2_.resize(m_);
  std::vector<double> xs;
  for (int i = 0; i < m_; ++i) {
    for (int order = 1; order <= 2; ++order) {
      const bool interior = (i >= 2 && i <= m_ - 3);
      const int n = interior ? 5 : (order == 1 ? 5 : 6);
      int lo = std::clamp(i - 2, 0, m_ - n);
      xs.clear();
      for (int k = 0; k < n; ++k) xs.push_back(h_ * (lo + k - i));
      const auto w = fd_weights(0.0, xs, order);
      StencilRow row;
      row.lo = lo;
      row.n = n;
      for (int k = 0; k < n; ++k) row.w[k] = w[k];
      (order == 1 ? st1_ : st2_)[i] = row;
    }
  }
}

ScalarJets SphereGrid::scalar_jets2(const ScalarField& f) const {
  ScalarJets out;
  const int per = nodes_per_chart();
  out.d1.resize(2 * per);
  out.d2.resize(2 * per);
  if (f.jets) {
    for (int n = 0; n < 2 * per; ++n) {
      out.d1[n] = f.jets->d1[n];
      out.d2[n] = f.jets->d2[n];
    }
    return out;
  }
  std::vector<double> t1(per), t2(per), t3(per);
  for (int c = 0; c < 2; ++c) {
    auto vals = chart_span(f.v, *this, c);
    deriv1(vals, 0, std::span<double>(t1));
    deriv1(vals, 1, std::span<double>(t2));
    deriv1(std::span<const double>(t1), 1, std::span<double>(t3));
    for (int k = 0; k < per; ++k) {
      out.d1[c * per + k] = Vec2(t1[k], t2[k]);
      out.d2[c * per + k][1] = t3[k];
    }
    deriv2(vals, 0, std::span<double>(t1));
    deriv2(vals, 1, std::span<double>(t2));
    for (int k = 0; k < per; ++k) {
      out.d2[c * per + k][0] = t1[k];
      out.d2[c * per + k][2] = t2[k];
    }
  }
  return out;
}

Vec3Jets SphereGrid::vec3_jets2(const Vec3Field& f) const {
  Vec3Jets out;
  const int per = nodes_per_chart();
  out.d1.resize(2 * per);
  out.d2.resize(2 * per);
  if (f.jets) {
    out.d1 = f.jets->d1;
    out.d2 = f.jets->d2;
    return out;
  }
  std::vector<Vec3> t1(per), t2(per), t3(per);
  for (int c = 0; c < 2; ++c) {
    auto vals = chart_span(f.v, *this, c);
    deriv1(vals, 0, std::span<Vec3>(t1));
    deriv1(vals, 1, std::span<Vec3>(t2));
    deriv1(std::span<const Vec3>(t1), 1, std::span<Vec3>(t3));
    for (int k = 0; k < per; ++k) {
      out.d1[c * per + k].col(0) = t1[k];
      out.d1[c * per + k].col(1) = t2[k];
      out.d2[c * per + k][1] = t3[k];
    }
    deriv2(vals, 0, std::span<Vec3>(t1));
    deriv2(vals, 1, std::span<Vec3>(t2));
    for (int k = 0; k < per; ++k) {
      out.d2[c * per + k][0] = t1[k];
      out.d2[c * per + k][2] = t2[k];
    }
  }
  return out;
}

InterpPlan SphereGrid::interp_plan(const Vec2& u) const {
  InterpPlan p;
  auto axis = [&](double t, int& lo, std::array<double, 6>& w) {
    int k = static_cast<int>(std::floor((t + 1.5) / h_));
    lo = std::clamp(k - 2, 0, m_ - 6);
    std::array<double, 6> xs;
    for (int a = 0; a < 6; ++a) xs[a] = -1.5 + h_ * (lo + a);
    for (int a = 0; a < 6; ++a) {
      double prod = 1.0;
      for (int b = 0; b < 6; ++b)
        if (b != a) prod *= (t - xs[b]) / (xs[a] - xs[b]);
      w[a] = prod;
    }
  };
  axis(u.x(), p.lo1, p.w1);
  axis(u.y(), p.lo2, p.w2);
  return p;
}

double SphereGrid::interp(std::span<const double> vals,
                          const InterpPlan& p) const {
  double acc = 0.0;
  for (int a = 0; a < 6; ++a) {
    double row = 0.0;
    for (int b = 0; b < 6; ++b)
      row += p.w2[b] * vals[(p.lo1 + a) * m_ + p.lo2 + b];
    acc += p.w1[a] * row;
  }
  return acc;
}

Vec3 SphereGrid::interp(std::span<const Vec3> vals,
                        const InterpPlan& p) const {
  Vec3 acc = Vec3::Zero();
  for (int a = 0; a < 6; ++a) {
    Vec3 row = Vec3::Zero();
    for (int b = 0; b < 6; ++b)
      row += p.w2[b] * vals[(p.lo1 + a) * m_ + p.lo2 + b];
    acc += p.w1[a] * row;
  }
  return acc;
}

double SphereGrid::overlap_residual(const ScalarField& f) const {
  double worst = 0.0;
  for (int c = 0; c < 2; ++c) {
    auto other = chart_span(f.v, *this, 1 - c);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        const int id = index(c, i, j);
        const double r = uv_[id].norm();
        if (r < 1.0 || r > 1.5) continue;
        const Vec2 t = transition(uv_[id]);
        const double val = interp(other, interp_plan(t));
        worst = std::max(worst, std::abs(val - f.v[id]));
      }
    }
  }
  return worst;
}

double SphereGrid::integrate_round(const ScalarField& f) const {
  double acc = 0.0;
  for (int n = 0; n < num_nodes(); ++n) acc += rqw_[n] * f.v[n];
  return acc;
}

double SphereGrid::integrate(const ScalarField& f,
                             const MetricField& g) const {
  double acc = 0.0;
  for (int n = 0; n < num_nodes(); ++n) {
    if (pw_[n] == 0.0) continue;
    const double det = g.v[n].determinant();
    if (!(det > 0.0))
      throw NumericalError("integrate: metric not positive definite at node " +
                           std::to_string(n));
    acc += pw_[n] * f.v[n] * std::sqrt(det);
  }
  return acc * h_ * h_;
}

double SphereGrid::integrate_density(std::span<const double> f,
                                     std::span<const double> density) const {
  double acc = 0.0;
  for (int n = 0; n < num_nodes(); ++n)
    acc += pw_[n] * f[n] * density[n];
  return acc * h_ * h_;
}

} // namespace convrig
