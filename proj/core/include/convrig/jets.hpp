#pragma once

#include "convrig/types.hpp"

#include <array>
#include <cmath>

namespace convrig {

// Scalar 3-jet in two chart variables: value, gradient, and symmetric
// packed second / third derivatives.
//   d2 order: (11, 12, 22)       d3 order: (111, 112, 122, 222)
// Synthesized shapes evaluate through this algebra so that every chart
// derivative the geometry pipelines consume is exact; finite differences
// are reserved for fields that only exist as per-node samples.
struct Jet3 {
  double v = 0.0;
  std::array<double, 2> d{0.0, 0.0};
  std::array<double, 3> d2{0.0, 0.0, 0.0};
  std::array<double, 4> d3{0.0, 0.0, 0.0, 0.0};

  static Jet3 constant(double c) {
    Jet3 j;
    j.v = c;
    return j;
  }
  static Jet3 variable(double value, int axis) {
    Jet3 j;
    j.v = value;
    j.d[axis] = 1.0;
    return j;
  }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
  Jet3 r;
  r.v = a.v + b.v;
  for (int i = 0; i < 2; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int i = 0; i < 3; ++i) r.d2[i] = a.d2[i] + b.d2[i];
  for (int i = 0; i < 4; ++i) r.d3[i] = a.d3[i] + b.d3[i];
  return r;
}

inline Jet3 operator-(const Jet3& a, const Jet3& b) {
  Jet3 r;
  r.v = a.v - b.v;
  for (int i = 0; i < 2; ++i) r.d[i] = a.d[i] - b.d[i];
  for (int i = 0; i < 3; ++i) r.d2[i] = a.d2[i] - b.d2[i];
  for (int i = 0; i < 4; ++i) r.d3[i] = a.d3[i] - b.d3[i];
  return r;
}

inline Jet3 operator-(const Jet3& a) {
  Jet3 r;
  r.v = -a.v;
  for (int i = 0; i < 2; ++i) r.d[i] = -a.d[i];
  for (int i = 0; i < 3; ++i) r.d2[i] = -a.d2[i];
  for (int i = 0; i < 4; ++i) r.d3[i] = -a.d3[i];
  return r;
}

inline Jet3 operator*(double s, const Jet3& a) {
  Jet3 r;
  r.v = s * a.v;
  for (int i = 0; i < 2; ++i) r.d[i] = s * a.d[i];
  for (int i = 0; i < 3; ++i) r.d2[i] = s * a.d2[i];
  for (int i = 0; i < 4; ++i) r.d3[i] = s * a.d3[i];
  return r;
}
inline Jet3 operator*(const Jet3& a, double s) { return s * a; }
inline Jet3 operator+(const Jet3& a, double s) {
  Jet3 r = a;
  r.v += s;
  return r;
}
inline Jet3 operator+(double s, const Jet3& a) { return a + s; }
inline Jet3 operator-(const Jet3& a, double s) { return a + (-s); }
inline Jet3 operator-(double s, const Jet3& a) { return (-a) + s; }

inline Jet3 operator*(const Jet3& f, const Jet3& g) {
  Jet3 r;
  r.v = f.v * g.v;
  r.d[0] = f.d[0] * g.v + f.v * g.d[0];
  r.d[1] = f.d[1] * g.v + f.v * g.d[1];
  r.d2[0] = f.d2[0] * g.v + 2.0 * f.d[0] * g.d[0] + f.v * g.d2[0];
  r.d2[1] = f.d2[1] * g.v + f.d[0] * g.d[1] + f.d[1] * g.d[0] + f.v * g.d2[1];
  r.d2[2] = f.d2[2] * g.v + 2.0 * f.d[1] * g.d[1] + f.v * g.d2[2];
  r.d3[0] = f.d3[0] * g.v + 3.0 * f.d2[0] * g.d[0] + 3.0 * f.d[0] * g.d2[0] +
            f.v * g.d3[0];
  r.d3[1] = f.d3[1] * g.v + f.d2[0] * g.d[1] + 2.0 * f.d2[1] * g.d[0] +
            2.0 * f.d[0] * g.d2[1] + f.d[1] * g.d2[0] + f.v * g.d3[1];
  r.d3[2] = f.d3[2] * g.v + f.d2[2] * g.d[0] + 2.0 * f.d2[1] * g.d[1] +
            2.0 * f.d[1] * g.d2[1] + f.d[0] * g.d2[2] + f.v * g.d3[2];
  r.d3[3] = f.d3[3] * g.v + 3.0 * f.d2[2] * g.d[1] + 3.0 * f.d[1] * g.d2[2] +
            f.v * g.d3[3];
  return r;
}

/// Univariate postcomposition h(f) given h and its first three derivatives
/// at f.v (Faa di Bruno through order 3).
inline Jet3 compose(const Jet3& f, double h0, double h1, double h2,
                    double h3) {
  Jet3 r;
  const double f1 = f.d[0], f2 = f.d[1];
  r.v = h0;
  r.d[0] = h1 * f1;
  r.d[1] = h1 * f2;
  r.d2[0] = h2 * f1 * f1 + h1 * f.d2[0];
  r.d2[1] = h2 * f1 * f2 + h1 * f.d2[1];
  r.d2[2] = h2 * f2 * f2 + h1 * f.d2[2];
  r.d3[0] = h3 * f1 * f1 * f1 + 3.0 * h2 * f.d2[0] * f1 + h1 * f.d3[0];
  r.d3[1] = h3 * f1 * f1 * f2 + h2 * (f.d2[0] * f2 + 2.0 * f.d2[1] * f1) +
            h1 * f.d3[1];
  r.d3[2] = h3 * f1 * f2 * f2 + h2 * (f.d2[2] * f1 + 2.0 * f.d2[1] * f2) +
            h1 * f.d3[2];
  r.d3[3] = h3 * f2 * f2 * f2 + 3.0 * h2 * f.d2[2] * f2 + h1 * f.d3[3];
  return r;
}

inline Jet3 recip(const Jet3& f) {
  const double w = f.v;
  return compose(f, 1.0 / w, -1.0 / (w * w), 2.0 / (w * w * w),
                 -6.0 / (w * w * w * w));
}

inline Jet3 operator/(const Jet3& a, const Jet3& b) { return a * recip(b); }
inline Jet3 operator/(const Jet3& a, double s) { return a * (1.0 / s); }
inline Jet3 operator/(double s, const Jet3& b) { return s * recip(b); }

inline Jet3 sqrt(const Jet3& f) {
  const double s = std::sqrt(f.v);
  return compose(f, s, 0.5 / s, -0.25 / (s * f.v), 0.375 / (s * f.v * f.v));
}

inline Jet3 pow(const Jet3& f, double p) {
  const double w = f.v;
  return compose(f, std::pow(w, p), p * std::pow(w, p - 1.0),
                 p * (p - 1.0) * std::pow(w, p - 2.0),
                 p * (p - 1.0) * (p - 2.0) * std::pow(w, p - 3.0));
}

inline Jet3 sin(const Jet3& f) {
  const double s = std::sin(f.v), c = std::cos(f.v);
  return compose(f, s, c, -s, -c);
}

inline Jet3 cos(const Jet3& f) {
  const double s = std::sin(f.v), c = std::cos(f.v);
  return compose(f, c, -s, -c, s);
}

inline Jet3 sinh(const Jet3& f) {
  const double s = std::sinh(f.v), c = std::cosh(f.v);
  return compose(f, s, c, s, c);
}

inline Jet3 cosh(const Jet3& f) {
  const double s = std::sinh(f.v), c = std::cosh(f.v);
  return compose(f, c, s, c, s);
}

// Small fixed-size vectors of jets for ambient-space calculus.
template <int n>
using JetVec = std::array<Jet3, n>;
using JetVec3 = JetVec<3>;
using JetVec4 = JetVec<4>;

template <int n>
inline JetVec<n> operator+(const JetVec<n>& a, const JetVec<n>& b) {
  JetVec<n> r;
  for (int i = 0; i < n; ++i) r[i] = a[i] + b[i];
  return r;
}
template <int n>
inline JetVec<n> operator-(const JetVec<n>& a, const JetVec<n>& b) {
  JetVec<n> r;
  for (int i = 0; i < n; ++i) r[i] = a[i] - b[i];
  return r;
}
template <int n>
inline JetVec<n> operator*(const Jet3& s, const JetVec<n>& a) {
  JetVec<n> r;
  for (int i = 0; i < n; ++i) r[i] = s * a[i];
  return r;
}
template <int n>
inline JetVec<n> operator*(double s, const JetVec<n>& a) {
  JetVec<n> r;
  for (int i = 0; i < n; ++i) r[i] = s * a[i];
  return r;
}

template <int n>
inline Jet3 dot(const JetVec<n>& a, const JetVec<n>& b) {
  Jet3 r = a[0] * b[0];
  for (int i = 1; i < n; ++i) r = r + a[i] * b[i];
  return r;
}

inline JetVec3 cross(const JetVec3& a, const JetVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

/// Minkowski inner product of signature (-,+,+,+) on R^{3,1}.
inline Jet3 mdot(const JetVec4& a, const JetVec4& b) {
  Jet3 r = -(a[0] * b[0]);
  for (int i = 1; i < 4; ++i) r = r + a[i] * b[i];
  return r;
}

/// Euclidean Hodge complement in R^4: the vector orthogonal to a, b, c with
/// components eps_{ijkl} a_j b_k c_l.
inline JetVec4 hodge3(const JetVec4& a, const JetVec4& b, const JetVec4& c) {
  auto det3 = [](const Jet3& a0, const Jet3& a1, const Jet3& a2,
                 const Jet3& b0, const Jet3& b1, const Jet3& b2,
                 const Jet3& c0, const Jet3& c1, const Jet3& c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
           a2 * (b0 * c1 - b1 * c0);
  };
  JetVec4 w;
  w[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
  w[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
  w[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
  w[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
  return w;
}

} // namespace convrig
