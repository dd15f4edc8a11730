#pragma once

#include <array>
#include <cmath>

#include "clgauge/field.hpp"
#include "clgauge/jet.hpp"
#include "clgauge/multivector.hpp"

namespace clg {

// Dense 3x3 complex matrix; the Mat(3,C) factor of the quark sector.
struct Mat3c {
  std::array<cplx, 9> m{};

  cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }
  const cplx& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(r * 3 + c)];
  }

  static Mat3c identity() {
    Mat3c e;
    e(0, 0) = e(1, 1) = e(2, 2) = 1.0;
    return e;
  }

  friend Mat3c operator+(Mat3c a, const Mat3c& b) {
    for (int i = 0; i < 9; ++i) a.m[i] += b.m[i];
    return a;
  }
  friend Mat3c operator-(Mat3c a, const Mat3c& b) {
    for (int i = 0; i < 9; ++i) a.m[i] -= b.m[i];
    return a;
  }
  friend Mat3c operator-(Mat3c a) {
    for (auto& v : a.m) v = -v;
    return a;
  }
  friend Mat3c operator*(Mat3c a, cplx z) {
    for (auto& v : a.m) v *= z;
    return a;
  }
  friend Mat3c operator*(Mat3c a, double z) { return a * cplx(z); }
  friend Mat3c operator*(const Mat3c& a, const Mat3c& b) {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) r(i, j) += a(i, k) * b(k, j);
    return r;
  }

  Mat3c adjoint() const {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const { return m[0] + m[4] + m[8]; }
};

inline double norm_inf(const Mat3c& a) {
  double r = 0.0;
  for (const auto& v : a.m) r = std::max(r, std::abs(v));
  return r;
}

inline Mat3c commutator(const Mat3c& a, const Mat3c& b) { return a * b - b * a; }

inline bool is_antihermitian(const Mat3c& a, double eps = 1e-10) {
  return norm_inf(a.adjoint() + a) <= eps;
}

// Matrix exponential by scaling-and-squaring with a Taylor tail.
inline Mat3c mat_exp(const Mat3c& a) {
  double n = norm_inf(a);
  int squarings = 0;
  while (n > 0.5) {
    n /= 2.0;
    ++squarings;
  }
  Mat3c scaled = a * (1.0 / std::pow(2.0, squarings));
  Mat3c term = Mat3c::identity();
  Mat3c sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled * (1.0 / k);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// 3x3 matrix with multivector entries: Mat(3,C) (x) Cl.
struct MatMultivector {
  std::array<Multivector, 9> m{};

  Multivector& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }
  const Multivector& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(r * 3 + c)];
  }

  static MatMultivector tensor(const Mat3c& a, const Multivector& u) {
    MatMultivector r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = u * a(i, j);
    return r;
  }
  static MatMultivector identity() { return tensor(Mat3c::identity(), unit()); }

  friend MatMultivector operator+(MatMultivector a, const MatMultivector& b) {
    for (int i = 0; i < 9; ++i) a.m[i] += b.m[i];
    return a;
  }
  friend MatMultivector operator-(MatMultivector a, const MatMultivector& b) {
    for (int i = 0; i < 9; ++i) a.m[i] -= b.m[i];
    return a;
  }
  friend MatMultivector operator-(MatMultivector a) {
    for (auto& v : a.m) v = -v;
    return a;
  }
  friend MatMultivector operator*(MatMultivector a, cplx z) {
    for (auto& v : a.m) v *= z;
    return a;
  }
  friend MatMultivector operator*(MatMultivector a, double z) { return a * cplx(z); }
  friend MatMultivector operator*(const MatMultivector& a, const MatMultivector& b) {
    MatMultivector r;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) r(i, j) += a(i, k) * b(k, j);
    return r;
  }

  // conjugate-transpose on the matrix factor, dagger on each entry
  MatMultivector adjoint() const {
    MatMultivector r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = dagger((*this)(j, i));
    return r;
  }

  Multivector mat_trace() const { return m[0] + m[4] + m[8]; }

  // scalar-part extraction to Mat(3,C), entrywise pi^0 with e -> 1
  Mat3c pi0_dot() const {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j).trace();
    return r;
  }
};

inline double norm_inf(const MatMultivector& a) {
  double r = 0.0;
  for (const auto& v : a.m) r = std::max(r, norm_inf(v));
  return r;
}

inline MatMultivector commutator(const MatMultivector& a, const MatMultivector& b) {
  return a * b - b * a;
}

// One-parameter U(3) field V(x) = exp(f(x) K), K constant anti-Hermitian;
// K commutes with V, so d_mu V = (d_mu f) K V and jets close exactly.
struct MatGroupField {
  Mat3c direction;
  FieldExpr profile;
};

inline Jet<Mat3c> eval_mat_group(const MatGroupField& g, const std::array<double, 4>& x,
                                 int order) {
  ScalarJet f = eval_scalar(g.profile, x, order);
  Jet<Mat3c> v(x, order);
  v.d[0] = mat_exp(g.direction * f[0]);
  for (std::size_t i = 1; i < v.d.size(); ++i) {
    const MultiIndex& al = mi_at(static_cast<int>(i));
    int mu = 0;
    while (al.a[mu] == 0) ++mu;
    MultiIndex ap = al;
    ap.a[mu] -= 1;
    Mat3c acc{};
    MultiIndex be;
    for (be.a[0] = 0; be.a[0] <= ap.a[0]; ++be.a[0])
      for (be.a[1] = 0; be.a[1] <= ap.a[1]; ++be.a[1])
        for (be.a[2] = 0; be.a[2] <= ap.a[2]; ++be.a[2])
          for (be.a[3] = 0; be.a[3] <= ap.a[3]; ++be.a[3]) {
            MultiIndex rest{{ap.a[0] - be.a[0], ap.a[1] - be.a[1],
                             ap.a[2] - be.a[2], ap.a[3] - be.a[3]}};
            rest.a[mu] += 1;
            double w = mi_binom(ap, be) * f[static_cast<std::size_t>(mi_index(rest))];
            acc = acc + (g.direction * v.at(be)) * w;
          }
    v.d[i] = acc;
  }
  return v;
}

inline Jet<Mat3c> jet_adjoint(const Jet<Mat3c>& j) {
  return jet_map(j, [](const Mat3c& a) { return a.adjoint(); });
}

inline Jet<MatMultivector> jet_adjoint(const Jet<MatMultivector>& j) {
  return jet_map(j, [](const MatMultivector& a) { return a.adjoint(); });
}

}  // namespace clg
