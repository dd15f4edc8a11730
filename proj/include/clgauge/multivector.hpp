#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "clgauge/blades.hpp"

namespace clg {

using cplx = std::complex<double>;

// Element of the complexified Clifford algebra C (x) Cl(1,3):
// one complex coefficient per basis blade, indexed by the blade mask.
// The real algebra is the subset with real coefficients (a predicate,
// not a separate type).
struct Multivector {
  std::array<cplx, 16> c{};

  static Multivector blade(Blade b, cplx coeff = 1.0) {
    Multivector u;
    u.c[b] = coeff;
    return u;
  }

  Multivector& operator+=(const Multivector& o) {
    for (int i = 0; i < 16; ++i) c[i] += o.c[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (int i = 0; i < 16; ++i) c[i] -= o.c[i];
    return *this;
  }
  Multivector& operator*=(cplx z) {
    for (auto& v : c) v *= z;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (auto& v : a.c) v = -v;
    return a;
  }
  friend Multivector operator*(Multivector a, cplx z) { return a *= z; }
  friend Multivector operator*(cplx z, Multivector a) { return a *= z; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (int i = 0; i < 16; ++i) {
      if (a.c[i] == 0.0) continue;
      for (int j = 0; j < 16; ++j) {
        if (b.c[j] == 0.0) continue;
        r.c[kCayley.blade[i][j]] +=
            static_cast<double>(kCayley.sign[i][j]) * a.c[i] * b.c[j];
      }
    }
    return r;
  }

  Multivector grade(int k) const {
    Multivector r;
    for (int i = 0; i < 16; ++i)
      if (grade_of(static_cast<Blade>(i)) == k) r.c[i] = c[i];
    return r;
  }
  Multivector even() const {
    Multivector r;
    for (int i = 0; i < 16; ++i)
      if (grade_of(static_cast<Blade>(i)) % 2 == 0) r.c[i] = c[i];
    return r;
  }
  Multivector odd() const {
    Multivector r;
    for (int i = 0; i < 16; ++i)
      if (grade_of(static_cast<Blade>(i)) % 2 == 1) r.c[i] = c[i];
    return r;
  }

  Multivector reverse() const {
    Multivector r;
    for (int i = 0; i < 16; ++i)
      r.c[i] = static_cast<double>(reverse_sign(grade_of(static_cast<Blade>(i)))) * c[i];
    return r;
  }

  Multivector conj() const {
    Multivector r;
    for (int i = 0; i < 16; ++i) r.c[i] = std::conj(c[i]);
    return r;
  }

  // Scalar-blade coefficient with e -> 1.
  cplx trace() const { return c[0]; }
};

inline Multivector unit() { return Multivector::blade(0); }
inline Multivector basis_vector(int a) { return Multivector::blade(static_cast<Blade>(1u << a)); }
inline Multivector beta() { return basis_vector(0); }
inline Multivector theta() { return Multivector::blade(0b1111); }

// Hermitian conjugation  U -> beta * conj(U)~ * beta.
inline Multivector dagger(const Multivector& u) {
  return beta() * u.conj().reverse() * beta();
}

inline Multivector commutator(const Multivector& a, const Multivector& b) {
  return a * b - b * a;
}

// Hermitian scalar product (U,V) = Tr(U^dagger V); positive definite.
inline cplx inner(const Multivector& a, const Multivector& b) {
  return (dagger(a) * b).trace();
}

inline double norm_inf(const Multivector& u) {
  double m = 0.0;
  for (const auto& v : u.c) m = std::max(m, std::abs(v));
  return m;
}

inline double norm_inf(cplx z) { return std::abs(z); }
inline double norm_inf(double x) { return std::abs(x); }

inline bool approx_eq(const Multivector& a, const Multivector& b, double eps = 1e-10) {
  return norm_inf(a - b) <= eps;
}

inline bool is_real(const Multivector& u, double eps = 1e-10) {
  for (const auto& v : u.c)
    if (std::abs(v.imag()) > eps) return false;
  return true;
}

// Choice of the Hermitian idempotent; the first is the default.
enum class ChiKind { HalfMinus, HalfPlus, Unit };

inline Multivector chi(ChiKind kind = ChiKind::HalfMinus) {
  switch (kind) {
    case ChiKind::HalfMinus: return (unit() - theta() * cplx(0, 1)) * 0.5;
    case ChiKind::HalfPlus: return (unit() + theta() * cplx(0, 1)) * 0.5;
    case ChiKind::Unit: return unit();
  }
  return unit();
}

// Left ideal I(chi) = { U : U = U chi }.
inline bool in_ideal_I(const Multivector& u, const Multivector& x, double eps = 1e-10) {
  return approx_eq(u * x, u, eps);
}

// Two-sided intersection K(chi) = { U in I(chi) : U = chi U }.
inline bool in_ideal_K(const Multivector& u, const Multivector& x, double eps = 1e-10) {
  return in_ideal_I(u, x, eps) && approx_eq(x * u, u, eps);
}

constexpr int eta_sign(int mu) { return metric_sign(mu); }

}  // namespace clg
