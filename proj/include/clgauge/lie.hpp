#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "clgauge/multivector.hpp"

namespace clg {

// su(2) basis inside the even subalgebra: tau^1 = e23, tau^2 = -e13, tau^3 = e12.
inline Multivector tau(int k) {
  switch (k) {
    case 1: return Multivector::blade(0b1100);
    case 2: return Multivector::blade(0b1010, -1.0);
    case 3: return Multivector::blade(0b0110);
  }
  throw std::out_of_range("tau index must be 1, 2 or 3");
}

// s = s_k tau^k, the Lie algebra L3 (anti-Hermitian, commutes with beta).
struct L3Element {
  std::array<double, 3> s{};

  Multivector to_multivector() const {
    return tau(1) * s[0] + tau(2) * s[1] + tau(3) * s[2];
  }
  double abs() const { return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]); }
  L3Element operator-() const { return {{-s[0], -s[1], -s[2]}}; }
};

// L4 = L3 (+) R*theta.
struct L4Element {
  L3Element part3;
  double g = 0.0;  // coefficient of theta

  Multivector to_multivector() const { return part3.to_multivector() + theta() * g; }
  L4Element operator-() const { return {-part3, -g}; }
};

// Closed-form exponential on L3: exp(s) = e cos|s| + (s/|s|) sin|s|.
// The removable singularity at |s| = 0 is handled by the sinc limit.
inline Multivector exp_g3(const L3Element& s) {
  const double a = s.abs();
  const double sinc = a < 1e-12 ? 1.0 - a * a / 6.0 : std::sin(a) / a;
  return unit() * std::cos(a) + s.to_multivector() * sinc;
}

// exp on L4 splits as exp(s3) * exp(g theta), theta being central among
// even elements; theta^2 = -e makes the second factor circular.
inline Multivector exp_l4(const L4Element& s) {
  return exp_g3(s.part3) * (unit() * std::cos(s.g) + theta() * std::sin(s.g));
}

// exp(s chi) = e + (exp(s) - e) chi, an element of G(chi).
inline Multivector exp_gchi(const L4Element& s, const Multivector& x) {
  return unit() + (exp_l4(s) - unit()) * x;
}

// --- membership predicates -------------------------------------------------

inline bool in_L3(const Multivector& u, double eps = 1e-10) {
  Multivector rec;
  rec = tau(1) * u.c[0b1100].real() + tau(2) * (-u.c[0b1010].real()) +
        tau(3) * u.c[0b0110].real();
  return approx_eq(u, rec, eps);
}

inline bool in_L4(const Multivector& u, double eps = 1e-10) {
  return is_real(u, eps) && approx_eq(u.even(), u, eps) &&
         approx_eq(dagger(u), -u, eps);
}

inline bool in_Lchi(const Multivector& u, const Multivector& x, double eps = 1e-10) {
  return in_ideal_K(u, x, eps) && approx_eq(dagger(u), -u, eps);
}

inline bool in_G3(const Multivector& S, double eps = 1e-10) {
  return approx_eq(dagger(S) * S, unit(), eps) &&
         approx_eq(commutator(beta(), S), Multivector{}, eps) &&
         approx_eq(S.even(), S, eps) && is_real(S, eps);
}

inline bool in_Gchi(const Multivector& S, const Multivector& x, double eps = 1e-10) {
  return in_ideal_K(S - unit(), x, eps) && approx_eq(dagger(S) * S, unit(), eps);
}

// Inverse of a unitary element is its Hermitian conjugate.
inline Multivector unitary_inverse(const Multivector& S, double eps = 1e-8) {
  if (norm_inf(dagger(S) * S - unit()) > eps)
    throw std::invalid_argument("unitary_inverse: input is not unitary");
  return dagger(S);
}

}  // namespace clg
