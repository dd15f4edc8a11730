#pragma once

#include <random>

#include "clgauge/field.hpp"
#include "clgauge/frames.hpp"
#include "clgauge/lie.hpp"
#include "clgauge/matrix.hpp"
#include "clgauge/multivector.hpp"

namespace clg {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Multivector random_multivector(Rng& rng, bool complex_coeffs = true) {
  Multivector u;
  for (int i = 0; i < 16; ++i)
    u.c[i] = complex_coeffs ? cplx(uniform(rng), uniform(rng)) : cplx(uniform(rng));
  return u;
}

inline L3Element random_L3(Rng& rng) {
  return L3Element{{uniform(rng), uniform(rng), uniform(rng)}};
}

inline L4Element random_L4(Rng& rng) { return L4Element{random_L3(rng), uniform(rng)}; }

inline Multivector random_Lchi(Rng& rng, const Multivector& x) {
  return random_L4(rng).to_multivector() * x;
}

inline L3Element random_unit_L3(Rng& rng) {
  L3Element s = random_L3(rng);
  double a = s.abs();
  if (a < 1e-6) return L3Element{{1.0, 0.0, 0.0}};
  for (auto& v : s.s) v /= a;
  return s;
}

inline std::array<double, 4> random_point(Rng& rng, double scale = 1.0) {
  return {uniform(rng) * scale, uniform(rng) * scale, uniform(rng) * scale,
          uniform(rng) * scale};
}

// --- Lorentz matrices -------------------------------------------------------

inline Mat4d boost(int axis, double rapidity) {
  Mat4d b = mat4_identity();
  double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  b[0][0] = ch;
  b[0][axis] = sh;
  b[axis][0] = sh;
  b[axis][axis] = ch;
  return b;
}

inline Mat4d rotation(int axis_a, int axis_b, double angle) {
  Mat4d r = mat4_identity();
  double c = std::cos(angle), s = std::sin(angle);
  r[axis_a][axis_a] = c;
  r[axis_a][axis_b] = -s;
  r[axis_b][axis_a] = s;
  r[axis_b][axis_b] = c;
  return r;
}

// Products of three boosts (rapidity <= 1) and three rotations.
inline Mat4d random_lorentz(Rng& rng) {
  Mat4d p = mat4_identity();
  for (int axis = 1; axis <= 3; ++axis) p = mat4_mul(p, boost(axis, uniform(rng)));
  p = mat4_mul(p, rotation(1, 2, uniform(rng) * 3.0));
  p = mat4_mul(p, rotation(1, 3, uniform(rng) * 3.0));
  p = mat4_mul(p, rotation(2, 3, uniform(rng) * 3.0));
  return p;
}

// --- scalar profiles --------------------------------------------------------

// a*sin(k.x + phase) + b*x^mu + c: smooth, closed under differentiation,
// nondegenerate through third derivatives.
inline FieldExpr random_profile(Rng& rng, double amplitude = 1.0) {
  std::array<double, 4> k{uniform(rng), uniform(rng), uniform(rng), uniform(rng)};
  FieldExpr e;
  e.terms.push_back({cplx(uniform(rng) * amplitude), 0,
                     {ScalarFactor::sinus(k, uniform(rng) * 3.0)}});
  int mu = static_cast<int>(rng() % 4);
  e.terms.push_back({cplx(uniform(rng) * 0.5 * amplitude), 0,
                     {ScalarFactor::mono(mu, 1)}});
  e.terms.push_back({cplx(uniform(rng) * amplitude), 0, {}});
  return e;
}

// Multivector-valued expression: a few random blades with random profiles.
inline FieldExpr random_field_expr(Rng& rng, int nterms = 3) {
  FieldExpr e;
  for (int t = 0; t < nterms; ++t) {
    Blade b = static_cast<Blade>(rng() % 16);
    FieldExpr part = FieldExpr::constant(Multivector::blade(b, cplx(uniform(rng), uniform(rng))));
    e = e + part * random_profile(rng);
  }
  return e;
}

// --- group-valued fields ----------------------------------------------------

inline GroupField random_g3_field(Rng& rng, int nfactors = 2) {
  GroupField g;
  for (int i = 0; i < nfactors; ++i)
    g.factors.push_back({random_unit_L3(rng).to_multivector(), random_profile(rng)});
  return g;
}

inline GroupField random_gchi_field(Rng& rng, const Multivector& x, int nfactors = 2) {
  GroupField g = random_g3_field(rng, nfactors);
  g.factors.push_back({theta(), random_profile(rng)});
  g.wrap_chi = true;
  g.chi_elem = x;
  return g;
}

inline Mat3c random_antihermitian(Rng& rng) {
  Mat3c k;
  for (int i = 0; i < 3; ++i) k(i, i) = cplx(0.0, uniform(rng));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      cplx z(uniform(rng), uniform(rng));
      k(i, j) = z;
      k(j, i) = -std::conj(z);
    }
  return k;
}

inline MatGroupField random_u3_field(Rng& rng) {
  return MatGroupField{random_antihermitian(rng), random_profile(rng)};
}

}  // namespace clg
