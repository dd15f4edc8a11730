#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "clgauge/field.hpp"
#include "clgauge/jet.hpp"
#include "clgauge/multivector.hpp"

namespace clg {

using Mat4d = std::array<std::array<double, 4>, 4>;

inline Mat4d mat4_identity() {
  Mat4d r{};
  for (int i = 0; i < 4; ++i) r[i][i] = 1.0;
  return r;
}

inline Mat4d mat4_mul(const Mat4d& a, const Mat4d& b) {
  Mat4d r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// O(1,3) membership: P^T eta P = eta.
inline bool is_lorentz(const Mat4d& p, double eps = 1e-10) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int mu = 0; mu < 4; ++mu) s += p[mu][a] * eta_sign(mu) * p[mu][b];
      double want = (a == b) ? eta_sign(a) : 0.0;
      if (std::abs(s - want) > eps) return false;
    }
  return true;
}

// Orthonormal frame y^mu_a; rows indexed by mu, columns by a.
struct Tetrad {
  Mat4d y{};
};

inline bool is_orthonormal(const Tetrad& t, double eps = 1e-10) {
  // y^mu_a y^nu_b eta^{ab} = eta^{mu nu}
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) s += t.y[mu][a] * eta_sign(a) * t.y[nu][a];
      double want = (mu == nu) ? eta_sign(mu) : 0.0;
      if (std::abs(s - want) > eps) return false;
    }
  return true;
}

inline Tetrad tetrad_from_lorentz(const Mat4d& p, double eps = 1e-10) {
  if (!is_lorentz(p, eps))
    throw std::invalid_argument("tetrad_from_lorentz: matrix is not in O(1,3)");
  return Tetrad{p};
}

// Constant genvector h^mu = y^mu_a e^a.
struct Genvector {
  std::array<Multivector, 4> h;

  static Genvector standard() {
    Genvector g;
    for (int mu = 0; mu < 4; ++mu) g.h[mu] = basis_vector(mu);
    return g;
  }
};

inline Genvector genvector(const Tetrad& t) {
  Genvector g;
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a) g.h[mu] += basis_vector(a) * t.y[mu][a];
  return g;
}

inline double genvector_condition_residual(const std::array<Multivector, 4>& h) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Multivector want = (mu == nu) ? unit() * (2.0 * eta_sign(mu)) : Multivector{};
      r = std::max(r, norm_inf(h[mu] * h[nu] + h[nu] * h[mu] - want));
    }
  return r;
}

using FrameJets = std::array<Jet<Multivector>, 4>;

inline FrameJets constant_frame(const Genvector& g, const std::array<double, 4>& x,
                                int order) {
  FrameJets f{jet_const(g.h[0], x, order), jet_const(g.h[1], x, order),
              jet_const(g.h[2], x, order), jet_const(g.h[3], x, order)};
  return f;
}

// Conjugated genvector  h'^mu(x) = S(x)^{-1} h^mu S(x) for a G3 field S;
// satisfies both genvector conditions whenever h does.
inline FrameJets conjugated_genvector(const Genvector& g, const GroupField& s,
                                      const std::array<double, 4>& x, int order) {
  Jet<Multivector> sj = eval_group(s, x, order);
  Jet<Multivector> sinv = jet_dagger(sj);
  FrameJets out{Jet<Multivector>(x, order), Jet<Multivector>(x, order),
                Jet<Multivector>(x, order), Jet<Multivector>(x, order)};
  for (int mu = 0; mu < 4; ++mu)
    out[mu] = jet_mul(jet_mul(sinv, jet_const(g.h[mu], x, order)), sj);
  return out;
}

// Divergence condition d_mu(pi^0(beta h^mu)) = 0; returns the residual.
inline double check_divergence(const FrameJets& h) {
  cplx s = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> bh =
        jet_mul(jet_const(beta(), h[mu].x, h[mu].order), h[mu]);
    s += jet_partial(jet_grade(bh, 0), mu).value().c[0];
  }
  return std::abs(s);
}

// Pointwise anticommutator residual for x-dependent frames, at jet value level.
inline double frame_condition_residual(const FrameJets& h) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Multivector want = (mu == nu) ? unit() * (2.0 * eta_sign(mu)) : Multivector{};
      Jet<Multivector> ac = jet_mul(h[mu], h[nu]) + jet_mul(h[nu], h[mu]);
      r = std::max(r, jet_norm_inf(ac - jet_const(want, h[mu].x, ac.order)));
    }
  return r;
}

// Dirac-type first-order operator  h^mu d_mu.
inline Jet<Multivector> dirac_op(const FrameJets& h, const Jet<Multivector>& psi) {
  Jet<Multivector> r = jet_mul(h[0], jet_partial(psi, 0));
  for (int mu = 1; mu < 4; ++mu) r = r + jet_mul(h[mu], jet_partial(psi, mu));
  return r;
}

}  // namespace clg
