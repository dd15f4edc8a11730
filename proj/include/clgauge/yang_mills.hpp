#pragma once

#include <array>

#include "clgauge/jet.hpp"
#include "clgauge/multivector.hpp"

namespace clg {

// Generic Yang-Mills layer over any of the embedded Lie algebras;
// V is the algebra's value type (Multivector, Mat3c, MatMultivector).
// All indices are stored lowered; eta raises explicitly.

template <class V>
using Potential = std::array<Jet<V>, 4>;

template <class V>
using Strength = std::array<std::array<Jet<V>, 4>, 4>;

// a_{mu nu} = d_mu a_nu - d_nu a_mu - [a_mu, a_nu]
template <class V>
Strength<V> curvature(const Potential<V>& a) {
  Strength<V> f;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      f[mu][nu] = jet_partial(a[nu], mu) - jet_partial(a[mu], nu) -
                  jet_commutator(a[mu], a[nu]);
  return f;
}

// j^nu = d_mu a^{mu nu} - [a_mu, a^{mu nu}]
template <class V>
std::array<Jet<V>, 4> divergence_lhs(const Potential<V>& a, const Strength<V>& f) {
  std::array<Jet<V>, 4> j;
  for (int nu = 0; nu < 4; ++nu) {
    Jet<V> acc;
    bool first = true;
    for (int mu = 0; mu < 4; ++mu) {
      double raise = static_cast<double>(eta_sign(mu) * eta_sign(nu));
      Jet<V> up = jet_scale(f[mu][nu], raise);
      Jet<V> term = jet_partial(up, mu) - jet_commutator(jet_truncate(a[mu], up.order - 1), up);
      if (first) {
        acc = term;
        first = false;
      } else {
        acc = acc + term;
      }
    }
    j[nu] = acc;
  }
  return j;
}

// a_mu -> S^{-1} a_mu S - S^{-1} d_mu S
template <class V>
Potential<V> gauge_transform(const Potential<V>& a, const Jet<V>& s, const Jet<V>& sinv) {
  Potential<V> r;
  for (int mu = 0; mu < 4; ++mu)
    r[mu] = jet_mul(jet_mul(sinv, a[mu]), s) - jet_mul(sinv, jet_partial(s, mu));
  return r;
}

// With F := curvature(a) and j := divergence_lhs(a, F), the combination
// d_nu j^nu - [a_nu, j^nu] vanishes identically in a and its derivatives;
// needs order-3 jets.  Returns the value-level residual.
template <class V>
V conservation_residual(const Potential<V>& a) {
  Strength<V> f = curvature(a);
  std::array<Jet<V>, 4> j = divergence_lhs(a, f);
  V acc{};
  for (int nu = 0; nu < 4; ++nu) {
    acc = acc + jet_partial(j[nu], nu).value() -
          commutator(a[nu].value(), j[nu].value());
  }
  return acc;
}

}  // namespace clg
