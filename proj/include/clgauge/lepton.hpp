#pragma once

#include <optional>

#include "clgauge/field.hpp"
#include "clgauge/frames.hpp"
#include "clgauge/random.hpp"
#include "clgauge/yang_mills.hpp"

namespace clg {

// Field content of the lepton system: Psi in I(chi), A_mu in L(chi),
// C_mu in L3, a genvector frame and a mass.

struct LeptonField {
  FieldExpr psi;                    // carries the right chi factor
  std::array<FieldExpr, 4> A;
  std::array<FieldExpr, 4> C;
  Genvector h0 = Genvector::standard();
  std::optional<GroupField> frame;  // optional G3 rotation of the frame
  double m = 1.0;
  Multivector chi_elem = chi();
};

struct LeptonJets {
  Jet<Multivector> psi;
  FrameJets A, C, h;
  double m = 1.0;
  Multivector chi_elem = chi();
};

inline LeptonJets eval(const LeptonField& f, const std::array<double, 4>& x, int order) {
  LeptonJets c;
  c.psi = clg::eval(f.psi, x, order);
  for (int mu = 0; mu < 4; ++mu) {
    c.A[mu] = clg::eval(f.A[mu], x, order);
    c.C[mu] = clg::eval(f.C[mu], x, order);
  }
  c.h = f.frame ? conjugated_genvector(f.h0, *f.frame, x, order)
                : constant_frame(f.h0, x, order);
  c.m = f.m;
  c.chi_elem = f.chi_elem;
  return c;
}

// Left side of the Dirac-type equation:
//   h^mu (d_mu Psi + Psi A_mu - C_mu Psi) + i m Psi.
inline Jet<Multivector> dirac_lhs(const LeptonJets& c) {
  Jet<Multivector> acc;
  bool first = true;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> term = jet_partial(c.psi, mu) + jet_mul(c.psi, c.A[mu]) -
                            jet_mul(c.C[mu], c.psi);
    Jet<Multivector> piece = jet_mul(c.h[mu], term);
    if (first) {
      acc = piece;
      first = false;
    } else {
      acc = acc + piece;
    }
  }
  return acc + jet_scale(jet_truncate(c.psi, acc.order), cplx(0.0, c.m));
}

// J^mu_(A) = Psi^dagger i beta h^mu Psi, an L(chi)-valued covector.
inline FrameJets current_A(const LeptonJets& c) {
  Jet<Multivector> psid = jet_dagger(c.psi);
  Jet<Multivector> ib = jet_const(beta() * cplx(0.0, 1.0), c.psi.x, c.psi.order);
  FrameJets j;
  for (int mu = 0; mu < 4; ++mu)
    j[mu] = jet_mul(jet_mul(jet_mul(psid, ib), c.h[mu]), c.psi);
  return j;
}

// J^mu_(C) = theta beta h^mu - pi^4(theta beta h^mu), an L3-valued covector.
inline FrameJets current_C(const FrameJets& h) {
  FrameJets j;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> tb = jet_mul(jet_const(theta() * beta(), h[mu].x, h[mu].order), h[mu]);
    j[mu] = tb - jet_grade(tb, 4);
  }
  return j;
}

// Residual of the Yang-Mills divergence pair for A (strength defined by
// the curvature, so the first equation of the pair holds identically).
inline FrameJets ym_residual_A(const LeptonJets& c) {
  auto f = curvature<Multivector>(c.A);
  auto div = divergence_lhs<Multivector>(c.A, f);
  FrameJets cur = current_A(c);
  FrameJets r;
  // both sides carry an upper index (the current is built from h^nu)
  for (int nu = 0; nu < 4; ++nu) r[nu] = div[nu] - cur[nu];
  return r;
}

inline FrameJets ym_residual_C(const LeptonJets& c) {
  auto f = curvature<Multivector>(c.C);
  auto div = divergence_lhs<Multivector>(c.C, f);
  FrameJets cur = current_C(c.h);
  FrameJets r;
  for (int nu = 0; nu < 4; ++nu) r[nu] = div[nu] - cur[nu];
  return r;
}

// --- gauge actions ----------------------------------------------------------

// G(chi) action: Psi -> Psi U, A_mu -> U^{-1} A_mu U - U^{-1} d_mu U.
inline LeptonJets transform_U(const LeptonJets& c, const Jet<Multivector>& u) {
  Jet<Multivector> uinv = jet_dagger(u);
  LeptonJets r = c;
  r.psi = jet_mul(c.psi, u);
  for (int mu = 0; mu < 4; ++mu)
    r.A[mu] = jet_mul(jet_mul(uinv, c.A[mu]), u) - jet_mul(uinv, jet_partial(u, mu));
  return r;
}

// G3 action: Psi -> S^{-1} Psi S, h -> S^{-1} h S,
// C_mu -> S^{-1} C_mu S - S^{-1} d_mu S,
// A_mu -> S^{-1} A_mu S - chi S^{-1} d_mu S.
inline LeptonJets transform_S(const LeptonJets& c, const Jet<Multivector>& s) {
  Jet<Multivector> sinv = jet_dagger(s);
  Jet<Multivector> chij = jet_const(c.chi_elem, s.x, s.order);
  LeptonJets r = c;
  r.psi = jet_mul(jet_mul(sinv, c.psi), s);
  for (int mu = 0; mu < 4; ++mu) {
    r.h[mu] = jet_mul(jet_mul(sinv, c.h[mu]), s);
    r.C[mu] = jet_mul(jet_mul(sinv, c.C[mu]), s) - jet_mul(sinv, jet_partial(s, mu));
    r.A[mu] = jet_mul(jet_mul(sinv, c.A[mu]), s) -
              jet_mul(chij, jet_mul(sinv, jet_partial(s, mu)));
  }
  return r;
}

enum class LeptonGauge { Uchi, S3 };

// Residual covariance on arbitrary configurations: the residual of the
// transformed configuration must equal the transformed residual.  Zero
// residuals therefore map to zero residuals.
inline double covariance_check(const LeptonJets& c, LeptonGauge kind,
                               const Jet<Multivector>& g) {
  Jet<Multivector> ginv = jet_dagger(g);
  LeptonJets t = kind == LeptonGauge::Uchi ? transform_U(c, g) : transform_S(c, g);

  double err = 0.0;
  Multivector r0 = dirac_lhs(c).value();
  Multivector rt = dirac_lhs(t).value();
  Multivector expect = kind == LeptonGauge::Uchi ? r0 * g.value()
                                                 : ginv.value() * r0 * g.value();
  err = std::max(err, norm_inf(rt - expect));

  FrameJets ra = ym_residual_A(c), rat = ym_residual_A(t);
  FrameJets rc = ym_residual_C(c), rct = ym_residual_C(t);
  for (int nu = 0; nu < 4; ++nu) {
    // the A residual conjugates under both gauges; the C residual only under S
    Multivector ea = ginv.value() * ra[nu].value() * g.value();
    Multivector ec = kind == LeptonGauge::Uchi
                         ? rc[nu].value()
                         : ginv.value() * rc[nu].value() * g.value();
    err = std::max(err, norm_inf(rat[nu].value() - ea));
    err = std::max(err, norm_inf(rct[nu].value() - ec));
  }
  return err;
}

// Unconditional anti-Hermitian-part identity behind the conservation laws:
// with L the full Dirac left side,
//   Psi^dagger i beta L - (Psi^dagger i beta L)^dagger
//     = sum_mu (d_mu J^mu_(A) - [A_mu, J^mu_(A)])
//       + Psi^dagger i theta (d_mu(theta beta h^mu) - [C_mu, theta beta h^mu]) Psi.
// Mass terms cancel because Psi^dagger beta Psi is Hermitian.
inline double antihermitian_identity(const LeptonJets& c) {
  Jet<Multivector> L = dirac_lhs(c);
  Jet<Multivector> psid = jet_dagger(c.psi);
  Jet<Multivector> ib = jet_const(beta() * cplx(0.0, 1.0), c.psi.x, c.psi.order);
  Multivector M = jet_mul(jet_mul(psid, ib), L).value();
  Multivector lhs = M - dagger(M);

  FrameJets ja = current_A(c);
  Multivector rhs;
  for (int mu = 0; mu < 4; ++mu)
    rhs += jet_partial(ja[mu], mu).value() -
           commutator(c.A[mu].value(), ja[mu].value());

  Jet<Multivector> inner_sum;
  bool first = true;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> tb =
        jet_mul(jet_const(theta() * beta(), c.psi.x, c.psi.order), c.h[mu]);
    Jet<Multivector> term = jet_partial(tb, mu) - jet_commutator(c.C[mu], tb);
    if (first) {
      inner_sum = term;
      first = false;
    } else {
      inner_sum = inner_sum + term;
    }
  }
  Jet<Multivector> it = jet_const(theta() * cplx(0.0, 1.0), c.psi.x, c.psi.order);
  rhs += jet_mul(jet_mul(jet_mul(psid, it), inner_sum), c.psi).value();

  return norm_inf(lhs - rhs);
}

struct Theorem2Residuals {
  double cmupi;      // [C_mu, pi^4(theta beta h^mu)] per component
  double pi4;        // d_mu pi^4(theta beta h^mu)
  double cons_diff;  // conservation of J_(C) vs the theta-beta-h combination
};

inline Theorem2Residuals theorem2_support(const FrameJets& h, const FrameJets& C) {
  Theorem2Residuals r{0.0, 0.0, 0.0};
  Multivector e1, pi4sum;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> tb = jet_mul(jet_const(theta() * beta(), h[mu].x, h[mu].order), h[mu]);
    r.cmupi = std::max(
        r.cmupi, norm_inf(commutator(C[mu].value(), tb.value().grade(4))));
    pi4sum += jet_partial(jet_grade(tb, 4), mu).value();
    e1 += jet_partial(tb, mu).value() - commutator(C[mu].value(), tb.value());
  }
  r.pi4 = norm_inf(pi4sum);

  FrameJets jc = current_C(h);
  Multivector e2;
  for (int mu = 0; mu < 4; ++mu)
    e2 += jet_partial(jc[mu], mu).value() - commutator(C[mu].value(), jc[mu].value());
  r.cons_diff = norm_inf(e1 - e2);
  return r;
}

// --- random configurations --------------------------------------------------

inline LeptonField random_lepton_field(Rng& rng, const Multivector& x,
                                       bool moving_frame = true) {
  LeptonField f;
  f.chi_elem = x;
  f.psi = random_field_expr(rng) * FieldExpr::constant(x);
  for (int mu = 0; mu < 4; ++mu) {
    FieldExpr a;
    for (int k = 1; k <= 3; ++k)
      a = (k == 1 ? FieldExpr::constant(tau(k) * x) * random_profile(rng, 0.5)
                  : a + FieldExpr::constant(tau(k) * x) * random_profile(rng, 0.5));
    a = a + FieldExpr::constant(theta() * x) * random_profile(rng, 0.5);
    f.A[mu] = a;
    FieldExpr c;
    for (int k = 1; k <= 3; ++k)
      c = (k == 1 ? FieldExpr::constant(tau(k)) * random_profile(rng, 0.5)
                  : c + FieldExpr::constant(tau(k)) * random_profile(rng, 0.5));
    f.C[mu] = c;
  }
  if (moving_frame) f.frame = random_g3_field(rng);
  f.m = uniform(rng, 0.1, 2.0);
  return f;
}

}  // namespace clg
