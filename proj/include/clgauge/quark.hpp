#pragma once

#include "clgauge/lepton.hpp"
#include "clgauge/matrix.hpp"

namespace clg {

// Quark sector on Mat(3,C) (x) Cl: three ideal-valued flavors, the shared
// A/C potentials and frame of the lepton system, plus a u(3)-valued B.

// B_mu as a sum  profile_j(x) * K_j  with constant anti-Hermitian K_j.
struct MatField {
  std::vector<std::pair<Mat3c, FieldExpr>> terms;
};

inline Jet<Mat3c> eval(const MatField& f, const std::array<double, 4>& x, int order) {
  Jet<Mat3c> j(x, order);
  for (const auto& [k, profile] : f.terms) {
    ScalarJet s = eval_scalar(profile, x, order);
    for (std::size_t i = 0; i < j.d.size(); ++i) j.d[i] = j.d[i] + k * s[i];
  }
  return j;
}

struct QuarkField {
  std::array<FieldExpr, 3> psi;
  std::array<FieldExpr, 4> A, C;
  std::array<MatField, 4> B;
  Genvector h0 = Genvector::standard();
  std::optional<GroupField> frame;
  double m = 1.0;
  Multivector chi_elem = chi();
};

struct QuarkJets {
  std::array<Jet<Multivector>, 3> psi;
  FrameJets A, C, h;
  std::array<Jet<Mat3c>, 4> B;
  double m = 1.0;
  Multivector chi_elem = chi();
};

inline QuarkJets eval(const QuarkField& f, const std::array<double, 4>& x, int order) {
  QuarkJets c;
  for (int l = 0; l < 3; ++l) c.psi[l] = clg::eval(f.psi[l], x, order);
  for (int mu = 0; mu < 4; ++mu) {
    c.A[mu] = clg::eval(f.A[mu], x, order);
    c.C[mu] = clg::eval(f.C[mu], x, order);
    c.B[mu] = clg::eval(f.B[mu], x, order);
  }
  c.h = f.frame ? conjugated_genvector(f.h0, *f.frame, x, order)
                : constant_frame(f.h0, x, order);
  c.m = f.m;
  c.chi_elem = f.chi_elem;
  return c;
}

// --- checked (matrix) assembly ----------------------------------------------

// row-1 matrix holding the three flavors
inline Jet<MatMultivector> checked_psi(const QuarkJets& c) {
  Jet<MatMultivector> j(c.psi[0].x, c.psi[0].order);
  for (std::size_t i = 0; i < j.d.size(); ++i)
    for (int l = 0; l < 3; ++l) j.d[i](0, l) = c.psi[l].d[i];
  return j;
}

inline Jet<MatMultivector> checked_scalar(const Jet<Multivector>& u) {
  Jet<MatMultivector> j(u.x, u.order);
  for (std::size_t i = 0; i < j.d.size(); ++i)
    j.d[i] = MatMultivector::tensor(Mat3c::identity(), u.d[i]);
  return j;
}

inline Jet<MatMultivector> checked_matrix(const Jet<Mat3c>& b) {
  Jet<MatMultivector> j(b.x, b.order);
  for (std::size_t i = 0; i < j.d.size(); ++i)
    j.d[i] = MatMultivector::tensor(b.d[i], unit());
  return j;
}

// Componentwise left side, flavor l:
//   h^mu (d_mu Psi_l + Psi_l A_mu + Psi_k b^k_{l mu} - C_mu Psi_l) + i m Psi_l.
inline Jet<Multivector> quark_dirac_lhs_component(const QuarkJets& c, int l) {
  Jet<Multivector> acc;
  bool first = true;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> term = jet_partial(c.psi[l], mu) + jet_mul(c.psi[l], c.A[mu]) -
                            jet_mul(c.C[mu], c.psi[l]);
    for (int k = 0; k < 3; ++k) {
      Jet<Multivector> bk(c.B[mu].x, c.B[mu].order);
      for (std::size_t i = 0; i < bk.d.size(); ++i)
        bk.d[i] = unit() * c.B[mu].d[i](k, l);
      term = term + jet_mul(c.psi[k], bk);
    }
    Jet<Multivector> piece = jet_mul(c.h[mu], term);
    if (first) {
      acc = piece;
      first = false;
    } else {
      acc = acc + piece;
    }
  }
  return acc + jet_scale(jet_truncate(c.psi[l], acc.order), cplx(0.0, c.m));
}

// Matrix form of the same left side.
inline Jet<MatMultivector> quark_dirac_lhs_matrix(const QuarkJets& c) {
  Jet<MatMultivector> psi = checked_psi(c);
  Jet<MatMultivector> acc;
  bool first = true;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<MatMultivector> term = jet_partial(psi, mu) +
                               jet_mul(psi, checked_scalar(c.A[mu])) +
                               jet_mul(psi, checked_matrix(c.B[mu])) -
                               jet_mul(checked_scalar(c.C[mu]), psi);
    Jet<MatMultivector> piece = jet_mul(checked_scalar(c.h[mu]), term);
    if (first) {
      acc = piece;
      first = false;
    } else {
      acc = acc + piece;
    }
  }
  return acc + jet_scale(jet_truncate(psi, acc.order), cplx(0.0, c.m));
}

// J-check^mu with entries J^mu_{kl} = Psi_k^dagger i beta h^mu Psi_l.
inline std::array<Jet<MatMultivector>, 4> current_matrix(const QuarkJets& c) {
  Jet<MatMultivector> psi = checked_psi(c);
  Jet<MatMultivector> psid = jet_adjoint(psi);
  Jet<MatMultivector> ib =
      jet_const(MatMultivector::tensor(Mat3c::identity(), beta() * cplx(0.0, 1.0)),
                psi.x, psi.order);
  std::array<Jet<MatMultivector>, 4> j;
  for (int mu = 0; mu < 4; ++mu)
    j[mu] = jet_mul(jet_mul(jet_mul(psid, ib), checked_scalar(c.h[mu])), psi);
  return j;
}

struct QuarkCurrents {
  FrameJets A;                  // (1/3) tr of the matrix current
  std::array<Jet<Mat3c>, 4> B;  // entrywise scalar part
  FrameJets C;                  // same formula as the lepton sector
};

inline QuarkCurrents currents(const QuarkJets& c) {
  QuarkCurrents out;
  auto jm = current_matrix(c);
  for (int mu = 0; mu < 4; ++mu) {
    Jet<Multivector> tr(jm[mu].x, jm[mu].order);
    Jet<Mat3c> p0(jm[mu].x, jm[mu].order);
    for (std::size_t i = 0; i < jm[mu].d.size(); ++i) {
      tr.d[i] = jm[mu].d[i].mat_trace() * (1.0 / 3.0);
      p0.d[i] = jm[mu].d[i].pi0_dot();
    }
    out.A[mu] = tr;
    out.B[mu] = p0;
  }
  out.C = current_C(c.h);
  return out;
}

// --- gauge actions ----------------------------------------------------------

enum class QuarkGauge { Uchi, V3, S3 };

inline QuarkJets transform_quark_U(const QuarkJets& c, const Jet<Multivector>& u) {
  Jet<Multivector> uinv = jet_dagger(u);
  QuarkJets r = c;
  for (int l = 0; l < 3; ++l) r.psi[l] = jet_mul(c.psi[l], u);
  for (int mu = 0; mu < 4; ++mu)
    r.A[mu] = jet_mul(jet_mul(uinv, c.A[mu]), u) - jet_mul(uinv, jet_partial(u, mu));
  return r;
}

// U(3) action mixes flavors:  Psi-check -> Psi-check V,
// B_mu -> V^{-1} B_mu V - V^{-1} d_mu V.
inline QuarkJets transform_quark_V(const QuarkJets& c, const Jet<Mat3c>& v) {
  Jet<Mat3c> vinv = jet_adjoint(v);
  QuarkJets r = c;
  int order = std::min(c.psi[0].order, v.order);
  for (int l = 0; l < 3; ++l) r.psi[l] = Jet<Multivector>(c.psi[0].x, order);
  for (std::size_t i = 0; i < r.psi[0].d.size(); ++i) {
    // (Psi V)_l = sum_k Psi_k v^k_l, with Leibniz over the table
    const MultiIndex& al = mi_at(static_cast<int>(i));
    MultiIndex be;
    for (be.a[0] = 0; be.a[0] <= al.a[0]; ++be.a[0])
      for (be.a[1] = 0; be.a[1] <= al.a[1]; ++be.a[1])
        for (be.a[2] = 0; be.a[2] <= al.a[2]; ++be.a[2])
          for (be.a[3] = 0; be.a[3] <= al.a[3]; ++be.a[3]) {
            MultiIndex rest{{al.a[0] - be.a[0], al.a[1] - be.a[1],
                             al.a[2] - be.a[2], al.a[3] - be.a[3]}};
            double w = mi_binom(al, be);
            for (int l = 0; l < 3; ++l)
              for (int k = 0; k < 3; ++k)
                r.psi[l].d[i] += c.psi[k].at(be) * (v.at(rest)(k, l) * w);
          }
  }
  for (int mu = 0; mu < 4; ++mu)
    r.B[mu] = jet_mul(jet_mul(vinv, c.B[mu]), v) - jet_mul(vinv, jet_partial(v, mu));
  return r;
}

inline QuarkJets transform_quark_S(const QuarkJets& c, const Jet<Multivector>& s) {
  Jet<Multivector> sinv = jet_dagger(s);
  Jet<Multivector> chij = jet_const(c.chi_elem, s.x, s.order);
  QuarkJets r = c;
  for (int l = 0; l < 3; ++l) r.psi[l] = jet_mul(jet_mul(sinv, c.psi[l]), s);
  for (int mu = 0; mu < 4; ++mu) {
    r.h[mu] = jet_mul(jet_mul(sinv, c.h[mu]), s);
    r.C[mu] = jet_mul(jet_mul(sinv, c.C[mu]), s) - jet_mul(sinv, jet_partial(s, mu));
    r.A[mu] = jet_mul(jet_mul(sinv, c.A[mu]), s) -
              jet_mul(chij, jet_mul(sinv, jet_partial(s, mu)));
  }
  return r;
}

// Residual covariance of the quark Dirac equation under the three gauges.
inline double quark_covariance_check(const QuarkJets& c, QuarkGauge kind,
                                     const Jet<Multivector>* g,
                                     const Jet<Mat3c>* v) {
  std::array<Multivector, 3> r0, rt;
  for (int l = 0; l < 3; ++l) r0[l] = quark_dirac_lhs_component(c, l).value();

  QuarkJets t = c;
  std::array<Multivector, 3> expect;
  switch (kind) {
    case QuarkGauge::Uchi:
      t = transform_quark_U(c, *g);
      for (int l = 0; l < 3; ++l) expect[l] = r0[l] * g->value();
      break;
    case QuarkGauge::V3: {
      t = transform_quark_V(c, *v);
      for (int l = 0; l < 3; ++l) {
        expect[l] = Multivector{};
        for (int k = 0; k < 3; ++k) expect[l] += r0[k] * v->value()(k, l);
      }
      break;
    }
    case QuarkGauge::S3: {
      t = transform_quark_S(c, *g);
      Multivector sinv = dagger(g->value());
      for (int l = 0; l < 3; ++l) expect[l] = sinv * r0[l] * g->value();
      break;
    }
  }
  double err = 0.0;
  for (int l = 0; l < 3; ++l) {
    rt[l] = quark_dirac_lhs_component(t, l).value();
    err = std::max(err, norm_inf(rt[l] - expect[l]));
  }
  return err;
}

// --- conservation identities ------------------------------------------------

struct Theorem3Residuals {
  double matrix_identity;  // anti-Hermitian part of Psi-check^dagger i beta-check L
  double tr_annihilation;  // tr([B-check_mu, J-check^mu]) = 0
  double pi0_commutator;   // pi0-dot([B-check, J-check]) = [B, pi0-dot(J-check)]
  double trace_image;      // (1/3) tr of the matrix identity vs its assembled form
  double pi0_image;        // pi0-dot of the matrix identity vs its assembled form
};

inline Theorem3Residuals theorem3_identities(const QuarkJets& c) {
  Theorem3Residuals out{};
  const auto& x = c.psi[0].x;
  int order = c.psi[0].order;

  Jet<MatMultivector> psi = checked_psi(c);
  Jet<MatMultivector> psid = jet_adjoint(psi);
  Jet<MatMultivector> L = quark_dirac_lhs_matrix(c);
  Jet<MatMultivector> ib = jet_const(
      MatMultivector::tensor(Mat3c::identity(), beta() * cplx(0.0, 1.0)), x, order);

  MatMultivector M = jet_mul(jet_mul(psid, ib), L).value();
  MatMultivector lhs = M - M.adjoint();

  auto jm = current_matrix(c);
  MatMultivector flow;  // d_mu J-check^mu - [A-check_mu + B-check_mu, J-check^mu]
  for (int mu = 0; mu < 4; ++mu) {
    MatMultivector ab = MatMultivector::tensor(Mat3c::identity(), c.A[mu].value()) +
                        MatMultivector::tensor(c.B[mu].value(), unit());
    flow = flow + jet_partial(jm[mu], mu).value() - commutator(ab, jm[mu].value());
  }

  Jet<MatMultivector> inner_sum;
  bool first = true;
  for (int mu = 0; mu < 4; ++mu) {
    Jet<MatMultivector> tb =
        jet_mul(jet_const(MatMultivector::tensor(Mat3c::identity(), theta() * beta()),
                          x, order),
                checked_scalar(c.h[mu]));
    Jet<MatMultivector> term =
        jet_partial(tb, mu) - jet_commutator(checked_scalar(c.C[mu]), tb);
    if (first) {
      inner_sum = term;
      first = false;
    } else {
      inner_sum = inner_sum + term;
    }
  }
  Jet<MatMultivector> it = jet_const(
      MatMultivector::tensor(Mat3c::identity(), theta() * cplx(0.0, 1.0)), x, order);
  MatMultivector wrapped = jet_mul(jet_mul(jet_mul(psid, it), inner_sum), psi).value();
  MatMultivector rhs = flow + wrapped;
  out.matrix_identity = norm_inf(lhs - rhs);

  // tr kills the B commutator and pi0-dot intertwines it
  Multivector tr_sum;
  double pi0_comm = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    MatMultivector bch = MatMultivector::tensor(c.B[mu].value(), unit());
    MatMultivector comm = commutator(bch, jm[mu].value());
    tr_sum += comm.mat_trace();
    Mat3c viaentries = comm.pi0_dot();
    Mat3c viamatrix = commutator(c.B[mu].value(), jm[mu].value().pi0_dot());
    pi0_comm = std::max(pi0_comm, norm_inf(viaentries - viamatrix));
  }
  out.tr_annihilation = norm_inf(tr_sum);
  out.pi0_commutator = pi0_comm;

  // trace image: assembled scalar consequence vs (1/3) tr of the matrix one
  QuarkCurrents cur = currents(c);
  Multivector flowA;
  for (int mu = 0; mu < 4; ++mu)
    flowA += jet_partial(cur.A[mu], mu).value() -
             commutator(c.A[mu].value(), cur.A[mu].value());
  Multivector assembledA = flowA + wrapped.mat_trace() * (1.0 / 3.0);
  out.trace_image = norm_inf(lhs.mat_trace() * (1.0 / 3.0) - assembledA);

  // pi0-dot image: assembled u(3) consequence vs pi0-dot of the matrix one
  Mat3c flowB;
  for (int mu = 0; mu < 4; ++mu)
    flowB = flowB + jet_partial(cur.B[mu], mu).value() -
            commutator(c.B[mu].value(), cur.B[mu].value());
  Mat3c assembledB = flowB + wrapped.pi0_dot();
  out.pi0_image = norm_inf(lhs.pi0_dot() - assembledB);

  return out;
}

// Residual norms of the three Yang-Mills divergence pairs with the quark
// currents; these vanish only on solutions and are reported, not asserted.
struct YMPostulateResiduals {
  std::array<double, 4> A{}, B{}, C{};
  double conservation_A = 0.0, conservation_B = 0.0, conservation_C = 0.0;
};

inline YMPostulateResiduals ym_postulates_residuals(const QuarkJets& c) {
  YMPostulateResiduals out;
  QuarkCurrents cur = currents(c);

  auto fa = curvature<Multivector>(c.A);
  auto da = divergence_lhs<Multivector>(c.A, fa);
  auto fc = curvature<Multivector>(c.C);
  auto dc = divergence_lhs<Multivector>(c.C, fc);
  auto fb = curvature<Mat3c>(c.B);
  auto db = divergence_lhs<Mat3c>(c.B, fb);
  for (int nu = 0; nu < 4; ++nu) {
    out.A[nu] = norm_inf(da[nu].value() - cur.A[nu].value());
    out.B[nu] = norm_inf(db[nu].value() - cur.B[nu].value());
    out.C[nu] = norm_inf(dc[nu].value() - cur.C[nu].value());
  }
  if (c.A[0].order >= 3) {
    out.conservation_A = norm_inf(conservation_residual<Multivector>(c.A));
    out.conservation_B = norm_inf(conservation_residual<Mat3c>(c.B));
    out.conservation_C = norm_inf(conservation_residual<Multivector>(c.C));
  }
  return out;
}

// --- random configurations --------------------------------------------------

inline MatField random_mat_field(Rng& rng, int nterms = 2) {
  MatField f;
  for (int t = 0; t < nterms; ++t)
    f.terms.push_back({random_antihermitian(rng), random_profile(rng, 0.5)});
  return f;
}

inline QuarkField random_quark_field(Rng& rng, const Multivector& x,
                                     bool moving_frame = true) {
  LeptonField lf = random_lepton_field(rng, x, moving_frame);
  QuarkField f;
  f.chi_elem = x;
  f.psi[0] = lf.psi;
  for (int l = 1; l < 3; ++l)
    f.psi[l] = random_field_expr(rng) * FieldExpr::constant(x);
  f.A = lf.A;
  f.C = lf.C;
  for (int mu = 0; mu < 4; ++mu) f.B[mu] = random_mat_field(rng);
  f.h0 = lf.h0;
  f.frame = lf.frame;
  f.m = lf.m;
  return f;
}

}  // namespace clg
