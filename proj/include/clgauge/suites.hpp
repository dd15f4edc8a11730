#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clgauge/lattice.hpp"
#include "clgauge/lepton.hpp"
#include "clgauge/lie.hpp"
#include "clgauge/quark.hpp"
#include "clgauge/random.hpp"
#include "clgauge/yang_mills.hpp"

namespace clg {

struct RunConfig {
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int order = 2;
  ChiKind chi_kind = ChiKind::HalfMinus;
};

struct CheckRecord {
  std::string id;
  std::string anchor;  // equation / section tag the check traces to
  int trials = 0;
  double max_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// every check draws from its own stream, so suite composition never
// changes individual results
inline Rng check_rng(const RunConfig& cfg, const std::string& id) {
  return Rng(cfg.seed ^ fnv1a(id));
}

inline CheckRecord record(const std::string& id, const std::string& anchor,
                          int trials, double err, double tol) {
  return {id, anchor, trials, err, tol, err <= tol};
}

}  // namespace detail

// random polynomial field, degree <= 2 per term
inline FieldExpr random_poly_expr(Rng& rng, int nterms = 4) {
  FieldExpr e;
  for (int t = 0; t < nterms; ++t) {
    FieldTerm term;
    term.coeff = cplx(uniform(rng), uniform(rng));
    term.blade = static_cast<Blade>(rng() % 16);
    int deg = static_cast<int>(rng() % 3);
    for (int d = 0; d < deg; ++d)
      term.factors.push_back(ScalarFactor::mono(static_cast<int>(rng() % 4), 1));
    e.terms.push_back(std::move(term));
  }
  return e;
}

// --- algebra ----------------------------------------------------------------

inline std::vector<CheckRecord> suite_algebra(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const Multivector x = chi(cfg.chi_kind);

  {
    double err = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Multivector lhs = basis_vector(a) * basis_vector(b) +
                          basis_vector(b) * basis_vector(a);
        Multivector rhs = (a == b) ? unit() * (2.0 * eta_sign(a)) : Multivector{};
        err = std::max(err, norm_inf(lhs - rhs));
      }
    out.push_back(detail::record("defining-relation", "sec1", 16, err, 0.0));
  }
  {
    auto rng = detail::check_rng(cfg, "associativity");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Multivector u = random_multivector(rng), v = random_multivector(rng),
                  w = random_multivector(rng);
      err = std::max(err, norm_inf((u * v) * w - u * (v * w)));
    }
    out.push_back(detail::record("associativity", "sec1", cfg.trials, err, 1e-12));
  }
  {
    int dims[5] = {0, 0, 0, 0, 0};
    for (int b = 0; b < 16; ++b) ++dims[grade_of(static_cast<Blade>(b))];
    bool ok = dims[0] == 1 && dims[1] == 4 && dims[2] == 6 && dims[3] == 4 && dims[4] == 1;
    out.push_back(detail::record("grade-dimensions", "sec1", 1, ok ? 0.0 : 1.0, 0.0));
  }
  {
    auto rng = detail::check_rng(cfg, "involutions");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Multivector u = random_multivector(rng), v = random_multivector(rng);
      err = std::max(err, norm_inf((u * v).reverse() - v.reverse() * u.reverse()));
      err = std::max(err, norm_inf(dagger(u * v) - dagger(v) * dagger(u)));
      err = std::max(err, norm_inf(u.conj().conj() - u));
    }
    out.push_back(detail::record("involutions", "sec1", cfg.trials, err, 1e-12));
  }
  {
    double err = 0.0;
    err = std::max(err, norm_inf(beta() * beta() - unit()));
    err = std::max(err, norm_inf(theta() * theta() + unit()));
    err = std::max(err, norm_inf(x * x - x));
    err = std::max(err, norm_inf(dagger(x) - x));
    if (cfg.chi_kind != ChiKind::Unit)
      err = std::max(err, norm_inf(theta() * x -
                                   x * (cfg.chi_kind == ChiKind::HalfMinus
                                            ? cplx(0.0, 1.0)
                                            : cplx(0.0, -1.0))));
    out.push_back(detail::record("constants", "sec1", 1, err, 0.0));
  }
  {
    auto rng = detail::check_rng(cfg, "projectors");
    double err = 0.0;
    for (int t = 0; t < cfg.trials / 10 + 1; ++t) {
      Multivector u = random_multivector(rng);
      Multivector sum;
      for (int k = 0; k <= 4; ++k) {
        sum += u.grade(k);
        for (int j = 0; j <= 4; ++j)
          if (j != k) err = std::max(err, norm_inf(u.grade(k).grade(j)));
      }
      err = std::max(err, norm_inf(sum - u));
      err = std::max(err, norm_inf(u.even() + u.odd() - u));
    }
    out.push_back(detail::record("projectors", "sec1", cfg.trials / 10 + 1, err, 0.0));
  }
  {
    auto rng = detail::check_rng(cfg, "scalar-product");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Multivector u = random_multivector(rng), v = random_multivector(rng);
      cplx uu = inner(u, u);
      if (uu.real() <= 0.0 || std::abs(uu.imag()) > 1e-12) err = std::max(err, 1.0);
      err = std::max(err, std::abs(inner(u, v) - std::conj(inner(v, u))));
      err = std::max(err, std::abs((u * v).trace() - (v * u).trace()));
    }
    out.push_back(detail::record("scalar-product", "sec1", cfg.trials, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "idempotent-ideals");
    double err = 0.0;
    for (int t = 0; t < cfg.trials / 4 + 1; ++t) {
      Multivector u = random_multivector(rng);
      if (!in_ideal_I(u * x, x, 1e-12)) err = std::max(err, 1.0);
      if (!in_ideal_K(x * u * x, x, 1e-12)) err = std::max(err, 1.0);
      err = std::max(err, norm_inf(commutator(u.even(), x)));
    }
    out.push_back(
        detail::record("idempotent-ideals", "sec1", cfg.trials / 4 + 1, err, 1e-12));
  }
  return out;
}

// --- lie --------------------------------------------------------------------

inline std::vector<CheckRecord> suite_lie(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const Multivector x = chi(cfg.chi_kind);
  {
    double err = 0.0;
    err = std::max(err, norm_inf(commutator(tau(1), tau(2)) - tau(3) * 2.0));
    err = std::max(err, norm_inf(commutator(tau(2), tau(3)) - tau(1) * 2.0));
    err = std::max(err, norm_inf(commutator(tau(3), tau(1)) - tau(2) * 2.0));
    for (int k = 1; k <= 3; ++k)
      err = std::max(err, norm_inf(tau(k) * tau(k) + unit()));
    out.push_back(detail::record("su2-brackets", "sec2", 1, err, 0.0));
  }
  {
    auto rng = detail::check_rng(cfg, "exp-g3");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      L3Element s = random_L3(rng);
      Multivector S = exp_g3(s);
      if (!in_G3(S, 1e-10)) err = std::max(err, 1.0);
      err = std::max(err, norm_inf(S * exp_g3(-s) - unit()));
      err = std::max(err, norm_inf(unitary_inverse(S) - exp_g3(-s)));
    }
    out.push_back(detail::record("exp-g3", "sec2", cfg.trials, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "exp-gchi");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      L4Element s = random_L4(rng);
      Multivector S = exp_gchi(s, x);
      err = std::max(err, norm_inf(dagger(S) * S - unit()));
      if (!in_Gchi(S, x, 1e-10)) err = std::max(err, 1.0);
      err = std::max(err, norm_inf(S * exp_gchi(-s, x) - unit()));
    }
    out.push_back(detail::record("exp-gchi", "sec2", cfg.trials, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "lchi-closure");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      Multivector r1 = random_Lchi(rng, x), r2 = random_Lchi(rng, x);
      if (!in_Lchi(commutator(r1, r2), x, 1e-10)) err = std::max(err, 1.0);
      if (!in_Lchi(r1, x, 1e-12)) err = std::max(err, 1.0);
    }
    out.push_back(detail::record("lchi-closure", "sec2", cfg.trials, err, 1e-10));
  }
  return out;
}

// --- frames -----------------------------------------------------------------

inline std::vector<CheckRecord> suite_frames(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  {
    auto rng = detail::check_rng(cfg, "tetrad-genvector");
    double err = 0.0;
    int n = std::max(cfg.trials / 2, 100);
    for (int t = 0; t < n; ++t) {
      Mat4d p = random_lorentz(rng);
      if (!is_lorentz(p, 1e-9)) err = std::max(err, 1.0);
      Tetrad y = tetrad_from_lorentz(p, 1e-9);
      if (!is_orthonormal(y, 1e-9)) err = std::max(err, 1.0);
      err = std::max(err, genvector_condition_residual(genvector(y).h));
    }
    out.push_back(detail::record("tetrad-genvector", "gen:cond", n, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "divergence-condition");
    double err = 0.0;
    int n = cfg.trials / 2 + 1;
    for (int t = 0; t < n; ++t) {
      Genvector base = genvector(tetrad_from_lorentz(random_lorentz(rng), 1e-9));
      GroupField s = random_g3_field(rng);
      auto x = random_point(rng);
      FrameJets h = conjugated_genvector(base, s, x, 2);
      err = std::max(err, check_divergence(h));
      err = std::max(err, frame_condition_residual(h));
    }
    out.push_back(detail::record("divergence-condition", "pi0:betah", n, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "dirac-op-square");
    double err = 0.0;
    int n = cfg.trials / 2 + 1;
    for (int t = 0; t < n; ++t) {
      Genvector g = genvector(tetrad_from_lorentz(random_lorentz(rng), 1e-9));
      auto x = random_point(rng);
      FieldExpr psi = random_poly_expr(rng);
      Jet<Multivector> pj = eval(psi, x, 2);
      FrameJets h = constant_frame(g, x, 2);
      Multivector lhs = dirac_op(h, dirac_op(h, pj)).value();
      Multivector rhs;
      for (int mu = 0; mu < 4; ++mu) {
        MultiIndex m;
        m.a[mu] = 2;
        rhs += pj.at(m) * static_cast<double>(eta_sign(mu));
      }
      err = std::max(err, norm_inf(lhs - rhs));
    }
    out.push_back(detail::record("dirac-op-square", "sec3 eth^2", n, err, 1e-12));
  }
  return out;
}

// --- yang-mills -------------------------------------------------------------

inline std::vector<CheckRecord> suite_ym(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const Multivector x = chi(cfg.chi_kind);

  auto sample_potential = [&](Rng& rng, bool lchi,
                              const std::array<double, 4>& pt, int order) {
    Potential<Multivector> a;
    for (int mu = 0; mu < 4; ++mu) {
      FieldExpr e;
      for (int k = 1; k <= 3; ++k) {
        Multivector dir = lchi ? tau(k) * x : tau(k);
        FieldExpr part = FieldExpr::constant(dir) * random_profile(rng, 0.5);
        e = (k == 1) ? part : e + part;
      }
      if (lchi) e = e + FieldExpr::constant(theta() * x) * random_profile(rng, 0.5);
      a[mu] = eval(e, pt, order);
    }
    return a;
  };

  {
    auto rng = detail::check_rng(cfg, "ym-conservation");
    double err = 0.0;
    int n = cfg.trials;
    for (int t = 0; t < n; ++t) {
      auto pt = random_point(rng);
      auto a = sample_potential(rng, t % 2 == 1, pt, 3);
      err = std::max(err, norm_inf(conservation_residual<Multivector>(a)));
    }
    out.push_back(detail::record("ym-conservation", "YM:conseq", n, err, 1e-9));
  }
  {
    auto rng = detail::check_rng(cfg, "curvature-antisymmetry");
    double err = 0.0;
    int n = cfg.trials / 4 + 1;
    for (int t = 0; t < n; ++t) {
      auto pt = random_point(rng);
      auto a = sample_potential(rng, false, pt, 2);
      auto f = curvature<Multivector>(a);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          err = std::max(err, jet_norm_inf(f[mu][nu] + f[nu][mu]));
    }
    out.push_back(detail::record("curvature-antisymmetry", "YM:aa", n, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "gauge-covariance");
    double err = 0.0;
    int n = cfg.trials / 4 + 1;
    for (int t = 0; t < n; ++t) {
      auto pt = random_point(rng);
      auto a = sample_potential(rng, false, pt, 3);
      GroupField gf = random_g3_field(rng);
      Jet<Multivector> s = eval_group(gf, pt, 3);
      Jet<Multivector> sinv = jet_dagger(s);
      auto at = gauge_transform<Multivector>(a, s, sinv);
      auto ft = curvature<Multivector>(at);
      auto f = curvature<Multivector>(a);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          Multivector want = sinv.value() * f[mu][nu].value() * s.value();
          err = std::max(err, norm_inf(ft[mu][nu].value() - want));
        }
      // pure gauge is flat
      Potential<Multivector> zero;
      for (int mu = 0; mu < 4; ++mu)
        zero[mu] = jet_const(Multivector{}, pt, 3);
      auto pure = gauge_transform<Multivector>(zero, s, sinv);
      auto fp = curvature<Multivector>(pure);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          err = std::max(err, norm_inf(fp[mu][nu].value()));
    }
    out.push_back(detail::record("gauge-covariance", "gauge:sym:0", n, err, 1e-10));
  }
  return out;
}

// --- lepton -----------------------------------------------------------------

inline std::vector<CheckRecord> suite_lepton(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const Multivector x = chi(cfg.chi_kind);

  {
    auto rng = detail::check_rng(cfg, "lepton-covariance");
    double errU = 0.0, errS = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      auto pt = random_point(rng);
      LeptonField f = random_lepton_field(rng, x);
      LeptonJets c = eval(f, pt, 3);
      Jet<Multivector> u = eval_group(random_gchi_field(rng, x), pt, 3);
      Jet<Multivector> s = eval_group(random_g3_field(rng), pt, 3);
      errU = std::max(errU, covariance_check(c, LeptonGauge::Uchi, u));
      errS = std::max(errS, covariance_check(c, LeptonGauge::S3, s));
    }
    out.push_back(detail::record("covariance-gchi", "rule:Gt", cfg.trials, errU, 1e-9));
    out.push_back(detail::record("covariance-g3", "rule:G3", cfg.trials, errS, 1e-9));
  }
  {
    auto rng = detail::check_rng(cfg, "lepton-typing");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      auto pt = random_point(rng);
      LeptonField f = random_lepton_field(rng, x);
      LeptonJets c = eval(f, pt, 1);
      if (!in_ideal_I(c.psi.value(), x, 1e-10)) err = std::max(err, 1.0);
      if (!in_ideal_I(dirac_lhs(c).value(), x, 1e-10)) err = std::max(err, 1.0);
      FrameJets ja = current_A(c);
      FrameJets jc = current_C(c.h);
      for (int mu = 0; mu < 4; ++mu) {
        if (!in_Lchi(ja[mu].value(), x, 1e-12)) err = std::max(err, 1.0);
        if (!in_L3(jc[mu].value(), 1e-12)) err = std::max(err, 1.0);
        if (!in_Lchi(c.A[mu].value(), x, 1e-12)) err = std::max(err, 1.0);
        if (!in_L3(c.C[mu].value(), 1e-12)) err = std::max(err, 1.0);
      }
    }
    out.push_back(detail::record("current-typing", "main3bxy main5bxy", cfg.trials,
                                 err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "antihermitian-identity");
    double err = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      auto pt = random_point(rng);
      LeptonField f = random_lepton_field(rng, x);
      LeptonJets c = eval(f, pt, 2);
      err = std::max(err, antihermitian_identity(c));
    }
    out.push_back(
        detail::record("antihermitian-identity", "1st:conb", cfg.trials, err, 1e-10));
  }
  {
    auto rng = detail::check_rng(cfg, "theorem2-support");
    double e1 = 0.0, e2 = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      auto pt = random_point(rng);
      LeptonField f = random_lepton_field(rng, x);
      LeptonJets c = eval(f, pt, 2);
      Theorem2Residuals r = theorem2_support(c.h, c.C);
      e1 = std::max(e1, std::max(r.cmupi, r.pi4));
      e2 = std::max(e2, r.cons_diff);
    }
    out.push_back(detail::record("theorem2-unconditional", "Cmupi pi4J", cfg.trials,
                                 e1, 1e-12));
    out.push_back(detail::record("theorem2-equivalence", "thetabetah", cfg.trials,
                                 e2, 1e-10));
  }
  return out;
}

// --- quark ------------------------------------------------------------------

inline std::vector<CheckRecord> suite_quark(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const Multivector x = chi(cfg.chi_kind);
  int n = std::max(cfg.trials / 2, 1);

  {
    auto rng = detail::check_rng(cfg, "quark-covariance");
    double eU = 0.0, eV = 0.0, eS = 0.0;
    for (int t = 0; t < n; ++t) {
      auto pt = random_point(rng);
      QuarkField f = random_quark_field(rng, x);
      QuarkJets c = eval(f, pt, 2);
      Jet<Multivector> u = eval_group(random_gchi_field(rng, x), pt, 2);
      Jet<Multivector> s = eval_group(random_g3_field(rng), pt, 2);
      Jet<Mat3c> v = eval_mat_group(random_u3_field(rng), pt, 2);
      eU = std::max(eU, quark_covariance_check(c, QuarkGauge::Uchi, &u, nullptr));
      eV = std::max(eV, quark_covariance_check(c, QuarkGauge::V3, nullptr, &v));
      eS = std::max(eS, quark_covariance_check(c, QuarkGauge::S3, &s, nullptr));
    }
    out.push_back(detail::record("quark-covariance-gchi", "U223:eq", n, eU, 1e-9));
    out.push_back(detail::record("quark-covariance-u3", "U223:eq", n, eV, 1e-9));
    out.push_back(detail::record("quark-covariance-g3", "U223:eq", n, eS, 1e-9));
  }
  {
    auto rng = detail::check_rng(cfg, "quark-identities");
    double e_mat = 0.0, e_tr = 0.0, e_herm = 0.0;
    for (int t = 0; t < n; ++t) {
      auto pt = random_point(rng);
      QuarkField f = random_quark_field(rng, x);
      QuarkJets c = eval(f, pt, 2);
      Theorem3Residuals r = theorem3_identities(c);
      e_mat = std::max(e_mat, std::max(r.matrix_identity,
                                       std::max(r.trace_image, r.pi0_image)));
      e_tr = std::max(e_tr, std::max(r.tr_annihilation, r.pi0_commutator));
      // current anti-Hermiticity in u(3)
      QuarkCurrents cur = currents(c);
      for (int mu = 0; mu < 4; ++mu)
        e_herm = std::max(
            e_herm, norm_inf(cur.B[mu].value().adjoint() + cur.B[mu].value()));
      // matrix and component forms of the equation agree
      Jet<MatMultivector> lm = quark_dirac_lhs_matrix(c);
      for (int l = 0; l < 3; ++l) {
        Jet<Multivector> lc = quark_dirac_lhs_component(c, l);
        e_mat = std::max(e_mat, norm_inf(lm.value()(0, l) - lc.value()));
        e_mat = std::max(e_mat, norm_inf(lm.value()(1, l)));
        e_mat = std::max(e_mat, norm_inf(lm.value()(2, l)));
      }
    }
    out.push_back(detail::record("quark-matrix-identity", "1st:cons", n, e_mat, 1e-10));
    out.push_back(detail::record("quark-tr-pi0", "2nd:cons 3d:cons", n, e_tr, 1e-12));
    out.push_back(detail::record("quark-current-u3", "J:B", n, e_herm, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "quark-reduction");
    double err = 0.0;
    for (int t = 0; t < n; ++t) {
      auto pt = random_point(rng);
      QuarkField f = random_quark_field(rng, x);
      // single flavor, no strong field: must reduce to the lepton system
      f.psi[1] = FieldExpr{};
      f.psi[2] = FieldExpr{};
      for (int mu = 0; mu < 4; ++mu) f.B[mu] = MatField{};
      QuarkJets c = eval(f, pt, 2);
      LeptonField lf;
      lf.psi = f.psi[0];
      lf.A = f.A;
      lf.C = f.C;
      lf.h0 = f.h0;
      lf.frame = f.frame;
      lf.m = f.m;
      lf.chi_elem = f.chi_elem;
      LeptonJets lc = eval(lf, pt, 2);
      err = std::max(err, norm_inf(quark_dirac_lhs_component(c, 0).value() -
                                   dirac_lhs(lc).value()));
      QuarkCurrents cur = currents(c);
      FrameJets ja = current_A(lc);
      for (int mu = 0; mu < 4; ++mu)
        err = std::max(err, norm_inf(cur.A[mu].value() - ja[mu].value() * (1.0 / 3.0)));
    }
    out.push_back(detail::record("quark-lepton-reduction", "U223:eq1", n, err, 1e-12));
  }
  {
    auto rng = detail::check_rng(cfg, "quark-ym-postulates");
    double err = 0.0;
    int nn = std::max(n / 4, 1);
    for (int t = 0; t < nn; ++t) {
      auto pt = random_point(rng);
      QuarkField f = random_quark_field(rng, x);
      QuarkJets c = eval(f, pt, 3);
      YMPostulateResiduals r = ym_postulates_residuals(c);
      err = std::max(err, std::max(r.conservation_A,
                                   std::max(r.conservation_B, r.conservation_C)));
    }
    out.push_back(detail::record("quark-ym-conservation", "YM:A YM:B YM:C", nn, err, 1e-9));
  }
  return out;
}

inline std::vector<CheckRecord> run_suite(const std::string& name,
                                          const RunConfig& cfg) {
  if (name == "algebra") return suite_algebra(cfg);
  if (name == "lie") return suite_lie(cfg);
  if (name == "frames") return suite_frames(cfg);
  if (name == "ym") return suite_ym(cfg);
  if (name == "lepton") return suite_lepton(cfg);
  if (name == "quark") return suite_quark(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"algebra", "lie",    "frames",
                                                 "ym",      "lepton", "quark"};
  return names;
}

}  // namespace clg
