#include <catch2/catch_amalgamated.hpp>

#include "clgauge/quark.hpp"

using namespace clg;

TEST_CASE("checked assembly has the expected row structure") {
  Rng rng(71);
  Multivector x = chi();
  auto pt = random_point(rng);
  QuarkField f = random_quark_field(rng, x);
  QuarkJets c = eval(f, pt, 2);
  Jet<MatMultivector> psi = checked_psi(c);
  for (int l = 0; l < 3; ++l) {
    REQUIRE(norm_inf(psi.value()(0, l) - c.psi[l].value()) == 0.0);
    REQUIRE(norm_inf(psi.value()(1, l)) == 0.0);
    REQUIRE(norm_inf(psi.value()(2, l)) == 0.0);
  }
}

TEST_CASE("matrix and componentwise Dirac forms agree") {
  Rng rng(72);
  Multivector x = chi();
  for (int t = 0; t < 30; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
    QuarkJets c = eval(f, pt, 2);
    Jet<MatMultivector> lm = quark_dirac_lhs_matrix(c);
    for (int l = 0; l < 3; ++l) {
      Jet<Multivector> lc = quark_dirac_lhs_component(c, l);
      REQUIRE(norm_inf(lm.value()(0, l) - lc.value()) <= 1e-11);
      REQUIRE(norm_inf(lm.value()(1, l)) <= 1e-12);
      REQUIRE(norm_inf(lm.value()(2, l)) <= 1e-12);
      REQUIRE(in_ideal_I(lc.value(), x, 1e-9));
    }
  }
}

TEST_CASE("single flavor with B = 0 reduces to the lepton system") {
  Rng rng(73);
  Multivector x = chi();
  for (int t = 0; t < 20; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
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

    REQUIRE(jet_norm_inf(quark_dirac_lhs_component(c, 0) - dirac_lhs(lc)) <= 1e-12);
    QuarkCurrents cur = currents(c);
    FrameJets ja = current_A(lc);
    for (int mu = 0; mu < 4; ++mu) {
      REQUIRE(jet_norm_inf(cur.A[mu] - jet_scale(ja[mu], 1.0 / 3.0)) <= 1e-12);
      REQUIRE(jet_norm_inf(cur.C[mu] - current_C(lc.h)[mu]) == 0.0);
    }
  }
}

TEST_CASE("currents: J_B anti-Hermitian, matrix current Hermitian-adjoint structure") {
  Rng rng(74);
  Multivector x = chi();
  for (int t = 0; t < 50; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
    QuarkJets c = eval(f, pt, 1);
    auto jm = current_matrix(c);
    QuarkCurrents cur = currents(c);
    for (int mu = 0; mu < 4; ++mu) {
      REQUIRE(norm_inf(jm[mu].value().adjoint() + jm[mu].value()) <= 1e-12);
      REQUIRE(norm_inf(cur.B[mu].value().adjoint() + cur.B[mu].value()) <= 1e-12);
      REQUIRE(in_Lchi(cur.A[mu].value(), x, 1e-12));
      REQUIRE(in_L3(cur.C[mu].value(), 1e-12));
    }
  }
}

TEST_CASE("residual covariance under all three gauges") {
  Rng rng(75);
  Multivector x = chi();
  for (int t = 0; t < 30; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
    QuarkJets c = eval(f, pt, 2);
    Jet<Multivector> u = eval_group(random_gchi_field(rng, x), pt, 2);
    Jet<Multivector> s = eval_group(random_g3_field(rng), pt, 2);
    Jet<Mat3c> v = eval_mat_group(random_u3_field(rng), pt, 2);
    REQUIRE(quark_covariance_check(c, QuarkGauge::Uchi, &u, nullptr) <= 1e-9);
    REQUIRE(quark_covariance_check(c, QuarkGauge::V3, nullptr, &v) <= 1e-9);
    REQUIRE(quark_covariance_check(c, QuarkGauge::S3, &s, nullptr) <= 1e-9);
  }
}

TEST_CASE("U(3) transform: unitarity of the field and round trip") {
  Rng rng(76);
  Multivector x = chi();
  auto pt = random_point(rng);
  Jet<Mat3c> v = eval_mat_group(random_u3_field(rng), pt, 2);
  Jet<Mat3c> unitres = jet_mul(jet_adjoint(v), v) -
                       jet_const(Mat3c::identity(), pt, 2);
  REQUIRE(jet_norm_inf(unitres) <= 1e-12);

  QuarkField f = random_quark_field(rng, x);
  QuarkJets c = eval(f, pt, 2);
  QuarkJets back = transform_quark_V(transform_quark_V(c, v), jet_adjoint(v));
  for (int l = 0; l < 3; ++l)
    REQUIRE(jet_norm_inf(back.psi[l] - c.psi[l]) <= 1e-11);
  for (int mu = 0; mu < 4; ++mu)
    REQUIRE(jet_norm_inf(back.B[mu] - c.B[mu]) <= 1e-11);
}

TEST_CASE("theorem-3 identities") {
  Rng rng(77);
  Multivector x = chi();
  for (int t = 0; t < 30; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
    QuarkJets c = eval(f, pt, 2);
    Theorem3Residuals r = theorem3_identities(c);
    REQUIRE(r.matrix_identity <= 1e-10);
    REQUIRE(r.tr_annihilation <= 1e-12);
    REQUIRE(r.pi0_commutator <= 1e-12);
    REQUIRE(r.trace_image <= 1e-10);
    REQUIRE(r.pi0_image <= 1e-10);
  }
}

TEST_CASE("Yang-Mills postulates: conservation asserted, residuals reported") {
  Rng rng(78);
  Multivector x = chi();
  for (int t = 0; t < 10; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
    QuarkJets c = eval(f, pt, 3);
    YMPostulateResiduals r = ym_postulates_residuals(c);
    REQUIRE(r.conservation_A <= 1e-9);
    REQUIRE(r.conservation_B <= 1e-9);
    REQUIRE(r.conservation_C <= 1e-9);
    for (int nu = 0; nu < 4; ++nu) {
      REQUIRE(std::isfinite(r.A[nu]));
      REQUIRE(std::isfinite(r.B[nu]));
      REQUIRE(std::isfinite(r.C[nu]));
    }
  }
}
