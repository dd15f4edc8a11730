// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clgauge/lattice.hpp"
#include "clgauge/lepton.hpp"
#include "clgauge/lie.hpp"
#include "clgauge/quark.hpp"
#include "oracles.hpp"

using namespace clg;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
  std::printf("[PRIMARY] criterion %2d %-28s %s  (%.2fs%s%s)\n", num, name.c_str(),
              pass ? "PASS" : "FAIL", seconds, detail.empty() ? "" : ", ",
              detail.c_str());
  if (!pass) ++failures;
}

template <class F>
void timed(int num, const std::string& name, double limit_s, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  double max_err = 0.0;
  bool pass = true;
  std::string detail;
  try {
    pass = body(max_err, detail);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0.0 && secs > limit_s) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  std::ostringstream d;
  d << "max_err " << max_err;
  if (!detail.empty()) d << ", " << detail;
  report(num, name, pass, secs, d.str());
}

bool criterion1(double& max_err, std::string&) {
  bool ok = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Multivector lhs = basis_vector(a) * basis_vector(b) +
                        basis_vector(b) * basis_vector(a);
      Multivector rhs = (a == b) ? unit() * (2.0 * eta_sign(a)) : Multivector{};
      if (norm_inf(lhs - rhs) != 0.0) ok = false;
    }
  int dims[5] = {0, 0, 0, 0, 0};
  for (int b = 0; b < 16; ++b) ++dims[grade_of(static_cast<Blade>(b))];
  ok = ok && dims[0] == 1 && dims[1] == 4 && dims[2] == 6 && dims[3] == 4 && dims[4] == 1;
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    Multivector u = random_multivector(rng), v = random_multivector(rng),
                w = random_multivector(rng);
    max_err = std::max(max_err, norm_inf((u * v) * w - u * (v * w)));
    max_err = std::max(max_err, norm_inf((u * v).reverse() - v.reverse() * u.reverse()));
    max_err = std::max(max_err, norm_inf(dagger(u * v) - dagger(v) * dagger(u)));
  }
  return ok && max_err <= 1e-12;
}

bool criterion2(double& max_err, std::string&) {
  Multivector x = chi();
  max_err = std::max(max_err, norm_inf(beta() * beta() - unit()));
  max_err = std::max(max_err, norm_inf(theta() * theta() + unit()));
  max_err = std::max(max_err, norm_inf(x * x - x));
  max_err = std::max(max_err, norm_inf(dagger(x) - x));
  max_err = std::max(max_err, norm_inf(theta() * x - x * cplx(0.0, 1.0)));
  return max_err == 0.0;
}

bool criterion3(double& max_err, std::string&) {
  bool ok = true;
  Rng rng(3);
  Multivector x = chi();
  for (int t = 0; t < 500; ++t) {
    L3Element s = random_L3(rng);
    max_err = std::max(max_err, norm_inf(exp_g3(s) - oracle::series_exp(s.to_multivector())));
    Multivector U = exp_gchi(random_L4(rng), x);
    max_err = std::max(max_err, norm_inf(dagger(U) * U - unit()));
  }
  ok = ok && norm_inf(commutator(tau(1), tau(2)) - tau(3) * 2.0) == 0.0 &&
       norm_inf(commutator(tau(2), tau(3)) - tau(1) * 2.0) == 0.0 &&
       norm_inf(commutator(tau(3), tau(1)) - tau(2) * 2.0) == 0.0;
  return ok && max_err <= 1e-12;
}

bool criterion4(double& max_err, std::string&) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    Genvector g = genvector(tetrad_from_lorentz(random_lorentz(rng), 1e-9));
    max_err = std::max(max_err, genvector_condition_residual(g.h));
    auto x = random_point(rng);
    FrameJets h = conjugated_genvector(g, random_g3_field(rng), x, 2);
    max_err = std::max(max_err, check_divergence(h));

    // second-order polynomial field, constant frame
    FieldExpr e;
    for (int term = 0; term < 4; ++term) {
      FieldTerm ft;
      ft.coeff = cplx(uniform(rng), uniform(rng));
      ft.blade = static_cast<Blade>(rng() % 16);
      int deg = static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d)
        ft.factors.push_back(ScalarFactor::mono(static_cast<int>(rng() % 4), 1));
      e.terms.push_back(ft);
    }
    Jet<Multivector> psi = eval(e, x, 2);
    FrameJets hc = constant_frame(g, x, 2);
    Multivector lhs = dirac_op(hc, dirac_op(hc, psi)).value();
    Multivector box;
    for (int mu = 0; mu < 4; ++mu) {
      MultiIndex m;
      m.a[mu] = 2;
      box += psi.at(m) * static_cast<double>(eta_sign(mu));
    }
    max_err = std::max(max_err, norm_inf(lhs - box));
  }
  return max_err <= 1e-12;
}

bool criterion5(double& max_err, std::string&) {
  Rng rng(5);
  Multivector x = chi();
  for (int t = 0; t < 200; ++t) {
    auto pt = random_point(rng);
    Potential<Multivector> a;
    bool lchi = t % 2 == 1;
    for (int mu = 0; mu < 4; ++mu) {
      FieldExpr e;
      for (int k = 1; k <= 3; ++k) {
        Multivector dir = lchi ? tau(k) * x : tau(k);
        FieldExpr part = FieldExpr::constant(dir) * random_profile(rng, 0.5);
        e = (k == 1) ? part : e + part;
      }
      if (lchi) e = e + FieldExpr::constant(theta() * x) * random_profile(rng, 0.5);
      a[mu] = eval(e, pt, 3);
    }
    max_err = std::max(max_err, norm_inf(conservation_residual<Multivector>(a)));
  }
  return max_err <= 1e-9;
}

bool criterion6(double& max_err, std::string&) {
  Rng rng(6);
  Multivector x = chi();
  for (int t = 0; t < 200; ++t) {
    auto pt = random_point(rng);
    LeptonField f = random_lepton_field(rng, x);
    LeptonJets c = eval(f, pt, 3);
    Jet<Multivector> u = eval_group(random_gchi_field(rng, x), pt, 3);
    Jet<Multivector> s = eval_group(random_g3_field(rng), pt, 3);
    max_err = std::max(max_err, covariance_check(c, LeptonGauge::Uchi, u));
    max_err = std::max(max_err, covariance_check(c, LeptonGauge::S3, s));
  }
  return max_err <= 1e-9;
}

bool criterion7(double& max_err, std::string& detail) {
  Rng rng(7);
  Multivector x = chi();
  double anti = 0.0, support = 0.0, equiv = 0.0;
  for (int t = 0; t < 200; ++t) {
    auto pt = random_point(rng);
    LeptonField f = random_lepton_field(rng, x);
    LeptonJets c = eval(f, pt, 2);
    anti = std::max(anti, antihermitian_identity(c));
    Theorem2Residuals r = theorem2_support(c.h, c.C);
    support = std::max(support, std::max(r.cmupi, r.pi4));
    equiv = std::max(equiv, r.cons_diff);
  }
  max_err = std::max(anti, std::max(support, equiv));
  std::ostringstream d;
  d << "anti " << anti << ", support " << support << ", equiv " << equiv;
  detail = d.str();
  return anti <= 1e-10 && support <= 1e-12 && equiv <= 1e-10;
}

bool criterion8(double& max_err, std::string&) {
  Rng rng(8);
  Multivector x = chi();
  double cov = 0.0, ids = 0.0, red = 0.0;
  for (int t = 0; t < 100; ++t) {
    auto pt = random_point(rng);
    QuarkField f = random_quark_field(rng, x);
    QuarkJets c = eval(f, pt, 2);
    Jet<Multivector> u = eval_group(random_gchi_field(rng, x), pt, 2);
    Jet<Multivector> s = eval_group(random_g3_field(rng), pt, 2);
    Jet<Mat3c> v = eval_mat_group(random_u3_field(rng), pt, 2);
    cov = std::max(cov, quark_covariance_check(c, QuarkGauge::Uchi, &u, nullptr));
    cov = std::max(cov, quark_covariance_check(c, QuarkGauge::V3, nullptr, &v));
    cov = std::max(cov, quark_covariance_check(c, QuarkGauge::S3, &s, nullptr));
    Theorem3Residuals r = theorem3_identities(c);
    ids = std::max(ids, std::max(r.tr_annihilation, r.pi0_commutator));

    QuarkField rf = f;
    rf.psi[1] = FieldExpr{};
    rf.psi[2] = FieldExpr{};
    for (int mu = 0; mu < 4; ++mu) rf.B[mu] = MatField{};
    QuarkJets rc = eval(rf, pt, 2);
    LeptonField lf;
    lf.psi = rf.psi[0];
    lf.A = rf.A;
    lf.C = rf.C;
    lf.h0 = rf.h0;
    lf.frame = rf.frame;
    lf.m = rf.m;
    lf.chi_elem = rf.chi_elem;
    LeptonJets lc = eval(lf, pt, 2);
    red = std::max(red, norm_inf(quark_dirac_lhs_component(rc, 0).value() -
                                 dirac_lhs(lc).value()));
  }
  max_err = std::max(cov, std::max(ids, red));
  return cov <= 1e-9 && ids <= 1e-12 && red <= 1e-12;
}

bool criterion9(double& max_err, std::string&) {
  Rng rng(9);
  Multivector x = chi();
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    auto pt = random_point(rng);
    LeptonField f = random_lepton_field(rng, x);
    LeptonJets c = eval(f, pt, 1);
    FrameJets ja = current_A(c);
    FrameJets jc = current_C(c.h);
    QuarkField qf = random_quark_field(rng, x);
    QuarkJets qc = eval(qf, pt, 1);
    QuarkCurrents cur = currents(qc);
    for (int mu = 0; mu < 4; ++mu) {
      ok = ok && in_Lchi(ja[mu].value(), x, 1e-12);
      ok = ok && in_L3(jc[mu].value(), 1e-12);
      double herm = norm_inf(cur.B[mu].value().adjoint() + cur.B[mu].value());
      max_err = std::max(max_err, herm);
    }
  }
  return ok && max_err <= 1e-12;
}

bool criterion10(double& max_err, std::string& detail) {
  Rng rng(10);
  Multivector x = chi();
  LeptonField f = random_lepton_field(rng, x);
  GroupField gauge = random_gchi_field(rng, x);
  soften_wavenumbers(f, gauge, 0.35);
  auto rows = convergence_study(f, gauge, 0.1, 9, 3);
  std::ostringstream d;
  bool ok = true;
  for (const auto& r : rows) {
    if (r.order == 0.0) continue;
    if (r.order < 1.8 || r.order > 2.2) ok = false;
    d << r.equation << "@" << r.h << ":" << r.order << " ";
    max_err = std::max(max_err, std::abs(r.order - 2.0));
  }
  detail = d.str();
  return ok;
}

bool criterion11(double&, std::string& detail) {
#ifdef CLGAUGE_CLI_PATH
  const std::string cli = CLGAUGE_CLI_PATH;
  const std::string r1 = "acc_report_1.json", r2 = "acc_report_2.json";
  auto run = [&](const std::string& out) {
    std::string cmd = cli + " verify all --seed 7 --trials 40 --report " + out;
    return std::system(cmd.c_str());
  };
  int rc1 = run(r1), rc2 = run(r2);
  if (rc1 != 0 || rc2 != 0) {
    detail = "cli exited nonzero";
    return false;
  }
  std::ifstream f1(r1, std::ios::binary), f2(r2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  std::remove(r1.c_str());
  std::remove(r2.c_str());
  if (s1.str().empty() || s1.str() != s2.str()) {
    detail = "reports differ";
    return false;
  }
  detail = "reports byte-identical";
  return true;
#else
  detail = "cli path not configured";
  return false;
#endif
}

}  // namespace

int main() {
  timed(1, "algebra axioms", 2.0, criterion1);
  timed(2, "constants", 0.0, criterion2);
  timed(3, "lie layer", 0.0, criterion3);
  timed(4, "frames", 0.0, criterion4);
  timed(5, "yang-mills conservation", 0.0, criterion5);
  timed(6, "lepton covariance", 20.0, criterion6);
  timed(7, "theorem-2 machinery", 0.0, criterion7);
  timed(8, "theorem-3 machinery", 30.0, criterion8);
  timed(9, "current typing", 0.0, criterion9);
  timed(10, "lattice convergence", 60.0, criterion10);
  timed(11, "determinism", 0.0, criterion11);
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
