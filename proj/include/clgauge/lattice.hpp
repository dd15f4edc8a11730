#pragma once

#include <functional>
#include <string>
#include <vector>

#include "clgauge/lepton.hpp"

namespace clg {

// Uniform 4D grid; second-order central differences on interior nodes.
// This module is a cross-check of the jet-exact residuals, not a solver.

struct Grid {
  std::array<double, 4> origin{};
  double h = 0.1;
  int n = 9;  // points per axis

  std::size_t size() const {
    return static_cast<std::size_t>(n) * n * n * n;
  }
  std::size_t index(int i0, int i1, int i2, int i3) const {
    return static_cast<std::size_t>(((i0 * n + i1) * n + i2) * n + i3);
  }
  std::array<double, 4> point(int i0, int i1, int i2, int i3) const {
    return {origin[0] + h * i0, origin[1] + h * i1, origin[2] + h * i2,
            origin[3] + h * i3};
  }
};

template <class V>
using GridField = std::vector<V>;

template <class V, class F>
GridField<V> sample(const Grid& g, F&& f) {
  GridField<V> out(g.size());
  for (int i0 = 0; i0 < g.n; ++i0)
    for (int i1 = 0; i1 < g.n; ++i1)
      for (int i2 = 0; i2 < g.n; ++i2)
        for (int i3 = 0; i3 < g.n; ++i3)
          out[g.index(i0, i1, i2, i3)] = f(g.point(i0, i1, i2, i3));
  return out;
}

inline GridField<Multivector> sample_expr(const Grid& g, const FieldExpr& e) {
  return sample<Multivector>(g, [&](const std::array<double, 4>& x) {
    return eval(e, x, 0).value();
  });
}

// (f(x + h e_mu) - f(x - h e_mu)) / 2h on interior nodes; boundary entries
// are left zero and must not be read.
template <class V>
GridField<V> central_diff(const Grid& g, const GridField<V>& f, int mu) {
  GridField<V> out(g.size());
  std::array<int, 4> i{};
  for (i[0] = 0; i[0] < g.n; ++i[0])
    for (i[1] = 0; i[1] < g.n; ++i[1])
      for (i[2] = 0; i[2] < g.n; ++i[2])
        for (i[3] = 0; i[3] < g.n; ++i[3]) {
          if (i[mu] == 0 || i[mu] == g.n - 1) continue;
          auto up = i, dn = i;
          up[mu] += 1;
          dn[mu] -= 1;
          out[g.index(i[0], i[1], i[2], i[3])] =
              (f[g.index(up[0], up[1], up[2], up[3])] -
               f[g.index(dn[0], dn[1], dn[2], dn[3])]) *
              (1.0 / (2.0 * g.h));
        }
  return out;
}

struct LatticeErrors {
  double dirac = 0.0;       // discrete vs jet-exact Dirac left side
  double yang_mills = 0.0;  // discrete vs jet-exact YM divergence (A potential)
  double gauge = 0.0;       // discrete transform residual vs exact covariance
};

namespace detail {

struct SampledLepton {
  GridField<Multivector> psi;
  std::array<GridField<Multivector>, 4> A, C, h;
};

inline SampledLepton sample_lepton(const Grid& g, const LeptonField& f) {
  SampledLepton s;
  s.psi = sample_expr(g, f.psi);
  for (int mu = 0; mu < 4; ++mu) {
    s.A[mu] = sample_expr(g, f.A[mu]);
    s.C[mu] = sample_expr(g, f.C[mu]);
    s.h[mu] = sample<Multivector>(g, [&](const std::array<double, 4>& x) {
      if (!f.frame) return f.h0.h[mu];
      Multivector sv = eval_group(*f.frame, x, 0).value();
      return dagger(sv) * f.h0.h[mu] * sv;
    });
  }
  return s;
}

}  // namespace detail

// Compares central-difference residuals of the Dirac and Yang-Mills left
// sides, and of the gauge-transformed Dirac residual, against their
// jet-exact values; returns max-norm errors over valid interior nodes.
inline LatticeErrors residual_on_grid(const LeptonField& f, const GroupField& gauge,
                                      const Grid& g) {
  LatticeErrors err;
  detail::SampledLepton s = detail::sample_lepton(g, f);

  std::array<GridField<Multivector>, 4> dpsi;
  for (int mu = 0; mu < 4; ++mu) dpsi[mu] = central_diff(g, s.psi, mu);

  GridField<Multivector> uvals = sample<Multivector>(
      g, [&](const std::array<double, 4>& x) { return eval_group(gauge, x, 0).value(); });

  // discretely transformed configuration: psi' = psi U, A' = U^-1 A U - U^-1 D U
  std::array<GridField<Multivector>, 4> du;
  for (int mu = 0; mu < 4; ++mu) du[mu] = central_diff(g, uvals, mu);
  GridField<Multivector> psi_t(g.size());
  std::array<GridField<Multivector>, 4> A_t;
  for (int mu = 0; mu < 4; ++mu) A_t[mu].resize(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    psi_t[p] = s.psi[p] * uvals[p];
    Multivector uinv = dagger(uvals[p]);
    for (int mu = 0; mu < 4; ++mu)
      A_t[mu][p] = uinv * s.A[mu][p] * uvals[p] - uinv * du[mu][p];
  }
  std::array<GridField<Multivector>, 4> dpsi_t;
  for (int mu = 0; mu < 4; ++mu) dpsi_t[mu] = central_diff(g, psi_t, mu);

  // Yang-Mills: discrete strength, then discrete divergence (margin 2)
  std::array<std::array<GridField<Multivector>, 4>, 4> F;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      GridField<Multivector> dmuAnu = central_diff(g, s.A[nu], mu);
      GridField<Multivector> dnuAmu = central_diff(g, s.A[mu], nu);
      F[mu][nu].resize(g.size());
      for (std::size_t p = 0; p < g.size(); ++p)
        F[mu][nu][p] = dmuAnu[p] - dnuAmu[p] - commutator(s.A[mu][p], s.A[nu][p]);
    }
  std::array<std::array<GridField<Multivector>, 4>, 4> dF;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) dF[mu][nu] = central_diff(g, F[mu][nu], mu);

  std::array<int, 4> i{};
  for (i[0] = 1; i[0] < g.n - 1; ++i[0])
    for (i[1] = 1; i[1] < g.n - 1; ++i[1])
      for (i[2] = 1; i[2] < g.n - 1; ++i[2])
        for (i[3] = 1; i[3] < g.n - 1; ++i[3]) {
          std::size_t p = g.index(i[0], i[1], i[2], i[3]);
          auto x = g.point(i[0], i[1], i[2], i[3]);

          Multivector disc;
          for (int mu = 0; mu < 4; ++mu)
            disc += s.h[mu][p] *
                    (dpsi[mu][p] + s.psi[p] * s.A[mu][p] - s.C[mu][p] * s.psi[p]);
          disc += s.psi[p] * cplx(0.0, f.m);
          LeptonJets cj = eval(f, x, 1);
          Multivector exact = dirac_lhs(cj).value();
          err.dirac = std::max(err.dirac, norm_inf(disc - exact));

          // transformed Dirac residual must match (exact residual) * U
          Multivector disc_t;
          for (int mu = 0; mu < 4; ++mu)
            disc_t += s.h[mu][p] *
                      (dpsi_t[mu][p] + psi_t[p] * A_t[mu][p] - s.C[mu][p] * psi_t[p]);
          disc_t += psi_t[p] * cplx(0.0, f.m);
          err.gauge = std::max(err.gauge, norm_inf(disc_t - exact * uvals[p]));

          bool inner2 = true;
          for (int ax = 0; ax < 4; ++ax)
            if (i[ax] < 2 || i[ax] > g.n - 3) inner2 = false;
          if (inner2) {
            LeptonJets cj2 = eval(f, x, 2);
            auto fx = curvature<Multivector>(cj2.A);
            auto div = divergence_lhs<Multivector>(cj2.A, fx);
            for (int nu = 0; nu < 4; ++nu) {
              Multivector dnum;
              for (int mu = 0; mu < 4; ++mu) {
                double raise = static_cast<double>(eta_sign(mu) * eta_sign(nu));
                dnum += (dF[mu][nu][p] - commutator(s.A[mu][p], F[mu][nu][p])) * raise;
              }
              err.yang_mills =
                  std::max(err.yang_mills, norm_inf(dnum - div[nu].value()));
            }
          }
        }
  return err;
}

// Scales the wavenumbers of every sin/cos factor; used to push sampled
// configurations into the asymptotic range of the h^2 stencil at coarse h.
inline void soften_wavenumbers(FieldExpr& e, double s) {
  for (auto& t : e.terms)
    for (auto& f : t.factors)
      if (f.kind != ScalarFactor::Mono)
        for (auto& k : f.k) k *= s;
}

inline void soften_wavenumbers(LeptonField& f, GroupField& gauge, double s) {
  soften_wavenumbers(f.psi, s);
  for (int mu = 0; mu < 4; ++mu) {
    soften_wavenumbers(f.A[mu], s);
    soften_wavenumbers(f.C[mu], s);
  }
  if (f.frame)
    for (auto& fac : f.frame->factors) soften_wavenumbers(fac.profile, s);
  for (auto& fac : gauge.factors) soften_wavenumbers(fac.profile, s);
}

struct ConvergenceRow {
  std::string equation;
  double h;
  double error;
  double order;  // Richardson ratio vs the previous resolution; 0 for the first
};

inline std::vector<ConvergenceRow> convergence_study(const LeptonField& f,
                                                     const GroupField& gauge,
                                                     double h0, int n = 9,
                                                     int levels = 3) {
  std::vector<ConvergenceRow> rows;
  std::vector<LatticeErrors> errs;
  for (int lvl = 0; lvl < levels; ++lvl) {
    Grid g;
    g.h = h0 / std::pow(2.0, lvl);
    g.n = n;
    for (int ax = 0; ax < 4; ++ax) g.origin[ax] = -g.h * (n - 1) / 2.0;
    errs.push_back(residual_on_grid(f, gauge, g));
  }
  auto push = [&](const std::string& eq, auto pick) {
    for (int lvl = 0; lvl < levels; ++lvl) {
      double e = pick(errs[static_cast<std::size_t>(lvl)]);
      double order =
          lvl == 0 ? 0.0
                   : std::log2(pick(errs[static_cast<std::size_t>(lvl - 1)]) / e);
      rows.push_back({eq, h0 / std::pow(2.0, lvl), e, order});
    }
  };
  push("dirac", [](const LatticeErrors& e) { return e.dirac; });
  push("yang_mills", [](const LatticeErrors& e) { return e.yang_mills; });
  push("gauge_covariance", [](const LatticeErrors& e) { return e.gauge; });
  return rows;
}

}  // namespace clg
