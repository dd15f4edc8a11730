#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "clgauge/jet.hpp"
#include "clgauge/multivector.hpp"

namespace clg {

// Closed-form field descriptions: sums of  coeff * blade * (scalar factors),
// each factor a monomial (x^mu)^n or sin/cos(k.x + phase).  The class is
// closed under +, * and partial derivatives, and evaluates to exact jets.

struct ScalarFactor {
  enum Kind { Mono, Sin, Cos };
  Kind kind = Mono;
  int axis = 0;                   // Mono
  int power = 1;                  // Mono
  std::array<double, 4> k{};      // Sin/Cos covector
  double phase = 0.0;             // Sin/Cos

  static ScalarFactor mono(int axis, int power) {
    ScalarFactor f;
    f.kind = Mono;
    f.axis = axis;
    f.power = power;
    return f;
  }
  static ScalarFactor sinus(const std::array<double, 4>& k, double phase) {
    ScalarFactor f;
    f.kind = Sin;
    f.k = k;
    f.phase = phase;
    return f;
  }
  static ScalarFactor cosin(const std::array<double, 4>& k, double phase) {
    ScalarFactor f;
    f.kind = Cos;
    f.k = k;
    f.phase = phase;
    return f;
  }
};

struct FieldTerm {
  cplx coeff = 1.0;
  Blade blade = 0;
  std::vector<ScalarFactor> factors;
};

struct FieldExpr {
  std::vector<FieldTerm> terms;

  static FieldExpr constant(const Multivector& u) {
    FieldExpr e;
    for (int b = 0; b < 16; ++b)
      if (u.c[b] != 0.0) e.terms.push_back({u.c[b], static_cast<Blade>(b), {}});
    return e;
  }
  static FieldExpr coordinate(int mu, Blade b = 0, cplx coeff = 1.0) {
    return {{{coeff, b, {ScalarFactor::mono(mu, 1)}}}};
  }

  friend FieldExpr operator+(FieldExpr a, const FieldExpr& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
  friend FieldExpr operator*(FieldExpr a, cplx z) {
    for (auto& t : a.terms) t.coeff *= z;
    return a;
  }
  friend FieldExpr operator-(const FieldExpr& a, const FieldExpr& b) {
    return a + b * cplx(-1.0);
  }
  friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
    FieldExpr r;
    for (const auto& ta : a.terms)
      for (const auto& tb : b.terms) {
        auto p = blade_mul(ta.blade, tb.blade);
        FieldTerm t;
        t.coeff = ta.coeff * tb.coeff * static_cast<double>(p.sign);
        t.blade = p.blade;
        t.factors = ta.factors;
        t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
        r.terms.push_back(std::move(t));
      }
    return r;
  }
};

inline FieldExpr expr_partial(const FieldExpr& e, int mu) {
  FieldExpr r;
  for (const auto& t : e.terms) {
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const ScalarFactor& f = t.factors[i];
      FieldTerm d = t;
      switch (f.kind) {
        case ScalarFactor::Mono:
          if (f.axis != mu || f.power == 0) continue;
          d.coeff *= static_cast<double>(f.power);
          if (f.power == 1)
            d.factors.erase(d.factors.begin() + static_cast<std::ptrdiff_t>(i));
          else
            d.factors[i] = ScalarFactor::mono(f.axis, f.power - 1);
          break;
        case ScalarFactor::Sin:
          if (f.k[mu] == 0.0) continue;
          d.coeff *= f.k[mu];
          d.factors[i] = ScalarFactor::cosin(f.k, f.phase);
          break;
        case ScalarFactor::Cos:
          if (f.k[mu] == 0.0) continue;
          d.coeff *= -f.k[mu];
          d.factors[i] = ScalarFactor::sinus(f.k, f.phase);
          break;
      }
      r.terms.push_back(std::move(d));
    }
  }
  return r;
}

// --- scalar jets ------------------------------------------------------------

using ScalarJet = std::vector<double>;  // indexed like Jet tables

namespace detail {

inline double falling(int n, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= n - i;
  return r;
}

inline ScalarJet factor_jet(const ScalarFactor& f, const std::array<double, 4>& x,
                            int order) {
  ScalarJet out(static_cast<std::size_t>(jet_size(order)), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const MultiIndex& m = mi_at(static_cast<int>(i));
    switch (f.kind) {
      case ScalarFactor::Mono: {
        bool pure = true;
        for (int ax = 0; ax < 4; ++ax)
          if (ax != f.axis && m.a[ax] != 0) pure = false;
        int j = m.a[f.axis];
        if (!pure || j > f.power) break;
        out[i] = falling(f.power, j) * std::pow(x[f.axis], f.power - j);
        break;
      }
      case ScalarFactor::Sin:
      case ScalarFactor::Cos: {
        double arg = f.phase;
        for (int ax = 0; ax < 4; ++ax) arg += f.k[ax] * x[ax];
        double amp = 1.0;
        for (int ax = 0; ax < 4; ++ax)
          for (int j = 0; j < m.a[ax]; ++j) amp *= f.k[ax];
        double shift = m.order() * std::numbers::pi / 2.0;
        out[i] = amp * (f.kind == ScalarFactor::Sin ? std::sin(arg + shift)
                                                    : std::cos(arg + shift));
        break;
      }
    }
  }
  return out;
}

inline ScalarJet scalar_mul(const ScalarJet& a, const ScalarJet& b, int order) {
  ScalarJet r(static_cast<std::size_t>(jet_size(order)), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const MultiIndex& al = mi_at(static_cast<int>(i));
    double acc = 0.0;
    MultiIndex be;
    for (be.a[0] = 0; be.a[0] <= al.a[0]; ++be.a[0])
      for (be.a[1] = 0; be.a[1] <= al.a[1]; ++be.a[1])
        for (be.a[2] = 0; be.a[2] <= al.a[2]; ++be.a[2])
          for (be.a[3] = 0; be.a[3] <= al.a[3]; ++be.a[3]) {
            MultiIndex rest{{al.a[0] - be.a[0], al.a[1] - be.a[1],
                             al.a[2] - be.a[2], al.a[3] - be.a[3]}};
            acc += mi_binom(al, be) * a[static_cast<std::size_t>(mi_index(be))] *
                   b[static_cast<std::size_t>(mi_index(rest))];
          }
    r[i] = acc;
  }
  return r;
}

}  // namespace detail

inline Jet<Multivector> eval(const FieldExpr& e, const std::array<double, 4>& x,
                             int order) {
  Jet<Multivector> j(x, order);
  for (const auto& t : e.terms) {
    ScalarJet s(static_cast<std::size_t>(jet_size(order)), 0.0);
    s[0] = 1.0;
    for (const auto& f : t.factors)
      s = detail::scalar_mul(s, detail::factor_jet(f, x, order), order);
    for (std::size_t i = 0; i < j.d.size(); ++i) j.d[i].c[t.blade] += t.coeff * s[i];
  }
  return j;
}

// Evaluates the scalar (grade-0, real) part of an expression as a scalar jet.
inline ScalarJet eval_scalar(const FieldExpr& e, const std::array<double, 4>& x,
                             int order) {
  Jet<Multivector> j = eval(e, x, order);
  ScalarJet s(j.d.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = j.d[i].c[0].real();
  return s;
}

// Jets of cos f and sin f for a scalar jet f, by the recurrence
// D_alpha cos f = -D_{alpha'}((sin f) d_mu f)  (and symmetrically),
// filling the tables in order of |alpha|.
inline void sincos_jet(const ScalarJet& f, int order, ScalarJet& c, ScalarJet& s) {
  const std::size_t n = static_cast<std::size_t>(jet_size(order));
  c.assign(n, 0.0);
  s.assign(n, 0.0);
  c[0] = std::cos(f[0]);
  s[0] = std::sin(f[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const MultiIndex& al = mi_at(static_cast<int>(i));
    int mu = 0;
    while (al.a[mu] == 0) ++mu;
    MultiIndex ap = al;
    ap.a[mu] -= 1;
    double dc = 0.0, ds = 0.0;
    MultiIndex be;
    for (be.a[0] = 0; be.a[0] <= ap.a[0]; ++be.a[0])
      for (be.a[1] = 0; be.a[1] <= ap.a[1]; ++be.a[1])
        for (be.a[2] = 0; be.a[2] <= ap.a[2]; ++be.a[2])
          for (be.a[3] = 0; be.a[3] <= ap.a[3]; ++be.a[3]) {
            MultiIndex rest{{ap.a[0] - be.a[0], ap.a[1] - be.a[1],
                             ap.a[2] - be.a[2], ap.a[3] - be.a[3]}};
            rest.a[mu] += 1;  // entry of d_mu f
            double w = mi_binom(ap, be) * f[static_cast<std::size_t>(mi_index(rest))];
            dc -= s[static_cast<std::size_t>(mi_index(be))] * w;
            ds += c[static_cast<std::size_t>(mi_index(be))] * w;
          }
    c[i] = dc;
    s[i] = ds;
  }
}

// --- group-valued fields ----------------------------------------------------

// One-parameter factor exp(f(x) n) with a fixed direction n, n^2 = -e
// (a unit L3 direction or theta); jets are exact via the chain rule.
struct GroupFactor {
  Multivector direction;
  FieldExpr profile;
};

// Product of one-parameter factors, optionally wrapped into G(chi):
// S -> e + (S - e) chi.  Factors with different directions restore
// generic sampling of the groups.
struct GroupField {
  std::vector<GroupFactor> factors;
  bool wrap_chi = false;
  Multivector chi_elem;
};

inline Jet<Multivector> eval_group(const GroupField& g, const std::array<double, 4>& x,
                                   int order) {
  Jet<Multivector> prod = jet_const(unit(), x, order);
  for (const auto& fac : g.factors) {
    ScalarJet f = eval_scalar(fac.profile, x, order);
    ScalarJet c, s;
    sincos_jet(f, order, c, s);
    Jet<Multivector> jf(x, order);
    for (std::size_t i = 0; i < jf.d.size(); ++i)
      jf.d[i] = unit() * c[i] + fac.direction * s[i];
    prod = jet_mul(prod, jf);
  }
  if (g.wrap_chi) {
    Jet<Multivector> wrapped = jet_const(unit(), x, order);
    Jet<Multivector> shifted = prod - jet_const(unit(), x, order);
    wrapped = wrapped + jet_mul(shifted, jet_const(g.chi_elem, x, order));
    return wrapped;
  }
  return prod;
}

// S(x)^{-1} = S(x)^dagger, entrywise on the derivative table.
inline Jet<Multivector> jet_dagger(const Jet<Multivector>& j) {
  return jet_map(j, [](const Multivector& u) { return dagger(u); });
}

inline Jet<Multivector> jet_conj(const Jet<Multivector>& j) {
  return jet_map(j, [](const Multivector& u) { return u.conj(); });
}

inline Jet<Multivector> jet_grade(const Jet<Multivector>& j, int k) {
  return jet_map(j, [k](const Multivector& u) { return u.grade(k); });
}

}  // namespace clg
