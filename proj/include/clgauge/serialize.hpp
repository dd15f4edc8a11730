#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "clgauge/field.hpp"
#include "clgauge/lepton.hpp"

namespace clg {

// JSON form of field configurations, so experiments are reproducible
// artifacts.  Schema:
//   term   = {coeff: [re,im], blade: "e01", factors: [factor...]}
//   factor = {mono: [mu, n]} | {sin: {k: [4 reals], phase: r}} | {cos: {...}}
//   file   = {fields: {name: [term...]}, groups: {name: group}}
//   group  = {factors: [{direction: [term...], profile: [term...]}], chi: bool}

using json = nlohmann::json;

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& pointer, const std::string& what)
      : std::runtime_error(what + " (at " + pointer + ")") {}
};

inline json to_json(const FieldExpr& e) {
  json terms = json::array();
  for (const auto& t : e.terms) {
    json jt;
    jt["coeff"] = {t.coeff.real(), t.coeff.imag()};
    jt["blade"] = blade_name(t.blade);
    json fs = json::array();
    for (const auto& f : t.factors) {
      switch (f.kind) {
        case ScalarFactor::Mono:
          fs.push_back({{"mono", {f.axis, f.power}}});
          break;
        case ScalarFactor::Sin:
          fs.push_back({{"sin", {{"k", f.k}, {"phase", f.phase}}}});
          break;
        case ScalarFactor::Cos:
          fs.push_back({{"cos", {{"k", f.k}, {"phase", f.phase}}}});
          break;
      }
    }
    jt["factors"] = fs;
    terms.push_back(jt);
  }
  return terms;
}

inline FieldExpr expr_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ConfigError(ptr, "expected an array of terms");
  FieldExpr e;
  for (std::size_t ti = 0; ti < j.size(); ++ti) {
    const std::string tptr = ptr + "/" + std::to_string(ti);
    const json& jt = j[ti];
    if (!jt.is_object()) throw ConfigError(tptr, "term must be an object");
    FieldTerm t;
    try {
      auto c = jt.at("coeff");
      t.coeff = cplx(c.at(0).get<double>(), c.at(1).get<double>());
    } catch (const json::exception&) {
      throw ConfigError(tptr + "/coeff", "coeff must be [re, im]");
    }
    std::string bname = jt.value("blade", "e");
    if (!parse_blade(bname, t.blade))
      throw ConfigError(tptr + "/blade", "unknown blade name '" + bname + "'");
    const json& fs = jt.value("factors", json::array());
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const std::string fptr = tptr + "/factors/" + std::to_string(fi);
      const json& jf = fs[fi];
      if (jf.contains("mono")) {
        auto m = jf["mono"];
        if (!m.is_array() || m.size() != 2)
          throw ConfigError(fptr + "/mono", "mono must be [axis, power]");
        int axis = m[0].get<int>(), power = m[1].get<int>();
        if (axis < 0 || axis > 3 || power < 0)
          throw ConfigError(fptr + "/mono", "axis in 0..3, power >= 0");
        t.factors.push_back(ScalarFactor::mono(axis, power));
      } else if (jf.contains("sin") || jf.contains("cos")) {
        bool is_sin = jf.contains("sin");
        const json& w = is_sin ? jf["sin"] : jf["cos"];
        std::array<double, 4> k{};
        try {
          for (int ax = 0; ax < 4; ++ax) k[static_cast<std::size_t>(ax)] = w.at("k").at(ax).get<double>();
        } catch (const json::exception&) {
          throw ConfigError(fptr, "k must be an array of 4 reals");
        }
        double phase = w.value("phase", 0.0);
        t.factors.push_back(is_sin ? ScalarFactor::sinus(k, phase)
                                   : ScalarFactor::cosin(k, phase));
      } else {
        throw ConfigError(fptr, "factor must be one of mono/sin/cos");
      }
    }
    e.terms.push_back(std::move(t));
  }
  return e;
}

inline json to_json(const GroupField& g) {
  json out;
  json fs = json::array();
  for (const auto& f : g.factors) {
    fs.push_back({{"direction", to_json(FieldExpr::constant(f.direction))},
                  {"profile", to_json(f.profile)}});
  }
  out["factors"] = fs;
  out["chi"] = g.wrap_chi;
  return out;
}

inline GroupField group_from_json(const json& j, const std::string& ptr,
                                  const Multivector& chi_elem) {
  GroupField g;
  const json& fs = j.value("factors", json::array());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string fptr = ptr + "/factors/" + std::to_string(i);
    FieldExpr dir = expr_from_json(fs[i].value("direction", json::array()),
                                   fptr + "/direction");
    Multivector d = eval(dir, {0, 0, 0, 0}, 0).value();
    if (norm_inf(d * d + unit()) > 1e-8)
      throw ConfigError(fptr + "/direction", "direction must square to -e");
    g.factors.push_back(
        {d, expr_from_json(fs[i].value("profile", json::array()), fptr + "/profile")});
  }
  g.wrap_chi = j.value("chi", false);
  g.chi_elem = chi_elem;
  return g;
}

struct NamedConfig {
  std::map<std::string, FieldExpr> fields;
  std::map<std::string, GroupField> groups;
};

inline NamedConfig config_from_json(const json& j, const Multivector& chi_elem) {
  NamedConfig c;
  if (!j.is_object()) throw ConfigError("", "top level must be an object");
  if (j.contains("fields")) {
    for (const auto& [name, val] : j["fields"].items())
      c.fields[name] = expr_from_json(val, "/fields/" + name);
  }
  if (j.contains("groups")) {
    for (const auto& [name, val] : j["groups"].items())
      c.groups[name] = group_from_json(val, "/groups/" + name, chi_elem);
  }
  return c;
}

}  // namespace clg
