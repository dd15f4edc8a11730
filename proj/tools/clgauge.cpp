// clgauge: verification front end for the Clifford-algebra gauge library.
//
//   clgauge verify algebra|lie|frames|ym|lepton|quark|all [flags]
//   clgauge table            Cayley table as CSV
//   clgauge convergence      grid-refinement study as CSV
//   clgauge demo             residual norms for a sample configuration
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage/config error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clgauge/lattice.hpp"
#include "clgauge/serialize.hpp"
#include "clgauge/suites.hpp"

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kVersion = "1.0.0";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* chi_name(clg::ChiKind k) {
  switch (k) {
    case clg::ChiKind::HalfMinus: return "minus";
    case clg::ChiKind::HalfPlus: return "plus";
    case clg::ChiKind::Unit: return "unit";
  }
  return "minus";
}

struct SuiteResult {
  std::string name;
  std::vector<clg::CheckRecord> checks;
};

std::string report_json(const clg::RunConfig& cfg,
                        const std::vector<SuiteResult>& suites, bool all_pass) {
  clg::json r;
  r["schema"] = kSchemaVersion;
  r["version"] = kVersion;
  r["seed"] = cfg.seed;
  r["trials"] = cfg.trials;
  r["order"] = cfg.order;
  r["chi"] = chi_name(cfg.chi_kind);
  r["pass"] = all_pass;
  r["suites"] = clg::json::array();
  for (const auto& s : suites) {
    clg::json js;
    js["name"] = s.name;
    bool sp = true;
    js["checks"] = clg::json::array();
    for (const auto& c : s.checks) {
      sp = sp && c.pass;
      js["checks"].push_back({{"id", c.id},
                              {"anchor", c.anchor},
                              {"trials", c.trials},
                              {"max_err", fmt_double(c.max_err)},
                              {"tol", fmt_double(c.tol)},
                              {"pass", c.pass}});
    }
    js["pass"] = sp;
    r["suites"].push_back(js);
  }
  return r.dump(2) + "\n";
}

std::string report_csv(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  out << "suite,check,anchor,trials,max_err,tol,pass\n";
  for (const auto& s : suites)
    for (const auto& c : s.checks)
      out << s.name << ',' << c.id << ",\"" << c.anchor << "\"," << c.trials << ','
          << fmt_double(c.max_err) << ',' << fmt_double(c.tol) << ','
          << (c.pass ? "true" : "false") << '\n';
  return out.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open report path '" + path + "'");
  f << text;
}

// deterministic sample configuration used by `demo` and `convergence`
clg::LeptonField sample_field(std::uint64_t seed, const clg::Multivector& x) {
  clg::Rng rng(seed);
  clg::LeptonField f = clg::random_lepton_field(rng, x);
  return f;
}

clg::GroupField sample_gauge(std::uint64_t seed, const clg::Multivector& x) {
  clg::Rng rng(seed + 1);
  return clg::random_gchi_field(rng, x);
}

int run_verify(const std::string& which, const clg::RunConfig& cfg, bool tol_override,
               const std::string& report_path, const std::string& format) {
  std::vector<SuiteResult> results;
  std::vector<std::string> names =
      which == "all" ? clg::all_suites() : std::vector<std::string>{which};
  bool all_pass = true;
  for (const auto& n : names) {
    SuiteResult sr;
    sr.name = n;
    sr.checks = clg::run_suite(n, cfg);
    if (tol_override) {
      for (auto& c : sr.checks) {
        c.tol = cfg.tol;
        c.pass = c.max_err <= c.tol;
      }
    }
    for (const auto& c : sr.checks) all_pass = all_pass && c.pass;
    results.push_back(std::move(sr));
  }
  emit(format == "csv" ? report_csv(results) : report_json(cfg, results, all_pass),
       report_path);
  return all_pass ? 0 : 1;
}

int run_table(const std::string& report_path) {
  std::ostringstream out;
  out << "row,col,sign,result\n";
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      out << clg::blade_name(static_cast<clg::Blade>(a)) << ','
          << clg::blade_name(static_cast<clg::Blade>(b)) << ','
          << static_cast<int>(clg::kCayley.sign[a][b]) << ','
          << clg::blade_name(clg::kCayley.blade[a][b]) << '\n';
  emit(out.str(), report_path);
  return 0;
}

int run_convergence(double h0, int levels, std::uint64_t seed,
                    const std::string& report_path, const clg::Multivector& x) {
  clg::LeptonField f = sample_field(seed, x);
  clg::GroupField g = sample_gauge(seed, x);
  clg::soften_wavenumbers(f, g, 0.5);
  auto rows = clg::convergence_study(f, g, h0, 9, levels);
  std::ostringstream out;
  out << "equation,h,error,order\n";
  for (const auto& r : rows)
    out << r.equation << ',' << fmt_double(r.h) << ',' << fmt_double(r.error) << ','
        << fmt_double(r.order) << '\n';
  emit(out.str(), report_path);
  return 0;
}

int run_demo(const std::string& config_path, std::uint64_t seed,
             const clg::Multivector& x) {
  clg::LeptonField f = sample_field(seed, x);
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot read config file '" + config_path + "'");
    clg::json j;
    try {
      in >> j;
    } catch (const clg::json::exception& e) {
      throw clg::ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    clg::NamedConfig nc = clg::config_from_json(j, x);
    if (nc.fields.count("psi")) f.psi = nc.fields.at("psi");
    for (int mu = 0; mu < 4; ++mu) {
      std::string an = "A" + std::to_string(mu), cn = "C" + std::to_string(mu);
      if (nc.fields.count(an)) f.A[mu] = nc.fields.at(an);
      if (nc.fields.count(cn)) f.C[mu] = nc.fields.at(cn);
    }
    if (nc.groups.count("frame")) f.frame = nc.groups.at("frame");
  }
  std::array<double, 4> pt{0.2, -0.1, 0.3, 0.05};
  clg::LeptonJets c = clg::eval(f, pt, 3);
  std::cout << "dirac residual        " << fmt_double(clg::norm_inf(clg::dirac_lhs(c).value()))
            << "\n";
  auto ra = clg::ym_residual_A(c);
  auto rc = clg::ym_residual_C(c);
  double na = 0.0, nc2 = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    na = std::max(na, clg::norm_inf(ra[nu].value()));
    nc2 = std::max(nc2, clg::norm_inf(rc[nu].value()));
  }
  std::cout << "yang-mills residual A " << fmt_double(na) << "\n";
  std::cout << "yang-mills residual C " << fmt_double(nc2) << "\n";
  std::cout << "antihermitian identity " << fmt_double(clg::antihermitian_identity(c))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-algebra gauge field verification tool"};
  app.require_subcommand(1);

  clg::RunConfig cfg;
  cfg.seed = 0;
  std::string report_path, format = "json", config_path, chi_opt = "minus";
  double h0 = 0.1;
  int levels = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "trials per check")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "rng seed");
    sub->add_option("--order", cfg.order, "jet order")->check(CLI::Range(0, 3));
    sub->add_option("--chi", chi_opt, "idempotent choice")
        ->check(CLI::IsMember({"minus", "plus", "unit"}));
    sub->add_option("--config", config_path, "field configuration JSON");
    sub->add_option("--report", report_path, "report output path");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "suite name or 'all'")
      ->check(CLI::IsMember({"algebra", "lie", "frames", "ym", "lepton", "quark", "all"}));
  add_common(verify);
  auto* tol_opt = verify->add_option("--tol", cfg.tol, "tolerance override");

  auto* table = app.add_subcommand("table", "dump the Cayley table as CSV");
  table->add_option("--report", report_path, "output path");

  auto* conv = app.add_subcommand("convergence", "grid refinement study");
  conv->set_help_flag("--help", "print help");  // frees -h for the spacing flag
  conv->add_option("--h", h0, "coarsest grid spacing")->check(CLI::PositiveNumber);
  conv->add_option("--levels", levels, "number of refinement levels")
      ->check(CLI::Range(1, 5));
  conv->add_option("--seed", cfg.seed, "rng seed");
  conv->add_option("--chi", chi_opt, "idempotent choice")
      ->check(CLI::IsMember({"minus", "plus", "unit"}));
  conv->add_option("--report", report_path, "output path");

  auto* demo = app.add_subcommand("demo", "residual norms for a sample configuration");
  demo->add_option("--config", config_path, "field configuration JSON");
  demo->add_option("--seed", cfg.seed, "rng seed");
  demo->add_option("--chi", chi_opt, "idempotent choice")
      ->check(CLI::IsMember({"minus", "plus", "unit"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cfg.chi_kind = chi_opt == "plus"  ? clg::ChiKind::HalfPlus
                 : chi_opt == "unit" ? clg::ChiKind::Unit
                                     : clg::ChiKind::HalfMinus;
  const clg::Multivector x = clg::chi(cfg.chi_kind);

  try {
    if (verify->parsed()) {
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot read config file '" + config_path + "'");
        clg::json j;
        try {
          in >> j;
        } catch (const clg::json::exception& e) {
          throw clg::ConfigError("", std::string("malformed JSON: ") + e.what());
        }
        (void)clg::config_from_json(j, x);  // validated; suites sample their own fields
      }
      return run_verify(suite, cfg, tol_opt->count() > 0, report_path, format);
    }
    if (table->parsed()) return run_table(report_path);
    if (conv->parsed()) return run_convergence(h0, levels, cfg.seed, report_path, x);
    if (demo->parsed()) return run_demo(config_path, cfg.seed, x);
  } catch (const clg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
