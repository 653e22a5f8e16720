// Command-line front end: every subcommand prints one JSON document.
// Exit codes: 0 success, 1 domain error (structured error JSON), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "taucert/accept/acceptance.hpp"
#include "taucert/api.hpp"

using namespace taucert;
using api::json;

namespace {

struct Params {
  std::string x, gamma;
  std::optional<std::string> opt(const std::string& v) const {
    return v.empty() ? std::nullopt : std::optional<std::string>(v);
  }
  Specialization specialization() const { return api::specialization(opt(x), opt(gamma)); }
};

void add_params(CLI::App* cmd, Params& p) {
  cmd->add_option("--x", p.x, "Value of x (Gaussian rational such as 2, -1/2, 1+2i) or 'symbolic'");
  cmd->add_option("--gamma", p.gamma, "Value of gamma for the gamma-families");
}

std::vector<long double> widen(const std::vector<double>& v) { return {v.begin(), v.end()}; }

json accept_json(const std::vector<accept::CriterionResult>& results) {
  json out = json::array();
  for (const auto& r : results)
    out.push_back({{"id", r.id},
                   {"tag", r.tag},
                   {"title", r.title},
                   {"pass", r.pass},
                   {"seconds", r.seconds},
                   {"budget_seconds", r.budget_seconds},
                   {"detail", r.detail}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for tau-equations: catalog, EGF compiler, certification and numeric checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t order = 64;
  std::string out_path;
  bool pretty = false;
  app.add_option("--order", order, "Series order N")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the JSON result to this file instead of stdout");
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::function<json()> action;
  int exit_code = 0;
  std::string text_output;  // accept prints a table unless --json
  Params params;

  // catalog
  CLI::App* catalog = app.add_subcommand("catalog", "Stored generating-function families");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog entries")->callback([&] { action = [] { return api::catalog_list(); }; });
  std::string name;
  std::size_t nterms = 20;
  CLI::App* terms = catalog->add_subcommand("terms", "OGF coefficients of an entry");
  terms->add_option("name", name, "Entry name")->required();
  terms->add_option("--n", nterms, "Number of terms")->check(CLI::PositiveNumber);
  add_params(terms, params);
  terms->callback([&] { action = [&] { return api::catalog_terms(name, params.specialization(), nterms); }; });
  CLI::App* verify = catalog->add_subcommand("verify", "Substitute the OGF into the stored equation");
  verify->add_option("name", name, "Entry name")->required();
  add_params(verify, params);
  verify->callback([&] {
    action = [&] {
      json r = api::catalog_verify(name, params.specialization(), order);
      if (!r["report"]["exact"].get<bool>()) exit_code = 1;
      return r;
    };
  });

  // derive
  CLI::App* derive = app.add_subcommand("derive", "Compile an EGF differential equation into a tau-equation");
  std::string egf_path, entry;
  std::size_t verify_order = 0;
  auto* egf_opt = derive->add_option("--egf", egf_path, "EgfEquation JSON file")->check(CLI::ExistingFile);
  derive->add_option("--entry", entry, "Catalog entry whose EGF equation to compile")->excludes(egf_opt);
  derive->add_option("--verify-order", verify_order, "Also check the compiled equation to this order");
  add_params(derive, params);
  derive->callback([&] {
    action = [&] {
      std::optional<std::size_t> vo = verify_order ? std::optional<std::size_t>(verify_order) : std::nullopt;
      json r = entry.empty() ? api::derive(io::read_file(egf_path), params.specialization().x, vo)
                             : api::derive_entry(entry, params.specialization(), vo);
      if (r.contains("verification") && !r["verification"]["exact"].get<bool>()) exit_code = 1;
      return r;
    };
  });

  // certify
  CLI::App* certify = app.add_subcommand("certify", "Decide rational vs strongly D-transcendental for tau(y) = a y + f");
  std::string eq_path, series_path;
  certify->add_option("--equation", eq_path, "TauEquation JSON file")->check(CLI::ExistingFile);
  certify->add_option("--series", series_path, "Series JSON file")->check(CLI::ExistingFile);
  certify->add_option("--entry", entry, "Catalog entry (first-order families)");
  add_params(certify, params);
  certify->callback([&] {
    action = [&] {
      if (!entry.empty()) return api::certify_entry(entry, params.specialization(), order);
      if (eq_path.empty() || series_path.empty())
        throw CLI::ValidationError("certify", "needs --equation and --series, or --entry");
      return api::certify(io::read_file(eq_path), io::read_file(series_path), order);
    };
  });

  // summability tools
  std::string f_path, h_path, a_path, beta = "1";
  int nmax = 6;
  CLI::App* telescope = app.add_subcommand("telescope", "Search for a telescoper sum alpha_i d^i f = tau(g) - g");
  telescope->add_option("--f", f_path, "RatFun JSON file")->required()->check(CLI::ExistingFile);
  telescope->add_option("--nmax", nmax, "Largest telescoper order")->check(CLI::NonNegativeNumber);
  telescope->add_option("--beta", beta, "Shift parameter of tau: t -> t/(1 + beta t)");
  telescope->callback([&] {
    action = [&] { return api::telescope(io::read_file(f_path), nmax, GaussRat::parse(beta)); };
  });
  CLI::App* summable = app.add_subcommand("summable", "Rational g with tau(g) - g = h");
  summable->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  summable->add_option("--h", h_path, "RatFun JSON file")->required()->check(CLI::ExistingFile);
  summable->add_option("--beta", beta, "Shift parameter");
  summable->callback([&] { action = [&] { return api::summable(io::read_file(h_path), GaussRat::parse(beta)); }; });
  CLI::App* ratsolve = app.add_subcommand("ratsolve", "Rational solutions of tau(g) = a g + f");
  ratsolve->add_option("--a", a_path, "RatFun JSON file")->required()->check(CLI::ExistingFile);
  ratsolve->add_option("--f", f_path, "RatFun JSON file")->required()->check(CLI::ExistingFile);
  ratsolve->add_option("--beta", beta, "Shift parameter");
  ratsolve->callback([&] {
    action = [&] { return api::ratsolve(io::read_file(a_path), io::read_file(f_path), GaussRat::parse(beta)); };
  });

  // numeric
  CLI::App* numeric = app.add_subcommand("numeric", "Floating-point checks around the trigamma function");
  numeric->require_subcommand(1);
  double z = 0, xr = 0, tr = 0.1;
  int n = 10, M = 3;
  std::vector<double> samples;
  CLI::App* tri = numeric->add_subcommand("trigamma", "psi'(z)");
  tri->add_option("--z", z, "Argument (> 0)")->required();
  tri->callback([&] { action = [&] { return api::trigamma(z); }; });
  CLI::App* cb = numeric->add_subcommand("check-bernoulli-solution", "Closed-form residual of the Bernoulli equation");
  cb->add_option("--x", xr, "Real x")->required();
  cb->add_option("--samples", samples, "Comma-separated t values")->delimiter(',')->required();
  cb->callback([&] { action = [&] { return api::check_bernoulli_solution(xr, widen(samples)); }; });
  CLI::App* ct = numeric->add_subcommand("check-telescoping", "Residual of the n-step telescopic identity");
  ct->add_option("--x", xr, "Real x")->required();
  ct->add_option("--t", tr, "Real t > 0");
  ct->add_option("--n", n, "Number of steps")->check(CLI::NonNegativeNumber);
  ct->callback([&] { action = [&] { return api::check_telescoping(xr, tr, n); }; });
  CLI::App* ca = numeric->add_subcommand("check-asymptotic", "Error scaling of the truncated asymptotic expansion");
  ca->add_option("--M", M, "Truncation order")->check(CLI::NonNegativeNumber);
  ca->add_option("--samples", samples, "Comma-separated t values >= 10")->delimiter(',');
  ca->callback([&] {
    action = [&] {
      json r = api::check_asymptotic(M, samples.empty() ? std::vector<long double>{10, 20, 40} : widen(samples));
      if (!r["pass"].get<bool>()) exit_code = 1;
      return r;
    };
  });

  // accept
  CLI::App* acc = app.add_subcommand("accept", "Run the acceptance suite");
  std::string filter;
  bool as_json = false;
  acc->add_option("--filter", filter, "Only criteria whose tag or title contains this text, or whose id equals it");
  acc->add_flag("--json", as_json, "Emit the report as JSON");
  acc->callback([&] {
    action = [&] {
      auto results = accept::run(filter);
      bool ok = !results.empty();
      for (const auto& r : results) ok = ok && r.pass;
      if (!ok) exit_code = 1;
      if (!as_json) text_output = accept::format_table(results);
      return accept_json(results);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << io::error_json("usage", e.what()).dump() << "\n";
    std::cerr << app.help();
    return 2;
  }

  json result;
  try {
    result = action();
  } catch (const CLI::ValidationError& e) {
    std::cout << io::error_json("usage", e.what()).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    result = io::error_json(e.code_name(), e.what());
    exit_code = 1;
  } catch (const nlohmann::json::exception& e) {
    result = io::error_json(error_code_name(ErrorCode::Parse), e.what());
    exit_code = 1;
  } catch (const std::exception& e) {
    result = io::error_json("internal", e.what());
    exit_code = 1;
  }

  std::string body = text_output.empty() ? result.dump(pretty ? 2 : -1) + "\n" : text_output;
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cout << io::error_json("usage", "cannot write " + out_path).dump() << "\n";
      return 2;
    }
    out << body;
  }
  return exit_code;
}
