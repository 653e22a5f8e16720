#include "taucert/api.hpp"

namespace taucert::api {

namespace {

json reals(const std::vector<long double>& v) {
  json out = json::array();
  for (long double r : v) out.push_back(static_cast<double>(r));
  return out;
}

json terms_json(const Series& s) {
  // Strings for scalar series; coefficient lists in x for every term otherwise.
  json out = json::array();
  const bool scalar = s.is_scalar();
  for (const auto& c : s.coeffs()) out.push_back(scalar ? io::to_json(c.coeff(0)) : io::xpoly_json(c));
  return out;
}

json with_verification(json eq, const ResidualReport& r) {
  eq["verification"] = io::to_json(r);
  return eq;
}

}  // namespace

Specialization specialization(const std::optional<std::string>& x, const std::optional<std::string>& gamma) {
  Specialization sp;
  if (x && !x->empty() && *x != "symbolic") sp.x = GaussRat::parse(*x);
  if (gamma && !gamma->empty()) sp.gamma = GaussRat::parse(*gamma);
  return sp;
}

json catalog_list() {
  json out = json::array();
  for (const auto& e : list_entries()) {
    json j;
    j["name"] = e.name;
    j["title"] = e.title;
    j["kind"] = e.kind;
    j["source"] = e.source;
    j["uses_x"] = e.uses_x;
    j["uses_gamma"] = e.uses_gamma;
    j["order"] = e.order;
    j["shift"] = io::to_json(e.shift);
    json sps = json::array();
    for (const auto& sp : e.specializations) sps.push_back(io::to_json(sp));
    j["specializations"] = std::move(sps);
    out.push_back(std::move(j));
  }
  return out;
}

json catalog_terms(const std::string& name, const Specialization& sp, std::size_t n) {
  return terms_json(build_ogf(name, sp, n));
}

json catalog_verify(const std::string& name, const Specialization& sp, std::size_t order) {
  json out;
  out["name"] = name;
  out["params"] = io::to_json(resolve(find_entry(name), sp));
  out["report"] = io::to_json(verify_entry(name, sp, order));
  return out;
}

json derive(const json& egf, const std::optional<GaussRat>& x, std::optional<std::size_t> verify_order) {
  EgfEquation eq = io::egf_equation_from(egf);
  TauEquation out = compile(eq, x);
  if (!verify_order) return io::to_json(out);
  return with_verification(io::to_json(out), verify_compiled(eq, out, *verify_order, x));
}

json derive_entry(const std::string& name, const Specialization& sp, std::optional<std::size_t> verify_order) {
  const CatalogEntry& e = find_entry(name);
  Specialization r = resolve(e, sp);
  if (e.uses_x && !r.x)
    throw Error(ErrorCode::Precondition, name + ": derive needs a specialized x (pass --x)");
  EgfEquation eq = e.egf_equation(r.gamma.value_or(GaussRat()));
  TauEquation out = compile(eq, r.x);
  if (!verify_order) return io::to_json(out);
  return with_verification(io::to_json(out), verify_compiled(eq, out, *verify_order, r.x));
}

json certify(const json& equation, const json& series, std::size_t order) {
  return io::to_json(taucert::certify(io::tau_equation_from(equation), io::series_from(series), order));
}

json certify_entry(const std::string& name, const Specialization& sp, std::size_t order) {
  return io::to_json(taucert::certify(certification_problem(name, sp, order)));
}

json telescope(const json& f, int n_max, const GaussRat& beta) {
  if (n_max < 0) throw Error(ErrorCode::Precondition, "nmax must be nonnegative");
  return io::to_json(telescoper_decide(io::ratfun_from(f), MoebiusShift::make(beta), n_max), n_max);
}

json summable(const json& h, const GaussRat& beta) {
  std::optional<RatFun> g = is_summable(io::ratfun_from(h), MoebiusShift::make(beta));
  json out;
  if (!g) {
    out["result"] = "none";
    out["checked_n"] = 0;
    return out;
  }
  out["result"] = "witness";
  out["g"] = io::to_json(*g);
  return out;
}

json ratsolve(const json& a, const json& f, const GaussRat& beta) {
  RationalSolutions s = rational_solutions(io::ratfun_from(a), io::ratfun_from(f), MoebiusShift::make(beta));
  json out;
  if (s.particular) {
    out["result"] = "witness";
    out["g"] = io::to_json(*s.particular);
  } else {
    out["result"] = "none";
    out["checked_n"] = 0;
  }
  if (s.homogeneous) out["homogeneous"] = io::to_json(*s.homogeneous);
  out["universal_denominator_degree"] = s.universal_denominator_degree;
  out["poly_degree_bound"] = s.poly_degree_bound;
  return out;
}

json trigamma(long double z) {
  json out;
  out["z"] = static_cast<double>(z);
  out["trigamma"] = static_cast<double>(numeric::trigamma(z));
  return out;
}

json check_bernoulli_solution(long double x, const std::vector<long double>& ts) {
  numeric::SampleReport r = numeric::check_closed_form(x, ts);
  json out;
  out["x"] = static_cast<double>(x);
  json samples = json::array();
  for (const auto& s : r.samples) {
    json j;
    j["t"] = static_cast<double>(s.t);
    j["residual"] = s.skipped ? json(nullptr) : json(static_cast<double>(s.residual));
    j["skipped"] = s.skipped;
    if (!s.note.empty()) j["note"] = s.note;
    samples.push_back(std::move(j));
  }
  out["samples"] = std::move(samples);
  out["max_residual"] = static_cast<double>(r.max_residual);
  return out;
}

json check_telescoping(long double x, long double t, int n) {
  json out;
  out["x"] = static_cast<double>(x);
  out["t"] = static_cast<double>(t);
  out["n"] = n;
  out["residual"] = static_cast<double>(numeric::check_telescoping(x, t, n));
  return out;
}

json check_asymptotic(int M, const std::vector<long double>& ts) {
  numeric::AsymptoticReport r = numeric::check_asymptotic(M, ts);
  json out;
  out["M"] = r.M;
  out["ts"] = reals(r.ts);
  out["errors"] = reals(r.errors);
  out["ratios"] = reals(r.ratios);
  out["expected"] = reals(r.expected);
  out["pass"] = r.pass;
  return out;
}

}  // namespace taucert::api
