#include "taucert/json_io.hpp"

#include <fstream>
#include <sstream>

namespace taucert::io {

namespace {

std::string rat_text(const BigRat& q) { return q.get_str(); }

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const GaussRat& g) { return g.to_string(); }

json pair_json(const GaussRat& g) { return json::array({rat_text(g.re()), rat_text(g.im())}); }

GaussRat gauss_from(const json& j) {
  if (j.is_string()) return GaussRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return GaussRat(parse_bigrat(j[0].get<std::string>()), parse_bigrat(j[1].get<std::string>()));
  bad("expected a Gaussian rational, got " + j.dump());
}

json to_json(const TPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(pair_json(c));
  return out;
}

TPoly tpoly_from(const json& j) {
  if (!j.is_array()) bad("expected a coefficient list, got " + j.dump());
  std::vector<GaussRat> c;
  for (const auto& e : j) c.push_back(gauss_from(e));
  return TPoly(std::move(c));
}

json xpoly_json(const XPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  if (out.empty()) out.push_back("0");
  return out;
}

XPoly xpoly_from(const json& j) {
  if (!j.is_array()) return XPoly(gauss_from(j));
  std::vector<GaussRat> c;
  for (const auto& e : j) c.push_back(gauss_from(e));
  return XPoly(std::move(c));
}

json to_json(const RatFun& f) {
  json out;
  out["var"] = "t";
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

RatFun ratfun_from(const json& j) {
  if (!j.is_object()) return RatFun(gauss_from(j));
  if (j.contains("var") && j.at("var") != "t") bad("rational functions must be in the variable t");
  TPoly num = tpoly_from(field(j, "num"));
  TPoly den = j.contains("den") ? tpoly_from(j.at("den")) : TPoly::one();
  return ratfun_normalize(std::move(num), std::move(den));
}

json to_json(const Series& s) {
  json out;
  out["var"] = "t";
  out["param"] = "x";
  out["order"] = s.order();
  json c = json::array();
  for (const auto& p : s.coeffs()) c.push_back(xpoly_json(p));
  out["coeffs"] = std::move(c);
  return out;
}

Series series_from(const json& j) {
  std::vector<XPoly> c;
  const json& coeffs = j.is_array() ? j : field(j, "coeffs");
  if (!coeffs.is_array()) bad("series coefficients must be a list");
  for (const auto& e : coeffs) c.push_back(xpoly_from(e));
  if (j.is_object() && j.contains("order")) {
    std::size_t N = j.at("order").get<std::size_t>();
    if (N > c.size())
      throw Error(ErrorCode::TruncationMismatch,
                  "series declares order " + std::to_string(N) + " but lists " + std::to_string(c.size()) + " coefficients");
    c.resize(N);
  }
  return Series(std::move(c));
}

json to_json(const MoebiusShift& s) {
  json out;
  out["alpha"] = "1";
  out["beta"] = pair_json(s.beta);
  return out;
}

MoebiusShift shift_from(const json& j) {
  if (!j.is_object()) return MoebiusShift::make(gauss_from(j));
  if (j.contains("alpha") && !gauss_from(j.at("alpha")).is_one())
    throw Error(ErrorCode::Unsupported, "only alpha = 1 shifts are supported");
  return MoebiusShift::make(j.contains("beta") ? gauss_from(j.at("beta")) : GaussRat(1));
}

json to_json(const TauEquation& eq) {
  json out;
  out["shift"] = to_json(eq.shift);
  out["order"] = eq.order();
  json c = json::array();
  for (const auto& f : eq.coeffs) c.push_back(to_json(f));
  out["coeffs"] = std::move(c);
  out["rhs"] = to_json(eq.rhs);
  out["text"] = equation_text(eq);
  return out;
}

TauEquation tau_equation_from(const json& j) {
  TauEquation eq;
  eq.shift = j.contains("shift") ? shift_from(j.at("shift")) : MoebiusShift::make(GaussRat(1));
  const json& c = field(j, "coeffs");
  if (!c.is_array() || c.empty()) bad("equation needs a nonempty coefficient list");
  for (const auto& e : c) eq.coeffs.push_back(ratfun_from(e));
  eq.rhs = j.contains("rhs") ? ratfun_from(j.at("rhs")) : RatFun();
  if (j.contains("order") && j.at("order").get<int>() != eq.order())
    throw Error(ErrorCode::DimensionMismatch, "declared order does not match the coefficient list");
  return eq;
}

json to_json(const EgfEquation& eq) {
  json out;
  out["lambda"] = pair_json(eq.lambda);
  json lhs = json::array();
  for (std::size_t i = 0; i < eq.lhs.size(); ++i) {
    json u = json::array();
    for (const auto& c : eq.lhs[i].coeffs()) u.push_back(xpoly_json(c));
    lhs.push_back({{"i", i}, {"u_poly", std::move(u)}});
  }
  out["lhs"] = std::move(lhs);
  json rhs = json::array();
  for (const auto& m : eq.rhs) {
    json r;
    r["m"] = m.m;
    r["rate"] = m.rate_is_x ? json("x") : pair_json(m.rate);
    r["coeff"] = xpoly_json(m.coeff);
    rhs.push_back(std::move(r));
  }
  out["rhs"] = std::move(rhs);
  json init = json::array();
  for (const auto& p : eq.init) init.push_back(xpoly_json(p));
  out["init"] = std::move(init);
  return out;
}

EgfEquation egf_equation_from(const json& j) {
  EgfEquation eq;
  if (j.contains("lambda")) eq.lambda = gauss_from(j.at("lambda"));
  const json& lhs = field(j, "lhs");
  if (!lhs.is_array()) bad("lhs must be a list");
  for (const auto& term : lhs) {
    std::size_t i = field(term, "i").get<std::size_t>();
    if (eq.lhs.size() <= i) eq.lhs.resize(i + 1);
    std::vector<XPoly> u;
    for (const auto& c : field(term, "u_poly")) u.push_back(xpoly_from(c));
    eq.lhs[i] += XTPoly(std::move(u));
  }
  if (j.contains("rhs"))
    for (const auto& term : j.at("rhs")) {
      ExpMonomial m;
      m.m = term.contains("m") ? term.at("m").get<unsigned>() : 0;
      const json& rate = term.contains("rate") ? term.at("rate") : json("0");
      if (rate == "x") {
        m.rate_is_x = true;
      } else {
        m.rate = gauss_from(rate);
      }
      m.coeff = term.contains("coeff") ? xpoly_from(term.at("coeff")) : XPoly::one();
      eq.rhs.push_back(std::move(m));
    }
  if (j.contains("init"))
    for (const auto& p : j.at("init")) eq.init.push_back(xpoly_from(p));
  return eq;
}

json to_json(const Certificate& c) {
  json out;
  switch (c.verdict) {
    case Verdict::Rational: out["verdict"] = "rational"; break;
    case Verdict::StronglyDTranscendental: out["verdict"] = "strongly-d-transcendental"; break;
    case Verdict::Unsupported: out["verdict"] = "unsupported"; break;
  }
  out["equation"] = to_json(c.equation);
  if (c.witness) out["witness"] = to_json(*c.witness);
  json ev;
  ev["kind"] = c.evidence.kind;
  ev["universal_denominator_degree"] = c.evidence.universal_denominator_degree;
  ev["poly_degree_bound"] = c.evidence.poly_degree_bound;
  if (c.evidence.mismatch_index) ev["mismatch_index"] = *c.evidence.mismatch_index;
  out["evidence"] = std::move(ev);
  json prefix = json::array();
  for (const auto& g : c.series_prefix) prefix.push_back(to_json(g));
  out["series_prefix"] = std::move(prefix);
  out["series_prefix_hash"] = hash_hex(series_prefix_hash(c.series_prefix));
  out["order"] = c.order;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json to_json(const ResidualReport& r) {
  json out;
  out["exact"] = r.exact;
  out["order"] = r.order;
  out["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  out["summary"] = r.summary();
  return out;
}

json to_json(const std::optional<TelescoperWitness>& w, int checked_n) {
  json out;
  if (!w) {
    out["result"] = "none";
    out["checked_n"] = checked_n;
    return out;
  }
  out["result"] = "witness";
  out["n"] = w->n;
  json a = json::array();
  for (const auto& g : w->alphas) a.push_back(to_json(g));
  out["alphas"] = std::move(a);
  out["g"] = to_json(w->g);
  return out;
}

json to_json(const Specialization& sp) {
  json out = json::object();
  out["x"] = sp.x ? to_json(*sp.x) : json("symbolic");
  if (sp.gamma) out["gamma"] = to_json(*sp.gamma);
  return out;
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, "malformed JSON in " + what + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

}  // namespace taucert::io
