#include "taucert/catalog.hpp"

#include <algorithm>
#include <map>

#include "taucert/roots.hpp"

namespace taucert {

namespace {

const XPoly X = XPoly::variable();
XPoly k(long v) { return XPoly(GaussRat(v)); }
XPoly k(const GaussRat& g) { return XPoly(g); }
const GaussRat I = GaussRat::i();

// Polynomial in t (or u) with coefficients in Q(i)[x], lowest degree first.
XTPoly P(std::initializer_list<XPoly> c) { return XTPoly(std::vector<XPoly>(c)); }
const XTPoly one_t = P({k(1)});
const XTPoly onep = P({k(1), k(1)});  // 1 + t
const XTPoly tt = P({k(0), k(1)});

XTPoly ex() { return P({k(1), k(1) - X}); }  // 1 + t - x t
XTPoly ex_gamma(const GaussRat& g) { return P({k(1), k(GaussRat(1) - g)}); }

TauTemplate first(const GaussRat& beta, XTPoly b1, XTPoly b0, XTPoly c) {
  return TauTemplate{MoebiusShift::make(beta), {std::move(b0), std::move(b1)}, std::move(c)};
}

// --- series recipes -------------------------------------------------------------------

Series e_rate(const GaussRat& c, std::size_t N) { return Series::exp_rate(k(c), N); }

Series drop_t(const Series& g) {
  std::vector<XPoly> c(g.coeffs().begin() + 1, g.coeffs().end());
  return Series(std::move(c));
}

// t / g, computed from g to order N + 1.
Series t_over(const Series& g) {
  if (g[0].is_zero()) return reciprocal(drop_t(g));
  Series r = Series::variable(g.order()) * reciprocal(g);
  return r.truncated(g.order() - 1);
}

Series sin_t(std::size_t N) { return (e_rate(I, N) - e_rate(-I, N)) * k(GaussRat(BigRat(0), BigRat(-1, 2))); }
Series cos_t(std::size_t N) { return (e_rate(I, N) + e_rate(-I, N)) * k(GaussRat::from_ratio(1, 2)); }

// --- EGF differential equations: sum_i a_i(u) D^i yhat = rhs -----------------------------

EgfEquation algebraic(XTPoly a0, std::vector<ExpMonomial> rhs, GaussRat lambda = GaussRat(1)) {
  EgfEquation e;
  e.lambda = lambda;
  e.lhs = {std::move(a0)};
  e.rhs = std::move(rhs);
  return e;
}
EgfEquation differential(XTPoly a0, std::vector<XPoly> init) {
  EgfEquation e;
  e.lhs = {std::move(a0), one_t};
  e.init = std::move(init);
  return e;
}
ExpMonomial ext(unsigned m, XPoly c) { return ExpMonomial{m, true, GaussRat(), std::move(c)}; }
ExpMonomial exc(unsigned m, const GaussRat& rate, XPoly c) { return ExpMonomial{m, false, rate, std::move(c)}; }

// --- reference data ---------------------------------------------------------------------

std::vector<GaussRat> ints(std::initializer_list<long> v) {
  std::vector<GaussRat> out;
  for (long a : v) out.emplace_back(a);
  return out;
}
Specialization at_x(long x) { return Specialization{GaussRat(x), std::nullopt}; }
Specialization at_x(const GaussRat& x) { return Specialization{x, std::nullopt}; }

std::vector<Specialization> x_grid(std::initializer_list<GaussRat> xs) {
  std::vector<Specialization> out;
  for (const auto& x : xs) out.push_back(at_x(x));
  out.push_back(Specialization{});  // symbolic x
  return out;
}

std::vector<Specialization> gamma_grid() {
  const GaussRat two(2), half = GaussRat::from_ratio(1, 2);
  return {Specialization{GaussRat(1), two},  Specialization{GaussRat(2), half}, Specialization{GaussRat(-1), two},
          Specialization{half, half},        Specialization{std::nullopt, two}, Specialization{std::nullopt, half}};
}

CatalogEntry table_entry(std::string name, std::string title, std::string source) {
  CatalogEntry e;
  e.name = std::move(name);
  e.title = std::move(title);
  e.kind = "first-order";
  e.source = std::move(source);
  e.uses_x = true;
  e.specializations = x_grid({GaussRat(1), GaussRat(2), GaussRat(-1), GaussRat::from_ratio(1, 2)});
  return e;
}

CatalogEntry with_gamma(CatalogEntry e) {
  e.uses_gamma = true;
  e.gamma_defaults = {GaussRat(2), GaussRat::from_ratio(1, 2)};
  e.specializations = gamma_grid();
  return e;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> out;
  const GaussRat one(1);

  {
    CatalogEntry e = table_entry("bernoulli", "Bernoulli polynomials B_n(x)", "OEIS A027641/A027642; Apostol (2008)");
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return t_over(e_rate(GaussRat(1), N + 1) - Series::one(N + 1)) * Series::exp_rate(x, N);
    };
    e.equation = [](const GaussRat&) {
      XTPoly d = ex() * ex();
      return first(GaussRat(1), d, -(onep * d), -(onep * tt));
    };
    e.egf_equation = [](const GaussRat&) { return algebraic(P({k(-1), k(1)}), {ext(1, k(1))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("glaisher", "Glaisher polynomials U_n(x)", "Glaisher (1898)");
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return t_over(e_rate(GaussRat(1), N + 1) + Series::one(N + 1)) * Series::exp_rate(x, N);
    };
    e.equation = [](const GaussRat&) {
      // R = -(1 + t): the e^t + 1 denominator flips the sign, as for Euler and Genocchi.
      XTPoly d = ex() * ex();
      return first(GaussRat(1), d, onep * d, onep * tt);
    };
    e.egf_equation = [](const GaussRat&) { return algebraic(P({k(1), k(1)}), {ext(1, k(1))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = with_gamma(
        table_entry("apostol-bernoulli", "Apostol-Bernoulli polynomials A_n^(gamma)(x)", "Apostol (1951)"));
    e.egf = [](const XPoly& x, const GaussRat& g, std::size_t N) {
      return t_over(e_rate(GaussRat(1), N + 1) * k(g) - Series::one(N + 1)) * Series::exp_rate(x, N);
    };
    e.equation = [](const GaussRat& g) {
      XTPoly d = ex() * ex();
      return first(GaussRat(1), d, -(onep * d) * k(g), -(onep * tt));
    };
    e.egf_equation = [](const GaussRat& g) { return algebraic(P({k(-1), k(g)}), {ext(1, k(1))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("imschenetsky", "Imschenetsky polynomials S_n(x)", "Erdelyi et al. (1955), p. 254");
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return t_over(e_rate(GaussRat(1), N + 1) - Series::one(N + 1)) * (Series::exp_rate(x, N) - Series::one(N));
    };
    e.equation = [](const GaussRat&) {
      XTPoly d = ex() * ex();
      // t^2 x (x t - 2t - 2)
      XTPoly c = P({k(0), k(0), k(0) - k(2) * X, X * X - k(2) * X});
      return first(GaussRat(1), onep * d, -(onep * onep * d), c);
    };
    e.egf_equation = [](const GaussRat&) {
      return algebraic(P({k(-1), k(1)}), {ext(1, k(1)), exc(1, GaussRat(), k(-1))});
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("euler", "Euler polynomials E_n(x)", "OEIS A060096; Carlitz (1958)");
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return reciprocal(e_rate(GaussRat(1), N) + Series::one(N)) * k(2) * Series::exp_rate(x, N);
    };
    e.equation = [](const GaussRat&) { return first(GaussRat(1), ex(), onep * ex(), onep * k(2)); };
    e.egf_equation = [](const GaussRat&) { return algebraic(P({k(1), k(1)}), {ext(0, k(2))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("genocchi", "Genocchi polynomials G_n(x)", "OEIS A001469; Horadam (1991)");
    e.references.push_back({"Genocchi numbers", at_x(1), ints({0, 1, 1, 0, -1, 0, 3, 0, -17, 0, 155})});
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return t_over(e_rate(GaussRat(1), N + 1) + Series::one(N + 1)) * k(2) * Series::exp_rate(x, N);
    };
    e.equation = [](const GaussRat&) {
      XTPoly d = ex() * ex();
      return first(GaussRat(1), d, onep * d, onep * tt * k(2));
    };
    e.egf_equation = [](const GaussRat&) { return algebraic(P({k(1), k(1)}), {ext(1, k(2))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = with_gamma(table_entry("carlitz", "Carlitz polynomials C_n^(gamma)(x)", "Carlitz (1962)"));
    e.egf = [](const XPoly& x, const GaussRat& g, std::size_t N) {
      return reciprocal(Series::one(N) - e_rate(GaussRat(1), N) * k(g)) * k(GaussRat(1) - g) * Series::exp_rate(x, N);
    };
    e.equation = [](const GaussRat& g) {
      return first(GaussRat(1), ex(), -(onep * ex()) * k(g), onep * k(GaussRat(1) - g));
    };
    e.egf_equation = [](const GaussRat& g) { return algebraic(P({k(1), k(-g)}), {ext(0, k(GaussRat(1) - g))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("fubini", "Fubini polynomials F_n(x)", "OEIS A000670 (x = 1); Tanny (1975)");
    e.specializations = x_grid({GaussRat(1), GaussRat(2), GaussRat::from_ratio(1, 2), GaussRat(3)});
    e.references.push_back({"Fubini numbers", at_x(1), ints({1, 1, 3, 13, 75, 541})});
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return reciprocal(Series::one(N) - (e_rate(GaussRat(1), N) - Series::one(N)) * x);
    };
    e.equation = [](const GaussRat&) { return first(GaussRat(1), P({X + k(1)}), -(onep * X), one_t); };
    e.egf_equation = [](const GaussRat&) { return algebraic(P({X + k(1), -X}), {exc(0, GaussRat(), k(1))}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("bell-touchard", "Bell-Touchard polynomials phi_n(x)",
                                 "OEIS A000110 (x = 1), A000587 (x = -1), A001861 (x = 2); Bell (1934), Touchard (1956)");
    e.references.push_back({"Bell numbers", at_x(1), ints({1, 1, 2, 5, 15, 52, 203})});
    e.references.push_back({"Uppuluri-Carpenter numbers", at_x(-1), ints({1, -1, 0, 1, 1, -2, -9, -9, 50})});
    e.references.push_back({"bicolored partitions", at_x(2), ints({1, 2, 6, 22, 94, 454})});
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      return exp_series((e_rate(GaussRat(1), N) - Series::one(N)) * x);
    };
    e.equation = [](const GaussRat&) { return first(GaussRat(1), one_t, -(tt * X), one_t); };
    e.egf_equation = [](const GaussRat&) { return differential(P({k(0), -X}), {k(1)}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = table_entry("mahler", "Mahler polynomials s_n(x)", "OEIS A000296 (x = -1); Mahler (1932)");
    e.references.push_back({"partitions without singletons", at_x(-1), ints({1, 0, 1, 1, 4, 11, 41, 162, 715})});
    e.egf = [](const XPoly& x, const GaussRat&, std::size_t N) {
      Series inner = Series::one(N) + Series::variable(N) - e_rate(GaussRat(1), N);
      return exp_series(inner * x);
    };
    e.equation = [](const GaussRat&) { return first(GaussRat(1), ex(), onep * tt * X, onep); };
    e.egf_equation = [](const GaussRat&) { return differential(P({-X, X}), {k(1)}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = with_gamma(table_entry("toscano", "Toscano actuarial polynomials a_n^(gamma)(x)", "Toscano (1950)"));
    e.egf = [](const XPoly& x, const GaussRat& g, std::size_t N) {
      Series inner = (Series::one(N) - e_rate(GaussRat(1), N)) * x + Series::variable(N) * k(g);
      return exp_series(inner);
    };
    e.equation = [](const GaussRat& g) { return first(GaussRat(1), ex_gamma(g), onep * tt * X, onep); };
    e.egf_equation = [](const GaussRat& g) { return differential(P({k(-g), X}), {k(1)}); };
    out.push_back(std::move(e));
  }

  auto plain = [](std::string name, std::string title, std::string source) {
    CatalogEntry e;
    e.name = std::move(name);
    e.title = std::move(title);
    e.kind = "combinatorial";
    e.source = std::move(source);
    e.specializations = {Specialization{}};
    return e;
  };
  {
    CatalogEntry e = plain("tangent", "tangent numbers (odd coefficients of tan)", "OEIS A000182");
    e.shift = MoebiusShift::make(GaussRat(2) * I);
    e.references.push_back({"tangent numbers", {}, ints({1, 2, 16, 272, 7936, 353792}), 1, 2});
    e.egf = [](const XPoly&, const GaussRat&, std::size_t N) { return sin_t(N) * reciprocal(cos_t(N)); };
    e.equation = [](const GaussRat&) {
      return first(GaussRat(2) * I, one_t, P({k(1), k(GaussRat(2) * I)}), tt * k(2));
    };
    // (1 + u) yhat = i - i u with u = e^{2it}
    e.egf_equation = [](const GaussRat&) {
      return algebraic(P({k(1), k(1)}), {exc(0, GaussRat(), k(I)), exc(0, GaussRat(2) * I, k(-I))}, GaussRat(2) * I);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain("alternating", "alternating permutations (Euler zigzag numbers)", "OEIS A000111; Andre (1881)");
    e.shift = MoebiusShift::make(I);
    e.references.push_back({"alternating permutations", {}, ints({1, 1, 1, 2, 5, 16, 61, 272})});
    e.egf = [](const XPoly&, const GaussRat&, std::size_t N) {
      return (Series::one(N) + sin_t(N)) * reciprocal(cos_t(N));
    };
    e.equation = [](const GaussRat&) {
      return first(I, one_t, P({k(I), k(-1)}), P({k(GaussRat(1) + I), k(I)}));
    };
    // (1 + i u) yhat = i + u with u = e^{it}
    e.egf_equation = [](const GaussRat&) {
      return algebraic(P({k(1), k(I)}), {exc(0, GaussRat(), k(I)), exc(0, I, k(1))}, I);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain("springer", "Springer numbers", "OEIS A001586; Springer (1971), Glaisher (1898)");
    e.shift = MoebiusShift::make(GaussRat(2) * I);
    e.references.push_back({"Springer numbers", {}, ints({1, 1, 3, 11, 57, 361, 2763})});
    e.egf = [](const XPoly&, const GaussRat&, std::size_t N) { return reciprocal(cos_t(N) - sin_t(N)); };
    e.equation = [](const GaussRat&) {
      XTPoly tmi = P({k(-I), k(1)});
      XTPoly two_tmi = P({k(-I), k(2)});
      return first(GaussRat(2) * I, tmi, -(two_tmi * tmi), two_tmi * k(GaussRat(1) + I));
    };
    // ((1 + i) + (i - 1) u) yhat = 2i e^{it} with u = e^{2it}
    e.egf_equation = [](const GaussRat&) {
      return algebraic(P({k(GaussRat(1) + I), k(I - GaussRat(1))}), {exc(0, I, k(GaussRat(2) * I))}, GaussRat(2) * I);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain("graph", "graphs whose components are complete bipartite (A060311)", "OEIS A060311");
    e.order = 2;
    e.references.push_back({"A060311", {}, ints({1, 0, 1, 3, 10, 45})});
    e.egf = [](const XPoly&, const GaussRat&, std::size_t N) {
      Series em1 = e_rate(GaussRat(1), N) - Series::one(N);
      return exp_series(em1 * em1 * k(GaussRat::from_ratio(1, 2)));
    };
    e.equation = [](const GaussRat&) {
      return TauTemplate{MoebiusShift::make(GaussRat(1)), {-(tt * onep), tt, onep}, onep};
    };
    e.egf_equation = [](const GaussRat&) { return differential(P({k(0), k(1), k(-1)}), {k(1)}); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain("bernoulli-numbers", "Bernoulli numbers B_n = B_n(0)", "OEIS A027641/A027642");
    e.references.push_back({"Bernoulli numbers", {},
                            {GaussRat(1), GaussRat::from_ratio(-1, 2), GaussRat::from_ratio(1, 6), GaussRat(),
                             GaussRat::from_ratio(-1, 30)}});
    e.egf = [](const XPoly&, const GaussRat&, std::size_t N) {
      return t_over(e_rate(GaussRat(1), N + 1) - Series::one(N + 1));
    };
    e.equation = [](const GaussRat&) { return first(GaussRat(1), onep, -(onep * onep), -tt); };
    e.egf_equation = [](const GaussRat&) { return algebraic(P({k(-1), k(1)}), {exc(1, GaussRat(), k(1))}); };
    out.push_back(std::move(e));
  }
  for (auto& e : out)
    if (e.kind == "first-order") e.shift = MoebiusShift::make(one);
  return out;
}

GaussRat gamma_of(const Specialization& sp) { return sp.gamma.value_or(GaussRat()); }

}  // namespace

std::string Specialization::describe() const {
  std::string s;
  s += "x = " + (x ? x->to_string() : std::string("symbolic"));
  if (gamma) s += ", gamma = " + gamma->to_string();
  return s;
}

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : list_entries())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnknownEntry, "unknown catalog entry '" + name + "'");
}

std::vector<GaussRat> singular_x(const CatalogEntry& e, const GaussRat& gamma) {
  if (!e.uses_x) return {};
  TauTemplate tpl = e.equation(gamma);
  const XTPoly& top = tpl.coeffs.back();
  XPoly content;
  for (const auto& c : top.coeffs()) content = gcd(content, c);
  if (content.degree() < 1) return {};
  std::vector<GaussRat> out;
  for (const auto& r : gaussian_roots(content).roots) out.push_back(r.value);
  return out;
}

Specialization resolve(const CatalogEntry& e, const Specialization& sp) {
  Specialization out = sp;
  if (!e.uses_x) out.x.reset();
  if (!e.uses_gamma) {
    out.gamma.reset();
  } else {
    if (!out.gamma) out.gamma = e.gamma_defaults.front();
    if (e.name == "carlitz" && out.gamma->is_one())
      throw Error(ErrorCode::SingularParameter, "carlitz: singular parameter gamma = 1 (1 - gamma = 0)");
  }
  if (out.x) {
    for (const auto& r : singular_x(e, gamma_of(out)))
      if (r == *out.x)
        throw Error(ErrorCode::SingularParameter,
                    e.name + ": singular parameter x = " + r.to_string() + " (top coefficient vanishes)");
  }
  return out;
}

Series build_egf(const std::string& name, const Specialization& sp0, std::size_t N) {
  const CatalogEntry& e = find_entry(name);
  Specialization sp = resolve(e, sp0);
  XPoly x = sp.x ? XPoly(*sp.x) : XPoly::variable();
  return e.egf(x, gamma_of(sp), N);
}

Series build_ogf(const std::string& name, const Specialization& sp, std::size_t N) {
  return inverse_borel(build_egf(name, sp, N));
}

TauTemplate entry_template(const std::string& name, const Specialization& sp0) {
  const CatalogEntry& e = find_entry(name);
  return e.equation(gamma_of(resolve(e, sp0)));
}

TauEquation entry_equation(const std::string& name, const Specialization& sp0) {
  const CatalogEntry& e = find_entry(name);
  Specialization sp = resolve(e, sp0);
  if (e.uses_x && !sp.x) throw Error(ErrorCode::Precondition, name + ": x must be specialized");
  return e.equation(gamma_of(sp)).specialize(sp.x.value_or(GaussRat()));
}

ResidualReport verify_entry(const std::string& name, const Specialization& sp0, std::size_t N) {
  const CatalogEntry& e = find_entry(name);
  Specialization sp = resolve(e, sp0);
  Series F = build_ogf(name, sp, N);
  Series r;
  if (e.uses_x && !sp.x)
    r = e.equation(gamma_of(sp)).residual(F);
  else
    r = residual(entry_equation(name, sp), F);
  ResidualReport rep;
  rep.order = N;
  int v = r.valuation();
  rep.exact = v < 0;
  if (!rep.exact) rep.first_failure = static_cast<std::size_t>(v);
  return rep;
}

FirstOrderProblem certification_problem(const std::string& name, const Specialization& sp0, std::size_t N) {
  const CatalogEntry& e = find_entry(name);
  if (e.order != 1) throw Error(ErrorCode::Unsupported, name + ": equation of order " + std::to_string(e.order));
  Specialization sp = resolve(e, sp0);
  TauEquation eq = entry_equation(name, sp);
  auto [a, f] = as_first_order(eq);
  return FirstOrderProblem{eq.shift, a, f, build_ogf(name, sp, N), N};
}

}  // namespace taucert
