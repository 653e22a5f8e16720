#include <gtest/gtest.h>

#include "taucert/accept/gen.hpp"
#include "taucert/api.hpp"

using namespace taucert;
using io::json;

TEST(JsonIo, GaussRatForms) {
  EXPECT_EQ(io::gauss_from(json("-1/2")), GaussRat::from_ratio(-1, 2));
  EXPECT_EQ(io::gauss_from(json(3)), GaussRat(3));
  EXPECT_EQ(io::gauss_from(json::array({"1/3", "-2"})), GaussRat(make_rat(1, 3), BigRat(-2)));
  EXPECT_EQ(io::gauss_from(json("1+2i")), GaussRat(BigRat(1), BigRat(2)));
  EXPECT_EQ(io::pair_json(GaussRat::i()), json::array({"0", "1"}));
  for (const json& bad : {json("1/"), json(1.5), json::array({"1"}), json::object()}) {
    try {
      io::gauss_from(bad);
      FAIL() << bad.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad.dump();
    }
  }
}

TEST(JsonIo, RoundTrips) {
  testgen::Gen gen(40);
  for (int k = 0; k < 50; ++k) {
    RatFun f = gen.ratfun(4);
    EXPECT_EQ(io::ratfun_from(io::to_json(f)), f);
    Series s = gen.series(12, 2);
    EXPECT_EQ(io::series_from(io::to_json(s)), s);
    GaussRat g = gen.gauss();
    EXPECT_EQ(io::gauss_from(io::to_json(g)), g);
    EXPECT_EQ(io::gauss_from(io::pair_json(g)), g);
  }
  for (const auto& e : list_entries()) {
    Specialization sp = resolve(e, e.uses_x ? Specialization{GaussRat(2), std::nullopt} : Specialization{});
    TauEquation eq = entry_equation(e.name, sp);
    EXPECT_EQ(io::tau_equation_from(io::to_json(eq)), eq) << e.name;
    EgfEquation egf = e.egf_equation(sp.gamma.value_or(GaussRat()));
    EgfEquation back = io::egf_equation_from(io::to_json(egf));
    EXPECT_EQ(compile(back, sp.x), compile(egf, sp.x)) << e.name;
    EXPECT_EQ(io::to_json(back), io::to_json(egf)) << e.name;
  }
}

TEST(JsonIo, Errors) {
  EXPECT_THROW(io::parse("{\"num\": [", "input"), Error);
  json s = {{"order", 5}, {"coeffs", json::array({"1", "2"})}};
  try {
    io::series_from(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationMismatch);
  }
  EXPECT_THROW(io::tau_equation_from(json::object()), Error);
  json err = io::error_json("resonance", "free coefficient");
  EXPECT_EQ(err["error"]["code"], "resonance");
}

TEST(Api, CatalogAndCertify) {
  EXPECT_EQ(api::catalog_terms("bell-touchard", {GaussRat(1), std::nullopt}, 7),
            json::array({"1", "1", "2", "5", "15", "52", "203"}));
  json sym = api::catalog_terms("bernoulli", {}, 3);
  EXPECT_EQ(sym[1], json::array({"-1/2", "1"}));
  json c = api::certify_entry("fubini", {GaussRat(1), std::nullopt}, 32);
  EXPECT_EQ(c["verdict"], "strongly-d-transcendental");
  EXPECT_EQ(c["series_prefix"].size(), 32u);
  // The certificate's equation and prefix feed back into the file-based path with the same result.
  json series = {{"coeffs", json::array()}};
  for (const auto& v : c["series_prefix"]) series["coeffs"].push_back(json::array({v}));
  json again = api::certify(c["equation"], series, 32);
  EXPECT_EQ(again, c);
}
