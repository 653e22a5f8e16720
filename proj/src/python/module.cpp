#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>

#include "taucert/accept/acceptance.hpp"
#include "taucert/api.hpp"

namespace py = pybind11;
using namespace taucert;
using api::json;

namespace {

// Every entry point returns a JSON string; domain errors come back as {"error": {...}} for the
// Python layer to raise.
std::string guarded(const std::function<json()>& fn) {
  try {
    return fn().dump();
  } catch (const Error& e) {
    return io::error_json(e.code_name(), e.what()).dump();
  } catch (const nlohmann::json::exception& e) {
    return io::error_json(error_code_name(ErrorCode::Parse), e.what()).dump();
  }
}

json parsed(const std::string& text, const char* what) { return io::parse(text, what); }

Specialization params_of(const std::optional<std::string>& x, const std::optional<std::string>& gamma) {
  return api::specialization(x, gamma);
}

}  // namespace

PYBIND11_MODULE(_taucert, m) {
  m.doc() = "Exact tau-equation tools; every function takes and returns JSON text.";

  m.def("catalog_list", [] { return guarded([] { return api::catalog_list(); }); });
  m.def(
      "catalog_terms",
      [](const std::string& name, std::optional<std::string> x, std::optional<std::string> gamma, std::size_t n) {
        return guarded([&] { return api::catalog_terms(name, params_of(x, gamma), n); });
      },
      py::arg("name"), py::arg("x") = py::none(), py::arg("gamma") = py::none(), py::arg("n") = 20);
  m.def(
      "catalog_verify",
      [](const std::string& name, std::optional<std::string> x, std::optional<std::string> gamma, std::size_t order) {
        return guarded([&] { return api::catalog_verify(name, params_of(x, gamma), order); });
      },
      py::arg("name"), py::arg("x") = py::none(), py::arg("gamma") = py::none(), py::arg("order") = 64);
  m.def(
      "derive",
      [](const std::string& egf, std::optional<std::string> x, std::optional<std::size_t> verify_order) {
        return guarded([&] { return api::derive(parsed(egf, "egf"), params_of(x, std::nullopt).x, verify_order); });
      },
      py::arg("egf"), py::arg("x") = py::none(), py::arg("verify_order") = py::none());
  m.def(
      "derive_entry",
      [](const std::string& name, std::optional<std::string> x, std::optional<std::string> gamma,
         std::optional<std::size_t> verify_order) {
        return guarded([&] { return api::derive_entry(name, params_of(x, gamma), verify_order); });
      },
      py::arg("name"), py::arg("x") = py::none(), py::arg("gamma") = py::none(), py::arg("verify_order") = py::none());
  m.def(
      "certify",
      [](const std::string& equation, const std::string& series, std::size_t order) {
        return guarded([&] { return api::certify(parsed(equation, "equation"), parsed(series, "series"), order); });
      },
      py::arg("equation"), py::arg("series"), py::arg("order") = 64);
  m.def(
      "certify_entry",
      [](const std::string& name, std::optional<std::string> x, std::optional<std::string> gamma, std::size_t order) {
        return guarded([&] { return api::certify_entry(name, params_of(x, gamma), order); });
      },
      py::arg("name"), py::arg("x") = py::none(), py::arg("gamma") = py::none(), py::arg("order") = 64);
  m.def(
      "telescope",
      [](const std::string& f, int n_max, const std::string& beta) {
        return guarded([&] { return api::telescope(parsed(f, "f"), n_max, GaussRat::parse(beta)); });
      },
      py::arg("f"), py::arg("n_max") = 6, py::arg("beta") = "1");
  m.def(
      "summable",
      [](const std::string& h, const std::string& beta) {
        return guarded([&] { return api::summable(parsed(h, "h"), GaussRat::parse(beta)); });
      },
      py::arg("h"), py::arg("beta") = "1");
  m.def(
      "ratsolve",
      [](const std::string& a, const std::string& f, const std::string& beta) {
        return guarded([&] { return api::ratsolve(parsed(a, "a"), parsed(f, "f"), GaussRat::parse(beta)); });
      },
      py::arg("a"), py::arg("f"), py::arg("beta") = "1");
  m.def("trigamma", [](double z) { return guarded([&] { return api::trigamma(z); }); }, py::arg("z"));
  m.def(
      "check_bernoulli_solution",
      [](double x, const std::vector<double>& ts) {
        return guarded([&] { return api::check_bernoulli_solution(x, {ts.begin(), ts.end()}); });
      },
      py::arg("x"), py::arg("samples"));
  m.def(
      "check_telescoping",
      [](double x, double t, int n) { return guarded([&] { return api::check_telescoping(x, t, n); }); },
      py::arg("x"), py::arg("t"), py::arg("n") = 10);
  m.def(
      "check_asymptotic",
      [](int M, const std::vector<double>& ts) {
        return guarded([&] { return api::check_asymptotic(M, {ts.begin(), ts.end()}); });
      },
      py::arg("M") = 3, py::arg("samples") = std::vector<double>{10, 20, 40});
  m.def(
      "accept",
      [](const std::string& filter) {
        std::vector<accept::CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = accept::run(filter);
        }
        json out = json::array();
        for (const auto& r : results)
          out.push_back({{"id", r.id},
                         {"tag", r.tag},
                         {"title", r.title},
                         {"pass", r.pass},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds},
                         {"detail", r.detail}});
        return out.dump();
      },
      py::arg("filter") = "");
}
