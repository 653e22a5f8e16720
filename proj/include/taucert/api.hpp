#pragma once

// JSON-in / JSON-out operations behind both the CLI and the Python module.

#include <optional>
#include <string>
#include <vector>

#include "taucert/json_io.hpp"

namespace taucert::api {

using io::json;

/// "symbolic" or an empty value leaves x symbolic.
Specialization specialization(const std::optional<std::string>& x, const std::optional<std::string>& gamma);

json catalog_list();
json catalog_terms(const std::string& name, const Specialization& sp, std::size_t n);
json catalog_verify(const std::string& name, const Specialization& sp, std::size_t order);

/// TauEquation JSON; with verify_order set, adds a "verification" residual report.
json derive(const json& egf, const std::optional<GaussRat>& x, std::optional<std::size_t> verify_order);
json derive_entry(const std::string& name, const Specialization& sp, std::optional<std::size_t> verify_order);

json certify(const json& equation, const json& series, std::size_t order);
json certify_entry(const std::string& name, const Specialization& sp, std::size_t order);

json telescope(const json& f, int n_max, const GaussRat& beta);
json summable(const json& h, const GaussRat& beta);
json ratsolve(const json& a, const json& f, const GaussRat& beta);

json trigamma(long double z);
json check_bernoulli_solution(long double x, const std::vector<long double>& ts);
json check_telescoping(long double x, long double t, int n);
json check_asymptotic(int M, const std::vector<long double>& ts);

}  // namespace taucert::api
