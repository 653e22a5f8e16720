#pragma once

// JSON encodings shared by the CLI and the Python module. Numbers are exact strings throughout.

#include <json.hpp>

#include "taucert/catalog.hpp"
#include "taucert/certifier.hpp"
#include "taucert/egf_compiler.hpp"
#include "taucert/numeric.hpp"

namespace taucert::io {

using json = nlohmann::ordered_json;

json to_json(const GaussRat& g);  // "p/q" or "a+bi" string
json pair_json(const GaussRat& g);  // ["re","im"]
GaussRat gauss_from(const json& j);  // string, integer, or [re, im]

json to_json(const TPoly& p);  // [[re, im], ...] from degree 0
TPoly tpoly_from(const json& j);
json xpoly_json(const XPoly& p);  // ["c0", "c1", ...]
XPoly xpoly_from(const json& j);

json to_json(const RatFun& f);  // {"var","num","den"}
RatFun ratfun_from(const json& j);  // object, or a constant

json to_json(const Series& s);
Series series_from(const json& j);

json to_json(const MoebiusShift& s);
MoebiusShift shift_from(const json& j);

json to_json(const TauEquation& eq);
TauEquation tau_equation_from(const json& j);

json to_json(const EgfEquation& eq);
EgfEquation egf_equation_from(const json& j);

json to_json(const Certificate& c);
json to_json(const ResidualReport& r);
json to_json(const std::optional<TelescoperWitness>& w, int checked_n);
json to_json(const Specialization& sp);

json error_json(const std::string& code, const std::string& message);

/// Parses text, mapping syntax errors to Error(Parse).
json parse(const std::string& text, const std::string& what);
json read_file(const std::string& path);

}  // namespace taucert::io
