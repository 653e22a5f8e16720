#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "taucert/certifier.hpp"
#include "taucert/egf_compiler.hpp"

namespace taucert {

/// Parameter values. A missing x on an entry that uses x means symbolic x.
struct Specialization {
  std::optional<GaussRat> x;
  std::optional<GaussRat> gamma;
  std::string describe() const;
};

struct ReferenceTerms {
  std::string label;
  Specialization params;
  std::vector<GaussRat> terms;
  std::size_t offset = 0;  // terms[k] is the OGF coefficient at offset + k * stride
  std::size_t stride = 1;
};

struct CatalogEntry {
  std::string name;
  std::string title;
  std::string kind;    // "first-order" for the parametric families, "combinatorial" otherwise
  std::string source;  // OEIS numbers and classical references
  bool uses_x = false;
  bool uses_gamma = false;
  MoebiusShift shift;
  int order = 1;
  std::vector<Specialization> specializations;  // checked by verify-all
  std::vector<GaussRat> gamma_defaults;
  std::vector<ReferenceTerms> references;

  // EGF from series primitives (x symbolic when the XPoly is the variable).
  std::function<Series(const XPoly& x, const GaussRat& gamma, std::size_t N)> egf;
  // sum_k coeffs[k] tau^k(F) = rhs with coefficients polynomial in t and x.
  std::function<TauTemplate(const GaussRat& gamma)> equation;
  // Linear EGF differential equation in u = e^{lambda t}.
  std::function<EgfEquation(const GaussRat& gamma)> egf_equation;
};

const std::vector<CatalogEntry>& list_entries();
/// Throws UnknownEntry.
const CatalogEntry& find_entry(const std::string& name);

/// x values where the top coefficient of the equation vanishes identically in t.
std::vector<GaussRat> singular_x(const CatalogEntry& e, const GaussRat& gamma);

/// Validates and completes parameters (default gamma); throws SingularParameter / Precondition.
Specialization resolve(const CatalogEntry& e, const Specialization& sp);

Series build_egf(const std::string& name, const Specialization& sp, std::size_t N);
Series build_ogf(const std::string& name, const Specialization& sp, std::size_t N);
TauTemplate entry_template(const std::string& name, const Specialization& sp);
/// Specialized equation (x required when used).
TauEquation entry_equation(const std::string& name, const Specialization& sp);

/// OGF substituted into the stored equation, exactness to order N.
ResidualReport verify_entry(const std::string& name, const Specialization& sp, std::size_t N);

/// tau(w) = a w + f with w the OGF; only for first-order entries with specialized x.
FirstOrderProblem certification_problem(const std::string& name, const Specialization& sp, std::size_t N);

}  // namespace taucert
