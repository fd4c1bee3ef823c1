#pragma once

// Passage from a module over a truncated DVR to its associated graded
// module over F_p[pi]/(pi^a), and the flatness test that runs through it.

#include <cstdint>
#include <optional>
#include <vector>

#include "tdvr/flatness.hpp"
#include "tdvr/groebner.hpp"

namespace tdvr {

/// F_p[pi]/(pi^a) with the variables, rank and order of `m`.
ModulePtr graded_module_of(const ModulePtr& m);

/// Terms of least valuation v, each coefficient replaced by its digit v
/// times pi^v, as an element of `target`. Throws PreconditionError on zero.
Element initial_form(const Element& g, const ModulePtr& target);

struct StandardBasisElement {
  Element source;         ///< element of M
  std::uint32_t level;    ///< least coefficient valuation of source
  Element initial;        ///< its initial form in gr(L)
};

/// Elements of M whose initial forms generate gr(M).
struct StandardBasis {
  ModulePtr source_module;
  ModulePtr graded_module;
  std::vector<StandardBasisElement> elements;
  std::size_t pairs_processed = 0;

  std::vector<Element> initial_forms() const;
  std::vector<Element> sources() const;
};

/// Level 0 is a Groebner basis of M; level i (0 < i < a) is a generating
/// set of M cap w^i L obtained by eliminating in L (+) L with generators
/// (g, g) and (w^i e_l, 0). Keeps every element whose least valuation
/// equals its level and whose initial form is new. Throws PairBudgetExceeded like buchberger.
StandardBasis standard_basis(const std::vector<Element>& generators, const CompletionOptions& opts = {});

/// F_p-dimension check of the gr(M) slices spanned by the standard basis
/// against oracle_gr for every i < a and d <= degree_bound. Requires
/// x-homogeneous generators. Throws ContractViolation naming (i, d) on the
/// first mismatch.
void verify_generation(const StandardBasis& sb, const std::vector<Element>& generators, std::uint64_t degree_bound);

/// F_p-span of the standard basis in gr^i(L)_d, as coordinate vectors over
/// module_monomials_of_degree(d).
std::vector<std::vector<std::uint32_t>> standard_span(const StandardBasis& sb, std::uint32_t i, std::uint64_t degree);

struct TdvrFlatness {
  StandardBasis standard;
  Basis graded_groebner;  ///< completion of the initial forms
  Basis homogenized;
  Basis minimal;
  FlatnessReport report;
};

/// L/M is flat over A iff gr(L)/gr(M) is flat over F_p[pi]/(pi^a); the
/// latter is decided on a minimal homogeneous Groebner basis of gr(M).
TdvrFlatness flatness_over_tdvr(const std::vector<Element>& generators, const CompletionOptions& opts = {},
                                std::optional<std::uint64_t> degree_bound = std::nullopt);

}  // namespace tdvr
