#pragma once

// Reduction, Buchberger completion over a chain ring (S-pairs plus
// annihilator pairs), minimalization and homogenization of Groebner bases.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tdvr/freemod.hpp"

namespace tdvr {

enum class BasisStatus : std::uint8_t { Raw, Groebner, MinimalGroebner };

const char* to_string(BasisStatus s) noexcept;

/// A finite list of nonzero elements of one free module.
class Basis {
 public:
  /// Throws PreconditionError on zero elements or mixed modules.
  Basis(ModulePtr module, std::vector<Element> elements, BasisStatus status = BasisStatus::Raw);

  const ModulePtr& module() const noexcept { return module_; }
  const std::vector<Element>& elements() const& noexcept { return elements_; }
  std::vector<Element> elements() && noexcept { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t j) const { return elements_[j]; }
  BasisStatus status() const noexcept { return status_; }
  bool at_least_groebner() const noexcept { return status_ != BasisStatus::Raw; }
  /// Every element pi-homogeneous (always false over MixedChar).
  bool homogeneous() const noexcept { return homogeneous_; }

  bool operator==(const Basis& o) const;

 private:
  ModulePtr module_;
  std::vector<Element> elements_;
  BasisStatus status_;
  bool homogeneous_;
};

/// One application of the reduction relation: h = f - multiplier * shift * basis[reducer].
struct ReductionStep {
  std::size_t reducer;
  Monomial shift;
  Scalar multiplier;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Element final;
};

/// A single top-reduction of f by the eligible reducer of least leading
/// coefficient valuation (ties by index). Absent if none applies.
/// Throws PreconditionError for f == 0.
std::optional<std::pair<Element, ReductionStep>> reduce_step(const Element& f, const std::vector<Element>& reducers);
std::optional<std::pair<Element, ReductionStep>> reduce_step(const Element& f, const Basis& basis);

/// Full reduction: top-reduce until stuck, move the leading term aside and
/// continue with the tail. The final element has no reducible term.
ReductionTrace reduce_to_minimal(const Element& f, const std::vector<Element>& reducers);
ReductionTrace reduce_to_minimal(const Element& f, const Basis& basis);

/// f in <G> iff f reduces to 0. Requires a Groebner basis.
bool is_member(const Element& f, const Basis& basis);

/// S-pair u_j w^{m-v_i} (X/X_i) g_i - u_i w^{m-v_j} (X/X_j) g_j with
/// X = lcm of leading monomials and m = max of lc valuations; absent when
/// the leading components differ.
std::optional<Element> s_pair(const Element& gi, const Element& gj);

/// w^{a - v(lc g)} g, absent if lc(g) is a unit. May be zero.
std::optional<Element> ann_pair(const Element& g);

/// Multiplies g by unit_part(lc g)^{-1} so that lc = w^{v}.
Element normalize_leading(const Element& g);

enum class PairStrategy : std::uint8_t {
  Normal,  ///< smallest lcm first, ties by index pair
  Fifo,    ///< creation order
};

struct CompletionOptions {
  std::size_t pair_budget = 10000;
  PairStrategy strategy = PairStrategy::Normal;
  /// Product criterion; only ever applied for rank 1 and unit lcs.
  bool coprime_criterion = true;
  /// Keep a cofactor row per basis element expressing it in the inputs.
  bool track_cofactors = false;
};

struct CompletionStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

struct CompletionResult {
  Basis basis;
  CompletionStats stats;
  /// With track_cofactors: row j lives in a free module of rank #inputs
  /// (component k = coefficient of input k) and satisfies
  /// basis[j] == sum_k row_j[k] * input_k.
  std::vector<Element> cofactors;
  ModulePtr cofactor_module;
};

/// Buchberger completion. Output contains the normalized nonzero inputs
/// (in order) followed by fully reduced, normalized pair remainders.
/// Throws PreconditionError if every input is zero, PairBudgetExceeded
/// if the budget runs out.
CompletionResult buchberger_full(const std::vector<Element>& generators, const CompletionOptions& opts = {});
Basis buchberger(const std::vector<Element>& generators, const CompletionOptions& opts = {});

/// Drops elements that strictly reduce modulo the others until none does.
Basis minimalize(const Basis& g);

/// Replaces each g by the degree-v(lc g) part of u*g (u the inverse unit
/// part of lc g), and checks the result still lies in <G>. EquiChar only.
/// Throws PreconditionError if the generated module is not graded.
Basis homogenize_basis(const Basis& g);

/// Checks the completion criterion directly: every S-pair and every
/// annihilator pair reduces to zero. Independent of how G was produced.
struct CertificateFailure {
  std::size_t i;
  std::size_t j;  ///< == i for an annihilator pair
  Element remainder;
};
std::optional<CertificateFailure> check_groebner_certificate(const std::vector<Element>& g);

/// sum_k row[k] * inputs[k]
Element apply_cofactors(const Element& row, const std::vector<Element>& inputs);

}  // namespace tdvr
