#pragma once

// Monomials of R = A[x_1..x_n], module monomials of L = R e_1 + ... + R e_r,
// term orders on them, and sorted-term elements of L.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdvr/chainring.hpp"

namespace tdvr {

class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// Throws PreconditionError when an exponent would leave 32 bits.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_into(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const noexcept { return exps_ == o.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
};

struct ModuleMonomial {
  Monomial mono;
  std::uint32_t component = 0;  ///< 0-based; printed as e<component+1>

  bool operator==(const ModuleMonomial& o) const noexcept {
    return component == o.component && mono == o.mono;
  }
};

/// X | Y: same component and exponentwise X <= Y.
bool divides(const ModuleMonomial& x, const ModuleMonomial& y);
/// The monomial q with Y = q X. Throws PreconditionError unless X | Y.
Monomial quotient_mono(const ModuleMonomial& x, const ModuleMonomial& y);
inline ModuleMonomial operator*(const Monomial& q, const ModuleMonomial& x) {
  return {q * x.mono, x.component};
}

enum class MonomialOrder : std::uint8_t { Lex, DegLex, DegRevLex };
enum class ModuleMode : std::uint8_t { POT, TOP };

/// A term order on module monomials: a monomial order combined with a
/// component priority either before (POT) or after (TOP) the monomial.
/// Optional block labels put whole groups of components above others;
/// they are used for elimination and are not part of the textual syntax.
class TermOrder {
 public:
  /// `priority` lists 0-based components from highest to lowest and must be
  /// a permutation of [0, r). `blocks`, if nonempty, gives a block label per
  /// component; a smaller label ranks higher.
  TermOrder(MonomialOrder mono, ModuleMode mode, std::vector<std::uint32_t> priority,
            std::vector<std::uint32_t> blocks = {});

  /// degrevlex, POT, priority (1, ..., r).
  static TermOrder default_for_rank(std::uint32_t rank);

  MonomialOrder monomial_order() const noexcept { return mono_; }
  ModuleMode module_mode() const noexcept { return mode_; }
  const std::vector<std::uint32_t>& priority() const noexcept { return priority_; }
  const std::vector<std::uint32_t>& blocks() const noexcept { return blocks_; }
  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(priority_.size()); }

  std::strong_ordering compare_monomials(const Monomial& x, const Monomial& y) const;
  /// Throws PreconditionError on a dimension mismatch.
  std::strong_ordering compare(const ModuleMonomial& x, const ModuleMonomial& y) const;

  /// e.g. "degrevlex pot 1 2"; the same syntax is accepted by parse_term_order.
  std::string describe() const;

  bool operator==(const TermOrder& o) const noexcept {
    return mono_ == o.mono_ && mode_ == o.mode_ && priority_ == o.priority_ && blocks_ == o.blocks_;
  }

 private:
  MonomialOrder mono_;
  ModuleMode mode_;
  std::vector<std::uint32_t> priority_;
  std::vector<std::uint32_t> position_;  // component -> rank in priority (0 = highest)
  std::vector<std::uint32_t> blocks_;
};

/// The ambient free module L together with its coefficient ring, variable
/// names and term order. Elements share it through ModulePtr.
class FreeModule {
 public:
  FreeModule(RingSpec ring, std::vector<std::string> var_names, std::uint32_t rank, TermOrder order);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  std::uint32_t rank() const noexcept { return rank_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<std::string>& var_names() const noexcept { return vars_; }

  bool operator==(const FreeModule& o) const noexcept {
    return ring_ == o.ring_ && vars_ == o.vars_ && rank_ == o.rank_ && order_ == o.order_;
  }

 private:
  RingSpec ring_;
  std::vector<std::string> vars_;
  std::uint32_t rank_;
  TermOrder order_;
};

using ModulePtr = std::shared_ptr<const FreeModule>;

ModulePtr make_module(RingSpec ring, std::vector<std::string> var_names, std::uint32_t rank,
                      std::optional<TermOrder> order = std::nullopt);
/// Same variables, rank and order over a different ring.
ModulePtr with_ring(const ModulePtr& m, const RingSpec& ring);
/// Same ring and variables, different order.
ModulePtr with_order(const ModulePtr& m, const TermOrder& order);

bool same_module(const ModulePtr& a, const ModulePtr& b) noexcept;

struct Term {
  Scalar coeff;
  ModuleMonomial mono;
};

/// f = a_1 X_1 + ... + a_s X_s with nonzero a_i and X_1 > ... > X_s.
class Element {
 public:
  explicit Element(ModulePtr module) : module_(std::move(module)) {}
  /// Sorts, merges equal monomials and drops zero coefficients.
  Element(ModulePtr module, std::vector<Term> terms);

  static Element monomial(ModulePtr module, const Scalar& c, ModuleMonomial x);

  const ModulePtr& module() const noexcept { return module_; }
  const RingSpec& ring() const noexcept { return module_->ring(); }
  const std::vector<Term>& terms() const& noexcept { return terms_; }
  std::vector<Term> terms() && noexcept { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Leading data; each throws PreconditionError on zero.
  const ModuleMonomial& lp() const;
  const Scalar& lc() const;
  Element lt() const;

  /// Coefficient at X (zero if absent).
  Scalar coefficient(const ModuleMonomial& x) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  /// c * f
  Element scaled(const Scalar& c) const;
  /// c * q * f
  Element mul_term(const Scalar& c, const Monomial& q) const;
  /// f - c * q * g in a single merge pass.
  Element minus_multiple(const Scalar& c, const Monomial& q, const Element& g) const;
  /// Drops the leading term.
  Element tail() const;

  /// Largest total x-degree among terms; 0 for zero.
  std::uint64_t max_degree() const noexcept;
  /// Common x-degree of all terms, if there is one (absent for zero).
  std::optional<std::uint64_t> x_degree() const noexcept;
  /// Smallest coefficient valuation; a for zero.
  std::uint32_t min_valuation() const noexcept;

  bool operator==(const Element& o) const;

 private:
  Element(ModulePtr module, std::vector<Term> terms, bool /*sorted*/)
      : module_(std::move(module)), terms_(std::move(terms)) {}
  void require_compatible(const Element& o) const;

  ModulePtr module_;
  std::vector<Term> terms_;
};

/// Degree-i part in the pi-grading (EquiChar only): keeps digit i of every
/// coefficient. Throws PreconditionError for MixedChar or i >= a.
Element degree_part(const Element& f, std::uint32_t i);

/// The pi-degree i if f is nonzero and equals its own degree-i part;
/// absent otherwise, including for zero. EquiChar only.
std::optional<std::uint32_t> is_homogeneous(const Element& f);

/// All monomials in n variables of total degree d, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t d);
/// All module monomials of total x-degree d over every component.
std::vector<ModuleMonomial> module_monomials_of_degree(const FreeModule& m, std::uint64_t d);

}  // namespace tdvr
