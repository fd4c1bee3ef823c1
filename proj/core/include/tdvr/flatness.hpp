#pragma once

// The m_X invariant of a Groebner basis, normal forms in the transversal
// T_G = (+)_X A^{<m_X} X~, and the flatness / rank criteria built on it.

#include <cstdint>
#include <optional>
#include <vector>

#include "tdvr/groebner.hpp"

namespace tdvr {

struct MXEntry {
  ModuleMonomial lead;    ///< X_j
  std::uint32_t valuation;  ///< v(c_j)
};

/// m_X = min { v(c_j) : X_j | X }, or a when no X_j divides X.
class MXTable {
 public:
  MXTable(std::vector<MXEntry> entries, std::uint32_t length) : entries_(std::move(entries)), length_(length) {}

  const std::vector<MXEntry>& entries() const noexcept { return entries_; }
  std::uint32_t length() const noexcept { return length_; }
  std::uint32_t m_of(const ModuleMonomial& x) const;
  /// Smallest index j attaining m_X (X_j | X and v_j = m_X); absent if m_X = a.
  std::optional<std::size_t> representative(const ModuleMonomial& x) const;
  /// Largest total degree among the X_j.
  std::uint64_t max_lead_degree() const noexcept;

 private:
  std::vector<MXEntry> entries_;
  std::uint32_t length_;
};

/// Requires a Groebner basis.
MXTable build_mx_table(const Basis& g);

/// The data fixing T_G: the m table plus, per basis element, h_j with
/// g_j = c_j h_j when c_j divides every coefficient of g_j.
/// X~ = x_j h_j for the representative j when 0 < m_X < a and h_j exists;
/// X~ = X otherwise.
class NormalFormStructure {
 public:
  explicit NormalFormStructure(const Basis& g);

  const Basis& basis() const noexcept { return basis_; }
  const MXTable& table() const noexcept { return table_; }
  const std::optional<Element>& cofactor_free_part(std::size_t j) const { return h_[j]; }
  /// X~ as an element of L.
  Element tilde(const ModuleMonomial& x) const;

 private:
  Basis basis_;
  MXTable table_;
  std::vector<std::optional<Element>> h_;
};

/// Coordinates of the unique element of T_G congruent to f modulo M: the
/// returned element carries c_X at X, meaning sum_X c_X X~, with every
/// c_X in A^{<m_X}.
Element normal_form(const Element& f, const NormalFormStructure& s);
/// Same, rejecting a basis that is not the one `s` was built from.
Element normal_form(const Element& f, const NormalFormStructure& s, const Basis& g);
/// sum_X c_X X~ as an element of L.
Element expand_normal_form(const Element& coords, const NormalFormStructure& s);
/// Module action on T_G coordinates: c * c_X truncated to A^{<m_X}.
Element scale_in_transversal(const Element& coords, const Scalar& c, const NormalFormStructure& s);
/// Coordinatewise sum (EquiChar: stays in T_G).
Element add_in_transversal(const Element& x, const Element& y, const NormalFormStructure& s);

struct RankInfo {
  bool infinite = false;
  std::uint64_t count = 0;                   ///< valid when !infinite
  std::vector<std::uint64_t> per_degree;     ///< #{X : deg X = d, m_X = a}, d = 0..D
};

struct FlatnessReport {
  bool flat = false;
  bool condition_b = false;  ///< m_X in {0, a} on the finite witness set
  bool condition_c = false;  ///< every X_j has a unit-lc X_j' dividing it
  std::optional<bool> condition_c_prime;  ///< minimal bases only: all lcs units
  std::optional<std::size_t> witness;     ///< index violating (c) when not flat
  std::optional<ModuleMonomial> witness_monomial;  ///< an X with 0 < m_X < a
  std::optional<RankInfo> rank;           ///< when flat
  std::uint64_t degree_bound = 0;         ///< D used for per-degree data
};

/// Default D: (max total degree of the X_j) + 2.
std::uint64_t default_degree_bound(const MXTable& t);

/// Decides flatness of L/M from a Groebner basis via condition (c),
/// evaluates (b) on every monomial up to the largest X_j degree, and (c')
/// for minimal bases. Throws ContractViolation if they disagree.
FlatnessReport is_flat(const Basis& g, std::optional<std::uint64_t> degree_bound = std::nullopt);

/// #{X : m_X = a}; "infinite" when some component lacks a pure power of
/// some variable among its leading monomials. Throws PreconditionError on
/// a non-flat module.
RankInfo rank(const Basis& g, std::optional<std::uint64_t> degree_bound = std::nullopt);
/// The staircase count without the flatness precondition.
RankInfo standard_monomial_count(const MXTable& t, const FreeModule& m, std::uint64_t degree_bound);

/// rows[i][d] = #{X : deg X = d, m_X > i} for pi-degree i < a, d <= D.
/// Requires a homogeneous Groebner basis over EquiChar.
std::vector<std::vector<std::uint64_t>> graded_dimensions(const Basis& g, std::uint64_t degree_bound);

}  // namespace tdvr
