#pragma once

// Brute-force verification by per-degree linear algebra over the chain ring.
//
// Everything here depends only on the chainring and freemod layers. For
// x-homogeneous generators, the degree-d piece of M is spanned by the
// monomial multiples of the generators landing in degree d, so membership,
// module structure and gr(M) of each slice are exact finite computations.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tdvr/freemod.hpp"

namespace tdvr {

class Matrix {
 public:
  Matrix(const RingSpec& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar(ring)) {}
  static Matrix identity(const RingSpec& ring, std::size_t n);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// left * input * right == diagonal, with diagonal entries w^{e_k}
/// (k < exponents.size()) in ascending order and zeros elsewhere.
struct SmithForm {
  std::vector<std::uint32_t> exponents;
  Matrix left;
  Matrix right;
  Matrix right_inverse;
  Matrix diagonal;
};

/// Pivot rule: least valuation in the remaining block, ties row-major.
SmithForm smith_over_chain_ring(const Matrix& m);

/// Finitely generated A-module (+)_i A/(w^{e_i}).
struct ModuleInvariants {
  std::vector<std::uint32_t> exponents;  ///< descending, each in [1, a]
  std::uint32_t length = 0;              ///< a
  std::size_t free_rank() const;
  bool is_free() const;
  /// Composition length sum_i e_i.
  std::uint64_t total_length() const;
};

struct DegreeSlice {
  std::uint64_t degree;
  std::vector<ModuleMonomial> basis;
  /// Row r is shifts[r] * generators[sources[r]].
  std::vector<std::size_t> sources;
  std::vector<Monomial> shifts;
  Matrix matrix;
};

/// Throws PreconditionError for empty input, zero or non-x-homogeneous generators.
DegreeSlice build_slice(const std::vector<Element>& generators, std::uint64_t degree);

ModuleInvariants quotient_invariants(const std::vector<Element>& generators, std::uint64_t degree);

struct OracleFlatness {
  bool flat = true;
  std::uint64_t degree_bound = 0;
  std::vector<ModuleInvariants> per_degree;  ///< index d = 0..D
  std::optional<std::uint64_t> first_non_free_degree;
};

OracleFlatness oracle_is_flat(const std::vector<Element>& generators, std::uint64_t degree_bound);

/// Exact for x-homogeneous f and generators; `slack` is accepted but unused there.
bool oracle_membership(const Element& f, const std::vector<Element>& generators, std::uint64_t slack = 0);

/// F_p-basis of gr^i(M)_d = (M_d cap w^i L_d) / (M_d cap w^{i+1} L_d),
/// returned as w^i-homogeneous elements of the graded module `target`
/// (over F_p[pi]/(pi^a), same variables, rank and order).
std::vector<Element> oracle_gr(const std::vector<Element>& generators, std::uint32_t i, std::uint64_t degree,
                               const ModulePtr& target);

/// Coordinates mod p of the pi^i layer of each element over `basis`.
std::vector<std::vector<std::uint32_t>> layer_vectors(const std::vector<Element>& elems, std::uint32_t i,
                                                      const std::vector<ModuleMonomial>& basis);

/// Rank over F_p of a list of coordinate vectors.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// Degree-truncated leading terms of <F>: for every module monomial X of
/// degree <= max_degree, the least valuation of lc(f) over f in the
/// A-span of all monomial multiples of F of degree <= max_degree + slack
/// with lp(f) = X (a if none). Works for inhomogeneous F; it only
/// under-approximates Lt(M) when the slack is too small.
std::map<std::vector<std::uint32_t>, std::uint32_t> oracle_leading_valuations(const std::vector<Element>& generators,
                                                                              std::uint64_t max_degree,
                                                                              std::uint64_t slack);

/// Key used by oracle_leading_valuations: exponents followed by the component.
std::vector<std::uint32_t> monomial_key(const ModuleMonomial& x);

}  // namespace tdvr
