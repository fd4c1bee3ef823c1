#include "tdvr/oracle.hpp"

#include <algorithm>

#include "tdvr/errors.hpp"

namespace tdvr {

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(const RingSpec& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Smith

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] -= f * row[src]
void row_axpy(Matrix& m, std::size_t dst, const Scalar& f, std::size_t src) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m.at(src, j).is_zero()) m.at(dst, j) -= f * m.at(src, j);
}

// col[dst] -= f * col[src]
void col_axpy(Matrix& m, std::size_t dst, const Scalar& f, std::size_t src) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.at(i, src).is_zero()) m.at(i, dst) -= f * m.at(i, src);
}

void scale_row(Matrix& m, std::size_t r, const Scalar& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= f;
}

}  // namespace

SmithForm smith_over_chain_ring(const Matrix& input) {
  const RingSpec& ring = input.ring();
  const std::size_t rows = input.rows(), cols = input.cols();
  SmithForm s{{}, Matrix::identity(ring, rows), Matrix::identity(ring, cols), Matrix::identity(ring, cols), input};
  Matrix& d = s.diagonal;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t pi = rows, pj = cols;
    std::uint32_t best = ring.length();
    for (std::size_t i = k; i < rows && best > 0; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const std::uint32_t v = d.at(i, j).valuation();
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (pi == rows) break;
    swap_rows(d, k, pi);
    swap_rows(s.left, k, pi);
    swap_cols(d, k, pj);
    swap_cols(s.right, k, pj);
    swap_rows(s.right_inverse, k, pj);

    const Scalar u_inv = inverse(unit_part(d.at(k, k)));
    scale_row(d, k, u_inv);
    scale_row(s.left, k, u_inv);
    const Scalar pivot = d.at(k, k);

    for (std::size_t i = k + 1; i < rows; ++i) {
      if (d.at(i, k).is_zero()) continue;
      const Scalar f = exact_divide(d.at(i, k), pivot);
      row_axpy(d, i, f, k);
      row_axpy(s.left, i, f, k);
    }
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (d.at(k, j).is_zero()) continue;
      const Scalar f = exact_divide(d.at(k, j), pivot);
      col_axpy(d, j, f, k);
      col_axpy(s.right, j, f, k);
      // inverse of the column operation: row k += f * row j
      row_axpy(s.right_inverse, k, -f, j);
    }
    s.exponents.push_back(best);
  }
  return s;
}

// ---------------------------------------------------------------- invariants

std::size_t ModuleInvariants::free_rank() const {
  return static_cast<std::size_t>(std::count(exponents.begin(), exponents.end(), length));
}

bool ModuleInvariants::is_free() const { return free_rank() == exponents.size(); }

std::uint64_t ModuleInvariants::total_length() const {
  std::uint64_t s = 0;
  for (auto e : exponents) s += e;
  return s;
}

namespace {

void require_homogeneous(const std::vector<Element>& gens) {
  if (gens.empty()) throw PreconditionError("oracle needs at least one generator");
  for (const auto& g : gens) {
    if (g.is_zero()) throw PreconditionError("oracle generators must be nonzero");
    if (!g.x_degree()) throw PreconditionError("oracle needs x-homogeneous generators");
    if (!same_module(g.module(), gens.front().module())) throw PreconditionError("generators live in different modules");
  }
}

std::size_t column_of(const std::vector<ModuleMonomial>& basis, const ModuleMonomial& x) {
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (basis[c] == x) return c;
  throw ContractViolation("monomial outside the degree slice");
}

std::vector<Scalar> coordinates(const Element& f, const std::vector<ModuleMonomial>& basis) {
  std::vector<Scalar> v(basis.size(), Scalar(f.ring()));
  for (const auto& t : f.terms()) v[column_of(basis, t.mono)] = t.coeff;
  return v;
}

}  // namespace

DegreeSlice build_slice(const std::vector<Element>& gens, std::uint64_t degree) {
  require_homogeneous(gens);
  const FreeModule& mod = *gens.front().module();
  DegreeSlice s{degree, module_monomials_of_degree(mod, degree), {}, {}, Matrix(mod.ring(), 0, 0)};
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::uint64_t dk = *gens[k].x_degree();
    if (dk > degree) continue;
    for (const auto& mu : monomials_of_degree(mod.nvars(), degree - dk)) {
      rows.push_back(coordinates(gens[k].mul_term(Scalar::one(mod.ring()), mu), s.basis));
      s.sources.push_back(k);
      s.shifts.push_back(mu);
    }
  }
  s.matrix = Matrix(mod.ring(), rows.size(), s.basis.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < s.basis.size(); ++j) s.matrix.at(i, j) = rows[i][j];
  return s;
}

ModuleInvariants quotient_invariants(const std::vector<Element>& gens, std::uint64_t degree) {
  const DegreeSlice slice = build_slice(gens, degree);
  const std::uint32_t a = slice.matrix.ring().length();
  const SmithForm sf = smith_over_chain_ring(slice.matrix);
  ModuleInvariants inv;
  inv.length = a;
  for (auto e : sf.exponents)
    if (e > 0) inv.exponents.push_back(e);
  for (std::size_t k = sf.exponents.size(); k < slice.basis.size(); ++k) inv.exponents.push_back(a);
  std::sort(inv.exponents.rbegin(), inv.exponents.rend());
  return inv;
}

OracleFlatness oracle_is_flat(const std::vector<Element>& gens, std::uint64_t degree_bound) {
  OracleFlatness out;
  out.degree_bound = degree_bound;
  for (std::uint64_t d = 0; d <= degree_bound; ++d) {
    out.per_degree.push_back(quotient_invariants(gens, d));
    if (!out.per_degree.back().is_free() && out.flat) {
      out.flat = false;
      out.first_non_free_degree = d;
    }
  }
  return out;
}

bool oracle_membership(const Element& f, const std::vector<Element>& gens, std::uint64_t /*slack*/) {
  require_homogeneous(gens);
  if (f.is_zero()) return true;
  const auto d = f.x_degree();
  if (!d) throw PreconditionError("oracle membership needs an x-homogeneous element");
  const DegreeSlice slice = build_slice(gens, *d);
  const SmithForm sf = smith_over_chain_ring(slice.matrix);
  const std::vector<Scalar> v = coordinates(f, slice.basis);
  // f in rowspace(A)  <=>  f Q in rowspace(D)
  for (std::size_t j = 0; j < slice.basis.size(); ++j) {
    Scalar w(f.ring());
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) w += v[k] * sf.right.at(k, j);
    if (w.is_zero()) continue;
    if (j >= sf.exponents.size() || w.valuation() < sf.exponents[j]) return false;
  }
  return true;
}

std::vector<Element> oracle_gr(const std::vector<Element>& gens, std::uint32_t i, std::uint64_t degree,
                               const ModulePtr& target) {
  require_homogeneous(gens);
  const RingSpec& src = gens.front().ring();
  if (target->ring().flavor() != Flavor::EquiChar || target->ring().p() != src.p() ||
      target->ring().length() != src.length() || target->rank() != gens.front().module()->rank() ||
      target->nvars() != gens.front().module()->nvars())
    throw PreconditionError("oracle_gr target must be F_p[pi]/(pi^a) over the same monomials");
  std::vector<Element> out;
  if (i >= src.length()) return out;
  const DegreeSlice slice = build_slice(gens, degree);
  const SmithForm sf = smith_over_chain_ring(slice.matrix);
  const Scalar layer = Scalar::uniformizer_power(target->ring(), i);
  // gr^i(M)_d is spanned by the reductions of the rows b_k of Q^{-1} with e_k <= i
  for (std::size_t k = 0; k < sf.exponents.size(); ++k) {
    if (sf.exponents[k] > i) continue;
    std::vector<Term> terms;
    for (std::size_t j = 0; j < slice.basis.size(); ++j) {
      const std::uint32_t c = sf.right_inverse.at(k, j).digit(0);
      if (c != 0) terms.push_back({Scalar(target->ring(), c) * layer, slice.basis[j]});
    }
    out.emplace_back(target, std::move(terms));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> layer_vectors(const std::vector<Element>& elems, std::uint32_t i,
                                                      const std::vector<ModuleMonomial>& basis) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& e : elems) {
    std::vector<std::uint32_t> v(basis.size(), 0);
    for (const auto& t : e.terms()) v[column_of(basis, t.mono)] = t.coeff.digit(i);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Scalar inv = inverse(Scalar(RingSpec(p, 1, Flavor::MixedChar), rows[rank][c]));
    const std::uint64_t iv = inv.payload();
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * iv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (p - f) * rows[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint32_t> monomial_key(const ModuleMonomial& x) {
  std::vector<std::uint32_t> k = x.mono.exponents();
  k.push_back(x.component);
  return k;
}

std::map<std::vector<std::uint32_t>, std::uint32_t> oracle_leading_valuations(const std::vector<Element>& gens,
                                                                              std::uint64_t max_degree,
                                                                              std::uint64_t slack) {
  if (gens.empty()) throw PreconditionError("oracle needs at least one generator");
  const FreeModule& mod = *gens.front().module();
  const RingSpec& ring = mod.ring();
  const std::uint64_t bound = max_degree + slack;
  std::vector<ModuleMonomial> cols;
  for (std::uint64_t d = 0; d <= bound; ++d) {
    auto layer = module_monomials_of_degree(mod, d);
    cols.insert(cols.end(), layer.begin(), layer.end());
  }
  std::sort(cols.begin(), cols.end(),
            [&](const ModuleMonomial& a, const ModuleMonomial& b) { return mod.order().compare(a, b) > 0; });
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index[monomial_key(cols[c])] = c;

  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::uint64_t dg = g.max_degree();
    for (std::uint64_t e = 0; dg + e <= bound; ++e)
      for (const auto& mu : monomials_of_degree(mod.nvars(), e)) {
        std::vector<Scalar> row(cols.size(), Scalar(ring));
        for (const auto& t : g.terms()) row[index.at(monomial_key(mu * t.mono))] = t.coeff;
        rows.push_back(std::move(row));
      }
  }

  std::map<std::vector<std::uint32_t>, std::uint32_t> lead;
  for (std::uint64_t d = 0; d <= max_degree; ++d)
    for (const auto& x : module_monomials_of_degree(mod, d)) lead[monomial_key(x)] = ring.length();

  // echelon by columns in descending order; the annihilator multiple of each
  // pivot row stays in the pool so the pool spans exactly the elements that
  // vanish on all processed columns
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t piv = rows.size();
    std::uint32_t best = ring.length();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint32_t v = rows[r][c].valuation();
      if (v < best) {
        best = v;
        piv = r;
      }
    }
    if (piv == rows.size()) continue;
    std::vector<Scalar> prow = std::move(rows[piv]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
    const Scalar pivot = prow[c];
    for (auto& row : rows) {
      if (row[c].is_zero()) continue;
      const Scalar f = exact_divide(row[c], pivot);
      for (std::size_t j = c; j < cols.size(); ++j)
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
    }
    if (best > 0) {
      const Scalar w = Scalar::uniformizer_power(ring, ring.length() - best);
      std::vector<Scalar> ann(cols.size(), Scalar(ring));
      bool nonzero = false;
      for (std::size_t j = c + 1; j < cols.size(); ++j) {
        ann[j] = w * prow[j];
        nonzero = nonzero || !ann[j].is_zero();
      }
      if (nonzero) rows.push_back(std::move(ann));
    }
    auto it = lead.find(monomial_key(cols[c]));
    if (it != lead.end()) it->second = best;
  }
  return lead;
}

}  // namespace tdvr
