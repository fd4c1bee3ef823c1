#include "tdvr/freemod.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tdvr/errors.hpp"

namespace tdvr {

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.nvars() != nvars()) throw PreconditionError("monomial dimension mismatch");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t s = std::uint64_t{exps_[i]} + o.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) throw PreconditionError("exponent overflow");
    e[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (o.nvars() != nvars()) throw PreconditionError("monomial dimension mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_into(const Monomial& o) const {
  if (!divides(o)) throw PreconditionError("monomial does not divide");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = o.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
  if (o.nvars() != nvars()) throw PreconditionError("monomial dimension mismatch");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size() && i < o.exps_.size(); ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

bool divides(const ModuleMonomial& x, const ModuleMonomial& y) {
  return x.component == y.component && x.mono.divides(y.mono);
}

Monomial quotient_mono(const ModuleMonomial& x, const ModuleMonomial& y) {
  if (!divides(x, y)) throw PreconditionError("quotient_mono: X does not divide Y");
  return x.mono.quotient_into(y.mono);
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(MonomialOrder mono, ModuleMode mode, std::vector<std::uint32_t> priority,
                     std::vector<std::uint32_t> blocks)
    : mono_(mono), mode_(mode), priority_(std::move(priority)), blocks_(std::move(blocks)) {
  const std::size_t r = priority_.size();
  if (r == 0) throw PreconditionError("term order needs at least one component");
  position_.assign(r, static_cast<std::uint32_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t c = priority_[i];
    if (c >= r || position_[c] != r) throw PreconditionError("component priority is not a permutation");
    position_[c] = static_cast<std::uint32_t>(i);
  }
  if (!blocks_.empty() && blocks_.size() != r) throw PreconditionError("block labels must cover every component");
}

TermOrder TermOrder::default_for_rank(std::uint32_t rank) {
  std::vector<std::uint32_t> prio(rank);
  std::iota(prio.begin(), prio.end(), 0u);
  return TermOrder(MonomialOrder::DegRevLex, ModuleMode::POT, std::move(prio));
}

std::strong_ordering TermOrder::compare_monomials(const Monomial& x, const Monomial& y) const {
  const auto& ex = x.exponents();
  const auto& ey = y.exponents();
  if (ex.size() != ey.size()) throw PreconditionError("monomial dimension mismatch");
  if (mono_ != MonomialOrder::Lex) {
    const auto dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx <=> dy;
  }
  if (mono_ == MonomialOrder::DegRevLex) {
    for (std::size_t i = ex.size(); i-- > 0;)
      if (ex[i] != ey[i]) return ey[i] <=> ex[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < ex.size(); ++i)
    if (ex[i] != ey[i]) return ex[i] <=> ey[i];
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const ModuleMonomial& x, const ModuleMonomial& y) const {
  const std::size_t r = priority_.size();
  if (x.component >= r || y.component >= r) throw PreconditionError("component out of range for term order");
  if (!blocks_.empty() && blocks_[x.component] != blocks_[y.component])
    return blocks_[y.component] <=> blocks_[x.component];
  const auto by_position = position_[y.component] <=> position_[x.component];
  if (mode_ == ModuleMode::POT) {
    if (by_position != 0) return by_position;
    return compare_monomials(x.mono, y.mono);
  }
  const auto by_mono = compare_monomials(x.mono, y.mono);
  if (by_mono != 0) return by_mono;
  return by_position;
}

std::string TermOrder::describe() const {
  std::string s;
  switch (mono_) {
    case MonomialOrder::Lex: s = "lex"; break;
    case MonomialOrder::DegLex: s = "deglex"; break;
    case MonomialOrder::DegRevLex: s = "degrevlex"; break;
  }
  s += mode_ == ModuleMode::POT ? " pot" : " top";
  for (auto c : priority_) s += " " + std::to_string(c + 1);
  return s;
}

// ---------------------------------------------------------------- FreeModule

FreeModule::FreeModule(RingSpec ring, std::vector<std::string> var_names, std::uint32_t rank, TermOrder order)
    : ring_(ring), vars_(std::move(var_names)), rank_(rank), order_(std::move(order)) {
  if (rank_ < 1) throw PreconditionError("module rank must be at least 1");
  if (order_.rank() != rank_) throw PreconditionError("term order rank does not match module rank");
}

ModulePtr make_module(RingSpec ring, std::vector<std::string> var_names, std::uint32_t rank,
                      std::optional<TermOrder> order) {
  TermOrder o = order ? *order : TermOrder::default_for_rank(rank);
  return std::make_shared<const FreeModule>(ring, std::move(var_names), rank, std::move(o));
}

ModulePtr with_ring(const ModulePtr& m, const RingSpec& ring) {
  return std::make_shared<const FreeModule>(ring, m->var_names(), m->rank(), m->order());
}

ModulePtr with_order(const ModulePtr& m, const TermOrder& order) {
  return std::make_shared<const FreeModule>(m->ring(), m->var_names(), order.rank(), order);
}

bool same_module(const ModulePtr& a, const ModulePtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Element

Element::Element(ModulePtr module, std::vector<Term> terms) : module_(std::move(module)) {
  const TermOrder& ord = module_->order();
  for (const auto& t : terms) {
    if (!(t.coeff.ring() == module_->ring())) throw RingMismatch();
    if (t.mono.mono.nvars() != module_->nvars() || t.mono.component >= module_->rank())
      throw PreconditionError("term does not belong to the ambient module");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
      continue;
    }
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
  }
}

Element Element::monomial(ModulePtr module, const Scalar& c, ModuleMonomial x) {
  std::vector<Term> t;
  t.push_back({c, std::move(x)});
  return Element(std::move(module), std::move(t));
}

const ModuleMonomial& Element::lp() const {
  if (terms_.empty()) throw PreconditionError("lp of the zero element");
  return terms_.front().mono;
}

const Scalar& Element::lc() const {
  if (terms_.empty()) throw PreconditionError("lc of the zero element");
  return terms_.front().coeff;
}

Element Element::lt() const {
  if (terms_.empty()) throw PreconditionError("lt of the zero element");
  return Element(module_, {terms_.front()}, true);
}

Scalar Element::coefficient(const ModuleMonomial& x) const {
  for (const auto& t : terms_)
    if (t.mono == x) return t.coeff;
  return Scalar(ring());
}

void Element::require_compatible(const Element& o) const {
  if (!same_module(module_, o.module_)) throw PreconditionError("elements live in different modules");
}

Element Element::operator+(const Element& o) const {
  return minus_multiple(-Scalar::one(ring()), Monomial(module_->nvars()), o);
}

Element Element::operator-(const Element& o) const {
  return minus_multiple(Scalar::one(ring()), Monomial(module_->nvars()), o);
}

Element Element::operator-() const { return scaled(-Scalar::one(ring())); }

Element Element::scaled(const Scalar& c) const { return mul_term(c, Monomial(module_->nvars())); }

Element Element::mul_term(const Scalar& c, const Monomial& q) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar k = c * t.coeff;
    if (k.is_zero()) continue;
    out.push_back({k, q * t.mono});
  }
  // multiplication by a monomial preserves the order, so `out` stays sorted
  return Element(module_, std::move(out), true);
}

Element Element::minus_multiple(const Scalar& c, const Monomial& q, const Element& g) const {
  require_compatible(g);
  const TermOrder& ord = module_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const bool unit_shift = q.is_one();
  auto shifted = [&](std::size_t k) { return unit_shift ? g.terms_[k].mono : q * g.terms_[k].mono; };
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    Scalar k = c * g.terms_[j].coeff;
    if (k.is_zero()) {
      ++j;
      continue;
    }
    ModuleMonomial y = shifted(j);
    if (i == terms_.size()) {
      out.push_back({-k, std::move(y)});
      ++j;
      continue;
    }
    const auto cmp = ord.compare(terms_[i].mono, y);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({-k, std::move(y)});
      ++j;
    } else {
      Scalar s = terms_[i].coeff - k;
      if (!s.is_zero()) out.push_back({s, std::move(y)});
      ++i;
      ++j;
    }
  }
  return Element(module_, std::move(out), true);
}

Element Element::tail() const {
  if (terms_.empty()) return *this;
  return Element(module_, std::vector<Term>(terms_.begin() + 1, terms_.end()), true);
}

std::uint64_t Element::max_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.mono.degree());
  return d;
}

std::optional<std::uint64_t> Element::x_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  const std::uint64_t d = terms_.front().mono.mono.degree();
  for (const auto& t : terms_)
    if (t.mono.mono.degree() != d) return std::nullopt;
  return d;
}

std::uint32_t Element::min_valuation() const noexcept {
  std::uint32_t v = ring().length();
  for (const auto& t : terms_) v = std::min(v, t.coeff.valuation());
  return v;
}

bool Element::operator==(const Element& o) const {
  if (!same_module(module_, o.module_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

Element degree_part(const Element& f, std::uint32_t i) {
  if (f.ring().flavor() != Flavor::EquiChar) throw PreconditionError("degree_part needs an EquiChar ring");
  if (i >= f.ring().length()) throw PreconditionError("degree_part: degree out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Scalar c = digit_layer(t.coeff, i);
    if (!c.is_zero()) out.push_back({c, t.mono});
  }
  return Element(f.module(), std::move(out));
}

std::optional<std::uint32_t> is_homogeneous(const Element& f) {
  if (f.ring().flavor() != Flavor::EquiChar) throw PreconditionError("is_homogeneous needs an EquiChar ring");
  if (f.is_zero()) return std::nullopt;
  const std::uint32_t i = f.lc().valuation();
  for (const auto& t : f.terms())
    if (!(digit_layer(t.coeff, i) == t.coeff)) return std::nullopt;
  return i;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  // enumerate compositions of d into nvars parts, first exponent descending
  auto rec = [&](auto& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint32_t>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<ModuleMonomial> module_monomials_of_degree(const FreeModule& m, std::uint64_t d) {
  std::vector<ModuleMonomial> out;
  const auto monos = monomials_of_degree(m.nvars(), d);
  for (std::uint32_t c = 0; c < m.rank(); ++c)
    for (const auto& x : monos) out.push_back({x, c});
  return out;
}

}  // namespace tdvr
