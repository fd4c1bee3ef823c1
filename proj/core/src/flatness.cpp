#include "tdvr/flatness.hpp"

#include <algorithm>

#include "tdvr/errors.hpp"

namespace tdvr {

// ---------------------------------------------------------------- MXTable

std::uint32_t MXTable::m_of(const ModuleMonomial& x) const {
  std::uint32_t m = length_;
  for (const auto& e : entries_)
    if (e.valuation < m && divides(e.lead, x)) m = e.valuation;
  return m;
}

std::optional<std::size_t> MXTable::representative(const ModuleMonomial& x) const {
  const std::uint32_t m = m_of(x);
  if (m == length_) return std::nullopt;
  for (std::size_t j = 0; j < entries_.size(); ++j)
    if (entries_[j].valuation == m && divides(entries_[j].lead, x)) return j;
  return std::nullopt;
}

std::uint64_t MXTable::max_lead_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& e : entries_) d = std::max(d, e.lead.mono.degree());
  return d;
}

MXTable build_mx_table(const Basis& g) {
  if (!g.at_least_groebner()) throw PreconditionError("m_X table needs a Groebner basis");
  std::vector<MXEntry> entries;
  entries.reserve(g.size());
  for (const auto& e : g.elements()) entries.push_back({e.lp(), e.lc().valuation()});
  return MXTable(std::move(entries), g.module()->ring().length());
}

// ---------------------------------------------------------------- T_G

NormalFormStructure::NormalFormStructure(const Basis& g) : basis_(g), table_(build_mx_table(g)) {
  h_.reserve(g.size());
  for (const auto& e : g.elements()) {
    const Scalar& c = e.lc();
    const std::uint32_t v = c.valuation();
    const bool divisible =
        std::all_of(e.terms().begin(), e.terms().end(), [&](const Term& t) { return t.coeff.valuation() >= v; });
    if (!divisible) {
      h_.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Term> terms;
    terms.reserve(e.size());
    for (const auto& t : e.terms()) terms.push_back({exact_divide(t.coeff, c), t.mono});
    h_.emplace_back(Element(e.module(), std::move(terms)));
  }
}

Element NormalFormStructure::tilde(const ModuleMonomial& x) const {
  const ModulePtr& mod = basis_.module();
  const Scalar one = Scalar::one(mod->ring());
  const std::uint32_t m = table_.m_of(x);
  if (m == 0 || m == table_.length()) return Element::monomial(mod, one, x);
  const std::size_t j = *table_.representative(x);
  if (!h_[j]) return Element::monomial(mod, one, x);
  return h_[j]->mul_term(one, quotient_mono(basis_[j].lp(), x));
}

Element normal_form(const Element& f, const NormalFormStructure& s) {
  const Basis& g = s.basis();
  if (!same_module(f.module(), g.module())) throw PreconditionError("element and basis live in different modules");
  const MXTable& tab = s.table();
  std::vector<Term> coords;
  Element work = f;
  while (!work.is_zero()) {
    const ModuleMonomial x = work.lp();
    const Scalar c = work.lc();
    const std::uint32_t m = tab.m_of(x);
    if (m == tab.length()) {
      coords.push_back({c, x});
      work = work.tail();
      continue;
    }
    const std::size_t j = *tab.representative(x);
    const Scalar low = truncate(c, m);
    const Scalar high = c - low;
    if (!high.is_zero()) work = work.minus_multiple(exact_divide(high, g[j].lc()), quotient_mono(g[j].lp(), x), g[j]);
    if (!low.is_zero()) {
      coords.push_back({low, x});
      work = work.minus_multiple(low, Monomial(x.mono.nvars()), s.tilde(x));
    }
  }
  return Element(f.module(), std::move(coords));
}

Element normal_form(const Element& f, const NormalFormStructure& s, const Basis& g) {
  if (!(g == s.basis())) throw PreconditionError("normal form structure was built from a different basis");
  return normal_form(f, s);
}

Element expand_normal_form(const Element& coords, const NormalFormStructure& s) {
  Element out(coords.module());
  for (const auto& t : coords.terms())
    out = out.minus_multiple(-t.coeff, Monomial(t.mono.mono.nvars()), s.tilde(t.mono));
  return out;
}

Element scale_in_transversal(const Element& coords, const Scalar& c, const NormalFormStructure& s) {
  std::vector<Term> out;
  for (const auto& t : coords.terms()) out.push_back({truncate(c * t.coeff, s.table().m_of(t.mono)), t.mono});
  return Element(coords.module(), std::move(out));
}

Element add_in_transversal(const Element& x, const Element& y, const NormalFormStructure& s) {
  const Element sum = x + y;
  std::vector<Term> out;
  for (const auto& t : sum.terms()) out.push_back({truncate(t.coeff, s.table().m_of(t.mono)), t.mono});
  return Element(sum.module(), std::move(out));
}

// ---------------------------------------------------------------- flatness

std::uint64_t default_degree_bound(const MXTable& t) { return t.max_lead_degree() + 2; }

RankInfo standard_monomial_count(const MXTable& t, const FreeModule& m, std::uint64_t degree_bound) {
  RankInfo info;
  const std::uint32_t a = t.length();
  for (std::uint64_t d = 0; d <= degree_bound; ++d) {
    std::uint64_t c = 0;
    for (const auto& x : module_monomials_of_degree(m, d))
      if (t.m_of(x) == a) ++c;
    info.per_degree.push_back(c);
  }
  // finite iff every component carries a pure power of every variable
  const std::size_t n = m.nvars();
  std::uint64_t box_degree = 0;
  for (std::uint32_t comp = 0; comp < m.rank(); ++comp) {
    bool killed = false;
    std::uint64_t comp_box = 0;
    for (std::size_t v = 0; v < n && !killed; ++v) {
      std::optional<std::uint32_t> best;
      for (const auto& e : t.entries()) {
        if (e.lead.component != comp) continue;
        const auto& ex = e.lead.mono.exponents();
        bool pure = true;
        for (std::size_t w = 0; w < n; ++w)
          if (w != v && ex[w] != 0) pure = false;
        if (pure && (!best || ex[v] < *best)) best = ex[v];
      }
      if (!best) {
        info.infinite = true;
        return info;
      }
      if (*best == 0) killed = true;
      comp_box += *best > 0 ? *best - 1 : 0;
    }
    if (n == 0) {
      killed = std::any_of(t.entries().begin(), t.entries().end(),
                           [&](const MXEntry& e) { return e.lead.component == comp; });
    }
    if (!killed) box_degree = std::max(box_degree, comp_box);
  }
  std::uint64_t total = 0;
  for (std::uint64_t d = 0; d <= box_degree; ++d)
    for (const auto& x : module_monomials_of_degree(m, d))
      if (t.m_of(x) == a) ++total;
  info.count = total;
  return info;
}

FlatnessReport is_flat(const Basis& g, std::optional<std::uint64_t> degree_bound) {
  if (!g.at_least_groebner()) throw PreconditionError("flatness test needs a Groebner basis");
  const MXTable tab = build_mx_table(g);
  const FreeModule& mod = *g.module();
  const std::uint32_t a = tab.length();
  FlatnessReport rep;
  rep.degree_bound = degree_bound ? *degree_bound : default_degree_bound(tab);

  // (c): each X_j is divisible by some X_j' with a unit leading coefficient
  rep.condition_c = true;
  for (std::size_t j = 0; j < tab.entries().size() && rep.condition_c; ++j) {
    bool ok = false;
    for (const auto& e : tab.entries())
      if (e.valuation == 0 && divides(e.lead, tab.entries()[j].lead)) ok = true;
    if (!ok) {
      rep.condition_c = false;
      rep.witness = j;
    }
  }

  // (b): m_X in {0, a} over every monomial up to the top X_j degree, which
  // contains every X_j and hence every minimum m_X can attain
  rep.condition_b = true;
  const std::uint64_t top = tab.max_lead_degree();
  for (std::uint64_t d = 0; d <= top && rep.condition_b; ++d) {
    for (const auto& x : module_monomials_of_degree(mod, d)) {
      const std::uint32_t m = tab.m_of(x);
      if (m != 0 && m != a) {
        rep.condition_b = false;
        rep.witness_monomial = x;
        break;
      }
    }
  }

  if (g.status() == BasisStatus::MinimalGroebner) {
    rep.condition_c_prime = std::all_of(tab.entries().begin(), tab.entries().end(),
                                        [](const MXEntry& e) { return e.valuation == 0; });
  }
  if (rep.condition_b != rep.condition_c || (rep.condition_c_prime && *rep.condition_c_prime != rep.condition_c))
    throw ContractViolation("flatness conditions (b), (c) and (c') disagree");
  rep.flat = rep.condition_c;
  if (rep.flat) rep.rank = standard_monomial_count(tab, mod, rep.degree_bound);
  return rep;
}

RankInfo rank(const Basis& g, std::optional<std::uint64_t> degree_bound) {
  const FlatnessReport rep = is_flat(g, degree_bound);
  if (!rep.flat) throw PreconditionError("rank is only defined for a flat quotient");
  return *rep.rank;
}

std::vector<std::vector<std::uint64_t>> graded_dimensions(const Basis& g, std::uint64_t degree_bound) {
  if (!g.at_least_groebner()) throw PreconditionError("graded dimensions need a Groebner basis");
  if (!g.homogeneous()) throw PreconditionError("graded dimensions need a homogeneous basis over F_p[pi]/(pi^a)");
  const MXTable tab = build_mx_table(g);
  const std::uint32_t a = tab.length();
  std::vector<std::vector<std::uint64_t>> rows(a, std::vector<std::uint64_t>(degree_bound + 1, 0));
  for (std::uint64_t d = 0; d <= degree_bound; ++d)
    for (const auto& x : module_monomials_of_degree(*g.module(), d)) {
      const std::uint32_t m = tab.m_of(x);
      for (std::uint32_t i = 0; i < a; ++i)
        if (m > i) ++rows[i][d];
    }
  return rows;
}

}  // namespace tdvr
