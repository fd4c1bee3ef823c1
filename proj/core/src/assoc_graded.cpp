#include "tdvr/assoc_graded.hpp"

#include <algorithm>
#include <string>

#include "tdvr/errors.hpp"
#include "tdvr/oracle.hpp"

namespace tdvr {

ModulePtr graded_module_of(const ModulePtr& m) {
  const RingSpec& r = m->ring();
  return with_ring(m, RingSpec(r.p(), r.length(), Flavor::EquiChar));
}

Element initial_form(const Element& g, const ModulePtr& target) {
  if (g.is_zero()) throw PreconditionError("initial form of zero");
  const std::uint32_t v = g.min_valuation();
  const Scalar layer = Scalar::uniformizer_power(target->ring(), v);
  std::vector<Term> terms;
  for (const auto& t : g.terms())
    if (t.coeff.valuation() == v) terms.push_back({Scalar(target->ring(), t.coeff.digit(v)) * layer, t.mono});
  return Element(target, std::move(terms));
}

std::vector<Element> StandardBasis::initial_forms() const {
  std::vector<Element> out;
  for (const auto& e : elements) out.push_back(e.initial);
  return out;
}

std::vector<Element> StandardBasis::sources() const {
  std::vector<Element> out;
  for (const auto& e : elements) out.push_back(e.source);
  return out;
}

namespace {

// L (+) L with the first copy as block 0; components r..2r-1 are the second copy.
ModulePtr doubled_module(const ModulePtr& m) {
  const TermOrder& o = m->order();
  const std::uint32_t r = m->rank();
  std::vector<std::uint32_t> prio, blocks;
  for (auto c : o.priority()) prio.push_back(c);
  for (auto c : o.priority()) prio.push_back(c + r);
  for (std::uint32_t c = 0; c < 2 * r; ++c) blocks.push_back(c < r ? 0 : 1);
  return make_module(m->ring(), m->var_names(), 2 * r,
                     TermOrder(o.monomial_order(), o.module_mode(), std::move(prio), std::move(blocks)));
}

std::vector<Element> intersect_with_power(const std::vector<Element>& gens, std::uint32_t i,
                                          const CompletionOptions& opts, std::size_t& pairs) {
  const ModulePtr& base = gens.front().module();
  const ModulePtr dbl = doubled_module(base);
  const std::uint32_t r = base->rank();
  std::vector<Element> input;
  for (const auto& g : gens) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      terms.push_back({t.coeff, t.mono});
      terms.push_back({t.coeff, {t.mono.mono, t.mono.component + r}});
    }
    input.emplace_back(dbl, std::move(terms));
  }
  const Scalar w = Scalar::uniformizer_power(base->ring(), i);
  for (std::uint32_t l = 0; l < r; ++l)
    input.push_back(Element::monomial(dbl, w, {Monomial(base->nvars()), l}));

  CompletionOptions o = opts;
  o.track_cofactors = false;
  const CompletionResult res = buchberger_full(input, o);
  pairs += res.stats.pairs_processed;
  std::vector<Element> out;
  for (const auto& e : res.basis.elements()) {
    if (e.lp().component < r) continue;
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      if (t.mono.component < r) throw ContractViolation("elimination left a first-block term below the block");
      terms.push_back({t.coeff, {t.mono.mono, t.mono.component - r}});
    }
    out.emplace_back(base, std::move(terms));
  }
  return out;
}

}  // namespace

StandardBasis standard_basis(const std::vector<Element>& generators, const CompletionOptions& opts) {
  std::vector<Element> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) throw PreconditionError("standard basis needs a nonzero generator");
  const ModulePtr& mod = gens.front().module();
  StandardBasis sb{mod, graded_module_of(mod), {}, 0};

  CompletionOptions o = opts;
  o.track_cofactors = false;
  const CompletionResult level0 = buchberger_full(gens, o);
  sb.pairs_processed += level0.stats.pairs_processed;
  for (const auto& g : level0.basis.elements())
    sb.elements.push_back({g, g.min_valuation(), initial_form(g, sb.graded_module)});

  const std::uint32_t a = mod->ring().length();
  for (std::uint32_t i = 1; i < a; ++i) {
    for (const auto& h : intersect_with_power(level0.basis.elements(), i, opts, sb.pairs_processed)) {
      if (h.min_valuation() != i) continue;
      Element in = initial_form(h, sb.graded_module);
      const bool seen = std::any_of(sb.elements.begin(), sb.elements.end(),
                                    [&](const StandardBasisElement& e) { return e.initial == in; });
      if (!seen) sb.elements.push_back({h, i, std::move(in)});
    }
  }
  return sb;
}

std::vector<std::vector<std::uint32_t>> standard_span(const StandardBasis& sb, std::uint32_t i, std::uint64_t degree) {
  const FreeModule& gm = *sb.graded_module;
  const auto basis = module_monomials_of_degree(gm, degree);
  std::vector<Element> gens;
  for (const auto& e : sb.elements) {
    if (e.level > i) continue;
    const auto d = e.initial.x_degree();
    if (!d) throw PreconditionError("standard span needs x-homogeneous initial forms");
    if (*d > degree) continue;
    const Scalar shift = Scalar::uniformizer_power(gm.ring(), i - e.level);
    for (const auto& mu : monomials_of_degree(gm.nvars(), degree - *d)) gens.push_back(e.initial.mul_term(shift, mu));
  }
  return layer_vectors(gens, i, basis);
}

void verify_generation(const StandardBasis& sb, const std::vector<Element>& generators, std::uint64_t degree_bound) {
  const std::uint32_t a = sb.source_module->ring().length();
  const std::uint32_t p = sb.source_module->ring().p();
  for (std::uint64_t d = 0; d <= degree_bound; ++d) {
    const auto basis = module_monomials_of_degree(*sb.graded_module, d);
    for (std::uint32_t i = 0; i < a; ++i) {
      auto mine = standard_span(sb, i, d);
      auto theirs = layer_vectors(oracle_gr(generators, i, d, sb.graded_module), i, basis);
      const std::size_t rm = rank_mod_p(mine, p), rt = rank_mod_p(theirs, p);
      mine.insert(mine.end(), theirs.begin(), theirs.end());
      const std::size_t ru = rank_mod_p(std::move(mine), p);
      if (rm != rt || ru != rt)
        throw ContractViolation("initial forms do not span gr(M) in pi-degree " + std::to_string(i) +
                                ", x-degree " + std::to_string(d) + " (" + std::to_string(rm) + " vs " +
                                std::to_string(rt) + ")");
    }
  }
}

TdvrFlatness flatness_over_tdvr(const std::vector<Element>& generators, const CompletionOptions& opts,
                                std::optional<std::uint64_t> degree_bound) {
  StandardBasis sb = standard_basis(generators, opts);
  std::vector<Element> forms;
  for (const auto& e : sb.elements)
    if (!e.initial.is_zero()) forms.push_back(e.initial);
  CompletionOptions o = opts;
  o.track_cofactors = false;
  Basis gb = buchberger(forms, o);
  Basis hom = homogenize_basis(gb);
  Basis minimal = minimalize(hom);
  FlatnessReport rep = is_flat(minimal, degree_bound);
  return {std::move(sb), std::move(gb), std::move(hom), std::move(minimal), std::move(rep)};
}

}  // namespace tdvr
