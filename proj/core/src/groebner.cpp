#include "tdvr/groebner.hpp"

#include <algorithm>
#include <set>

#include "tdvr/errors.hpp"

namespace tdvr {

namespace {

constexpr std::size_t kMaxReductionSteps = 10'000'000;

}  // namespace

const char* to_string(BasisStatus s) noexcept {
  switch (s) {
    case BasisStatus::Raw: return "raw";
    case BasisStatus::Groebner: return "groebner";
    case BasisStatus::MinimalGroebner: return "minimal-groebner";
  }
  return "?";
}

Basis::Basis(ModulePtr module, std::vector<Element> elements, BasisStatus status)
    : module_(std::move(module)), elements_(std::move(elements)), status_(status) {
  for (const auto& e : elements_) {
    if (e.is_zero()) throw PreconditionError("a basis may not contain zero");
    if (!same_module(e.module(), module_)) throw PreconditionError("basis elements live in different modules");
  }
  homogeneous_ = module_->ring().flavor() == Flavor::EquiChar &&
                 std::all_of(elements_.begin(), elements_.end(),
                             [](const Element& e) { return is_homogeneous(e).has_value(); });
}

bool Basis::operator==(const Basis& o) const {
  return status_ == o.status_ && same_module(module_, o.module_) && elements_ == o.elements_;
}

// ---------------------------------------------------------------- reduction

std::optional<std::pair<Element, ReductionStep>> reduce_step(const Element& f, const std::vector<Element>& reducers) {
  if (f.is_zero()) throw PreconditionError("reduce_step of zero");
  const ModuleMonomial& x = f.lp();
  const std::uint32_t vf = f.lc().valuation();
  std::size_t best = reducers.size();
  std::uint32_t best_v = vf + 1;
  for (std::size_t j = 0; j < reducers.size(); ++j) {
    const Element& g = reducers[j];
    const std::uint32_t vg = g.lc().valuation();
    if (vg >= best_v || !divides(g.lp(), x)) continue;
    best = j;
    best_v = vg;
    if (vg == 0) break;
  }
  if (best == reducers.size()) return std::nullopt;
  const Element& g = reducers[best];
  ReductionStep step{best, quotient_mono(g.lp(), x), exact_divide(f.lc(), g.lc())};
  Element h = f.minus_multiple(step.multiplier, step.shift, g);
  return std::make_pair(std::move(h), std::move(step));
}

std::optional<std::pair<Element, ReductionStep>> reduce_step(const Element& f, const Basis& basis) {
  return reduce_step(f, basis.elements());
}

ReductionTrace reduce_to_minimal(const Element& f, const std::vector<Element>& reducers) {
  ReductionTrace trace{{}, Element(f.module())};
  std::vector<Term> rest;
  Element work = f;
  while (!work.is_zero()) {
    if (auto st = reduce_step(work, reducers)) {
      work = std::move(st->first);
      trace.steps.push_back(std::move(st->second));
      if (trace.steps.size() > kMaxReductionSteps)
        throw ContractViolation("reduction exceeded " + std::to_string(kMaxReductionSteps) + " steps");
    } else {
      rest.push_back(work.terms().front());
      work = work.tail();
    }
  }
  trace.final = Element(f.module(), std::move(rest));
  return trace;
}

ReductionTrace reduce_to_minimal(const Element& f, const Basis& basis) {
  return reduce_to_minimal(f, basis.elements());
}

bool is_member(const Element& f, const Basis& basis) {
  if (!basis.at_least_groebner()) throw PreconditionError("membership test needs a Groebner basis");
  if (!same_module(f.module(), basis.module())) throw PreconditionError("element and basis live in different modules");
  return reduce_to_minimal(f, basis).final.is_zero();
}

// ---------------------------------------------------------------- pairs

std::optional<Element> s_pair(const Element& gi, const Element& gj) {
  if (gi.is_zero() || gj.is_zero()) throw PreconditionError("s_pair of zero");
  const ModuleMonomial& xi = gi.lp();
  const ModuleMonomial& xj = gj.lp();
  if (xi.component != xj.component) return std::nullopt;
  const Monomial x = xi.mono.lcm(xj.mono);
  const std::uint32_t vi = gi.lc().valuation(), vj = gj.lc().valuation();
  const std::uint32_t m = std::max(vi, vj);
  const RingSpec& ring = gi.ring();
  const Scalar ci = unit_part(gj.lc()) * Scalar::uniformizer_power(ring, m - vi);
  const Scalar cj = unit_part(gi.lc()) * Scalar::uniformizer_power(ring, m - vj);
  return gi.mul_term(ci, xi.mono.quotient_into(x)).minus_multiple(cj, xj.mono.quotient_into(x), gj);
}

std::optional<Element> ann_pair(const Element& g) {
  if (g.is_zero()) throw PreconditionError("ann_pair of zero");
  if (g.lc().is_unit()) return std::nullopt;
  return g.scaled(Scalar::uniformizer_power(g.ring(), annihilator_exponent(g.lc())));
}

Element normalize_leading(const Element& g) {
  if (g.is_zero()) return g;
  const Scalar u = unit_part(g.lc());
  if (u == Scalar::one(g.ring())) return g;
  return g.scaled(inverse(u));
}

Element apply_cofactors(const Element& row, const std::vector<Element>& inputs) {
  if (inputs.empty()) throw PreconditionError("apply_cofactors without inputs");
  Element acc(inputs.front().module());
  for (const auto& t : row.terms()) {
    if (t.mono.component >= inputs.size()) throw PreconditionError("cofactor component out of range");
    acc = acc.minus_multiple(-t.coeff, t.mono.mono, inputs[t.mono.component]);
  }
  return acc;
}

// ---------------------------------------------------------------- completion

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;  // j == i: annihilator pair
  ModuleMonomial lcm;
  std::size_t seq;
};

class Completion {
 public:
  Completion(const std::vector<Element>& inputs, const CompletionOptions& opts)
      : opts_(opts), module_(inputs.front().module()), queue_(PairLess{this}) {
    if (opts_.track_cofactors) {
      cof_module_ = make_module(module_->ring(), module_->var_names(), static_cast<std::uint32_t>(inputs.size()));
    }
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (!same_module(inputs[k].module(), module_)) throw PreconditionError("generators live in different modules");
      if (inputs[k].is_zero()) continue;
      std::optional<Element> cof;
      if (cof_module_)
        cof = Element::monomial(cof_module_, Scalar::one(module_->ring()),
                                {Monomial(module_->nvars()), static_cast<std::uint32_t>(k)});
      insert(inputs[k], std::move(cof));
    }
    if (basis_.empty()) throw PreconditionError("all generators are zero");
  }

  CompletionResult run() {
    while (!queue_.empty()) {
      const Pair pr = *queue_.begin();
      queue_.erase(queue_.begin());
      if (skip_by_criterion(pr)) {
        ++stats_.pairs_skipped;
        continue;
      }
      if (stats_.pairs_processed >= opts_.pair_budget) throw PairBudgetExceeded(opts_.pair_budget);
      ++stats_.pairs_processed;

      const Element& gi = basis_[pr.i];
      std::optional<Element> s = pr.i == pr.j ? ann_pair(gi) : s_pair(gi, basis_[pr.j]);
      if (!s || s->is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      std::optional<Element> cof;
      if (cof_module_) cof = pair_cofactor(pr);
      ReductionTrace tr = reduce_to_minimal(*s, basis_);
      if (tr.final.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (cof) {
        for (const auto& st : tr.steps) *cof = cof->minus_multiple(st.multiplier, st.shift, cofactors_[st.reducer]);
      }
      insert(tr.final, std::move(cof));
    }
    CompletionResult out{Basis(module_, basis_, BasisStatus::Groebner), stats_, cofactors_, cof_module_};
    return out;
  }

 private:
  struct PairLess {
    const Completion* self;
    bool operator()(const Pair& a, const Pair& b) const {
      if (self->opts_.strategy == PairStrategy::Normal) {
        const auto c = self->module_->order().compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      }
      return a.seq < b.seq;
    }
  };

  void insert(const Element& raw, std::optional<Element> cof) {
    Element g = raw;
    const Scalar u = unit_part(g.lc());
    if (!(u == Scalar::one(g.ring()))) {
      const Scalar inv = inverse(u);
      g = g.scaled(inv);
      if (cof) cof = cof->scaled(inv);
    }
    const std::size_t n = basis_.size();
    basis_.push_back(std::move(g));
    if (cof) cofactors_.push_back(std::move(*cof));
    const Element& gn = basis_.back();
    for (std::size_t k = 0; k < n; ++k) {
      if (basis_[k].lp().component != gn.lp().component) continue;
      queue_.insert(Pair{k, n, {basis_[k].lp().mono.lcm(gn.lp().mono), gn.lp().component}, seq_++});
    }
    if (!gn.lc().is_unit()) queue_.insert(Pair{n, n, gn.lp(), seq_++});
  }

  bool skip_by_criterion(const Pair& pr) const {
    if (!opts_.coprime_criterion || pr.i == pr.j || module_->rank() != 1) return false;
    const Element& gi = basis_[pr.i];
    const Element& gj = basis_[pr.j];
    return gi.lc().is_unit() && gj.lc().is_unit() && gi.lp().mono.coprime(gj.lp().mono);
  }

  Element pair_cofactor(const Pair& pr) const {
    const Element& gi = basis_[pr.i];
    const RingSpec& ring = module_->ring();
    if (pr.i == pr.j)
      return cofactors_[pr.i].scaled(Scalar::uniformizer_power(ring, annihilator_exponent(gi.lc())));
    const Element& gj = basis_[pr.j];
    const Monomial x = gi.lp().mono.lcm(gj.lp().mono);
    const std::uint32_t vi = gi.lc().valuation(), vj = gj.lc().valuation(), m = std::max(vi, vj);
    const Scalar ci = unit_part(gj.lc()) * Scalar::uniformizer_power(ring, m - vi);
    const Scalar cj = unit_part(gi.lc()) * Scalar::uniformizer_power(ring, m - vj);
    return cofactors_[pr.i]
        .mul_term(ci, gi.lp().mono.quotient_into(x))
        .minus_multiple(cj, gj.lp().mono.quotient_into(x), cofactors_[pr.j]);
  }

  CompletionOptions opts_;
  ModulePtr module_;
  ModulePtr cof_module_;
  std::vector<Element> basis_;
  std::vector<Element> cofactors_;
  std::set<Pair, PairLess> queue_;
  std::size_t seq_ = 0;
  CompletionStats stats_;
};

}  // namespace

CompletionResult buchberger_full(const std::vector<Element>& generators, const CompletionOptions& opts) {
  if (generators.empty()) throw PreconditionError("no generators");
  return Completion(generators, opts).run();
}

Basis buchberger(const std::vector<Element>& generators, const CompletionOptions& opts) {
  return buchberger_full(generators, opts).basis;
}

Basis minimalize(const Basis& g) {
  if (!g.at_least_groebner()) throw PreconditionError("minimalize needs a Groebner basis");
  std::vector<Element> elems = g.elements();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx = elems.size(); idx-- > 0;) {
      const Element& e = elems[idx];
      const std::uint32_t ve = e.lc().valuation();
      for (std::size_t k = 0; k < elems.size(); ++k) {
        if (k == idx) continue;
        if (elems[k].lc().valuation() <= ve && divides(elems[k].lp(), e.lp())) {
          elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(idx));
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return Basis(g.module(), std::move(elems), BasisStatus::MinimalGroebner);
}

Basis homogenize_basis(const Basis& g) {
  if (g.module()->ring().flavor() != Flavor::EquiChar) throw PreconditionError("homogenize_basis needs an EquiChar ring");
  if (!g.at_least_groebner()) throw PreconditionError("homogenize_basis needs a Groebner basis");
  std::vector<Element> out;
  out.reserve(g.size());
  for (const auto& e : g.elements()) {
    const std::uint32_t i = e.lc().valuation();
    Element h = degree_part(e.scaled(inverse(unit_part(e.lc()))), i);
    if (!(h == e) && !is_member(h, g))
      throw PreconditionError("generated module is not graded: a homogeneous part falls outside it");
    out.push_back(std::move(h));
  }
  return Basis(g.module(), std::move(out), g.status());
}

std::optional<CertificateFailure> check_groebner_certificate(const std::vector<Element>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (auto a = ann_pair(g[i])) {
      if (!a->is_zero()) {
        Element r = reduce_to_minimal(*a, g).final;
        if (!r.is_zero()) return CertificateFailure{i, i, std::move(r)};
      }
    }
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto s = s_pair(g[i], g[j]);
      if (!s || s->is_zero()) continue;
      Element r = reduce_to_minimal(*s, g).final;
      if (!r.is_zero()) return CertificateFailure{i, j, std::move(r)};
    }
  }
  return std::nullopt;
}

}  // namespace tdvr
