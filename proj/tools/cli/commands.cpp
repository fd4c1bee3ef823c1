#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "tdvr/assoc_graded.hpp"
#include "tdvr/errors.hpp"
#include "tdvr/flatness.hpp"
#include "tdvr/groebner.hpp"
#include "tdvr/oracle.hpp"
#include "tdvr/text.hpp"

namespace tdvr::cli {

using nlohmann::json;

namespace {

const char* const kCommands[] = {"gb", "minimal-gb", "nf", "member", "flat", "rank", "gr", "oracle"};

json monomial_json(const ModuleMonomial& x, const FreeModule& m) { return to_string(x, m); }

json basis_json(const Basis& b) {
  json elems = json::array();
  for (const auto& g : b.elements())
    elems.push_back({{"element", to_string(g)},
                     {"lead_monomial", to_string(g.lp(), *b.module())},
                     {"lead_coefficient", to_string(g.lc())},
                     {"lead_valuation", g.lc().valuation()}});
  return {{"status", to_string(b.status())}, {"size", b.size()}, {"elements", elems}};
}

json elements_json(const std::vector<Element>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

json mx_json(const MXTable& t, const FreeModule& m) {
  json out = json::array();
  for (const auto& e : t.entries()) out.push_back({{"lead", monomial_json(e.lead, m)}, {"valuation", e.valuation}});
  return out;
}

json stats_json(const CompletionStats& s) {
  return {{"pairs_processed", s.pairs_processed}, {"pairs_skipped", s.pairs_skipped}, {"zero_reductions", s.zero_reductions}};
}

json trace_json(const ReductionTrace& t, const Basis& g) {
  json steps = json::array();
  const auto& vars = g.module()->var_names();
  for (const auto& s : t.steps)
    steps.push_back({{"reducer", s.reducer}, {"shift", to_string(s.shift, vars)}, {"multiplier", to_string(s.multiplier)}});
  return {{"steps", steps}, {"final", to_string(t.final)}};
}

json rank_json(const RankInfo& r) {
  json out{{"infinite", r.infinite}, {"per_degree", r.per_degree}};
  out["count"] = r.infinite ? json(nullptr) : json(r.count);
  return out;
}

json flatness_json(const FlatnessReport& r, const Basis& g) {
  json out{{"verdict", r.flat ? "flat" : "not flat"},
           {"flat", r.flat},
           {"degree_bound", r.degree_bound},
           {"condition_b", r.condition_b},
           {"condition_c", r.condition_c}};
  out["condition_c_prime"] = r.condition_c_prime ? json(*r.condition_c_prime) : json(nullptr);
  json w = nullptr;
  if (r.witness) {
    const Element& e = g[*r.witness];
    w = {{"index", *r.witness}, {"element", to_string(e)}, {"lead_valuation", e.lc().valuation()}};
    if (r.witness_monomial) w["monomial"] = monomial_json(*r.witness_monomial, *g.module());
  }
  out["witness"] = w;
  out["rank"] = r.rank ? rank_json(*r.rank) : json(nullptr);
  return out;
}

json invariants_json(const OracleFlatness& o) {
  json rows = json::array();
  for (std::size_t d = 0; d < o.per_degree.size(); ++d) {
    const auto& inv = o.per_degree[d];
    rows.push_back({{"degree", d}, {"exponents", inv.exponents}, {"free_rank", inv.free_rank()}, {"free", inv.is_free()}});
  }
  json out{{"flat", o.flat}, {"degree_bound", o.degree_bound}, {"per_degree", rows}};
  out["first_non_free_degree"] = o.first_non_free_degree ? json(*o.first_non_free_degree) : json(nullptr);
  return out;
}

bool x_homogeneous(const Instance& inst) {
  for (const auto& g : inst.generators)
    if (!g.x_degree()) return false;
  return true;
}

bool pi_homogeneous(const Instance& inst) {
  if (inst.module->ring().flavor() != Flavor::EquiChar) return false;
  for (const auto& g : inst.generators)
    if (!is_homogeneous(g)) return false;
  return true;
}

std::uint64_t max_generator_degree(const Instance& inst) {
  std::uint64_t d = 0;
  for (const auto& g : inst.generators) d = std::max(d, g.max_degree());
  return d;
}

CompletionOptions completion_options(const CommandOptions& o) {
  CompletionOptions c;
  c.pair_budget = o.pair_budget;
  return c;
}

struct FlatRun {
  std::string path;
  Basis minimal;
  FlatnessReport report;
  json stages;
};

FlatRun run_flat(const Instance& inst, const CommandOptions& opt) {
  const CompletionOptions copts = completion_options(opt);
  if (pi_homogeneous(inst)) {
    CompletionResult res = buchberger_full(inst.generators, copts);
    Basis hom = homogenize_basis(res.basis);
    Basis minimal = minimalize(hom);
    FlatnessReport rep = is_flat(minimal, opt.max_degree);
    json stages{{"groebner", basis_json(res.basis)},
                {"homogenized", basis_json(hom)},
                {"minimal", basis_json(minimal)},
                {"m_table", mx_json(build_mx_table(minimal), *minimal.module())},
                {"completion", stats_json(res.stats)}};
    return {"graded", std::move(minimal), std::move(rep), std::move(stages)};
  }
  TdvrFlatness t = flatness_over_tdvr(inst.generators, copts, opt.max_degree);
  json sb = json::array();
  for (const auto& e : t.standard.elements)
    sb.push_back({{"source", to_string(e.source)}, {"level", e.level}, {"initial_form", to_string(e.initial)}});
  json stages{{"standard_basis", sb},
              {"graded_groebner", basis_json(t.graded_groebner)},
              {"homogenized", basis_json(t.homogenized)},
              {"minimal", basis_json(t.minimal)},
              {"m_table", mx_json(build_mx_table(t.minimal), *t.minimal.module())},
              {"pairs_processed", t.standard.pairs_processed}};
  return {"associated-graded", std::move(t.minimal), std::move(t.report), std::move(stages)};
}

std::uint64_t oracle_degree_bound(const Instance& inst, const CommandOptions& opt) {
  if (opt.max_degree) return *opt.max_degree;
  // cover both the generator degrees and the staircase of the flatness basis
  std::uint64_t d = max_generator_degree(inst) + 3;
  const FlatRun fr = run_flat(inst, opt);
  return std::max(d, build_mx_table(fr.minimal).max_lead_degree() + 2);
}

void require_element(const CommandOptions& opt) {
  if (!opt.element) throw ParseError("command '" + opt.command + "' needs an element argument");
}

std::string flat_line(const FlatnessReport& r) {
  std::ostringstream s;
  s << "verdict: " << (r.flat ? "flat" : "not flat");
  if (r.rank) s << ", rank " << (r.rank->infinite ? std::string("infinite") : std::to_string(r.rank->count));
  return s.str();
}

void basis_lines(std::ostringstream& h, const char* title, const Basis& b) {
  h << title << " (" << b.size() << "):\n";
  for (const auto& g : b.elements()) h << "  " << to_string(g) << "\n";
}

// Fills result and human text; throws library errors.
void dispatch(const Instance& inst, const CommandOptions& opt, json& result, std::ostringstream& h) {
  const CompletionOptions copts = completion_options(opt);
  const std::string& cmd = opt.command;

  if (cmd == "gb" || cmd == "minimal-gb") {
    CompletionResult res = buchberger_full(inst.generators, copts);
    if (auto bad = check_groebner_certificate(res.basis.elements()))
      throw ContractViolation("completion output fails its certificate at pair (" + std::to_string(bad->i) + ", " +
                              std::to_string(bad->j) + ")");
    result["groebner"] = basis_json(res.basis);
    result["completion"] = stats_json(res.stats);
    if (opt.trace) {
      json traces = json::array();
      for (const auto& f : inst.generators) traces.push_back(trace_json(reduce_to_minimal(f, res.basis), res.basis));
      result["input_traces"] = traces;
    }
    if (cmd == "gb") {
      basis_lines(h, "Groebner basis", res.basis);
      return;
    }
    Basis m = minimalize(res.basis);
    result["minimal"] = basis_json(m);
    result["m_table"] = mx_json(build_mx_table(m), *m.module());
    basis_lines(h, "minimal Groebner basis", m);
    return;
  }

  if (cmd == "nf" || cmd == "member") {
    require_element(opt);
    const Element f = parse_element(inst.module, *opt.element);
    result["element"] = to_string(f);
    Basis g = minimalize(buchberger(inst.generators, copts));
    result["groebner"] = basis_json(g);
    const ReductionTrace tr = reduce_to_minimal(f, g);
    if (opt.trace) result["trace"] = trace_json(tr, g);
    if (cmd == "member") {
      const bool member = tr.final.is_zero();
      result["member"] = member;
      h << (member ? "member" : "not a member") << "\n";
      return;
    }
    const NormalFormStructure s(g);
    const Element nf = normal_form(f, s);
    const Element value = expand_normal_form(nf, s);
    json coords = json::array();
    for (const auto& t : nf.terms())
      coords.push_back({{"monomial", monomial_json(t.mono, *g.module())},
                        {"coefficient", to_string(t.coeff)},
                        {"m", s.table().m_of(t.mono)}});
    result["normal_form"] = {{"coordinates", coords}, {"text", to_string(nf)}, {"value", to_string(value)}};
    result["m_table"] = mx_json(s.table(), *g.module());
    h << "normal form: " << to_string(nf) << "\n";
    if (!(value == nf)) h << "as element of L: " << to_string(value) << "\n";
    return;
  }

  if (cmd == "flat" || cmd == "rank") {
    FlatRun fr = run_flat(inst, opt);
    result["path"] = fr.path;
    result["stages"] = fr.stages;
    result["flatness"] = flatness_json(fr.report, fr.minimal);
    h << flat_line(fr.report) << "\n";
    if (!fr.report.flat && fr.report.witness)
      h << "witness: " << to_string(fr.minimal[*fr.report.witness]) << " (leading coefficient not a unit)\n";
    if (cmd == "rank") {
      if (!fr.report.flat) {
        if (x_homogeneous(inst)) {
          json o = invariants_json(oracle_is_flat(inst.generators, fr.report.degree_bound));
          o["note"] = "rank is undefined for a non-flat quotient; per-degree elementary divisors from the oracle";
          result["oracle_invariants"] = o;
        }
        throw PreconditionError("rank is only defined for a flat quotient");
      }
      result["rank"] = rank_json(*fr.report.rank);
    }
    return;
  }

  if (cmd == "gr") {
    StandardBasis sb = standard_basis(inst.generators, copts);
    json elems = json::array();
    for (const auto& e : sb.elements)
      elems.push_back({{"source", to_string(e.source)}, {"level", e.level}, {"initial_form", to_string(e.initial)}});
    result["standard_basis"] = elems;
    h << "standard basis (" << sb.elements.size() << "):\n";
    for (const auto& e : sb.elements) h << "  " << to_string(e.initial) << "   <- " << to_string(e.source) << "\n";
    if (!x_homogeneous(inst)) {
      result["generation_check"] = {{"status", "skipped"}, {"reason", "generators are not x-homogeneous"}};
      return;
    }
    const std::uint64_t D = opt.max_degree ? *opt.max_degree : max_generator_degree(inst) + 3;
    if (opt.dump_slices) {
      json slices = json::array();
      const std::uint32_t p = inst.module->ring().p();
      for (std::uint64_t d = 0; d <= D; ++d)
        for (std::uint32_t i = 0; i < inst.module->ring().length(); ++i) {
          const auto basis = module_monomials_of_degree(*sb.graded_module, d);
          const auto og = oracle_gr(inst.generators, i, d, sb.graded_module);
          slices.push_back({{"pi_degree", i},
                            {"x_degree", d},
                            {"oracle_dimension", rank_mod_p(layer_vectors(og, i, basis), p)},
                            {"span_dimension", rank_mod_p(standard_span(sb, i, d), p)},
                            {"oracle_basis", elements_json(og)}});
        }
      result["slices"] = slices;
    }
    verify_generation(sb, inst.generators, D);
    result["generation_check"] = {{"status", "verified"}, {"degree_bound", D}};
    h << "generation of gr(M) verified up to x-degree " << D << "\n";
    return;
  }

  if (cmd == "oracle") {
    if (!x_homogeneous(inst)) throw PreconditionError("the oracle needs x-homogeneous generators");
    const std::uint64_t D = oracle_degree_bound(inst, opt);
    const OracleFlatness o = oracle_is_flat(inst.generators, D);
    result["oracle"] = invariants_json(o);
    if (opt.dump_slices) {
      json slices = json::array();
      for (std::uint64_t d = 0; d <= D; ++d) {
        const DegreeSlice s = build_slice(inst.generators, d);
        json cols = json::array(), rows = json::array();
        for (const auto& x : s.basis) cols.push_back(monomial_json(x, *inst.module));
        for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
          json row = json::array();
          for (std::size_t c = 0; c < s.matrix.cols(); ++c) row.push_back(to_string(s.matrix.at(r, c)));
          rows.push_back(row);
        }
        slices.push_back({{"degree", d}, {"columns", cols}, {"rows", rows}});
      }
      result["slices"] = slices;
    }
    h << "oracle verdict up to x-degree " << D << ": " << (o.flat ? "flat" : "not flat") << "\n";
    for (std::size_t d = 0; d < o.per_degree.size(); ++d) {
      h << "  degree " << d << ": free rank " << o.per_degree[d].free_rank() << ", exponents [";
      for (std::size_t k = 0; k < o.per_degree[d].exponents.size(); ++k)
        h << (k ? " " : "") << o.per_degree[d].exponents[k];
      h << "]\n";
    }
    return;
  }

  throw ParseError("unknown command '" + cmd + "'");
}

json config_json(const Instance& inst, const CommandOptions& opt) {
  json c{{"order", inst.module->order().describe()},
         {"strategy", "normal"},
         {"pair_budget", opt.pair_budget},
         {"trace", opt.trace},
         {"dump_slices", opt.dump_slices}};
  c["max_degree"] = opt.max_degree ? json(*opt.max_degree) : json(nullptr);
  c["element"] = opt.element ? json(*opt.element) : json(nullptr);
  return c;
}

json instance_json(const Instance& inst) {
  return {{"fingerprint", fingerprint(inst)},
          {"ring", inst.module->ring().describe()},
          {"vars", inst.module->var_names()},
          {"rank", inst.module->rank()},
          {"generators", elements_json(inst.generators)}};
}

}  // namespace

bool known_command(const std::string& name) {
  for (const char* c : kCommands)
    if (name == c) return true;
  return false;
}

Outcome run_command(const Instance& original, const CommandOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  json& rep = out.report;
  rep["command"] = opt.command;
  std::ostringstream h;
  json result = json::object();
  std::optional<std::pair<std::string, std::string>> error;
  try {
    Instance inst = original;
    if (opt.order) inst = reorder(original, parse_term_order(*opt.order, original.module->rank()));
    rep["instance"] = instance_json(inst);
    rep["config"] = config_json(inst, opt);
    dispatch(inst, opt, result, h);
  } catch (const ParseError& e) {
    out.exit_code = kParse;
    error.emplace("parse", e.what());
  } catch (const PairBudgetExceeded& e) {
    out.exit_code = kPrecondition;
    error.emplace("pair_budget", e.what());
  } catch (const PreconditionError& e) {
    out.exit_code = kPrecondition;
    error.emplace("precondition", e.what());
  } catch (const ContractViolation& e) {
    out.exit_code = kContract;
    error.emplace("contract", e.what());
  } catch (const std::exception& e) {
    out.exit_code = kContract;
    error.emplace("internal", e.what());
  }
  if (!rep.contains("instance")) rep["instance"] = instance_json(original);
  if (!rep.contains("config")) rep["config"] = config_json(original, opt);
  rep["result"] = result;
  rep["exit_code"] = out.exit_code;
  rep["error"] = error ? json{{"kind", error->first}, {"message", error->second}} : json(nullptr);
  if (error) h << "error (" << error->first << "): " << error->second << "\n";
  rep["timing_us"] =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  out.human = h.str();
  return out;
}

Outcome load_failure(const CommandOptions& opt, const std::string& message) {
  Outcome out;
  out.exit_code = kParse;
  out.report = {{"command", opt.command},
                {"instance", nullptr},
                {"config", nullptr},
                {"result", json::object()},
                {"exit_code", kParse},
                {"error", {{"kind", "parse"}, {"message", message}}},
                {"timing_us", 0}};
  out.human = "error (parse): " + message + "\n";
  return out;
}

std::string render(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace tdvr::cli
