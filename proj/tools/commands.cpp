#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sullivan/coformal.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/fibration.hpp"
#include "sullivan/iso_search.hpp"
#include "sullivan/lie.hpp"

namespace sullivan::cli {

using json = nlohmann::ordered_json;

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Polynomial& p) { return to_string(p); }

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(str(q));
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string_view certainty_name(ToomerCertainty c) {
  return c == ToomerCertainty::ExactUpToCutoff ? "exact-up-to-cutoff" : "lower-bound-only";
}

int default_cutoff(const GradedContext& ctx) { return std::max(2, 2 * ctx.max_degree() + 1); }
int fibration_cutoff(const FibrationItem& f) { return std::max(2, 2 * f.default_cutoff() - 1); }

json images(const DgaMorphism& phi) {
  json out = json::object();
  for (std::size_t i = 0; i < phi.source().size(); ++i) out[phi.source().ctx().gen(i).name] = str(phi.image(i));
  return out;
}

json differential(const SullivanAlgebra& alg) {
  json out = json::object();
  for (std::size_t i = 0; i < alg.size(); ++i) out[alg.ctx().gen(i).name] = str(alg.d(i));
  return out;
}

json toomer_json(const ToomerVerdict& t) {
  json out{{"value", t.value}, {"cutoff", t.cutoff}, {"certainty", certainty_name(t.certainty)}};
  if (t.witness) {
    out["witness"] = {{"degree", t.witness->degree},
                      {"cocycle", str(t.witness->cocycle)},
                      {"class", rationals(t.witness->klass)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

std::string toomer_text(const ToomerVerdict& t) {
  std::string s = "e0 = " + std::to_string(t.value) + " (cutoff " + std::to_string(t.cutoff) + ", " +
                  std::string(certainty_name(t.certainty)) + ")";
  if (t.witness) {
    s += "; witness in degree " + std::to_string(t.witness->degree) + ": " + str(t.witness->cocycle);
  }
  return s;
}

json coformal_json(const CoformalVerdict& v, const GradedContext& ctx) {
  json out{{"verdict", to_string(v.kind)}, {"cutoff", v.cutoff}};
  json subs = json::array();
  for (const auto& s : v.substitutions) subs.push_back(to_string(ctx, s));
  out["substitutions"] = subs;
  out["iso"] = v.iso ? images(*v.iso) : json(nullptr);
  out["inverse"] = v.inverse ? images(*v.inverse) : json(nullptr);
  if (v.generator) {
    out["obstruction"] = {{"generator", ctx.gen(*v.generator).name},
                          {"theta", str(v.obstruction)},
                          {"degree", ctx.degree(*v.generator) + 1},
                          {"class", rationals(v.obstruction_class)}};
  } else {
    out["obstruction"] = nullptr;
  }
  out["reason"] = v.reason;
  return out;
}

std::string coformal_text(const CoformalVerdict& v, const GradedContext& ctx) {
  std::string s = std::string(to_string(v.kind)) + " (cutoff " + std::to_string(v.cutoff) + ")";
  for (const auto& sub : v.substitutions) s += "\n    " + to_string(ctx, sub);
  if (v.generator) s += "\n    obstruction at " + ctx.gen(*v.generator).name + ": theta = " + str(v.obstruction);
  if (!v.reason.empty()) s += "\n    " + v.reason;
  return s;
}

json search_json(const SearchVerdict& v, const SullivanAlgebra& source, const SullivanAlgebra& target) {
  json out{{"verdict", to_string(v.kind)},
           {"cutoff", v.cutoff},
           {"split_depth", v.split_depth},
           {"parameters", v.trace.parameters.size()},
           {"equations", v.trace.equations.size()},
           {"conditions", v.trace.conditions.size()}};
  out["replay"] = v.kind == SearchKind::NoIsoExists ? json(replay(v, source, target)) : json(nullptr);
  json branches = json::array();
  for (const auto& b : v.trace.branches) {
    const char* outcome = b.outcome == BranchOutcome::Contradiction ? "contradiction"
                          : b.outcome == BranchOutcome::Solved       ? "solved"
                                                                     : "undecided";
    branches.push_back({{"outcome", outcome}, {"steps", b.steps.size()}, {"trace", describe(v.trace, b)}});
  }
  out["branches"] = branches;
  out["iso"] = v.iso ? images(*v.iso) : json(nullptr);
  out["reason"] = v.reason;
  return out;
}

// Per-item handler: fills the verdict and text, returns false on a failure
// that should turn the exit code to 1.
using Handler = std::function<bool(const Item&, const Options&, const Document&, json&, std::string&)>;

struct Command {
  std::vector<std::size_t> kinds;  // variant indices it applies to
  Handler handler;
  // Narrows the default selection when no items are named.
  std::function<bool(const Item&)> selects = nullptr;
};

const SullivanAlgebra& algebra_of(const Item& item) { return std::get<AlgebraItem>(item).algebra; }

// Models built as "ce L N" stop at degree N; classes above N are artifacts.
std::optional<std::string> truncation_note(const Document& doc, const std::string& algebra, int cutoff) {
  const Item* item = doc.find(algebra);
  const auto* a = item ? std::get_if<AlgebraItem>(item) : nullptr;
  if (!a || !a->ce_cutoff || cutoff <= *a->ce_cutoff + 1) return std::nullopt;
  return "'" + algebra + "' is a CE model truncated above degree " + std::to_string(*a->ce_cutoff) +
         "; cohomology above degree " + std::to_string(*a->ce_cutoff) + " includes truncation artifacts";
}

void attach_note(const std::optional<std::string>& note, json& out, std::string& text) {
  out["truncation_note"] = note ? json(*note) : json(nullptr);
  if (note) text += "\n    note: " + *note;
}

bool cmd_validate(const Item& item, const Options& o, const Document&, json& out, std::string& text) {
  if (const auto* a = std::get_if<AlgebraItem>(&item)) {
    const int cutoff = o.max_degree.value_or(default_cutoff(a->algebra.ctx()));
    const auto r = validate(a->algebra, cutoff);
    out["cutoff"] = cutoff;
    out["ok"] = r.ok();
    out["degree_ok"] = r.degree_ok;
    out["d_squared_ok"] = r.d_squared_ok;
    out["minimal"] = r.minimal;
    out["simply_connected"] = r.simply_connected;
    out["finite_type"] = r.finite_type;
    if (r.minimal && r.degree_ok) {
      out["d1_squared_ok"] = validate(quadratic_part(a->algebra), cutoff).d_squared_ok;
    }
    json issues = json::array();
    for (const auto& c : r.counterexamples) {
      issues.push_back({{"generator", c.generator}, {"value", str(c.value)}, {"reason", c.reason}});
    }
    out["counterexamples"] = issues;
    text = std::string(r.ok() ? "ok" : "FAILED") + " (d^2 checked below degree " + std::to_string(cutoff) +
           ")" + (r.minimal ? ", minimal" : ", not minimal");
    for (const auto& c : r.counterexamples) text += "\n    " + c.generator + ": " + c.reason + ": " + str(c.value);
    return r.ok();
  }
  if (const auto* l = std::get_if<LieItem>(&item)) {
    const auto r = validate_lie(l->lie);
    out["ok"] = r.ok();
    out["degrees_ok"] = r.degrees_ok;
    out["antisymmetry_ok"] = r.antisymmetry_ok;
    out["jacobi_ok"] = r.jacobi_ok;
    out["failures"] = r.failures;
    text = r.ok() ? "ok" : "FAILED";
    for (const auto& f : r.failures) text += "\n    " + f;
    return r.ok();
  }
  if (const auto* m = std::get_if<MorphismItem>(&item)) {
    const int cutoff = o.max_degree.value_or(default_cutoff(m->map.source().ctx()));
    const auto r = validate_morphism(m->map, cutoff);
    out["cutoff"] = cutoff;
    out["ok"] = r.ok();
    out["degree_ok"] = r.degree_ok;
    out["commutes"] = r.commutes;
    json issues = json::array();
    for (const auto& w : r.witnesses) {
      issues.push_back({{"generator", w.generator}, {"reason", w.reason}, {"defect", str(w.defect)}});
    }
    out["witnesses"] = issues;
    text = std::string(r.ok() ? "ok" : "FAILED") + " (checked below degree " + std::to_string(cutoff) + ")";
    for (const auto& w : r.witnesses) text += "\n    " + w.generator + ": " + w.reason + ": " + str(w.defect);
    return r.ok();
  }
  const auto& f = std::get<FibrationItem>(item);
  const int cutoff = o.max_degree.value_or(fibration_cutoff(f));
  out["cutoff"] = cutoff;
  const auto rm = f.model(cutoff);
  out["ok"] = true;
  out["quotient"] = differential(rm.quotient());
  text = "ok (d^2 checked below degree " + std::to_string(cutoff) + ")";
  return true;
}

bool cmd_cohomology(const Item& item, const Options& o, const Document& doc, json& out, std::string& text) {
  const auto& alg = algebra_of(item);
  const int cutoff = o.max_degree.value_or(default_cutoff(alg.ctx()));
  const auto table = betti(alg, cutoff);
  out["cutoff"] = cutoff;
  out["dims"] = table.dims();
  json classes = json::object();
  for (int k = 0; k <= table.top_degree(); ++k) {
    const auto& h = table.at(k);
    if (h.dim() == 0) continue;
    json reps = json::array();
    for (const auto& r : h.representatives) reps.push_back(str(r));
    classes[std::to_string(k)] = reps;
  }
  out["representatives"] = classes;
  text = "H^0..H^" + std::to_string(table.top_degree()) + " dims: " + join(table.dims());
  attach_note(truncation_note(doc, item_name(item), cutoff), out, text);
  return true;
}

bool cmd_limit(const Item& item, const Options&, const Document&, json& out, std::string& text) {
  const auto& alg = algebra_of(item);
  const auto q = coformal_limit(alg);
  out["differential"] = differential(q);
  out["purely_quadratic"] = true;
  std::string body;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q.d(i).is_zero()) body += "\n    d " + q.ctx().gen(i).name + " = " + str(q.d(i));
  }
  text = "coformal limit" + (body.empty() ? std::string(": d = 0") : body);
  return true;
}

bool cmd_coformalize(const Item& item, const Options& o, const Document&, json& out, std::string& text) {
  const auto& alg = algebra_of(item);
  const int cutoff = o.max_degree.value_or(default_cutoff(alg.ctx()));
  const auto v = coformalize(alg, cutoff);
  out.update(coformal_json(v, alg.ctx()));
  text = coformal_text(v, alg.ctx());
  return true;
}

bool cmd_report(const Item& item, const Options& o, const Document& doc, json& out, std::string& text) {
  const auto& alg = algebra_of(item);
  const int cutoff = o.max_degree.value_or(default_cutoff(alg.ctx()));
  const auto r = coformality_report(alg, cutoff, o.split_depth);
  out["cutoff"] = cutoff;
  out["conclusion"] = to_string(r.conclusion);
  out["limit_e0"] = toomer_json(r.limit_toomer);
  out["cat0_limit"] = r.limit_toomer.value;
  out["cat0"] = r.cat0 ? json(*r.cat0) : json(nullptr);
  out["elimination"] = r.elimination ? coformal_json(*r.elimination, alg.ctx()) : json(nullptr);
  out["elimination_error"] = r.elimination_error.empty() ? json(nullptr) : json(r.elimination_error);
  out["search"] = r.search ? search_json(*r.search, alg, r.limit) : json(nullptr);
  text = std::string(to_string(r.conclusion)) + "; limit " + toomer_text(r.limit_toomer);
  if (r.cat0) text += "; cat0 = " + std::to_string(*r.cat0);
  if (r.elimination) text += "\n    elimination: " + coformal_text(*r.elimination, alg.ctx());
  if (!r.elimination_error.empty()) text += "\n    elimination: " + r.elimination_error;
  if (r.search) text += "\n    search: " + std::string(to_string(r.search->kind)) + ", " + r.search->reason;
  attach_note(truncation_note(doc, item_name(item), cutoff), out, text);
  return true;
}

bool cmd_toomer(const Item& item, const Options& o, const Document& doc, json& out, std::string& text) {
  const auto& alg = algebra_of(item);
  const int cutoff = o.max_degree.value_or(default_cutoff(alg.ctx()));
  const auto t = toomer(alg, cutoff);
  out.update(toomer_json(t));
  text = toomer_text(t);
  attach_note(truncation_note(doc, item_name(item), cutoff), out, text);
  return true;
}

json lie_json(const GradedLieAlgebra& l, std::string& text) {
  json basis = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    json e{{"name", l.element(i).name}, {"degree", l.element(i).degree}};
    if (i < l.forms().size()) e["form"] = l.forms()[i];
    basis.push_back(e);
  }
  json brackets = json::array();
  for (const auto& [ij, v] : l.structure()) {
    if (v.empty()) continue;
    std::string value;
    for (const auto& [k, c] : v.entries()) {
      const bool neg = c < 0;
      value += value.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (abs(c) != 1) value += str(abs(c)) + "*";
      value += l.element(k).name;
    }
    const std::string line = "[" + l.element(ij.first).name + "," + l.element(ij.second).name + "] = " + value;
    brackets.push_back(line);
    text += "\n    " + line;
  }
  return {{"basis", basis}, {"brackets", brackets}};
}

bool cmd_lie_dual(const Item& item, const Options&, const Document&, json& out, std::string& text) {
  const auto l = quadratic_dual(algebra_of(item));
  text = "homotopy Lie algebra, " + std::to_string(l.size()) + " basis elements";
  out.update(lie_json(l, text));
  return true;
}

bool cmd_free_lie(const Item& item, const Options& o, const Document&, json& out, std::string& text) {
  const auto& l = std::get<LieItem>(item);
  if (!l.free_cutoff) throw UsageError("free-lie needs a 'lie NAME free CUTOFF' item; '" + l.name + "' is explicit");
  const int cutoff = o.max_degree.value_or(*l.free_cutoff);
  const auto f = free_lie(l.free_generators, cutoff);
  const auto dims = f.graded_dims(cutoff);
  out["cutoff"] = cutoff;
  out["dims"] = dims;
  text = "dims by degree 0.." + std::to_string(cutoff) + ": " + join(dims);
  std::string ignored;
  out.update(lie_json(f, ignored));
  return true;
}

bool cmd_iso_search(const Item& item, const Options& o, const Document& doc, json& out, std::string& text) {
  const auto& alg = algebra_of(item);
  const SullivanAlgebra target = o.target ? doc.algebra(*o.target).algebra : coformal_limit(alg);
  const auto v = parametrized_iso_search(alg, target, o.max_degree, o.split_depth);
  out["target"] = o.target ? json(*o.target) : json("coformal limit");
  out.update(search_json(v, alg, target));
  text = std::string(to_string(v.kind)) + " (cutoff " + std::to_string(v.cutoff) + ", split depth " +
         std::to_string(v.split_depth) + "): " + v.reason;
  for (const auto& b : v.trace.branches) text += "\n    - " + describe(v.trace, b);
  if (v.kind == SearchKind::NoIsoExists) text += "\n    replay: " + std::string(replay(v, alg, target) ? "ok" : "FAILED");
  return true;
}

bool cmd_fibration(const Item& item, const Options& o, const Document& doc, json& out, std::string& text) {
  const auto& f = std::get<FibrationItem>(item);
  const int cutoff = o.max_degree.value_or(fibration_cutoff(f));
  const auto rm = f.model(cutoff);
  const auto a = analyze(rm, cutoff);
  out["cutoff"] = cutoff;
  out["tnhz"] = a.tnhz;
  out["total_minimal"] = a.total_minimal;
  out["tncz"] = a.tncz;
  out["quotient"] = differential(rm.quotient());
  if (a.degree_gap) {
    out["degree_gap"] = {{"applies", a.degree_gap->applies},
                         {"n", a.degree_gap->n},
                         {"m", a.degree_gap->m ? json(*a.degree_gap->m) : json(nullptr)}};
  } else {
    out["degree_gap"] = {{"applies", nullptr}, {"note", a.degree_gap_note}};
  }
  out["limit"] = a.limit ? differential(a.limit->total()) : json(nullptr);
  out["limit_e0"] = a.limit_toomer ? toomer_json(*a.limit_toomer) : json(nullptr);
  out["pipeline"] = a.pipeline ? coformal_json(*a.pipeline, rm.total().ctx()) : json(nullptr);
  if (a.spherical) {
    const auto& s = *a.spherical;
    out["spherical"] = {{"sphere_dimension", s.sphere_dimension},
                        {"koszul_case", s.koszul_case ? json(*s.koszul_case) : json(nullptr)},
                        {"wedge_base", s.wedge_base},
                        {"fiber_class_hit", s.fiber_class_hit ? json(*s.fiber_class_hit) : json(nullptr)},
                        {"claim_a", s.claim_a ? json(*s.claim_a) : json(nullptr)},
                        {"cup_length", s.cup_length ? json(*s.cup_length) : json(nullptr)},
                        {"reason", s.reason}};
  } else {
    out["spherical"] = {{"koszul_case", nullptr}, {"note", a.spherical_note}};
  }
  auto yn = [](bool b) { return b ? "true" : "false"; };
  text = std::string("TNHZ = ") + yn(a.tnhz) + " (total algebra minimal: " + yn(a.total_minimal) +
         "), TNCZ = " + yn(a.tncz) + " below degree " + std::to_string(cutoff);
  if (a.degree_gap) {
    text += "\n    degree gap: n = " + std::to_string(a.degree_gap->n) + ", m = " +
            (a.degree_gap->m ? std::to_string(*a.degree_gap->m) : std::string("inf")) +
            (a.degree_gap->applies ? ", applies (total is purely quadratic)" : ", does not apply");
  } else {
    text += "\n    degree gap: " + a.degree_gap_note;
  }
  if (a.limit_toomer) text += "\n    limit fibration total: " + toomer_text(*a.limit_toomer);
  if (a.pipeline) text += "\n    coformality pipeline: " + coformal_text(*a.pipeline, rm.total().ctx());
  if (a.spherical) {
    text += "\n    spherical classifier: " +
            (a.spherical->koszul_case ? "Koszul by case " + std::to_string(*a.spherical->koszul_case)
                                      : std::string("no verdict")) +
            " (" + a.spherical->reason + ")";
  }
  attach_note(truncation_note(doc, f.base_name, cutoff), out, text);
  return true;
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table{
      {"validate", {{0, 1, 2, 3}, cmd_validate}},
      {"cohomology", {{0}, cmd_cohomology}},
      {"limit", {{0}, cmd_limit}},
      {"coformalize", {{0}, cmd_coformalize}},
      {"report", {{0}, cmd_report}},
      {"toomer", {{0}, cmd_toomer}},
      {"lie-dual", {{0}, cmd_lie_dual}},
      {"free-lie", {{1}, cmd_free_lie, [](const Item& i) { return std::get<LieItem>(i).free_cutoff.has_value(); }}},
      {"iso-search", {{0}, cmd_iso_search}},
      {"fibration-analyze", {{3}, cmd_fibration}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : commands()) n.push_back(k);
    return n;
  }();
  return names;
}

Result run(const Options& options, const Document& doc) {
  const auto it = commands().find(options.command);
  if (it == commands().end()) throw UsageError("unknown command '" + options.command + "'");
  const Command& cmd = it->second;
  if (options.split_depth < 0) throw UsageError("--split-depth must be non-negative");
  if (options.max_degree && *options.max_degree < 1) throw UsageError("--max-degree must be positive");
  if (options.target && !doc.find(*options.target)) throw UsageError("no algebra named '" + *options.target + "'");

  std::vector<const Item*> selected;
  if (options.items.empty()) {
    for (const auto& item : doc.items) {
      if (!std::count(cmd.kinds.begin(), cmd.kinds.end(), item.index())) continue;
      if (cmd.selects && !cmd.selects(item)) continue;
      selected.push_back(&item);
    }
  } else {
    for (const auto& name : options.items) {
      const Item* item = doc.find(name);
      if (!item) throw UsageError("no item named '" + name + "'");
      if (!std::count(cmd.kinds.begin(), cmd.kinds.end(), item->index())) {
        throw UsageError("'" + name + "' is a " + std::string(item_kind(*item)) + "; " + options.command +
                         " does not apply to it");
      }
      selected.push_back(item);
    }
  }

  Result r;
  r.json = {{"tool_version", kToolVersion},
            {"schema_version", kSchemaVersion},
            {"command", options.command},
            {"cutoff", options.max_degree ? json(*options.max_degree) : json(nullptr)},
            {"verdicts", json::array()}};
  std::ostringstream text;
  text << options.command << '\n';
  for (const Item* item : selected) {
    json v{{"item", item_name(*item)}, {"kind", item_kind(*item)}};
    std::string line;
    bool ok = true;
    try {
      ok = cmd.handler(*item, options, doc, v, line);
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      ok = false;
      v["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      line = std::string("error: ") + e.what();
    }
    if (!ok) r.exit_code = kValidationFailure;
    r.json["verdicts"].push_back(std::move(v));
    text << "  " << item_name(*item) << ": " << line << '\n';
  }
  for (const auto& w : doc.warnings) {
    text << "warning: line " << w.line << ", column " << w.column << ": " << w.message << '\n';
  }
  json warnings = json::array();
  for (const auto& w : doc.warnings) warnings.push_back({{"line", w.line}, {"column", w.column}, {"message", w.message}});
  r.json["warnings"] = warnings;
  r.text = text.str();
  return r;
}

}  // namespace sullivan::cli
