#include "cgsb/report.hpp"

#include "cgsb/text_io.hpp"

namespace cgsb {

namespace {

void add_run(Json& j, const RunInfo& run) {
  j["command"] = run.command;
  if (!run.preset.empty()) j["preset"] = run.preset;
  if (!run.lie.empty()) j["lie"] = run.lie;
}

void add_timing(Json& j, const RunInfo& run) {
  if (run.seconds) j["seconds"] = *run.seconds;
}

Json caps_json(const ForkCaps& c) { return Json{{"degree", c.degree_cap}, {"index", c.index_cap}}; }

std::string element_text(const CompositionReport& c, bool normal, const RuleSet& rs) {
  if (c.module) return format_element(normal ? c.mod_normal_form : c.mod_composition, rs.alphabet(), rs.order());
  return format_element(normal ? c.alg_normal_form : c.alg_composition, rs.alphabet(), rs.order());
}

}  // namespace

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json ruleset_json(const RuleSet& rs) {
  Json j;
  j["name"] = rs.name();
  j["order"] = order_name(rs.order());
  j["generators"] = rs.alphabet().names;
  if (rs.alphabet().has_central()) j["central"] = rs.alphabet().central;
  Json schemas = Json::array();
  for (const auto& s : rs.schemas()) schemas.push_back(s->id);
  j["schemas"] = schemas;
  j["algebra_rules"] = rs.algebra_rules().size();
  j["module_rules"] = rs.module_rules().size();
  return j;
}

Json trace_json(const Trace& t, const RuleSet& rs) {
  const Alphabet& al = rs.alphabet();
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j;
    j["rule"] = s.rule.text();
    j["coeff"] = rational_to_json(s.coeff);
    j["left"] = format_word(s.left, al);
    if (s.module) {
      j["lhs"] = format_monomial(s.mod_lhs, al);
      j["rhs"] = format_element(s.mod_rhs, al, rs.order());
    } else {
      j["right"] = format_word(s.right, al);
      j["lhs"] = format_word(s.alg_lhs, al);
      j["rhs"] = format_element(s.alg_rhs, al, rs.order());
    }
    steps.push_back(std::move(j));
  }
  return steps;
}

Json fork_json(const Fork& f, const RuleSet& rs) {
  Json j;
  j["kind"] = fork_kind_name(f.kind);
  j["ambiguity"] = is_module_kind(f.kind) ? format_monomial(f.mono, rs.alphabet()) : format_word(f.word, rs.alphabet());
  j["first"] = Json{{"rule", f.first.tag().text()}, {"pos", f.first.pos}};
  j["second"] = Json{{"rule", f.second.tag().text()}, {"pos", f.second.pos}};
  return j;
}

Json composition_json(const CompositionReport& c, const RuleSet& rs) {
  Json j = fork_json(c.fork, rs);
  j["composition"] = element_text(c, false, rs);
  j["normal_form"] = element_text(c, true, rs);
  if (c.module) {
    auto [nf, trace] = normal_form(c.mod_composition, rs);
    j["trace"] = trace_json(trace, rs);
  } else {
    auto [nf, trace] = normal_form(c.alg_composition, rs);
    j["trace"] = trace_json(trace, rs);
  }
  if (c.module) {
    ModuleRule r = orient(c.mod_normal_form, rs.order());
    j["candidate"] = format_rule(r, rs.alphabet(), rs.order());
  } else {
    AlgebraRule r = orient(c.alg_normal_form, rs.order());
    j["candidate"] = format_rule(r, rs.alphabet(), rs.order());
  }
  return j;
}

Json verify_json(const RunInfo& run, const RuleSet& rs, const VerificationReport& v) {
  Json j;
  add_run(j, run);
  j["rules"] = ruleset_json(rs);
  j["caps"] = caps_json(v.caps);
  j["instances"] = Json{{"algebra", v.algebra_instances}, {"module", v.module_instances}};
  j["forks"] = v.forks;
  Json kinds;
  for (std::size_t k = 0; k < v.by_kind.size(); ++k) kinds[fork_kind_name(static_cast<ForkKind>(k))] = v.by_kind[k];
  j["by_kind"] = kinds;
  j["confluent"] = v.confluent;
  j["skipped"] = v.skipped;
  Json fails = Json::array();
  for (const auto& c : v.failures) fails.push_back(composition_json(c, rs));
  j["failures"] = fails;
  j["gsb"] = v.ok();
  add_timing(j, run);
  return j;
}

Json completion_json(const RunInfo& run, const RuleSet& input, const RuleSet& output, const CompletionLog& log,
                     const ForkCaps& caps, std::size_t round_cap) {
  Json j;
  add_run(j, run);
  j["input"] = ruleset_json(input);
  j["caps"] = caps_json(caps);
  j["round_cap"] = round_cap;
  j["rounds"] = log.rounds;
  j["converged"] = log.converged;
  const Alphabet& al = output.alphabet();
  Json events = Json::array();
  for (const auto& e : log.events) {
    Json ev;
    ev["round"] = e.round;
    ev["action"] = e.action;
    ev["rule"] = e.tag.text();
    if (!e.source.empty()) ev["source"] = e.source;
    if (e.module)
      ev["text"] = format_monomial(e.mod_lhs, al) + " -> " + format_element(e.mod_rhs, al, output.order());
    else
      ev["text"] = format_word(e.alg_lhs, al) + " -> " + format_element(e.alg_rhs, al, output.order());
    events.push_back(std::move(ev));
  }
  j["events"] = events;
  Json rules = Json::array();
  for (const auto& r : output.algebra_rules()) rules.push_back(format_rule(*r, al, output.order()));
  for (const auto& r : output.module_rules()) rules.push_back(format_rule(*r, al, output.order()));
  j["output"] = ruleset_json(output);
  j["final_rules"] = rules;
  add_timing(j, run);
  return j;
}

Json nf_json(const RunInfo& run, const RuleSet& rs, const ModuleElement& x, const ModuleElement& nf,
             const Trace* trace) {
  Json j;
  add_run(j, run);
  j["rules"] = ruleset_json(rs);
  j["input"] = format_element(x, rs.alphabet(), rs.order());
  j["normal_form"] = format_element(nf, rs.alphabet(), rs.order());
  if (trace) j["trace"] = trace_json(*trace, rs);
  add_timing(j, run);
  return j;
}

Json bounds_json(const Bounds& b) {
  Json j{{"x_degree", b.x_degree}, {"d_power", b.d_power}, {"index_cap", b.index_cap}};
  if (b.index_sum_cap) j["index_sum_cap"] = *b.index_sum_cap;
  return j;
}

Json counts_json(const GradedCount& c) {
  Json j = Json::object();
  for (const auto& [d, n] : c) j[std::to_string(d)] = n;
  return j;
}

Json pbw_json(const RunInfo& run, const PbwReport& r) {
  Json j;
  add_run(j, run);
  j["N"] = r.N;
  j["bounds"] = bounds_json(r.bounds);
  j["terminal"] = counts_json(r.terminal);
  j["pattern"] = counts_json(r.pattern);
  j["hilbert"] = hilbert(r.terminal);
  j["ok"] = r.ok();
  add_timing(j, run);
  return j;
}

}  // namespace cgsb
