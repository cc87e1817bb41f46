#include "cgsb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "cgsb/basis.hpp"
#include "cgsb/confluence.hpp"
#include "cgsb/presets.hpp"
#include "cgsb/report.hpp"
#include "cgsb/rewrite.hpp"
#include "cgsb/selftest.hpp"
#include "cgsb/text_io.hpp"

namespace cgsb {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string preset;
  std::string lie;
  std::string rules;
  bool printed = false;
  long locality = 2;
  std::string expr;
  bool trace = false;
  std::string strategy = "leftmost";
  std::uint64_t seed = 1;
  std::size_t steps = 1;
  std::uint32_t nmax = 6;
  std::size_t deg = 0;  // 0: per-command default
  std::size_t dpow = 2;
  std::size_t headroom = 1;
  bool oracle = false;
  std::string format = "list";
  std::size_t N = 3;
  std::size_t rounds = 20;
  std::size_t budget = 1'000'000;
  std::string out;
  unsigned jobs = 1;
  bool timing = false;
  bool quick = false;
  bool json = false;
  std::string data_dir;
  std::uint64_t selftest_seed = SelftestOptions{}.seed;
};

using Clock = std::chrono::steady_clock;

std::shared_ptr<const LieData> resolve_lie(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    try {
      return std::make_shared<const LieData>(validate(parse_lie_json(read_file(arg))));
    } catch (const ParseError& e) {
      throw ParseError(arg + ": " + e.what());
    }
  }
  if (arg == "sl2") return std::make_shared<const LieData>(validate(sl2_spec()));
  if (arg == "heisenberg") return std::make_shared<const LieData>(validate(heisenberg_spec()));
  if (arg.rfind("abelian", 0) == 0 && arg.size() > 7 &&
      arg.find_first_not_of("0123456789", 7) == std::string::npos)
    return std::make_shared<const LieData>(validate(abelian_spec(std::stoul(arg.substr(7)))));
  throw UsageError("no Lie file or built-in algebra named '" + arg + "'");
}

struct Loaded {
  RuleSet rs;
  std::string preset;  // what the rule set was built from, for provenance
};

Loaded load_rules(const Options& o) {
  std::shared_ptr<const LieData> lie;
  if (!o.lie.empty()) lie = resolve_lie(o.lie);
  std::optional<RulesFile> file;
  if (!o.rules.empty()) {
    if (!std::filesystem::exists(o.rules)) throw UsageError("no rules file " + o.rules);
    try {
      file = parse_rules_file(read_file(o.rules));
    } catch (const ParseError& e) {
      throw ParseError(o.rules + ": " + e.what());
    }
  }
  std::string preset = o.preset;
  if (preset.empty() && file && file->preset) preset = *file->preset;
  if (o.printed && preset == "u2") preset = "u2-printed";

  Loaded out;
  if (!preset.empty()) {
    const auto& names = preset_names();
    if (preset != "u2-printed" && std::find(names.begin(), names.end(), preset) == names.end())
      throw UsageError("unknown preset '" + preset + "'");
    if (preset != "bfk" && !lie) throw UsageError("preset '" + preset + "' needs --lie");
    PresetOptions po{preset, lie, o.locality, false};
    out.rs = make_preset(po);
    out.preset = preset;
    if (file && file->order && *file->order != out.rs.order())
      throw UsageError(o.rules + ": @order does not match preset '" + preset + "'");
  } else if (file) {
    std::optional<Alphabet> al = file_alphabet(*file);
    if (!al) {
      if (!lie) throw UsageError(o.rules + ": no @generators and no --lie");
      al = alphabet_of(*lie);
    }
    out.rs = RuleSet("file", file->order.value_or(Order::deg_lex), *al);
    out.preset = "file";
  } else {
    throw UsageError("give --preset or --rules");
  }
  if (file) {
    add_file_rules(out.rs, *file);
    if (!o.preset.empty() || file->preset) out.preset += " + " + o.rules;
  }
  return out;
}

RunInfo run_info(const Options& o, const std::string& cmd, const std::string& preset) {
  RunInfo r;
  r.command = cmd;
  r.preset = preset;
  r.lie = o.lie;
  return r;
}

void finish(RunInfo& r, const Options& o, Clock::time_point t0) {
  if (o.timing) r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

void emit_json(const Json& j, const Options& o, std::ostream& out, bool to_file) {
  if (to_file && !o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << j.dump(2) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
}

StrategySpec strategy_of(const Options& o) {
  if (o.strategy == "leftmost") return {Strategy::leftmost_largest, 0};
  if (o.strategy == "random") return {Strategy::random, o.seed};
  throw UsageError("strategy must be leftmost or random");
}

std::string step_text(const ReductionStep& s, const RuleSet& rs) {
  const Alphabet& al = rs.alphabet();
  std::string t = to_string(s.coeff) + " * ";
  if (!s.left.empty()) t += format_word(s.left, al) + " . ";
  if (s.module) {
    t += "(" + format_monomial(s.mod_lhs, al) + " -> " + format_element(s.mod_rhs, al, rs.order()) + ")";
  } else {
    t += "(" + format_word(s.alg_lhs, al) + " -> " + format_element(s.alg_rhs, al, rs.order()) + ")";
    if (!s.right.empty()) t += " . " + format_word(s.right, al);
  }
  return t + "  [" + s.rule.text() + "]";
}

int cmd_validate(const Options& o, std::ostream& out) {
  if (o.lie.empty() && o.rules.empty() && o.preset.empty()) throw UsageError("validate needs --lie, --rules or --preset");
  Json j;
  j["command"] = "validate";
  if (!o.lie.empty()) {
    auto lie = resolve_lie(o.lie);
    j["lie"] = Json::parse(lie_to_json(*lie));
  }
  if (!o.rules.empty() || !o.preset.empty()) {
    Loaded l = load_rules(o);
    l.rs.check_orientation(Caps{o.nmax, o.deg ? o.deg : 6});
    j["rules"] = ruleset_json(l.rs);
    j["oriented"] = true;
  }
  j["valid"] = true;
  out << j.dump(2) << "\n";
  return exit_ok;
}

int cmd_nf(const Options& o, std::ostream& out) {
  auto t0 = Clock::now();
  Loaded l = load_rules(o);
  const RuleSet& rs = l.rs;
  const Alphabet& al = rs.alphabet();
  if (o.expr.empty()) throw UsageError("nf needs --expr");
  if (!looks_like_module(o.expr)) {
    AlgebraElement x = parse_algebra_element(o.expr, al);
    auto [nf, trace] = normal_form(x, rs, strategy_of(o), o.budget);
    out << format_element(nf, al, rs.order()) << "\n";
    if (o.trace)
      for (std::size_t i = 0; i < trace.steps.size(); ++i)
        out << "  " << i + 1 << ": " << step_text(trace.steps[i], rs) << "\n";
    return exit_ok;
  }
  ModuleElement x = parse_module_element(o.expr, al);
  auto [nf, trace] = normal_form(x, rs, strategy_of(o), o.budget);
  if (o.json) {
    RunInfo r = run_info(o, "nf", l.preset);
    finish(r, o, t0);
    out << nf_json(r, rs, x, nf, o.trace ? &trace : nullptr).dump(2) << "\n";
    return exit_ok;
  }
  out << format_element(nf, al, rs.order()) << "\n";
  if (o.trace)
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
      out << "  " << i + 1 << ": " << step_text(trace.steps[i], rs) << "\n";
  return exit_ok;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  Loaded l = load_rules(o);
  const RuleSet& rs = l.rs;
  const Alphabet& al = rs.alphabet();
  if (o.expr.empty()) throw UsageError("reduce needs --expr");
  StrategySpec spec = strategy_of(o);
  std::mt19937_64 rng(spec.seed);
  ModuleElement x = parse_module_element(o.expr, al);
  out << format_element(x, al, rs.order()) << "\n";
  for (std::size_t i = 0; i < o.steps; ++i) {
    ReductionStep step;
    auto next = reduce_once(x, rs, spec.kind, &rng, &step);
    if (!next) {
      out << "terminal\n";
      break;
    }
    x = std::move(*next);
    out << "  by " << step_text(step, rs) << "\n" << format_element(x, al, rs.order()) << "\n";
  }
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto t0 = Clock::now();
  Loaded l = load_rules(o);
  ForkCaps caps{o.deg ? o.deg : 5, o.nmax};
  VerificationReport v = verify_gsb(l.rs, caps, o.jobs);
  RunInfo r = run_info(o, "verify", l.preset);
  finish(r, o, t0);
  emit_json(verify_json(r, l.rs, v), o, out, true);
  return v.ok() ? exit_ok : exit_failure;
}

int cmd_complete(const Options& o, std::ostream& out) {
  auto t0 = Clock::now();
  Loaded l = load_rules(o);
  ForkCaps caps{o.deg ? o.deg : 6, o.nmax};
  auto [result, log] = complete(l.rs, caps, o.rounds, o.jobs);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << "# completed with degree cap " << caps.degree_cap << ", index cap " << caps.index_cap << ", "
      << log.rounds << " rounds\n";
    // base schemas come back from the preset, the file holds the concrete rules
    std::string base = l.rs.schemas().empty() ? "" : l.rs.name();
    f << write_rules_file(result, base);
  }
  RunInfo r = run_info(o, "complete", l.preset);
  finish(r, o, t0);
  out << completion_json(r, l.rs, result, log, caps, o.rounds).dump(2) << "\n";
  return log.converged ? exit_ok : exit_failure;
}

int cmd_basis(const Options& o, std::ostream& out) {
  auto t0 = Clock::now();
  Loaded l = load_rules(o);
  Bounds b{o.deg ? o.deg : 3, o.dpow, o.nmax, std::nullopt};
  auto terminal = enumerate_terminal(l.rs, b);
  GradedCount counts = count_by_degree(terminal);
  std::optional<GradedCount> oracle;
  if (o.oracle) oracle = oracle_dimension(l.rs, b, OracleOptions{o.headroom, true});
  const bool ok = !oracle || *oracle == counts;
  const Alphabet& al = l.rs.alphabet();
  if (o.format == "json") {
    RunInfo r = run_info(o, "basis", l.preset);
    finish(r, o, t0);
    Json j;
    j["command"] = r.command;
    j["preset"] = r.preset;
    if (!r.lie.empty()) j["lie"] = r.lie;
    j["bounds"] = bounds_json(b);
    j["counts"] = counts_json(counts);
    j["hilbert"] = hilbert(counts);
    if (oracle) j["oracle"] = counts_json(*oracle);
    Json ms = Json::array();
    for (const auto& m : terminal) ms.push_back(format_monomial(m, al));
    j["monomials"] = ms;
    if (r.seconds) j["seconds"] = *r.seconds;
    out << j.dump(2) << "\n";
  } else if (o.format == "list") {
    for (const auto& m : terminal) out << format_monomial(m, al) << "\n";
  } else if (o.format == "count") {
    for (const auto& [d, n] : counts) out << "degree " << d << ": " << n << "\n";
  } else if (o.format == "hilbert") {
    out << hilbert(counts) << "\n";
  } else {
    throw UsageError("format must be list, count, hilbert or json");
  }
  if (oracle && o.format != "json")
    out << "oracle " << hilbert(*oracle) << (ok ? " (agrees)" : " (DISAGREES)") << "\n";
  return ok ? exit_ok : exit_failure;
}

int cmd_pbw(const Options& o, std::ostream& out) {
  auto t0 = Clock::now();
  if (o.lie.empty()) throw UsageError("pbw needs --lie");
  if (o.N != 2 && o.N != 3) throw UsageError("--N must be 2 or 3");
  auto lie = resolve_lie(o.lie);
  Bounds b{o.deg ? o.deg : 3, o.dpow, o.nmax, std::nullopt};
  PbwReport rep = pbw_check(*lie, o.N, b);
  RunInfo r = run_info(o, "pbw", o.N == 3 ? "u3" : "u2");
  finish(r, o, t0);
  emit_json(pbw_json(r, rep), o, out, true);
  return rep.ok() ? exit_ok : exit_failure;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  SelftestOptions so;
  so.quick = o.quick;
  so.jobs = o.jobs;
  so.seed = o.selftest_seed;
  so.data_dir = o.data_dir;
#ifdef CGSB_DATA_DIR
  if (so.data_dir.empty() && std::filesystem::exists(std::filesystem::path(CGSB_DATA_DIR) / "lie"))
    so.data_dir = CGSB_DATA_DIR;
#endif
  bool all = true;
  run_selftest(so, [&](const CriterionResult& c) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << c.detail << "\n" << std::flush;
    all = all && c.pass;
  });
  return all ? exit_ok : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rewriting engine for conformal algebras: normal forms, GSB verification, completion, bases"};
  app.require_subcommand(1);
  Options o;

  auto rules_opts = [&](CLI::App* c) {
    c->add_option("--preset", o.preset, "ax, conf, u3, u2, u2-printed, bfk, u3-base, u2-base");
    c->add_option("--lie", o.lie, "Lie JSON file, or sl2 / heisenberg / abelianN");
    c->add_option("--rules", o.rules, "rules file (lhs -> rhs lines)");
    c->add_flag("--printed", o.printed, "u2 with the printed L1D and L0L1 coefficients");
    c->add_option("--locality", o.locality, "N for the conf preset")->check(CLI::NonNegativeNumber);
    c->add_option("--nmax", o.nmax, "index cap")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "check a Lie file and/or the orientation of a rule set");
  rules_opts(validate);
  validate->add_option("--deg", o.deg, "lhs length cap for the orientation sweep");

  auto* nf = app.add_subcommand("nf", "normal form of an element");
  rules_opts(nf);
  nf->add_option("--expr", o.expr, "element, e.g. \"R2[e] L1[f] |h\"")->required();
  nf->add_flag("--trace", o.trace, "print the reduction steps");
  nf->add_option("--strategy", o.strategy, "leftmost or random");
  nf->add_option("--seed", o.seed, "seed for the random strategy");
  nf->add_option("--budget", o.budget, "step budget")->check(CLI::PositiveNumber);
  nf->add_flag("--json", o.json, "JSON report");
  nf->add_flag("--timing", o.timing, "add wall time to the JSON report");

  auto* reduce = app.add_subcommand("reduce", "apply single rewrite steps");
  rules_opts(reduce);
  reduce->add_option("--expr", o.expr, "module element")->required();
  reduce->add_option("--steps", o.steps, "number of steps")->check(CLI::PositiveNumber);
  reduce->add_option("--strategy", o.strategy, "leftmost or random");
  reduce->add_option("--seed", o.seed, "seed for the random strategy");

  auto* verify = app.add_subcommand("verify", "check every composition within caps");
  rules_opts(verify);
  verify->add_option("--deg", o.deg, "ambiguity length cap (default 5)")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", o.jobs, "threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "write the JSON report here");
  verify->add_flag("--timing", o.timing, "add wall time to the report");

  auto* comp = app.add_subcommand("complete", "add rules until every composition within caps is confluent");
  rules_opts(comp);
  comp->add_option("--deg", o.deg, "ambiguity length cap (default 6)")->check(CLI::PositiveNumber);
  comp->add_option("--rounds", o.rounds, "round cap")->check(CLI::PositiveNumber);
  comp->add_option("--jobs", o.jobs, "threads")->check(CLI::PositiveNumber);
  comp->add_option("--out", o.out, "write the final rules file here");
  comp->add_flag("--timing", o.timing, "add wall time to the log");

  auto* basis = app.add_subcommand("basis", "terminal monomials within bounds");
  rules_opts(basis);
  basis->add_option("--deg", o.deg, "x-degree bound (default 3)")->check(CLI::PositiveNumber);
  basis->add_option("--dpow", o.dpow, "∂-power bound");
  basis->add_option("--format", o.format, "list, count, hilbert or json");
  basis->add_flag("--oracle", o.oracle, "compare with the row-reduction oracle");
  basis->add_option("--headroom", o.headroom, "extra ∂ letters in the oracle span");
  basis->add_flag("--timing", o.timing, "add wall time to the JSON report");

  auto* pbw = app.add_subcommand("pbw", "terminal counts of the envelope against the commutative basis");
  pbw->add_option("--lie", o.lie, "Lie JSON file, or sl2 / heisenberg / abelianN")->required();
  pbw->add_option("--N", o.N, "locality, 2 or 3");
  pbw->add_option("--deg", o.deg, "x-degree bound (default 3)")->check(CLI::PositiveNumber);
  pbw->add_option("--dpow", o.dpow, "∂-power bound");
  pbw->add_option("--nmax", o.nmax, "index cap")->check(CLI::PositiveNumber);
  pbw->add_option("--out", o.out, "write the JSON report here");
  pbw->add_flag("--timing", o.timing, "add wall time to the report");

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--quick", o.quick, "smaller caps and samples");
  self->add_option("--jobs", o.jobs, "threads")->check(CLI::PositiveNumber);
  self->add_option("--seed", o.selftest_seed, "seed for the random samples");
  self->add_option("--data", o.data_dir, "directory holding lie/*.json");

  if (args.empty()) return exit_usage;
  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*nf) return cmd_nf(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*comp) return cmd_complete(o, out);
    if (*basis) return cmd_basis(o, out);
    if (*pbw) return cmd_pbw(o, out);
    if (*self) return cmd_selftest(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace cgsb
