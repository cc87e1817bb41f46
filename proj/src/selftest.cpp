#include "cgsb/selftest.hpp"

#include <chrono>
#include <filesystem>
#include <set>
#include <sstream>

#include "cgsb/basis.hpp"
#include "cgsb/confluence.hpp"
#include "cgsb/presets.hpp"
#include "cgsb/rewrite.hpp"
#include "cgsb/text_io.hpp"

namespace cgsb {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::shared_ptr<const LieData> share(const LieSpec& s) { return std::make_shared<const LieData>(validate(s)); }

std::shared_ptr<const LieData> load_lie(const SelftestOptions& opt, const std::string& name, const LieSpec& builtin) {
  if (opt.data_dir.empty()) return share(builtin);
  auto path = std::filesystem::path(opt.data_dir) / "lie" / (name + ".json");
  try {
    return share(parse_lie_json(read_file(path.string())));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

// Sets up a result, runs body, fills in timing and turns exceptions into a
// named failure.
template <class Body>
CriterionResult run_criterion(int id, const std::string& name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = Clock::now();
  std::ostringstream detail;
  try {
    r.pass = body(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    detail << "error: " << e.what();
  }
  r.seconds = since(t0);
  r.detail = detail.str();
  return r;
}

std::string counts_text(const GradedCount& c) {
  std::string out;
  for (const auto& [d, n] : c) out += (out.empty() ? "" : ",") + std::to_string(n);
  return "[" + out + "]";
}

bool verify_family(const SelftestOptions& opt, const std::string& preset, double limit, std::ostream& detail) {
  const ForkCaps caps{opt.quick ? std::size_t(4) : std::size_t(5), 6};
  bool ok = true;
  for (const auto& [name, lie] : selftest_algebras(opt)) {
    auto t0 = Clock::now();
    RuleSet rs = make_preset({preset, lie});
    VerificationReport v = verify_gsb(rs, caps, opt.jobs);
    double t = since(t0);
    detail << name << ": " << v.forks << " forks, " << v.failures.size() << " failures, " << v.skipped << " skipped ("
           << static_cast<int>(t * 1000) << " ms); ";
    if (!v.ok()) {
      const auto& f = v.failures.front();
      detail << "first failure " << fork_kind_name(f.fork.kind) << " " << f.fork.first.tag().text() << " / "
             << f.fork.second.tag().text() << "; ";
    }
    ok = ok && v.ok() && t < limit;
  }
  detail << "caps degree " << caps.degree_cap << " index " << caps.index_cap;
  return ok;
}

}  // namespace

std::vector<NamedLie> selftest_algebras(const SelftestOptions& opt) {
  return {{"sl2", load_lie(opt, "sl2", sl2_spec())},
          {"abelian2", load_lie(opt, "abelian2", abelian_spec(2))},
          {"heisenberg", load_lie(opt, "heisenberg", heisenberg_spec())}};
}

ModuleMonomial random_monomial(const Alphabet& al, std::mt19937_64& rng, std::size_t max_len,
                               std::uint32_t max_index) {
  std::uniform_int_distribution<std::size_t> len_d(0, max_len);
  std::uniform_int_distribution<int> kind_d(0, 2);
  std::uniform_int_distribution<std::uint32_t> idx_d(0, max_index);
  std::uniform_int_distribution<std::uint32_t> deco_d(0, static_cast<std::uint32_t>(al.size() - 1));
  ModuleMonomial m;
  const std::size_t len = len_d(rng);
  for (std::size_t i = 0; i < len; ++i) {
    switch (kind_d(rng)) {
      case 0: m.word.push_back(Letter::partial()); break;
      case 1: m.word.push_back(Letter::L(idx_d(rng), deco_d(rng))); break;
      default: m.word.push_back(Letter::R(idx_d(rng), deco_d(rng))); break;
    }
  }
  // the central generator now and then
  if (al.has_central() && std::uniform_int_distribution<int>(0, 5)(rng) == 0)
    m.gen = Generator::central();
  else
    m.gen = Generator{static_cast<int>(deco_d(rng))};
  return m;
}

ModuleElement random_element(const Alphabet& al, std::mt19937_64& rng, std::size_t max_terms, std::size_t max_len,
                             std::uint32_t max_index) {
  std::uniform_int_distribution<std::size_t> terms_d(1, max_terms);
  std::uniform_int_distribution<long> num_d(-5, 5), den_d(1, 4);
  ModuleElement x;
  const std::size_t n = terms_d(rng);
  for (std::size_t i = 0; i < n; ++i) {
    long p = num_d(rng);
    if (p == 0) p = 1;
    Rational c(p, den_d(rng));
    c.canonicalize();
    x.add_term(random_monomial(al, rng, max_len, max_index), c);
  }
  return x;
}

CriterionResult check_bfk(const SelftestOptions& opt) {
  return run_criterion(1, "BFK regression", [&](std::ostream& d) {
    auto t0 = Clock::now();
    const ForkCaps caps{6, 6};
    RuleSet rs = preset_bfk();
    VerificationReport before = verify_gsb(rs, caps, opt.jobs);
    bool r2l1 = false;
    for (const auto& f : before.failures)
      if (format_monomial(f.fork.mono, rs.alphabet()) == "R2[a] L1[a] |a") r2l1 = true;
    auto [out, log] = complete(rs, caps, 20, opt.jobs);
    // Terminal monomials without ∂ letters give the H-basis.
    std::vector<std::string> basis;
    for (const auto& m : enumerate_terminal(out, Bounds{6, 0, 6, std::nullopt}))
      basis.push_back(format_monomial(m, out.alphabet()));
    const bool basis_ok = basis == std::vector<std::string>{"|a", "L0[a] |a"};
    VerificationReport after = verify_gsb(out, caps, opt.jobs);
    Reducer red(out);
    bool killed = true;
    for (const char* w : {"L0[a] L1[a] |a", "L1[a] L0[a] |a", "L1[a] L1[a] |a", "L0[a] L0[a] |a"})
      killed = killed && red.normal_form(ModuleElement(parse_monomial(w, out.alphabet()))).is_zero();
    const double t = since(t0);
    d << "before: " << before.failures.size() << " failures (R2L1 fork " << (r2l1 ? "present" : "missing")
      << "); complete: " << log.rounds << " rounds, converged " << log.converged << "; basis {";
    for (std::size_t i = 0; i < basis.size(); ++i) d << (i ? ", " : "") << basis[i];
    d << "}; after: " << after.failures.size() << " failures; " << static_cast<int>(t * 1000) << " ms";
    return r2l1 && log.converged && log.rounds <= 20 && basis_ok && killed && after.ok() && t < 5.0;
  });
}

CriterionResult check_u3(const SelftestOptions& opt) {
  return run_criterion(2, "U3 GSB verification", [&](std::ostream& d) { return verify_family(opt, "u3", 600, d); });
}

CriterionResult check_u2(const SelftestOptions& opt) {
  return run_criterion(3, "U2 GSB verification", [&](std::ostream& d) { return verify_family(opt, "u2", 300, d); });
}

CriterionResult check_basis(const SelftestOptions&) {
  return run_criterion(4, "basis cross-check", [&](std::ostream& d) {
    auto t0 = Clock::now();
    // x-degree 3, ∂-power 2, index sum 6; the oracle span carries one extra ∂.
    const Bounds b{3, 2, 6, 6};
    bool ok = true;
    for (std::size_t y : {std::size_t(1), std::size_t(2)}) {
      for (std::size_t N : {std::size_t(3), std::size_t(2)}) {
        LieData lie = validate(abelian_spec(y));
        RuleSet rs = N == 3 ? preset_u3(lie) : preset_u2(lie);
        std::set<ModuleMonomial> terminal, pattern;
        for (auto& m : enumerate_terminal(rs, b))
          if (!m.gen.is_central()) terminal.insert(m);
        auto pat = N == 3 ? comconf3_pattern(y, b) : comconf2_pattern(y, b);
        pattern.insert(pat.begin(), pat.end());
        GradedCount oracle = oracle_dimension(N == 3 ? preset_u3_base(lie) : preset_u2_base(lie), b, OracleOptions{1, true});
        if (oracle[1] > 0) --oracle[1];  // e
        const GradedCount tc = count_by_degree({terminal.begin(), terminal.end()});
        const GradedCount pc = count_by_degree(pat);
        const bool same = terminal == pattern && tc == pc && pc == oracle;
        d << "Y=" << y << " N=" << N << ": pattern " << counts_text(pc) << " terminal " << counts_text(tc)
          << " oracle " << counts_text(oracle) << (same ? "" : " MISMATCH") << "; ";
        ok = ok && same;
      }
    }
    const double t = since(t0);
    d << static_cast<int>(t * 1000) << " ms";
    return ok && t < 120;
  });
}

CriterionResult check_pbw(const SelftestOptions& opt) {
  return run_criterion(5, "PBW check", [&](std::ostream& d) {
    auto t0 = Clock::now();
    const Bounds b{3, 2, 6, std::nullopt};
    auto sl2 = load_lie(opt, "sl2", sl2_spec());
    auto ab3 = load_lie(opt, "abelian3", abelian_spec(3));
    bool ok = true;
    for (std::size_t N : {std::size_t(3), std::size_t(2)}) {
      PbwReport r = pbw_check(*sl2, N, b);
      PbwReport a = pbw_check(*ab3, N, b);
      const bool same = r.ok() && a.ok() && r.terminal == a.terminal;
      d << "N=" << N << ": sl2 " << counts_text(r.terminal) << " pattern+e " << counts_text(r.pattern)
        << " abelian3 " << counts_text(a.terminal) << (same ? "" : " MISMATCH") << "; ";
      ok = ok && same;
    }
    const double t = since(t0);
    d << static_cast<int>(t * 1000) << " ms";
    return ok && t < 120;
  });
}

CriterionResult check_confluence(const SelftestOptions& opt) {
  return run_criterion(6, "confluence properties", [&](std::ostream& d) {
    const std::size_t samples = opt.quick ? 40 : 200;
    const std::size_t strategies = 5;
    std::vector<std::pair<std::string, RuleSet>> sets;
    for (const auto& [name, lie] : selftest_algebras(opt)) {
      sets.emplace_back("u3/" + name, preset_u3(*lie));
      sets.emplace_back("u2/" + name, preset_u2(*lie));
    }
    sets.emplace_back("bfk/completed", complete(preset_bfk(), ForkCaps{6, 6}, 20).first);

    std::mt19937_64 rng(opt.seed);
    std::size_t runs = 0, steps = 0, mismatches = 0;
    std::string first_bad;
    for (const auto& [name, rs] : sets) {
      Reducer memo(rs);
      for (std::size_t i = 0; i < samples; ++i) {
        ModuleElement x = random_element(rs.alphabet(), rng, 3, 4, 3);
        const ModuleElement want = memo.normal_form(x);
        for (std::size_t k = 0; k < strategies; ++k) {
          // descent is asserted per step inside normal_form
          auto [nf, trace] = normal_form(x, rs, StrategySpec{Strategy::random, rng()});
          ++runs;
          steps += trace.steps.size();
          if (nf != want || replay(x, trace) != nf) {
            if (mismatches++ == 0)
              first_bad = name + " on " + format_element(x, rs.alphabet(), rs.order());
          }
        }
      }
    }
    d << sets.size() << " rule sets, " << runs << " random reductions, " << steps << " steps, " << mismatches
      << " disagreements";
    if (!first_bad.empty()) d << "; first: " << first_bad;
    return mismatches == 0;
  });
}

CriterionResult check_orientation(const SelftestOptions& opt) {
  return run_criterion(7, "rule orientation sweep", [&](std::ostream& d) {
    std::vector<NamedLie> algebras = {{"abelian1", share(abelian_spec(1))},
                                      {"abelian2", share(abelian_spec(2))},
                                      {"abelian3", share(abelian_spec(3))}};
    for (auto& a : selftest_algebras(opt))
      if (a.name != "abelian2") algebras.push_back(a);
    const Caps caps{6, opt.quick ? std::size_t(5) : std::size_t(6)};
    std::size_t sets = 0;
    for (const auto& name : preset_names()) {
      if (name == "bfk") {
        make_preset({name, nullptr}).check_orientation(caps);
        ++sets;
        continue;
      }
      for (const auto& [lname, lie] : algebras) {
        std::vector<PresetOptions> variants;
        if (name == "conf") {
          for (long n = 0; n <= 3; ++n) variants.push_back({name, lie, n, false});
        } else if (name == "u2") {
          variants.push_back({name, lie, 2, false});
          variants.push_back({name, lie, 2, true});
        } else {
          variants.push_back({name, lie, 2, false});
        }
        for (const auto& v : variants) {
          try {
            make_preset(v).check_orientation(caps);
          } catch (const OrientationViolated& e) {
            d << name << (v.as_printed ? " (printed)" : "") << " on " << lname << ": " << e.what();
            return false;
          }
          ++sets;
        }
      }
    }
    d << sets << " preset instances, indices <= " << caps.index_cap << ", lhs length <= " << caps.length_cap
      << ", every lhs is the strict maximum";
    return true;
  });
}

CriterionResult check_rediscovery(const SelftestOptions& opt) {
  return run_criterion(8, "completion rediscovery", [&](std::ostream& d) {
    auto t0 = Clock::now();
    const ForkCaps caps{4, 6};
    const auto& families = u3_gsb_families();
    bool ok = true;
    const std::size_t ymax = opt.quick ? 2 : 3;
    for (std::size_t y = 1; y <= ymax; ++y) {
      LieData lie = validate(abelian_spec(y));
      RuleSet base = preset_u3_base(lie), full = preset_u3(lie);
      auto [out, log] = complete(base, caps, 30, opt.jobs);
      std::set<ModuleMonomial> got, want;
      for (const auto& r : out.module_rules()) got.insert(r->lhs);
      // GSB instances within caps that no other rule of the full set
      // rewrites; completion interreduces, so it only keeps these.
      for (const auto& r : full.module_instances({caps.index_cap, caps.degree_cap})) {
        if (std::find(families.begin(), families.end(), r->tag.family) == families.end()) continue;
        bool minimal = true;
        for (const auto& m : full.all_matches(r->lhs))
          if (!(m.is_module() && m.pos == 0)) minimal = false;
        if (minimal) want.insert(r->lhs);
      }
      const bool same = log.converged && out.algebra_rules().empty() && got == want;
      d << "|Y|=" << y << ": " << got.size() << " derived, " << want.size() << " expected, " << log.rounds
        << " rounds" << (same ? "" : " MISMATCH") << "; ";
      if (!same) {
        for (const auto& m : got)
          if (!want.count(m)) d << "extra " << format_monomial(m, base.alphabet()) << "; ";
        for (const auto& m : want)
          if (!got.count(m)) d << "missing " << format_monomial(m, base.alphabet()) << "; ";
      }
      ok = ok && same;
    }
    const double t = since(t0);
    d << "caps degree " << caps.degree_cap << " index " << caps.index_cap << "; " << static_cast<int>(t * 1000)
      << " ms";
    return ok && t < 900;
  });
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt,
                                          const std::function<void(const CriterionResult&)>& each) {
  using Check = CriterionResult (*)(const SelftestOptions&);
  const Check checks[] = {check_bfk,   check_u3,         check_u2,          check_basis,
                          check_pbw,   check_confluence, check_orientation, check_rediscovery};
  std::vector<CriterionResult> out;
  for (Check c : checks) {
    out.push_back(c(opt));
    if (each) each(out.back());
  }
  return out;
}

}  // namespace cgsb
