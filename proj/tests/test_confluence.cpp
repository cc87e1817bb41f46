#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "cgsb/basis.hpp"
#include "cgsb/confluence.hpp"
#include "cgsb/presets.hpp"
#include "cgsb/text_io.hpp"

using namespace cgsb;

namespace {

LieData sl2() { return validate(sl2_spec()); }
LieData abelian(std::size_t n) { return validate(abelian_spec(n)); }

using ForkKey = std::tuple<std::string, std::string, std::string>;  // ambiguity, tag, tag

ForkKey key(const std::string& amb, std::string t1, std::string t2) {
  if (t2 < t1) std::swap(t1, t2);
  return {amb, t1, t2};
}

std::set<ForkKey> fork_keys(const RuleSet& rs, const ForkList& fl) {
  std::set<ForkKey> out;
  for (const Fork& f : fl.forks) {
    const std::string amb = is_module_kind(f.kind) ? format_monomial(f.mono, rs.alphabet())
                                                    : format_word(f.word, rs.alphabet());
    out.insert(key(amb, f.first.tag().text(), f.second.tag().text()));
  }
  return out;
}

// Brute force: every monomial up to `len` letters, every pair of distinct
// matches that share a position and together cover the monomial. Module
// matches run to the end, so covering means one of them starts at 0.
std::set<ForkKey> brute_forks(const RuleSet& rs, std::size_t len, std::uint32_t index_cap) {
  std::set<ForkKey> out;
  const Alphabet& al = rs.alphabet();
  for (const auto& m : enumerate_monomials(al, Bounds{len + 1, len, index_cap}, rs.order())) {
    if (m.word.size() > len) continue;
    const std::size_t n = m.word.size();
    auto ms = rs.all_matches(m);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        const Match& p = ms[i];
        const Match& q = ms[j];
        std::size_t pe = p.is_module() ? n + 1 : p.pos + p.len, qe = q.is_module() ? n + 1 : q.pos + q.len;
        if (!p.is_module() && !q.is_module()) continue;  // algebra pairs are checked on words
        bool overlap = p.pos < qe && q.pos < pe;
        bool cover = std::min(p.pos, q.pos) == 0;
        if (overlap && cover) out.insert(key(format_monomial(m, al), p.tag().text(), q.tag().text()));
      }
    if (m.gen != Generator{0}) continue;
    auto as = rs.all_matches(m.word);
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = i + 1; j < as.size(); ++j) {
        const Match& p = as[i];
        const Match& q = as[j];
        std::size_t pe = p.pos + p.len, qe = q.pos + q.len;
        bool overlap = p.pos < qe && q.pos < pe;
        bool cover = std::min(p.pos, q.pos) == 0 && std::max(pe, qe) == n;
        if (overlap && cover) out.insert(key(format_word(m.word, al), p.tag().text(), q.tag().text()));
      }
  }
  return out;
}

bool same_report(const VerificationReport& a, const VerificationReport& b) {
  if (a.forks != b.forks || a.confluent != b.confluent || a.skipped != b.skipped || a.by_kind != b.by_kind)
    return false;
  if (a.failures.size() != b.failures.size()) return false;
  for (std::size_t i = 0; i < a.failures.size(); ++i)
    if (a.failures[i].mod_normal_form != b.failures[i].mod_normal_form ||
        a.failures[i].alg_normal_form != b.failures[i].alg_normal_form)
      return false;
  return true;
}

}  // namespace

TEST(Confluence, BfkForksBeforeCompletion) {
  RuleSet b = preset_bfk();
  VerificationReport v = verify_gsb(b, ForkCaps{4, 4});
  EXPECT_FALSE(v.ok());
  bool r2l1 = false;
  for (const auto& f : v.failures) {
    if (format_monomial(f.fork.mono, b.alphabet()) != "R2[a] L1[a] |a") continue;
    r2l1 = true;
    EXPECT_EQ(f.fork.kind, ForkKind::module_overlap);
    EXPECT_EQ(format_element(f.mod_normal_form, b.alphabet(), b.order()), "2 * D L0[a] L0[a] |a");
  }
  EXPECT_TRUE(r2l1);
}

TEST(Confluence, U3DL1ForkIsConfluent) {
  RuleSet s = preset_u3(sl2());
  ForkList fl = find_forks(s, ForkCaps{3, 3});
  Reducer red(s);
  std::size_t seen = 0;
  for (const Fork& f : fl.forks) {
    if (format_monomial(f.mono, s.alphabet()) != "D L1[h] L2[e] |f") continue;
    if (f.first.tag().family != "A-dL1" && f.second.tag().family != "A-dL1") continue;
    ++seen;
    EXPECT_EQ(f.kind, ForkKind::module_overlap);
    EXPECT_TRUE(composition(f, red).confluent());
  }
  EXPECT_EQ(seen, 1u);
}

TEST(Confluence, DisjointRulesHaveNoForks) {
  RuleSet rs("t", Order::deg_lex, Alphabet{{"a"}, ""});
  const Alphabet& al = rs.alphabet();
  rs.add_rule(AlgebraRule{parse_word("L0[a] R0[a]", al), AlgebraElement{}, {"x", ""}});
  rs.add_rule(ModuleRule{parse_monomial("D |a", al), ModuleElement{}, {"y", ""}});
  ForkList fl = find_forks(rs, ForkCaps{6, 6});
  EXPECT_TRUE(fl.forks.empty());
  EXPECT_EQ(fl.skipped, 0u);
}

TEST(Confluence, ForkOrderIsDeterministic) {
  RuleSet s = preset_u2(sl2());
  ForkList a = find_forks(s, ForkCaps{4, 4}), b = find_forks(s, ForkCaps{4, 4});
  ASSERT_EQ(a.forks.size(), b.forks.size());
  for (std::size_t i = 0; i < a.forks.size(); ++i) {
    EXPECT_EQ(a.forks[i].kind, b.forks[i].kind);
    EXPECT_EQ(a.forks[i].mono, b.forks[i].mono);
    EXPECT_EQ(a.forks[i].word, b.forks[i].word);
  }
}

TEST(Confluence, U3HasEveryModuleForkShape) {
  // GSB-1.x lhs L1^a L2^b c ends in the C-L2 lhs L2^b c
  VerificationReport v = verify_gsb(preset_u3(sl2()), ForkCaps{4, 6});
  EXPECT_GT(v.by_kind[static_cast<std::size_t>(ForkKind::module_suffix)], 0u);
  EXPECT_GT(v.by_kind[static_cast<std::size_t>(ForkKind::module_inclusion)], 0u);
  EXPECT_GT(v.by_kind[static_cast<std::size_t>(ForkKind::module_overlap)], 0u);
  EXPECT_TRUE(v.ok());
}

TEST(ConfluenceOracle, FindForksMatchesBruteForce) {
  struct Case {
    std::string name;
    RuleSet rs;
    std::size_t len;
    std::uint32_t index;
  };
  std::vector<Case> cases;
  cases.push_back({"bfk", preset_bfk(), 4, 3});
  cases.push_back({"u3", preset_u3(abelian(1)), 3, 3});
  cases.push_back({"u2", preset_u2(abelian(2)), 3, 2});
  cases.push_back({"conf", preset_conf(Alphabet{{"a"}, ""}, constant_locality(2)), 4, 3});
  for (const Case& c : cases) {
    std::set<ForkKey> expect = brute_forks(c.rs, c.len, c.index);
    std::set<ForkKey> got = fork_keys(c.rs, find_forks(c.rs, ForkCaps{c.len, c.index}));
    EXPECT_FALSE(expect.empty()) << c.name;
    for (const auto& k : expect)
      EXPECT_TRUE(got.count(k)) << c.name << " missing " << std::get<0>(k) << " " << std::get<1>(k) << " / "
                                << std::get<2>(k);
    for (const auto& k : got)
      EXPECT_TRUE(expect.count(k)) << c.name << " extra " << std::get<0>(k) << " " << std::get<1>(k) << " / "
                                   << std::get<2>(k);
  }
}

TEST(ConfluenceProperty, CapsAreMonotone) {
  RuleSet s = preset_u3(abelian(2));
  ForkList small = find_forks(s, ForkCaps{3, 4}), big = find_forks(s, ForkCaps{4, 4});
  std::set<ForkKey> a = fork_keys(s, small), b = fork_keys(s, big);
  EXPECT_LT(a.size(), b.size());
  for (const auto& k : a) EXPECT_TRUE(b.count(k));
}

TEST(ConfluenceProperty, JobsDoNotChangeResults) {
  for (const std::string& name : {std::string("u3"), std::string("u2-printed")}) {
    RuleSet s = make_preset({name, std::make_shared<const LieData>(sl2())});
    EXPECT_TRUE(same_report(verify_gsb(s, ForkCaps{4, 5}, 1), verify_gsb(s, ForkCaps{4, 5}, 3))) << name;
  }
  auto [one, log1] = complete(preset_bfk(), ForkCaps{5, 5}, 20, 1);
  auto [three, log3] = complete(preset_bfk(), ForkCaps{5, 5}, 20, 3);
  EXPECT_EQ(write_rules_file(one), write_rules_file(three));
  EXPECT_EQ(log1.events.size(), log3.events.size());
}

TEST(Completion, BfkConverges) {
  auto [out, log] = complete(preset_bfk(), ForkCaps{6, 6}, 20);
  EXPECT_TRUE(log.converged);
  EXPECT_TRUE(verify_gsb(out, ForkCaps{6, 6}).ok());
  // the terminal monomials in degree 1..2 with no ∂
  std::vector<std::string> terminal;
  for (const auto& m : enumerate_terminal(out, Bounds{6, 0, 6})) terminal.push_back(format_monomial(m, out.alphabet()));
  EXPECT_EQ(terminal, (std::vector<std::string>{"|a", "L0[a] |a"}));
  EXPECT_EQ(hilbert(count_by_degree(enumerate_terminal(out, Bounds{3, 2, 3}))), "3 t + 3 t² + O(t³)");
}

TEST(Completion, GsbIsAFixpoint) {
  for (const std::string& name : {std::string("u3"), std::string("u2")}) {
    RuleSet s = make_preset({name, std::make_shared<const LieData>(sl2())});
    auto [out, log] = complete(s, ForkCaps{4, 5}, 5);
    EXPECT_TRUE(log.converged) << name;
    EXPECT_TRUE(log.events.empty()) << name;
    EXPECT_EQ(log.rounds, 1u) << name;
  }
}

TEST(Completion, RoundCapGivesPartialResult) {
  auto [out, log] = complete(preset_bfk(), ForkCaps{6, 6}, 1);
  EXPECT_FALSE(log.converged);
  EXPECT_GT(out.concrete_count(), 0u);
}

// Soundness against the row-reduction oracle: whatever completion adds is a
// consequence of the input relations.
TEST(CompletionOracle, AddedRulesAreConsequences) {
  for (std::size_t y : {1u, 2u}) {
    RuleSet base = preset_u3_base(abelian(y));
    auto [out, log] = complete(base, ForkCaps{4, 6}, 20);
    EXPECT_TRUE(log.converged);
    const Bounds b{3, 2, 6, 6};
    RelationSpan span(base, b, OracleOptions{1, true});
    std::size_t checked = 0;
    for (const auto& r : out.module_rules()) {
      if (x_degree(r->lhs) > b.x_degree || d_power(r->lhs.word) > b.d_power) continue;
      ModuleElement rel(r->lhs);
      rel -= r->rhs;
      EXPECT_TRUE(span.contains(rel)) << r->tag.text();
      ++checked;
    }
    EXPECT_GT(checked, 0u);
  }
}
