#include <gtest/gtest.h>

#include <algorithm>

#include "cgsb/basis.hpp"
#include "cgsb/confluence.hpp"
#include "cgsb/presets.hpp"
#include "cgsb/text_io.hpp"

using namespace cgsb;

namespace {

LieData abelian(std::size_t n) { return validate(abelian_spec(n)); }

std::vector<std::string> texts(const std::vector<ModuleMonomial>& ms, const Alphabet& al) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(format_monomial(m, al));
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Count of all monomials by x-degree, by direct combinatorics.
GradedCount all_monomials_count(std::size_t y, bool central, const Bounds& b) {
  GradedCount out;
  const std::size_t letters = 2 * (b.index_cap + 1) * y;
  for (std::size_t k = 0; k + 1 <= b.x_degree; ++k) {
    std::size_t words = 0, pow = 1;
    for (std::size_t i = 0; i < k; ++i) pow *= letters;
    for (std::size_t j = 0; j <= b.d_power; ++j) words += binom(k + j, j) * pow;
    out[k + 1] = words * (y + (central ? 1 : 0));
  }
  return out;
}

}  // namespace

TEST(Basis, Hilbert) {
  EXPECT_EQ(hilbert(GradedCount{{1, 2}, {2, 7}}), "2 t + 7 t² + O(t³)");
  EXPECT_EQ(hilbert(GradedCount{}), "O(t)");
  EXPECT_EQ(hilbert(GradedCount{{1, 4}}), "4 t + O(t²)");
}

TEST(Basis, EnumerateMonomialsCountsOracle) {
  for (std::size_t y : {1u, 2u}) {
    for (bool central : {false, true}) {
      Alphabet al;
      for (std::size_t i = 0; i < y; ++i) al.names.push_back(std::string(1, char('a' + i)));
      if (central) al.central = "e";
      for (const Bounds& b : {Bounds{3, 2, 1}, Bounds{2, 3, 2}, Bounds{4, 0, 0}}) {
        auto ms = enumerate_monomials(al, b);
        EXPECT_EQ(count_by_degree(ms), all_monomials_count(y, central, b));
        EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), [](const auto& p, const auto& q) {
          return compare_module_monomials(p, q) < 0;
        }));
      }
    }
  }
}

TEST(Basis, EmptyRuleSetLeavesEverything) {
  RuleSet rs("empty", Order::deg_lex, Alphabet{{"a", "b"}, ""});
  const Bounds b{3, 1, 2};
  EXPECT_EQ(enumerate_terminal(rs, b), enumerate_monomials(rs.alphabet(), b));
}

TEST(Basis, ConformalLocalityOne) {
  RuleSet rs = preset_conf(Alphabet{{"a"}, ""}, constant_locality(1));
  EXPECT_EQ(texts(enumerate_terminal(rs, Bounds{3, 0, 1}), rs.alphabet()),
            (std::vector<std::string>{"|a", "L0[a] |a", "L0[a] L0[a] |a"}));
}

TEST(Basis, BfkCompleted) {
  auto [out, log] = complete(preset_bfk(), ForkCaps{6, 6}, 20);
  ASSERT_TRUE(log.converged);
  auto ms = enumerate_terminal(out, Bounds{3, 2, 3});
  EXPECT_EQ(ms.size(), 6u);
  EXPECT_EQ(count_by_degree(ms), (GradedCount{{1, 3}, {2, 3}}));
}

TEST(Basis, PatternExamples) {
  const Alphabet al{{"a"}, ""};
  EXPECT_EQ(texts(comconf3_pattern(1, Bounds{2, 2, 6}), al),
            (std::vector<std::string>{"|a", "L0[a] |a", "L1[a] |a", "D |a", "L2[a] |a", "L0[a] D |a", "L1[a] D |a",
                                      "D D |a", "L0[a] D D |a", "L1[a] D D |a"}));
  EXPECT_EQ(texts(comconf2_pattern(1, Bounds{2, 1, 6}), al),
            (std::vector<std::string>{"|a", "L0[a] |a", "D |a", "L0[a] D |a"}));
}

TEST(Basis, DegreeOneSlice) {
  RuleSet s = preset_u3(validate(sl2_spec()));
  EXPECT_EQ(texts(enumerate_terminal(s, Bounds{1, 0, 6}), s.alphabet()),
            (std::vector<std::string>{"|K", "|e", "|f", "|h"}));
  EXPECT_EQ(hilbert(count_by_degree(enumerate_terminal(s, Bounds{1, 2, 6}))), "10 t + O(t²)");
}

TEST(Basis, PatternIsTheTerminalSetForAbelian) {
  for (std::size_t y : {1u, 2u, 3u}) {
    const Bounds b{3, 2, 6};
    LieData L = abelian(y);
    for (std::size_t N : {3u, 2u}) {
      std::vector<ModuleMonomial> terminal;
      for (auto& m : enumerate_terminal(N == 3 ? preset_u3(L) : preset_u2(L), b))
        if (!m.gen.is_central()) terminal.push_back(m);
      EXPECT_EQ(terminal, N == 3 ? comconf3_pattern(y, b) : comconf2_pattern(y, b)) << "Y=" << y << " N=" << N;
    }
  }
}

TEST(BasisOracle, PatternAgreesWithRowReduction) {
  const Bounds b{3, 2, 6, 6};
  LieData L = abelian(1);
  GradedCount o3 = oracle_dimension(preset_u3_base(L), b, OracleOptions{1, true});
  GradedCount o2 = oracle_dimension(preset_u2_base(L), b, OracleOptions{1, true});
  --o3[1];  // e
  --o2[1];
  EXPECT_EQ(o3, count_by_degree(comconf3_pattern(1, b)));
  EXPECT_EQ(o3, (GradedCount{{1, 3}, {2, 7}, {3, 11}}));
  EXPECT_EQ(o2, count_by_degree(comconf2_pattern(1, b)));
  EXPECT_EQ(o2, (GradedCount{{1, 3}, {2, 3}, {3, 3}}));
}

TEST(BasisOracle, HeadroomIsNeededForLocalityTwo) {
  // Without the extra ∂ the derivation of L1 D D a is cut off and the
  // quotient looks bigger than it is.
  const Bounds b{3, 2, 6, 6};
  GradedCount tight = oracle_dimension(preset_u2_base(abelian(1)), b, OracleOptions{0, true});
  GradedCount wide = oracle_dimension(preset_u2_base(abelian(1)), b, OracleOptions{1, true});
  EXPECT_GT(tight[2], wide[2]);
}

TEST(BasisOracle, BfkSpanIsNotClosed) {
  RuleSet b = preset_bfk();
  const Bounds bounds{3, 2, 3};
  EXPECT_THROW(oracle_dimension(b, bounds), BoundsNotClosed);
  RelationSpan loose(b, bounds, OracleOptions{1, false});
  EXPECT_GT(loose.skipped_rows(), 0u);
  // dropping rows can only make the quotient bigger
  auto [out, log] = complete(b, ForkCaps{6, 6}, 20);
  GradedCount terminal = count_by_degree(enumerate_terminal(out, bounds));
  for (const auto& [deg, n] : terminal) EXPECT_GE(loose.quotient_dims().at(deg), n) << deg;
}

TEST(BasisOracle, RelationSpanContainsRulesAndRejectsOutsiders) {
  LieData L = abelian(1);
  RuleSet base = preset_u3_base(L);
  const Bounds b{2, 1, 3};
  RelationSpan span(base, b, OracleOptions{1, true});
  EXPECT_EQ(span.target_size(), enumerate_monomials(base.alphabet(), b).size());
  const Alphabet& al = base.alphabet();
  EXPECT_TRUE(span.contains(parse_module_element("L3[a] |a", al)));
  EXPECT_FALSE(span.contains(parse_module_element("L0[a] |a", al)));
  EXPECT_THROW(span.reduce(parse_module_element("L0[a] L0[a] L0[a] |a", al)), BoundsNotClosed);
}

TEST(Pbw, Sl2Examples) {
  LieData L = validate(sl2_spec());
  PbwReport r3 = pbw_check(L, 3, Bounds{3, 2, 6});
  EXPECT_TRUE(r3.ok());
  EXPECT_EQ(r3.terminal, (GradedCount{{1, 10}, {2, 54}, {3, 174}}));
  PbwReport r2 = pbw_check(L, 2, Bounds{3, 2, 6});
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.terminal, (GradedCount{{1, 10}, {2, 30}, {3, 62}}));
}

TEST(PbwProperty, IndependentOfBracket) {
  const Bounds b{3, 2, 4};
  for (std::size_t N : {3u, 2u}) {
    PbwReport ab = pbw_check(abelian(3), N, b);
    for (const LieSpec& s : {sl2_spec(), heisenberg_spec()}) {
      PbwReport r = pbw_check(validate(s), N, b);
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.terminal, ab.terminal);
    }
  }
}
