#include <gtest/gtest.h>

#include <random>

#include "cgsb/presets.hpp"
#include "cgsb/selftest.hpp"
#include "cgsb/text_io.hpp"

using namespace cgsb;

namespace {
const Alphabet kAl{{"a", "b", "h"}, "e"};
}

TEST(TextIo, LetterAndMonomialSyntax) {
  ModuleMonomial m = parse_monomial("L1[a] D D |b", kAl);
  EXPECT_EQ(m.word, (Word{Letter::L(1, 0), Letter::partial(), Letter::partial()}));
  EXPECT_EQ(m.gen, Generator{1});
  EXPECT_EQ(format_monomial(m, kAl), "L1[a] D D |b");
  EXPECT_EQ(format_monomial(parse_monomial("|e", kAl), kAl), "|e");
  EXPECT_EQ(format_word({}, kAl), "1");
  EXPECT_EQ(format_letter(Letter::R(0, 2), kAl), "R0[h]");
}

TEST(TextIo, ElementSyntax) {
  ModuleElement x = parse_module_element("3/2 * L1[a] D |b - 1 * |e", kAl);
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.coeff(parse_monomial("|e", kAl)), -1);
  EXPECT_EQ(format_element(x, kAl, Order::deg_lex), "3/2 * L1[a] D |b - 1 * |e");
  EXPECT_EQ(format_element(ModuleElement{}, kAl, Order::deg_lex), "0");
  // descending order regardless of input order
  EXPECT_EQ(format_element(parse_module_element("|e + L0[a] |a", kAl), kAl, Order::deg_lex), "1 * L0[a] |a + 1 * |e");
  EXPECT_EQ(format_element(parse_module_element("-2 * D |a", kAl), kAl, Order::deg_lex), "-2 * D |a");
}

TEST(TextIo, AlgebraElements) {
  AlgebraElement x = parse_algebra_element("L1[a] D - L0[a] + 2 * 1", kAl);
  EXPECT_EQ(x.coeff(Word{}), 2);
  EXPECT_EQ(format_element(x, kAl, Order::deg_lex), "1 * L1[a] D - 1 * L0[a] + 2 * 1");
  EXPECT_FALSE(looks_like_module("L1[a] D"));
  EXPECT_TRUE(looks_like_module("L1[a] |b"));
}

TEST(TextIo, ParseErrors) {
  EXPECT_THROW(parse_monomial("L1[z] |a", kAl), ParseError);
  EXPECT_THROW(parse_monomial("L1[a]", kAl), ParseError);
  EXPECT_THROW(parse_module_element("2 L1[a] |a", kAl), ParseError);
  EXPECT_THROW(parse_module_element("Q |a", kAl), ParseError);
  EXPECT_THROW(parse_module_element("1/0 * |a", kAl), ParseError);
}

TEST(TextIoProperty, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    ModuleElement x = random_element(kAl, rng, 4, 5, 4);
    for (Order o : {Order::deg_lex, Order::weighted}) {
      const std::string text = format_element(x, kAl, o);
      EXPECT_EQ(parse_module_element(text, kAl), x) << text;
    }
    for (const auto& [m, c] : x) EXPECT_EQ(parse_monomial(format_monomial(m, kAl), kAl), m);
  }
}

TEST(TextIo, RulesFile) {
  const std::string text =
      "# comment\n"
      "@order weighted\n"
      "@generators a\n"
      "L1[a] |a -> D L0[a] |a   # trailing\n"
      "\n"
      "L0[a] L0[a] -> 0\n";
  RulesFile f = parse_rules_file(text);
  EXPECT_EQ(f.order, Order::weighted);
  ASSERT_EQ(f.rules.size(), 2u);
  EXPECT_EQ(f.rules[0].line_no, 4u);
  EXPECT_EQ(f.rules[1].rhs, "0");
  auto al = file_alphabet(f);
  ASSERT_TRUE(al.has_value());
  RuleSet rs("file", Order::weighted, *al);
  add_file_rules(rs, f);
  EXPECT_EQ(rs.module_rules().size(), 1u);
  EXPECT_EQ(rs.algebra_rules().size(), 1u);
  EXPECT_EQ(rs.module_rules()[0]->tag.text(), "file{line 4}");
}

TEST(TextIo, RulesFileErrorsNameTheLine) {
  EXPECT_THROW(parse_rules_file("@bogus x\n"), ParseError);
  EXPECT_THROW(parse_rules_file("L1[a] |a\n"), ParseError);
  RulesFile f = parse_rules_file("@generators a\nD |a -> D D |a\n");
  RuleSet rs("file", Order::deg_lex, *file_alphabet(f));
  try {
    add_file_rules(rs, f);
    FAIL();
  } catch (const OrientationViolated& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  RulesFile dup = parse_rules_file("@generators a\nD |a -> 0\nD |a -> |a\n");
  RuleSet rs2("file", Order::deg_lex, *file_alphabet(dup));
  EXPECT_THROW(add_file_rules(rs2, dup), DuplicateLhs);
}

TEST(TextIo, WriteAndReadRules) {
  RuleSet rs("file", Order::weighted, Alphabet{{"a"}, ""});
  RulesFile f = parse_rules_file("L1[a] |a -> D L0[a] |a\nL0[a] L0[a] -> 0\n");
  add_file_rules(rs, f);
  const std::string text = write_rules_file(rs, "bfk");
  RulesFile back = parse_rules_file(text);
  EXPECT_EQ(back.preset, "bfk");
  EXPECT_EQ(back.order, Order::weighted);
  EXPECT_EQ(back.generators, std::vector<std::string>{"a"});
  ASSERT_EQ(back.rules.size(), 2u);
  EXPECT_EQ(back.rules[0].lhs, "L0[a] L0[a]");
  EXPECT_EQ(back.rules[1].rhs, "1 * D L0[a] |a");
}

TEST(TextIo, LieJson) {
  const std::string text = R"({"basis": ["e","f","h"], "central": "K",
    "bracket": {"h,e": {"e": 2}, "e,f": {"h": 1}, "h,f": {"f": "-2"}},
    "form": {"e,f": 4, "h,h": "8/1"}})";
  LieData L = validate(parse_lie_json(text));
  LieData S = validate(sl2_spec());
  EXPECT_EQ(L.spec().brackets, S.spec().brackets);
  EXPECT_EQ(L.spec().form, S.spec().form);
  EXPECT_EQ(L.central_name(), "K");
  // and back
  LieData again = validate(parse_lie_json(lie_to_json(L)));
  EXPECT_EQ(again.spec().brackets, S.spec().brackets);
}

TEST(TextIo, LieJsonErrors) {
  EXPECT_THROW(parse_lie_json("{"), ParseError);
  EXPECT_THROW(parse_lie_json(R"({"basis": ["a"], "colour": 1})"), ParseError);
  EXPECT_THROW(parse_lie_json(R"({"basis": ["a"], "form": {"a,b": 1}})"), ParseError);
  EXPECT_THROW(parse_lie_json(R"({"basis": ["a","b"], "form": {"a,b": 1.5}})"), ParseError);
  EXPECT_THROW(parse_lie_json(R"({"form": {}})"), ParseError);
}
