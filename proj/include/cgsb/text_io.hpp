#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgsb/elements.hpp"
#include "cgsb/lie_data.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

// Canonical text syntax: `D`, `L2[a]`, `R0[h]`, juxtaposition, `|x` for the
// generator, `1` for the empty algebra word.
std::string format_letter(Letter p, const Alphabet& al);
std::string format_word(const Word& w, const Alphabet& al);
std::string format_monomial(const ModuleMonomial& m, const Alphabet& al);

/// Terms in descending order, e.g. `3/2 * L1[a] D |b - 1 * |e`; zero is `0`.
std::string format_element(const ModuleElement& x, const Alphabet& al, Order o);
std::string format_element(const AlgebraElement& x, const Alphabet& al, Order o);

std::string format_rule(const AlgebraRule& r, const Alphabet& al, Order o);
std::string format_rule(const ModuleRule& r, const Alphabet& al, Order o);

Word parse_word(const std::string& text, const Alphabet& al);
ModuleMonomial parse_monomial(const std::string& text, const Alphabet& al);
ModuleElement parse_module_element(const std::string& text, const Alphabet& al);
AlgebraElement parse_algebra_element(const std::string& text, const Alphabet& al);

/// True when the text mentions a module generator.
bool looks_like_module(const std::string& text);

/// A parsed rules file. Rules are kept as written; `build` orients-checks
/// them and puts them on top of the base set.
struct RulesFile {
  std::optional<std::string> preset;
  std::optional<Order> order;
  std::vector<std::string> generators;
  std::optional<std::string> central;
  struct Line {
    std::size_t line_no = 0;
    std::string lhs, rhs;
  };
  std::vector<Line> rules;
};

RulesFile parse_rules_file(const std::string& text);

/// Adds the file's rules to `base` (tag "file", binding "line N"). Throws
/// OrientationViolated or DuplicateLhs naming the line.
void add_file_rules(RuleSet& base, const RulesFile& file);

/// Alphabet declared by @generators/@central, if any.
std::optional<Alphabet> file_alphabet(const RulesFile& file);

/// `@preset`, `@order`, `@generators`, `@central`, then the concrete rules.
std::string write_rules_file(const RuleSet& rs, const std::string& preset_line = "");

/// JSON: {"basis": [...], "central": "K", "bracket": {"h,e": {"e": 2}}, "form": {"e,f": 4}}
LieSpec parse_lie_json(const std::string& text);
std::string lie_to_json(const LieData& lie);

std::string read_file(const std::string& path);

}  // namespace cgsb
