#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgsb/elements.hpp"
#include "cgsb/terms.hpp"

namespace cgsb {

/// Names of the module generators X1 plus the optional central generator.
/// Letter decorations and generator ids index into `names`.
struct Alphabet {
  std::vector<std::string> names;
  std::string central;  // empty when there is no central generator

  bool has_central() const { return !central.empty(); }
  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> find(const std::string& name) const;
  std::string generator_name(Generator g) const;
};

class ConstraintViolated : public Error {
 public:
  using Error::Error;
};
class OrientationViolated : public Error {
 public:
  using Error::Error;
};
class DuplicateLhs : public Error {
 public:
  using Error::Error;
};

/// Provenance: family id and the binding that produced the rule.
struct RuleTag {
  std::string family;
  std::string binding;
  std::string text() const { return binding.empty() ? family : family + "{" + binding + "}"; }
};

struct AlgebraRule {
  Word lhs;
  AlgebraElement rhs;
  RuleTag tag;
  // Holds on every module element rather than in the operator algebra
  // itself; still sound to apply at any subword.
  bool annihilator = false;
};

struct ModuleRule {
  ModuleMonomial lhs;
  ModuleElement rhs;
  RuleTag tag;
};

/// Caps for listing instances of infinite families.
struct Caps {
  std::uint32_t index_cap = 6;  // max letter index in a lhs
  std::size_t length_cap = 5;   // max lhs word length
};

struct Binding {
  std::vector<std::size_t> letters;
  std::vector<long> ints;
  friend bool operator==(const Binding&, const Binding&) = default;
};

struct PatternItem {
  enum class Kind { D, DPow, L, R };
  Kind kind = Kind::D;
  int index_const = -1;  // fixed letter index
  int index_param = -1;  // or an integer slot
  int deco_param = -1;   // letter slot
  int pow_param = -1;    // integer slot of a DPow run
};

struct IntParam {
  std::string name;
  long min = 0;
  bool is_power = false;  // ∂-run length (capped by length) rather than a letter index
};

/// A parameterized rule family. The lhs is a fixed letter pattern; the
/// constraint and rhs are closures over the binding.
struct RuleSchema {
  std::string id;
  bool module = true;
  bool annihilator = false;
  std::vector<std::string> letter_params;
  std::vector<IntParam> int_params;
  std::vector<PatternItem> pattern;
  int gen_param = -1;  // letter slot of the generator; -1 means the central generator
  std::string constraint;
  std::function<bool(const Binding&)> admissible;
  std::function<AlgebraElement(const Binding&)> algebra_rhs;
  std::function<ModuleElement(const Binding&)> module_rhs;

  Word lhs_word(const Binding& b) const;
  ModuleMonomial lhs_monomial(const Binding& b) const;

  /// Reads a binding off w starting at pos. Algebra patterns match a prefix of
  /// w[pos..]; module patterns must consume w[pos..] and the generator.
  std::optional<Binding> decode(const Word& w, std::size_t pos, Generator g) const;

  /// Every admissible binding with letter slots over [0, n_letters) and
  /// integers within caps.
  void for_each_binding(std::size_t n_letters, const Caps& caps,
                        const std::function<void(const Binding&)>& fn) const;

  std::string binding_text(const Binding& b, const Alphabet& al) const;
};

/// Builds the concrete rule, checking the constraint and the orientation.
AlgebraRule instantiate_algebra(const RuleSchema& s, const Binding& b, const Alphabet& al, Order o);
ModuleRule instantiate_module(const RuleSchema& s, const Binding& b, const Alphabet& al, Order o);

/// Leading monomial becomes the lhs, normalized to coefficient 1.
AlgebraRule orient(const AlgebraElement& p, Order o, RuleTag tag = {"derived", ""});
ModuleRule orient(const ModuleElement& p, Order o, RuleTag tag = {"derived", ""});

bool is_oriented(const AlgebraRule& r, Order o);
bool is_oriented(const ModuleRule& r, Order o);

struct Match {
  std::size_t pos = 0;
  std::size_t len = 0;
  std::shared_ptr<const AlgebraRule> arule;  // exactly one of these is set
  std::shared_ptr<const ModuleRule> mrule;
  bool is_module() const { return mrule != nullptr; }
  const RuleTag& tag() const { return mrule ? mrule->tag : arule->tag; }
};

/// Concrete rules plus lazily matched schemas, under one monomial order.
class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::string name, Order order, Alphabet alphabet);

  const std::string& name() const { return name_; }
  Order order() const { return order_; }
  const Alphabet& alphabet() const { return alphabet_; }

  void add_schema(RuleSchema s);
  const std::vector<std::shared_ptr<const RuleSchema>>& schemas() const { return schemas_; }

  /// Throws DuplicateLhs if the lhs is present with a different rhs.
  void add_rule(AlgebraRule r);
  void add_rule(ModuleRule r);
  bool remove_rule(const Word& lhs);
  bool remove_rule(const ModuleMonomial& lhs);

  /// Concrete rules in insertion order.
  std::vector<std::shared_ptr<const AlgebraRule>> algebra_rules() const;
  std::vector<std::shared_ptr<const ModuleRule>> module_rules() const;
  std::size_t concrete_count() const { return alg_order_.size() + mod_order_.size(); }

  /// Leftmost match; at each position algebra rules before module rules,
  /// concrete rules before schemas.
  std::optional<Match> first_match(const ModuleMonomial& m) const;
  std::vector<Match> all_matches(const ModuleMonomial& m) const;
  /// Algebra rules only.
  std::optional<Match> first_match(const Word& w) const;
  std::vector<Match> all_matches(const Word& w) const;

  /// Concrete rules and schema instances within caps, schemas first.
  std::vector<std::shared_ptr<const AlgebraRule>> algebra_instances(const Caps& caps) const;
  std::vector<std::shared_ptr<const ModuleRule>> module_instances(const Caps& caps) const;

  /// Throws OrientationViolated naming the first bad rule and binding.
  void check_orientation(const Caps& caps) const;

 private:
  template <class Fn>
  bool scan(const Word& w, std::optional<Generator> gen, bool first_only, Fn&& emit) const;

  std::string name_;
  Order order_ = Order::deg_lex;
  Alphabet alphabet_;
  std::vector<std::shared_ptr<const RuleSchema>> schemas_;
  std::vector<std::shared_ptr<const RuleSchema>> by_first_[4];
  std::unordered_map<Word, std::shared_ptr<const AlgebraRule>, WordHash> alg_;
  std::unordered_map<ModuleMonomial, std::shared_ptr<const ModuleRule>, MonomialHash> mod_;
  std::vector<Word> alg_order_;
  std::vector<ModuleMonomial> mod_order_;
  std::vector<std::size_t> alg_lengths_;
  std::vector<std::size_t> mod_lengths_;
};

}  // namespace cgsb
