#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cgsb/elements.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

class NonTermination : public Error {
 public:
  using Error::Error;
};

enum class Strategy { leftmost_largest, random };

struct StrategySpec {
  Strategy kind = Strategy::leftmost_largest;
  std::uint64_t seed = 0;
};

/// One edge of the rewriting graph: `coeff * left·(lhs - rhs)·right` was
/// subtracted (right is empty for module rewrites).
struct ReductionStep {
  RuleTag rule;
  bool module = false;
  Word left;
  Word right;
  Word alg_lhs;
  AlgebraElement alg_rhs;
  ModuleMonomial mod_lhs;
  ModuleElement mod_rhs;
  Rational coeff;
  std::size_t before_hash = 0;
  std::size_t after_hash = 0;
};

struct Trace {
  std::vector<ReductionStep> steps;
};

std::size_t element_hash(const ModuleElement& x);
std::size_t element_hash(const AlgebraElement& x);

/// The replacement of the monomial at `m` by the matched rule, coefficient 1.
ModuleElement apply_match(const ModuleMonomial& m, const Match& match);
AlgebraElement apply_match(const Word& w, const Match& match);

/// Memoized normal forms under the leftmost-match strategy. Rewriting each
/// monomial at its leftmost match and extending linearly gives the same
/// result as rewriting the largest reducible monomial first, since the choice
/// depends on the monomial only. Not thread-safe; use one per thread.
class Reducer {
 public:
  explicit Reducer(const RuleSet& rs, std::size_t budget = 1'000'000);

  const ModuleElement& normal_form(const ModuleMonomial& m);
  ModuleElement normal_form(const ModuleElement& x);
  /// Uses algebra rules only.
  const AlgebraElement& normal_form(const Word& w);
  AlgebraElement normal_form(const AlgebraElement& x);

  bool is_terminal(const ModuleMonomial& m) const { return !rs_->first_match(m).has_value(); }
  const RuleSet& rules() const { return *rs_; }
  std::size_t steps() const { return steps_; }
  std::size_t cache_size() const { return mod_memo_.size() + alg_memo_.size(); }

 private:
  void tick();
  const RuleSet* rs_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::unordered_map<ModuleMonomial, ModuleElement, MonomialHash> mod_memo_;
  std::unordered_map<Word, AlgebraElement, WordHash> alg_memo_;
  std::unordered_set<ModuleMonomial, MonomialHash> mod_active_;
  std::unordered_set<Word, WordHash> alg_active_;
};

/// One rewrite step, or nullopt when x is terminal.
std::optional<ModuleElement> reduce_once(const ModuleElement& x, const RuleSet& rs, Strategy strategy,
                                         std::mt19937_64* rng = nullptr, ReductionStep* step = nullptr);
std::optional<AlgebraElement> reduce_once(const AlgebraElement& x, const RuleSet& rs, Strategy strategy,
                                          std::mt19937_64* rng = nullptr, ReductionStep* step = nullptr);

/// Step-by-step reduction with a full trace. Checks per step that the
/// rewritten monomial is replaced by strictly smaller ones.
std::pair<ModuleElement, Trace> normal_form(const ModuleElement& x, const RuleSet& rs, StrategySpec strategy = {},
                                            std::size_t budget = 1'000'000);
std::pair<AlgebraElement, Trace> normal_form(const AlgebraElement& x, const RuleSet& rs,
                                             StrategySpec strategy = {}, std::size_t budget = 1'000'000);

bool is_terminal(const ModuleMonomial& m, const RuleSet& rs);

/// Recomputes x minus the sum of the step contributions; equals the final
/// element iff the trace is a valid derivation from x.
ModuleElement replay(const ModuleElement& x, const Trace& t);
AlgebraElement replay(const AlgebraElement& x, const Trace& t);

}  // namespace cgsb
