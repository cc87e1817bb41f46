#include "cgsb/rewrite.hpp"

#include <algorithm>

namespace cgsb {

namespace {

Word prefix(const Word& w, std::size_t n) { return subword(w, 0, n); }
Word suffix_from(const Word& w, std::size_t pos) { return subword(w, pos, w.size() - pos); }

template <class Elem>
std::size_t hash_terms(const Elem& x) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [k, c] : x) {
    std::size_t kh;
    if constexpr (std::is_same_v<Elem, ModuleElement>)
      kh = MonomialHash{}(k);
    else
      kh = WordHash{}(k);
    h ^= kh + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.get_str()) + (h << 6) + (h >> 2);
  }
  return h;
}

template <class Key>
bool all_below(const Combination<Key>& repl, const Key& m, Order o) {
  for (const auto& [k, c] : repl)
    if (compare_keys(k, m, o) >= 0) return false;
  return true;
}

}  // namespace

std::size_t element_hash(const ModuleElement& x) { return hash_terms(x); }
std::size_t element_hash(const AlgebraElement& x) { return hash_terms(x); }

ModuleElement apply_match(const ModuleMonomial& m, const Match& match) {
  Word left = prefix(m.word, match.pos);
  if (match.is_module()) return act_word(left, match.mrule->rhs);
  Word right = suffix_from(m.word, match.pos + match.len);
  ModuleElement out;
  for (const auto& [u, c] : match.arule->rhs) out.add_term(ModuleMonomial{concat(concat(left, u), right), m.gen}, c);
  return out;
}

AlgebraElement apply_match(const Word& w, const Match& match) {
  return sandwich(prefix(w, match.pos), match.arule->rhs, suffix_from(w, match.pos + match.len));
}

Reducer::Reducer(const RuleSet& rs, std::size_t budget) : rs_(&rs), budget_(budget) {}

void Reducer::tick() {
  if (++steps_ > budget_) throw NonTermination("reduction step budget of " + std::to_string(budget_) + " exceeded");
}

const ModuleElement& Reducer::normal_form(const ModuleMonomial& m) {
  if (auto it = mod_memo_.find(m); it != mod_memo_.end()) return it->second;
  if (mod_active_.count(m)) throw NonTermination("rewriting cycle through a monomial");
  auto match = rs_->first_match(m);
  if (!match) return mod_memo_.emplace(m, ModuleElement(m)).first->second;
  tick();
  mod_active_.insert(m);
  ModuleElement repl = apply_match(m, *match);
  ModuleElement out;
  for (const auto& [mm, c] : repl) out.add_scaled(normal_form(mm), c);
  mod_active_.erase(m);
  return mod_memo_.emplace(m, std::move(out)).first->second;
}

ModuleElement Reducer::normal_form(const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [m, c] : x) out.add_scaled(normal_form(m), c);
  return out;
}

const AlgebraElement& Reducer::normal_form(const Word& w) {
  if (auto it = alg_memo_.find(w); it != alg_memo_.end()) return it->second;
  if (alg_active_.count(w)) throw NonTermination("rewriting cycle through a word");
  auto match = rs_->first_match(w);
  if (!match) return alg_memo_.emplace(w, AlgebraElement(w)).first->second;
  tick();
  alg_active_.insert(w);
  AlgebraElement repl = apply_match(w, *match);
  AlgebraElement out;
  for (const auto& [u, c] : repl) out.add_scaled(normal_form(u), c);
  alg_active_.erase(w);
  return alg_memo_.emplace(w, std::move(out)).first->second;
}

AlgebraElement Reducer::normal_form(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [w, c] : x) out.add_scaled(normal_form(w), c);
  return out;
}

namespace {

template <class Key>
std::optional<Combination<Key>> reduce_once_impl(const Combination<Key>& x, const RuleSet& rs, Strategy strategy,
                                                 std::mt19937_64* rng, ReductionStep* step) {
  std::optional<std::pair<Key, Rational>> chosen;
  std::optional<Match> match;
  if (strategy == Strategy::leftmost_largest) {
    for (const auto& [k, c] : sorted_terms(x, rs.order())) {
      if (auto mt = rs.first_match(k)) {
        chosen.emplace(k, c);
        match = std::move(mt);
        break;
      }
    }
  } else {
    if (!rng) throw Error("random strategy needs a generator");
    std::vector<std::pair<Key, std::vector<Match>>> reducible;
    for (const auto& [k, c] : x)
      if (auto all = rs.all_matches(k); !all.empty()) reducible.emplace_back(k, std::move(all));
    if (!reducible.empty()) {
      auto& pick = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(*rng)];
      auto& ms = pick.second;
      match = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(*rng)];
      chosen.emplace(pick.first, x.coeff(pick.first));
    }
  }
  if (!chosen) return std::nullopt;

  const auto& [k, c] = *chosen;
  Combination<Key> repl = apply_match(k, *match);
  if (!all_below(repl, k, rs.order()))
    throw OrientationViolated("step by " + match->tag().text() + " does not decrease the rewritten monomial");
  Combination<Key> out = x;
  out.add_term(k, -c);
  out.add_scaled(repl, c);

  if (step) {
    step->rule = match->tag();
    step->coeff = c;
    step->before_hash = element_hash(x);
    step->after_hash = element_hash(out);
    const Word& w = [&]() -> const Word& {
      if constexpr (std::is_same_v<Key, ModuleMonomial>)
        return k.word;
      else
        return k;
    }();
    step->left = prefix(w, match->pos);
    step->module = match->is_module();
    if (match->is_module()) {
      step->right.clear();
      step->mod_lhs = match->mrule->lhs;
      step->mod_rhs = match->mrule->rhs;
    } else {
      step->right = suffix_from(w, match->pos + match->len);
      step->alg_lhs = match->arule->lhs;
      step->alg_rhs = match->arule->rhs;
      if constexpr (std::is_same_v<Key, ModuleMonomial>) step->mod_lhs.gen = k.gen;
    }
  }
  return out;
}

template <class Key>
std::pair<Combination<Key>, Trace> normal_form_impl(const Combination<Key>& x, const RuleSet& rs,
                                                    StrategySpec strategy, std::size_t budget) {
  std::mt19937_64 rng(strategy.seed);
  Trace trace;
  Combination<Key> cur = x;
  while (true) {
    ReductionStep step;
    auto next = reduce_once_impl(cur, rs, strategy.kind, &rng, &step);
    if (!next) break;
    if (trace.steps.size() >= budget)
      throw NonTermination("reduction step budget of " + std::to_string(budget) + " exceeded");
    trace.steps.push_back(std::move(step));
    cur = std::move(*next);
  }
  return {cur, std::move(trace)};
}

}  // namespace

std::optional<ModuleElement> reduce_once(const ModuleElement& x, const RuleSet& rs, Strategy strategy,
                                         std::mt19937_64* rng, ReductionStep* step) {
  return reduce_once_impl(x, rs, strategy, rng, step);
}

std::optional<AlgebraElement> reduce_once(const AlgebraElement& x, const RuleSet& rs, Strategy strategy,
                                          std::mt19937_64* rng, ReductionStep* step) {
  return reduce_once_impl(x, rs, strategy, rng, step);
}

std::pair<ModuleElement, Trace> normal_form(const ModuleElement& x, const RuleSet& rs, StrategySpec strategy,
                                            std::size_t budget) {
  return normal_form_impl(x, rs, strategy, budget);
}

std::pair<AlgebraElement, Trace> normal_form(const AlgebraElement& x, const RuleSet& rs, StrategySpec strategy,
                                             std::size_t budget) {
  return normal_form_impl(x, rs, strategy, budget);
}

bool is_terminal(const ModuleMonomial& m, const RuleSet& rs) { return !rs.first_match(m).has_value(); }

ModuleElement replay(const ModuleElement& x, const Trace& t) {
  ModuleElement y = x;
  for (const auto& s : t.steps) {
    ModuleElement diff;
    if (s.module) {
      diff.add_term(ModuleMonomial{concat(s.left, s.mod_lhs.word), s.mod_lhs.gen}, 1);
      diff.add_scaled(act_word(s.left, s.mod_rhs), -1);
    } else {
      Generator g = s.mod_lhs.gen;
      diff.add_term(ModuleMonomial{concat(concat(s.left, s.alg_lhs), s.right), g}, 1);
      for (const auto& [u, c] : s.alg_rhs) diff.add_term(ModuleMonomial{concat(concat(s.left, u), s.right), g}, -c);
    }
    y.add_scaled(diff, -s.coeff);
  }
  return y;
}

AlgebraElement replay(const AlgebraElement& x, const Trace& t) {
  AlgebraElement y = x;
  for (const auto& s : t.steps) {
    AlgebraElement diff(concat(concat(s.left, s.alg_lhs), s.right));
    diff.add_scaled(sandwich(s.left, s.alg_rhs, s.right), -1);
    y.add_scaled(diff, -s.coeff);
  }
  return y;
}

}  // namespace cgsb
