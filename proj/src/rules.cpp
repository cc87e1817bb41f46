#include "cgsb/rules.hpp"

#include <algorithm>
#include <limits>

namespace cgsb {

namespace {

constexpr std::size_t kUnbound = std::numeric_limits<std::size_t>::max();

int bucket_of(Letter p) { return static_cast<int>(p.kind()); }

int bucket_of(const PatternItem& it) {
  switch (it.kind) {
    case PatternItem::Kind::D:
    case PatternItem::Kind::DPow:
      return 0;
    case PatternItem::Kind::L:
      return 1;
    case PatternItem::Kind::R:
      return 2;
  }
  return 3;
}

bool bind_letter(Binding& b, int slot, std::size_t value) {
  auto& cur = b.letters[static_cast<std::size_t>(slot)];
  if (cur == kUnbound) {
    cur = value;
    return true;
  }
  return cur == value;
}

bool bind_int(Binding& b, int slot, long value) {
  auto& cur = b.ints[static_cast<std::size_t>(slot)];
  if (cur < 0) {
    cur = value;
    return true;
  }
  return cur == value;
}

void insert_length(std::vector<std::size_t>& v, std::size_t n) {
  if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
}

}  // namespace

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::string Alphabet::generator_name(Generator g) const {
  if (g.is_central()) return central;
  return names.at(static_cast<std::size_t>(g.id));
}

Word RuleSchema::lhs_word(const Binding& b) const {
  Word w;
  for (const auto& it : pattern) {
    switch (it.kind) {
      case PatternItem::Kind::D:
        w.push_back(Letter::partial());
        break;
      case PatternItem::Kind::DPow:
        w.insert(w.end(), static_cast<std::size_t>(b.ints[static_cast<std::size_t>(it.pow_param)]), Letter::partial());
        break;
      case PatternItem::Kind::L:
      case PatternItem::Kind::R: {
        auto n = static_cast<std::uint32_t>(it.index_const >= 0 ? it.index_const
                                                               : b.ints[static_cast<std::size_t>(it.index_param)]);
        auto a = static_cast<std::uint32_t>(b.letters[static_cast<std::size_t>(it.deco_param)]);
        w.push_back(it.kind == PatternItem::Kind::L ? Letter::L(n, a) : Letter::R(n, a));
        break;
      }
    }
  }
  return w;
}

ModuleMonomial RuleSchema::lhs_monomial(const Binding& b) const {
  Generator g = gen_param < 0 ? Generator::central()
                              : Generator{static_cast<int>(b.letters[static_cast<std::size_t>(gen_param)])};
  return {lhs_word(b), g};
}

std::optional<Binding> RuleSchema::decode(const Word& w, std::size_t pos, Generator g) const {
  Binding b;
  b.letters.assign(letter_params.size(), kUnbound);
  b.ints.assign(int_params.size(), -1);
  std::size_t i = pos;
  for (const auto& it : pattern) {
    switch (it.kind) {
      case PatternItem::Kind::D:
        if (i >= w.size() || !w[i].is_partial()) return std::nullopt;
        ++i;
        break;
      case PatternItem::Kind::DPow: {
        std::size_t j = i;
        while (j < w.size() && w[j].is_partial()) ++j;
        if (j == i || !bind_int(b, it.pow_param, static_cast<long>(j - i))) return std::nullopt;
        i = j;
        break;
      }
      case PatternItem::Kind::L:
      case PatternItem::Kind::R: {
        if (i >= w.size()) return std::nullopt;
        Letter p = w[i];
        LetterKind want = it.kind == PatternItem::Kind::L ? LetterKind::L : LetterKind::R;
        if (p.kind() != want) return std::nullopt;
        if (it.index_const >= 0) {
          if (p.index() != static_cast<std::uint32_t>(it.index_const)) return std::nullopt;
        } else if (!bind_int(b, it.index_param, p.index())) {
          return std::nullopt;
        }
        if (!bind_letter(b, it.deco_param, p.decoration())) return std::nullopt;
        ++i;
        break;
      }
    }
  }
  if (module) {
    if (i != w.size()) return std::nullopt;
    if (gen_param < 0) {
      if (!g.is_central()) return std::nullopt;
    } else if (g.is_central() || !bind_letter(b, gen_param, static_cast<std::size_t>(g.id))) {
      return std::nullopt;
    }
  }
  for (std::size_t k = 0; k < int_params.size(); ++k)
    if (b.ints[k] < int_params[k].min) return std::nullopt;
  if (admissible && !admissible(b)) return std::nullopt;
  return b;
}

void RuleSchema::for_each_binding(std::size_t n_letters, const Caps& caps,
                                  const std::function<void(const Binding&)>& fn) const {
  Binding b;
  b.letters.assign(letter_params.size(), 0);
  b.ints.assign(int_params.size(), 0);
  for (std::size_t k = 0; k < int_params.size(); ++k) b.ints[k] = int_params[k].min;
  if (n_letters == 0 && !letter_params.empty()) return;

  const std::size_t nl = letter_params.size(), ni = int_params.size();
  auto within_caps = [&]() {
    Word w = lhs_word(b);
    return w.size() <= caps.length_cap && max_index(w) <= caps.index_cap;
  };
  auto int_cap = [&](std::size_t k) -> long {
    return int_params[k].is_power ? static_cast<long>(caps.length_cap) : static_cast<long>(caps.index_cap);
  };
  for (std::size_t k = 0; k < ni; ++k)
    if (int_params[k].min > int_cap(k)) return;

  // Odometer over letters then integers.
  while (true) {
    if (within_caps() && (!admissible || admissible(b))) fn(b);
    std::size_t k = 0;
    for (; k < nl; ++k) {
      if (++b.letters[k] < n_letters) break;
      b.letters[k] = 0;
    }
    if (k < nl) continue;
    std::size_t j = 0;
    for (; j < ni; ++j) {
      if (++b.ints[j] <= int_cap(j)) break;
      b.ints[j] = int_params[j].min;
    }
    if (j == ni) return;
  }
}

std::string RuleSchema::binding_text(const Binding& b, const Alphabet& al) const {
  std::string out;
  for (std::size_t k = 0; k < letter_params.size(); ++k) {
    if (!out.empty()) out += ",";
    out += letter_params[k] + "=" + al.names.at(b.letters[k]);
  }
  for (std::size_t k = 0; k < int_params.size(); ++k) {
    if (!out.empty()) out += ",";
    out += int_params[k].name + "=" + std::to_string(b.ints[k]);
  }
  return out;
}

namespace {

void check_constraint(const RuleSchema& s, const Binding& b, const Alphabet& al) {
  bool ok = b.letters.size() == s.letter_params.size() && b.ints.size() == s.int_params.size();
  for (std::size_t k = 0; ok && k < b.letters.size(); ++k) ok = b.letters[k] < al.size();
  for (std::size_t k = 0; ok && k < b.ints.size(); ++k) ok = b.ints[k] >= s.int_params[k].min;
  if (ok && s.admissible) ok = s.admissible(b);
  if (!ok)
    throw ConstraintViolated(s.id + ": binding does not satisfy " +
                             (s.constraint.empty() ? std::string("the parameter bounds") : s.constraint));
}

}  // namespace

AlgebraRule instantiate_algebra(const RuleSchema& s, const Binding& b, const Alphabet& al, Order o) {
  if (s.module) throw ConstraintViolated(s.id + " is a module family");
  check_constraint(s, b, al);
  AlgebraRule r{s.lhs_word(b), s.algebra_rhs(b), {s.id, s.binding_text(b, al)}, s.annihilator};
  if (!is_oriented(r, o)) throw OrientationViolated("rule " + r.tag.text() + " is not oriented by its lhs");
  return r;
}

ModuleRule instantiate_module(const RuleSchema& s, const Binding& b, const Alphabet& al, Order o) {
  if (!s.module) throw ConstraintViolated(s.id + " is an algebra family");
  check_constraint(s, b, al);
  ModuleRule r{s.lhs_monomial(b), s.module_rhs(b), {s.id, s.binding_text(b, al)}};
  if (!is_oriented(r, o)) throw OrientationViolated("rule " + r.tag.text() + " is not oriented by its lhs");
  return r;
}

AlgebraRule orient(const AlgebraElement& p, Order o, RuleTag tag) {
  auto [lead, c] = leading(p, o);
  AlgebraElement rhs = p;
  rhs.add_term(lead, -c);
  rhs *= Rational(-1) / c;
  return {lead, rhs, std::move(tag), false};
}

ModuleRule orient(const ModuleElement& p, Order o, RuleTag tag) {
  auto [lead, c] = leading(p, o);
  ModuleElement rhs = p;
  rhs.add_term(lead, -c);
  rhs *= Rational(-1) / c;
  return {lead, rhs, std::move(tag)};
}

bool is_oriented(const AlgebraRule& r, Order o) {
  for (const auto& [w, c] : r.rhs)
    if (compare_words(r.lhs, w, o) <= 0) return false;
  return true;
}

bool is_oriented(const ModuleRule& r, Order o) {
  for (const auto& [m, c] : r.rhs)
    if (compare_module_monomials(r.lhs, m, o) <= 0) return false;
  return true;
}

RuleSet::RuleSet(std::string name, Order order, Alphabet alphabet)
    : name_(std::move(name)), order_(order), alphabet_(std::move(alphabet)) {}

void RuleSet::add_schema(RuleSchema s) {
  auto p = std::make_shared<const RuleSchema>(std::move(s));
  schemas_.push_back(p);
  by_first_[p->pattern.empty() ? 3 : bucket_of(p->pattern.front())].push_back(p);
}

void RuleSet::add_rule(AlgebraRule r) {
  if (r.lhs.empty()) throw Error("algebra rule with empty lhs");
  auto it = alg_.find(r.lhs);
  if (it != alg_.end()) {
    if (it->second->rhs == r.rhs) return;
    throw DuplicateLhs("duplicate lhs with different rhs: " + it->second->tag.text() + " vs " + r.tag.text());
  }
  insert_length(alg_lengths_, r.lhs.size());
  alg_order_.push_back(r.lhs);
  auto ptr = std::make_shared<const AlgebraRule>(std::move(r));
  alg_.emplace(ptr->lhs, std::move(ptr));
}

void RuleSet::add_rule(ModuleRule r) {
  auto it = mod_.find(r.lhs);
  if (it != mod_.end()) {
    if (it->second->rhs == r.rhs) return;
    throw DuplicateLhs("duplicate lhs with different rhs: " + it->second->tag.text() + " vs " + r.tag.text());
  }
  insert_length(mod_lengths_, r.lhs.word.size());
  mod_order_.push_back(r.lhs);
  auto ptr = std::make_shared<const ModuleRule>(std::move(r));
  mod_.emplace(ptr->lhs, std::move(ptr));
}

bool RuleSet::remove_rule(const Word& lhs) {
  if (!alg_.erase(lhs)) return false;
  alg_order_.erase(std::find(alg_order_.begin(), alg_order_.end(), lhs));
  return true;
}

bool RuleSet::remove_rule(const ModuleMonomial& lhs) {
  if (!mod_.erase(lhs)) return false;
  mod_order_.erase(std::find(mod_order_.begin(), mod_order_.end(), lhs));
  return true;
}

std::vector<std::shared_ptr<const AlgebraRule>> RuleSet::algebra_rules() const {
  std::vector<std::shared_ptr<const AlgebraRule>> out;
  for (const auto& w : alg_order_) out.push_back(alg_.at(w));
  return out;
}

std::vector<std::shared_ptr<const ModuleRule>> RuleSet::module_rules() const {
  std::vector<std::shared_ptr<const ModuleRule>> out;
  for (const auto& m : mod_order_) out.push_back(mod_.at(m));
  return out;
}

template <class Fn>
bool RuleSet::scan(const Word& w, std::optional<Generator> gen, bool first_only, Fn&& emit) const {
  const std::size_t n = w.size();
  bool found = false;
  auto done = [&]() { return found && first_only; };
  for (std::size_t pos = 0; pos <= n && !done(); ++pos) {
    if (pos < n) {
      for (std::size_t k : alg_lengths_) {
        if (pos + k > n || alg_.empty()) continue;
        auto it = alg_.find(subword(w, pos, k));
        if (it != alg_.end()) {
          emit(Match{pos, k, it->second, nullptr});
          found = true;
          if (done()) return true;
        }
      }
      for (const auto& s : by_first_[bucket_of(w[pos])]) {
        if (s->module) continue;
        if (auto b = s->decode(w, pos, Generator::central())) {
          Word lhs = s->lhs_word(*b);
          std::size_t len = lhs.size();
          auto r = std::make_shared<const AlgebraRule>(
              AlgebraRule{std::move(lhs), s->algebra_rhs(*b), {s->id, s->binding_text(*b, alphabet_)}, s->annihilator});
          emit(Match{pos, len, std::move(r), nullptr});
          found = true;
          if (done()) return true;
        }
      }
    }
    if (!gen) continue;
    const std::size_t k = n - pos;
    if (!mod_.empty() && std::find(mod_lengths_.begin(), mod_lengths_.end(), k) != mod_lengths_.end()) {
      auto it = mod_.find(ModuleMonomial{subword(w, pos, k), *gen});
      if (it != mod_.end()) {
        emit(Match{pos, k, nullptr, it->second});
        found = true;
        if (done()) return true;
      }
    }
    for (const auto& s : by_first_[pos < n ? bucket_of(w[pos]) : 3]) {
      if (!s->module) continue;
      if (auto b = s->decode(w, pos, *gen)) {
        auto r = std::make_shared<const ModuleRule>(
            ModuleRule{s->lhs_monomial(*b), s->module_rhs(*b), {s->id, s->binding_text(*b, alphabet_)}});
        emit(Match{pos, k, nullptr, std::move(r)});
        found = true;
        if (done()) return true;
      }
    }
  }
  return found;
}

std::optional<Match> RuleSet::first_match(const ModuleMonomial& m) const {
  std::optional<Match> out;
  scan(m.word, m.gen, true, [&](Match x) { out = std::move(x); });
  return out;
}

std::vector<Match> RuleSet::all_matches(const ModuleMonomial& m) const {
  std::vector<Match> out;
  scan(m.word, m.gen, false, [&](Match x) { out.push_back(std::move(x)); });
  return out;
}

std::optional<Match> RuleSet::first_match(const Word& w) const {
  std::optional<Match> out;
  scan(w, std::nullopt, true, [&](Match x) { out = std::move(x); });
  return out;
}

std::vector<Match> RuleSet::all_matches(const Word& w) const {
  std::vector<Match> out;
  scan(w, std::nullopt, false, [&](Match x) { out.push_back(std::move(x)); });
  return out;
}

std::vector<std::shared_ptr<const AlgebraRule>> RuleSet::algebra_instances(const Caps& caps) const {
  std::vector<std::shared_ptr<const AlgebraRule>> out;
  for (const auto& s : schemas_) {
    if (s->module) continue;
    s->for_each_binding(alphabet_.size(), caps, [&](const Binding& b) {
      out.push_back(std::make_shared<const AlgebraRule>(
          AlgebraRule{s->lhs_word(b), s->algebra_rhs(b), {s->id, s->binding_text(b, alphabet_)}, s->annihilator}));
    });
  }
  for (const auto& r : algebra_rules())
    if (r->lhs.size() <= caps.length_cap && max_index(r->lhs) <= caps.index_cap) out.push_back(r);
  return out;
}

std::vector<std::shared_ptr<const ModuleRule>> RuleSet::module_instances(const Caps& caps) const {
  std::vector<std::shared_ptr<const ModuleRule>> out;
  for (const auto& s : schemas_) {
    if (!s->module) continue;
    s->for_each_binding(alphabet_.size(), caps, [&](const Binding& b) {
      out.push_back(std::make_shared<const ModuleRule>(
          ModuleRule{s->lhs_monomial(b), s->module_rhs(b), {s->id, s->binding_text(b, alphabet_)}}));
    });
  }
  for (const auto& r : module_rules())
    if (r->lhs.word.size() <= caps.length_cap && max_index(r->lhs.word) <= caps.index_cap) out.push_back(r);
  return out;
}

void RuleSet::check_orientation(const Caps& caps) const {
  for (const auto& s : schemas_)
    s->for_each_binding(alphabet_.size(), caps, [&](const Binding& b) {
      if (s->module)
        instantiate_module(*s, b, alphabet_, order_);
      else
        instantiate_algebra(*s, b, alphabet_, order_);
    });
  for (const auto& r : algebra_rules())
    if (!is_oriented(*r, order_)) throw OrientationViolated("rule " + r->tag.text() + " is not oriented by its lhs");
  for (const auto& r : module_rules())
    if (!is_oriented(*r, order_)) throw OrientationViolated("rule " + r->tag.text() + " is not oriented by its lhs");
}

}  // namespace cgsb
