#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "cgsb/rational.hpp"
#include "cgsb/terms.hpp"

namespace cgsb {

class ZeroElement : public Error {
 public:
  ZeroElement() : Error("operation needs a nonzero element") {}
};

/// Finite linear combination with exact coefficients. Zero coefficients are
/// never stored. Storage order is structural; use sorted_terms/leading for
/// anything that depends on a monomial order.
template <class Key>
class Combination {
 public:
  using Map = std::map<Key, Rational>;

  Combination() = default;
  explicit Combination(Key k, Rational c = 1) { add_term(std::move(k), c); }

  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += c * other
  void add_scaled(const Combination& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, x] : other.terms_) add_term(k, c * x);
  }

  Combination& operator+=(const Combination& o) {
    add_scaled(o, 1);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add_scaled(o, -1);
    return *this;
  }
  Combination& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [k, x] : terms_) x *= c;
    return *this;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool contains(const Key& k) const { return terms_.count(k) != 0; }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

using AlgebraElement = Combination<Word>;
using ModuleElement = Combination<ModuleMonomial>;

template <class Key>
Combination<Key> add(Combination<Key> x, const Combination<Key>& y) {
  return x += y;
}

template <class Key>
Combination<Key> scale(const Rational& c, Combination<Key> x) {
  return x *= c;
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
ModuleElement act(const AlgebraElement& x, const ModuleElement& m);

/// u·m for a single word; cheaper than act.
ModuleElement act_word(const Word& u, const ModuleElement& m);
/// v1·x·v2
AlgebraElement sandwich(const Word& v1, const AlgebraElement& x, const Word& v2);

std::strong_ordering compare_keys(const Word& u, const Word& v, Order o);
std::strong_ordering compare_keys(const ModuleMonomial& u, const ModuleMonomial& v, Order o);

/// Order-maximal monomial with its coefficient. Throws ZeroElement on 0.
template <class Key>
std::pair<Key, Rational> leading(const Combination<Key>& x, Order o) {
  if (x.is_zero()) throw ZeroElement();
  auto best = x.begin();
  for (auto it = x.begin(); it != x.end(); ++it)
    if (compare_keys(it->first, best->first, o) > 0) best = it;
  return {best->first, best->second};
}

/// Terms in descending monomial order.
template <class Key>
std::vector<std::pair<Key, Rational>> sorted_terms(const Combination<Key>& x, Order o) {
  std::vector<std::pair<Key, Rational>> out(x.begin(), x.end());
  std::sort(out.begin(), out.end(),
            [o](const auto& a, const auto& b) { return compare_keys(a.first, b.first, o) > 0; });
  return out;
}

}  // namespace cgsb
