#include "cgsb/terms.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "cgsb/rational.hpp"

namespace cgsb {

Letter Letter::make(LetterKind k, std::uint32_t n, std::uint32_t a) {
  if (n > kMaxIndex || a > kMaxDecoration) throw Error("letter index or decoration out of range");
  return Letter((static_cast<std::uint32_t>(k) << 30) | (n << 16) | a);
}

const char* order_name(Order o) { return o == Order::deg_lex ? "deglex" : "weighted"; }

Order parse_order(const std::string& name) {
  if (name == "deglex" || name == "deg_lex") return Order::deg_lex;
  if (name == "weighted") return Order::weighted;
  throw ParseError("unknown order '" + name + "'");
}

namespace {

// (class, rank, decoration); ∂ gets decoration -1 so it sorts below same-rank letters.
std::tuple<int, std::int64_t, std::int64_t> deglex_key(Letter p) {
  switch (p.kind()) {
    case LetterKind::Partial:
      return {0, 2, -1};
    case LetterKind::L: {
      std::int64_t n = p.index();
      return {0, n <= 1 ? n : n + 1, p.decoration()};
    }
    case LetterKind::R:
      break;
  }
  return {1, p.index(), p.decoration()};
}

std::tuple<int, std::int64_t, std::int64_t> weighted_key(Letter p) {
  if (p.is_partial()) return {0, 0, 0};
  return {static_cast<int>(p.kind()), p.index(), p.decoration()};
}

std::strong_ordering lex(const Word& u, const Word& v, Order order) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (auto c = compare_letters(u[i], v[i], order); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t r_count(const Word& w) {
  return std::count_if(w.begin(), w.end(), [](Letter p) { return p.kind() == LetterKind::R; });
}

}  // namespace

std::strong_ordering compare_letters(Letter p, Letter q, Order order) {
  if (order == Order::deg_lex) return deglex_key(p) <=> deglex_key(q);
  return weighted_key(p) <=> weighted_key(q);
}

std::strong_ordering compare_words(const Word& u, const Word& v, Order order) {
  if (order == Order::weighted) {
    if (auto c = r_count(u) <=> r_count(v); c != 0) return c;
    if (auto c = index_sum(u) <=> index_sum(v); c != 0) return c;
  }
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return lex(u, v, order);
}

std::strong_ordering compare_module_monomials(const ModuleMonomial& m1, const ModuleMonomial& m2, Order order) {
  if (auto c = compare_words(m1.word, m2.word, order); c != 0) return c;
  return m1.gen.id <=> m2.gen.id;
}

std::vector<std::size_t> find_occurrences(const Word& pattern, const Word& w) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > w.size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
    if (matches_at(w, i, pattern)) out.push_back(i);
  return out;
}

std::size_t x_degree(const Word& w) {
  return std::count_if(w.begin(), w.end(), [](Letter p) { return !p.is_partial(); });
}
std::size_t x_degree(const ModuleMonomial& m) { return x_degree(m.word) + 1; }

std::size_t d_power(const Word& w) {
  return std::count_if(w.begin(), w.end(), [](Letter p) { return p.is_partial(); });
}

std::uint32_t index_sum(const Word& w) {
  std::uint32_t s = 0;
  for (Letter p : w) s += p.index();
  return s;
}

std::uint32_t max_index(const Word& w) {
  std::uint32_t s = 0;
  for (Letter p : w) s = std::max(s, p.index());
  return s;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Letter p : w) {
    h ^= p.bits();
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t MonomialHash::operator()(const ModuleMonomial& m) const noexcept {
  return WordHash{}(m.word) * 31u + static_cast<std::size_t>(m.gen.id + 7);
}

}  // namespace cgsb
