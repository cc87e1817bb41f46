#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cgsb {

enum class LetterKind : std::uint8_t { Partial = 0, L = 1, R = 2 };

/// A letter of the operator alphabet: ∂, L_n^a or R_n^a, packed into 32 bits
/// (kind in bits 30-31, index in bits 16-29, decoration in bits 0-15).
/// operator< is the structural order used for container keys; monomial
/// orders live in compare_letters.
class Letter {
 public:
  static constexpr std::uint32_t kMaxIndex = (1u << 14) - 1;
  static constexpr std::uint32_t kMaxDecoration = (1u << 16) - 1;

  constexpr Letter() = default;
  static constexpr Letter partial() { return Letter(0); }
  static Letter L(std::uint32_t n, std::uint32_t a) { return make(LetterKind::L, n, a); }
  static Letter R(std::uint32_t n, std::uint32_t a) { return make(LetterKind::R, n, a); }

  constexpr LetterKind kind() const { return static_cast<LetterKind>(bits_ >> 30); }
  constexpr bool is_partial() const { return kind() == LetterKind::Partial; }
  constexpr std::uint32_t index() const { return (bits_ >> 16) & kMaxIndex; }
  constexpr std::uint32_t decoration() const { return bits_ & kMaxDecoration; }
  constexpr std::uint32_t bits() const { return bits_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint32_t bits) : bits_(bits) {}
  static Letter make(LetterKind k, std::uint32_t n, std::uint32_t a);
  std::uint32_t bits_ = 0;
};

using Word = std::vector<Letter>;

/// Module generator: an index into X1, or the central element e.
struct Generator {
  static constexpr int kCentral = -1;
  int id = kCentral;

  static constexpr Generator central() { return Generator{kCentral}; }
  constexpr bool is_central() const { return id == kCentral; }
  friend constexpr auto operator<=>(Generator, Generator) = default;
};

/// u·x with u a word and x a single generator.
struct ModuleMonomial {
  Word word;
  Generator gen;
  friend auto operator<=>(const ModuleMonomial&, const ModuleMonomial&) = default;
  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

/// deg_lex: length first, then letters keyed by L_0 < L_1 < ∂ < L_2 < ... < R_0 < R_1 < ...
/// weighted: (number of R letters, sum of L/R indices, length), then letters
/// with ∂ < L_n^a < R_n^a. The second orients the free-conformal presets.
enum class Order { deg_lex, weighted };

const char* order_name(Order o);
Order parse_order(const std::string& name);

std::strong_ordering compare_letters(Letter p, Letter q, Order order = Order::deg_lex);
std::strong_ordering compare_words(const Word& u, const Word& v, Order order = Order::deg_lex);
std::strong_ordering compare_module_monomials(const ModuleMonomial& m1, const ModuleMonomial& m2,
                                              Order order = Order::deg_lex);

/// Start positions of pattern in w, ascending, overlaps included.
std::vector<std::size_t> find_occurrences(const Word& pattern, const Word& w);

/// Number of decorated letters plus one for the generator.
std::size_t x_degree(const ModuleMonomial& m);
std::size_t x_degree(const Word& w);
std::size_t d_power(const Word& w);
std::uint32_t index_sum(const Word& w);
std::uint32_t max_index(const Word& w);

Word concat(const Word& u, const Word& v);
Word subword(const Word& w, std::size_t pos, std::size_t len);
bool matches_at(const Word& w, std::size_t pos, const Word& pattern);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};
struct MonomialHash {
  std::size_t operator()(const ModuleMonomial& m) const noexcept;
};

}  // namespace cgsb
