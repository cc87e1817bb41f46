#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgsb/lie_data.hpp"
#include "cgsb/rewrite.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

struct Bounds {
  std::size_t x_degree = 3;     // decorations plus the generator
  std::size_t d_power = 2;      // number of ∂ letters
  std::uint32_t index_cap = 6;  // max n on L/R letters
  // When set, the span is cut by the sum of L/R indices instead of index_cap.
  std::optional<std::uint32_t> index_sum_cap;
};

/// x-degree -> number of monomials
using GradedCount = std::map<std::size_t, std::size_t>;

class BoundsNotClosed : public Error {
 public:
  using Error::Error;
};

/// Every monomial over the alphabet (central generator included when the
/// alphabet has one) within bounds, ascending in the given order.
std::vector<ModuleMonomial> enumerate_monomials(const Alphabet& al, const Bounds& b, Order o = Order::deg_lex);

/// Monomials within bounds that no rule rewrites, ascending.
std::vector<ModuleMonomial> enumerate_terminal(const RuleSet& rs, const Bounds& b);

/// Closed-form basis of the free commutative conformal algebra on y_count
/// ordered generators, locality 3 (four families) and 2 (two families).
/// Ascending in deg-lex; generator ids 0..y_count-1.
std::vector<ModuleMonomial> comconf3_pattern(std::size_t y_count, const Bounds& b);
std::vector<ModuleMonomial> comconf2_pattern(std::size_t y_count, const Bounds& b);

GradedCount count_by_degree(const std::vector<ModuleMonomial>& ms);

struct OracleOptions {
  // Extra ∂ letters in the span beyond the target; derivations of relations
  // among target monomials can pass through higher ∂-powers.
  std::size_t d_headroom = 0;
  // Throw BoundsNotClosed when a rule application leaves the span. When
  // false such applications are left out and counted in skipped_rows().
  bool strict = true;
};

/// Row space of all rule applications m - (one rewrite of m) for m in a
/// bounded span. Dimensions are those of the image of the target monomials
/// in the quotient.
class RelationSpan {
 public:
  RelationSpan(const RuleSet& relations, const Bounds& target, OracleOptions opt = {});

  /// Dimension of the image of the target span per x-degree, from the
  /// filtration by degree.
  const GradedCount& quotient_dims() const { return dims_; }
  std::size_t span_size() const { return monomials_.size(); }
  std::size_t target_size() const { return inside_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t skipped_rows() const { return skipped_; }

  /// Remainder of x modulo the row space; zero iff x is a consequence of
  /// the relations inside the span. Throws BoundsNotClosed if x leaves it.
  ModuleElement reduce(const ModuleElement& x) const;
  bool contains(const ModuleElement& x) const { return reduce(x).is_zero(); }

 private:
  using Row = std::map<std::size_t, Rational>;  // column -> coefficient
  Row to_row(const ModuleElement& x, const std::string& what) const;
  bool insert(Row r);
  void reduce_row(Row& r) const;

  // Target monomials first, each part ascending; pivots are on the largest column.
  std::vector<ModuleMonomial> monomials_;
  std::size_t inside_ = 0;
  std::size_t skipped_ = 0;
  std::map<ModuleMonomial, std::size_t> column_;
  std::map<std::size_t, Row> pivots_;  // leading column -> row with leading coefficient 1
  GradedCount dims_;
};

GradedCount oracle_dimension(const RuleSet& relations, const Bounds& b, OracleOptions opt = {});

struct PbwReport {
  std::size_t N = 3;
  Bounds bounds;
  GradedCount terminal;  // enumerate_terminal of the envelope preset
  GradedCount pattern;   // closed-form count plus e at degree 1
  bool ok() const { return terminal == pattern; }
};

/// Compares terminal counts of the N=2 or N=3 envelope with the closed-form
/// commutative basis plus {e}, degree by degree.
PbwReport pbw_check(const LieData& lie, std::size_t N, const Bounds& b);

/// "2 t + 7 t² + O(t³)"; empty counts give "O(t)".
std::string hilbert(const GradedCount& counts);

}  // namespace cgsb
