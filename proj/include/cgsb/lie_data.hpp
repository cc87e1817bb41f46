#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cgsb/rational.hpp"

namespace cgsb {

/// Sparse vector over the basis X1 of a Lie algebra; never stores zeros.
class LieVector {
 public:
  LieVector() = default;
  static LieVector basis(std::size_t i);

  void add(std::size_t i, const Rational& c);
  LieVector& operator+=(const LieVector& other);
  LieVector& operator*=(const Rational& c);

  const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const LieVector&, const LieVector&) = default;

 private:
  std::map<std::size_t, Rational> coeffs_;
};

LieVector operator+(LieVector a, const LieVector& b);
LieVector operator*(const Rational& c, LieVector v);

/// Raw user input. Brackets and form may be given in one orientation only;
/// validation completes the other one.
struct LieSpec {
  std::vector<std::string> basis_names;
  std::map<std::pair<std::size_t, std::size_t>, LieVector> brackets;
  std::map<std::pair<std::size_t, std::size_t>, Rational> form;
  std::string central_name = "e";
};

class LieValidationError : public Error {
 public:
  enum class Kind {
    empty_basis,
    bad_name,
    index_out_of_range,
    antisymmetry,
    jacobi,
    form_asymmetry,
    form_not_invariant,
  };

  LieValidationError(Kind kind, std::vector<std::size_t> where, const std::string& what)
      : Error(what), kind_(kind), where_(std::move(where)) {}

  Kind kind() const { return kind_; }
  /// The offending basis pair or triple.
  const std::vector<std::size_t>& where() const { return where_; }

 private:
  Kind kind_;
  std::vector<std::size_t> where_;
};

/// A finite-dimensional Lie algebra with a symmetric invariant bilinear form,
/// checked on construction. Immutable and cheap to share.
class LieData {
 public:
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& central_name() const { return central_; }

  /// Structure constants of [x_i, x_j].
  const LieVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Rational& form(std::size_t i, std::size_t j) const { return form_[i * dim() + j]; }

  /// True when every bracket and every form value vanishes.
  bool is_abelian() const;
  bool form_is_zero() const;

  /// The input data with both orientations of every bracket and form entry filled in.
  LieSpec spec() const;

 private:
  friend LieData validate(const LieSpec& spec);
  std::vector<std::string> names_;
  std::string central_;
  std::vector<LieVector> table_;
  std::vector<Rational> form_;
};

/// Completes a spec by antisymmetry and symmetry, then checks antisymmetry,
/// the Jacobi identity, form symmetry and form invariance on every basis pair
/// or triple. Throws LieValidationError naming the first offending indices.
LieData validate(const LieSpec& spec);

LieVector bracket(const LieData& data, const LieVector& u, const LieVector& v);
Rational form_eval(const LieData& data, const LieVector& u, const LieVector& v);

/// Built-in algebras used by tests, docs and the self-test.
LieSpec sl2_spec();          // basis e,f,h with Killing form, central name "K"
LieSpec abelian_spec(std::size_t dim);  // zero brackets and zero form
LieSpec heisenberg_spec();   // basis x,y,z with [x,y]=z and the degenerate form <x|y>=1

}  // namespace cgsb
