#include "cgsb/lie_data.hpp"

#include <set>

namespace cgsb {

LieVector LieVector::basis(std::size_t i) {
  LieVector v;
  v.coeffs_.emplace(i, 1);
  return v;
}

void LieVector::add(std::size_t i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LieVector& LieVector::operator+=(const LieVector& other) {
  for (const auto& [i, c] : other.coeffs_) add(i, c);
  return *this;
}

LieVector& LieVector::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, x] : coeffs_) x *= c;
  return *this;
}

Rational LieVector::coeff(std::size_t i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
LieVector operator*(const Rational& c, LieVector v) { return v *= c; }

bool LieData::is_abelian() const {
  for (const auto& v : table_)
    if (!v.is_zero()) return false;
  return true;
}

bool LieData::form_is_zero() const {
  for (const auto& q : form_)
    if (q != 0) return false;
  return true;
}

LieSpec LieData::spec() const {
  LieSpec s;
  s.basis_names = names_;
  s.central_name = central_;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!bracket(i, j).is_zero()) s.brackets[{i, j}] = bracket(i, j);
      if (form(i, j) != 0) s.form[{i, j}] = form(i, j);
    }
  return s;
}

namespace {

std::string triple_text(const std::vector<std::string>& n, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + n[i] + "," + n[j] + "," + n[k] + ")";
}

}  // namespace

LieData validate(const LieSpec& spec) {
  using K = LieValidationError::Kind;
  const std::size_t d = spec.basis_names.size();
  if (d == 0) throw LieValidationError(K::empty_basis, {}, "Lie algebra basis is empty");

  std::set<std::string> seen;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& name = spec.basis_names[i];
    if (name.empty() || !seen.insert(name).second)
      throw LieValidationError(K::bad_name, {i}, "duplicate or empty basis name '" + name + "'");
  }
  if (spec.central_name.empty() || seen.count(spec.central_name))
    throw LieValidationError(K::bad_name, {}, "central name '" + spec.central_name + "' collides with the basis");

  LieData out;
  out.names_ = spec.basis_names;
  out.central_ = spec.central_name;
  out.table_.assign(d * d, LieVector{});
  out.form_.assign(d * d, Rational(0));
  std::vector<bool> bracket_given(d * d, false), form_given(d * d, false);

  auto check_range = [&](std::size_t i, std::size_t j) {
    if (i >= d || j >= d) throw LieValidationError(K::index_out_of_range, {i, j}, "basis index out of range");
  };

  for (const auto& [ij, v] : spec.brackets) {
    auto [i, j] = ij;
    check_range(i, j);
    for (const auto& [k, c] : v.coeffs()) check_range(k, k);
    out.table_[i * d + j] = v;
    bracket_given[i * d + j] = true;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& n = out.names_;
      if (i == j) {
        if (!out.table_[i * d + i].is_zero())
          throw LieValidationError(K::antisymmetry, {i, i}, "antisymmetry violated: [" + n[i] + "," + n[i] + "] != 0");
        continue;
      }
      if (bracket_given[i * d + j] && !bracket_given[j * d + i]) {
        out.table_[j * d + i] = Rational(-1) * out.table_[i * d + j];
        bracket_given[j * d + i] = true;
      } else if (bracket_given[i * d + j] && bracket_given[j * d + i] && i < j) {
        if (out.table_[i * d + j] + out.table_[j * d + i] != LieVector{})
          throw LieValidationError(K::antisymmetry, {i, j},
                                   "antisymmetry violated: [" + n[i] + "," + n[j] + "] != -[" + n[j] + "," + n[i] + "]");
      }
    }

  for (const auto& [ij, q] : spec.form) {
    auto [i, j] = ij;
    check_range(i, j);
    out.form_[i * d + j] = q;
    form_given[i * d + j] = true;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      bool a = form_given[i * d + j], b = form_given[j * d + i];
      if (a && !b) out.form_[j * d + i] = out.form_[i * d + j];
      if (b && !a) out.form_[i * d + j] = out.form_[j * d + i];
      if (a && b && out.form_[i * d + j] != out.form_[j * d + i])
        throw LieValidationError(K::form_asymmetry, {i, j},
                                 "form not symmetric on (" + out.names_[i] + "," + out.names_[j] + ")");
    }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0
        LieVector sum = bracket(out, out.bracket(i, j), LieVector::basis(k));
        sum += bracket(out, out.bracket(j, k), LieVector::basis(i));
        sum += bracket(out, out.bracket(k, i), LieVector::basis(j));
        if (!sum.is_zero())
          throw LieValidationError(K::jacobi, {i, j, k}, "Jacobi identity fails on " + triple_text(out.names_, i, j, k));
        Rational lhs = form_eval(out, out.bracket(i, j), LieVector::basis(k));
        Rational rhs = form_eval(out, LieVector::basis(i), out.bracket(j, k));
        if (lhs != rhs)
          throw LieValidationError(K::form_not_invariant, {i, j, k},
                                   "form not invariant on " + triple_text(out.names_, i, j, k));
      }
  return out;
}

LieVector bracket(const LieData& data, const LieVector& u, const LieVector& v) {
  LieVector out;
  for (const auto& [i, a] : u.coeffs())
    for (const auto& [j, b] : v.coeffs())
      for (const auto& [k, c] : data.bracket(i, j).coeffs()) out.add(k, a * b * c);
  return out;
}

Rational form_eval(const LieData& data, const LieVector& u, const LieVector& v) {
  Rational out = 0;
  for (const auto& [i, a] : u.coeffs())
    for (const auto& [j, b] : v.coeffs()) out += a * b * data.form(i, j);
  return out;
}

LieSpec sl2_spec() {
  LieSpec s;
  s.basis_names = {"e", "f", "h"};
  s.central_name = "K";
  s.brackets[{0, 1}] = LieVector::basis(2);
  s.brackets[{2, 0}] = Rational(2) * LieVector::basis(0);
  s.brackets[{2, 1}] = Rational(-2) * LieVector::basis(1);
  s.form[{0, 1}] = 4;
  s.form[{2, 2}] = 8;
  return s;
}

LieSpec abelian_spec(std::size_t dim) {
  LieSpec s;
  for (std::size_t i = 0; i < dim; ++i) s.basis_names.push_back(std::string(1, static_cast<char>('a' + i)));
  return s;
}

LieSpec heisenberg_spec() {
  LieSpec s;
  s.basis_names = {"x", "y", "z"};
  s.brackets[{0, 1}] = LieVector::basis(2);
  s.form[{0, 1}] = 1;
  return s;
}

}  // namespace cgsb
