#include <gtest/gtest.h>

#include <random>

#include "cgsb/lie_data.hpp"

using namespace cgsb;

namespace {

// sl2 structure constants written out by hand: c[i][j][k] is the x_k
// coefficient of [x_i, x_j] over the basis (e, f, h).
struct Sl2Table {
  Rational c[3][3][3];
  Rational form[3][3];
  Sl2Table() {
    for (auto& a : c)
      for (auto& b : a)
        for (auto& x : b) x = 0;
    for (auto& a : form)
      for (auto& x : a) x = 0;
    c[0][1][2] = 1;   // [e,f] = h
    c[1][0][2] = -1;
    c[2][0][0] = 2;   // [h,e] = 2e
    c[0][2][0] = -2;
    c[2][1][1] = -2;  // [h,f] = -2f
    c[1][2][1] = 2;
    form[0][1] = form[1][0] = 4;
    form[2][2] = 8;
  }
  Rational br(int i, int j, int k) const { return c[i][j][k]; }
};

LieVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  LieVector v;
  for (std::size_t i = 0; i < dim; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    v.add(i, q);
  }
  return v;
}

LieValidationError::Kind validation_kind(const LieSpec& s) {
  try {
    validate(s);
  } catch (const LieValidationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a validation error";
  return LieValidationError::Kind::empty_basis;
}

}  // namespace

TEST(LieData, Sl2KillingIsValid) {
  LieData L = validate(sl2_spec());
  EXPECT_EQ(L.dim(), 3u);
  EXPECT_EQ(L.central_name(), "K");
}

TEST(LieData, Sl2OracleJacobiAndInvariance) {
  // Independent expansion over the hand table.
  Sl2Table t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        for (int out = 0; out < 3; ++out) {
          Rational s = 0;
          for (int m = 0; m < 3; ++m)
            s += t.br(j, k, m) * t.br(i, m, out) + t.br(k, i, m) * t.br(j, m, out) + t.br(i, j, m) * t.br(k, m, out);
          EXPECT_EQ(s, 0) << i << j << k;
        }
        Rational lhs = 0, rhs = 0;
        for (int m = 0; m < 3; ++m) {
          lhs += t.br(i, j, m) * t.form[m][k];
          rhs += t.form[i][m] * t.br(j, k, m);
        }
        EXPECT_EQ(lhs, rhs);
      }
  // and the validated data agrees with the table
  LieData L = validate(sl2_spec());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(L.bracket(i, j).coeff(k), t.br(i, j, k));
      EXPECT_EQ(L.form(i, j), t.form[i][j]);
    }
}

TEST(LieData, AbelianZeroFormIsValid) {
  LieData L = validate(abelian_spec(3));
  EXPECT_TRUE(L.is_abelian());
  EXPECT_TRUE(L.form_is_zero());
}

TEST(LieData, HeisenbergIsValid) {
  LieData L = validate(heisenberg_spec());
  EXPECT_EQ(L.bracket(0, 1), LieVector::basis(2));
  EXPECT_EQ(L.bracket(1, 0), Rational(-1) * LieVector::basis(2));
}

TEST(LieData, AntisymmetryViolation) {
  LieSpec s;
  s.basis_names = {"a", "b"};
  s.brackets[{0, 1}] = LieVector::basis(0);
  s.brackets[{1, 0}] = LieVector::basis(0);
  try {
    validate(s);
    FAIL();
  } catch (const LieValidationError& e) {
    EXPECT_EQ(e.kind(), LieValidationError::Kind::antisymmetry);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{0, 1}));
  }
}

TEST(LieData, JacobiViolationNamesTriple) {
  LieSpec s;
  s.basis_names = {"a", "b", "c"};
  s.brackets[{0, 1}] = LieVector::basis(0);
  s.brackets[{0, 2}] = LieVector::basis(1);
  try {
    validate(s);
    FAIL();
  } catch (const LieValidationError& e) {
    EXPECT_EQ(e.kind(), LieValidationError::Kind::jacobi);
    EXPECT_EQ(e.where().size(), 3u);
  }
}

TEST(LieData, FormAsymmetry) {
  LieSpec s = abelian_spec(2);
  s.form[{0, 1}] = 1;
  s.form[{1, 0}] = 2;
  EXPECT_EQ(validation_kind(s), LieValidationError::Kind::form_asymmetry);
}

TEST(LieData, FormNotInvariant) {
  LieSpec s = sl2_spec();
  s.form[{0, 1}] = 1;  // Killing needs 4 when <h|h> = 8
  EXPECT_EQ(validation_kind(s), LieValidationError::Kind::form_not_invariant);
}

TEST(LieData, EmptyBasisAndBadIndex) {
  EXPECT_EQ(validation_kind(LieSpec{}), LieValidationError::Kind::empty_basis);
  LieSpec s = abelian_spec(2);
  s.brackets[{0, 5}] = LieVector::basis(0);
  EXPECT_EQ(validation_kind(s), LieValidationError::Kind::index_out_of_range);
}

TEST(LieData, BracketExamples) {
  LieData L = validate(sl2_spec());
  EXPECT_EQ(bracket(L, LieVector::basis(2), LieVector::basis(0)), Rational(2) * LieVector::basis(0));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    LieVector u = random_vector(rng, 3);
    EXPECT_TRUE(bracket(L, u, u).is_zero());
  }
  LieData A = validate(abelian_spec(3));
  EXPECT_TRUE(bracket(A, random_vector(rng, 3), random_vector(rng, 3)).is_zero());
}

TEST(LieData, FormExamples) {
  LieData L = validate(sl2_spec());
  EXPECT_EQ(form_eval(L, LieVector::basis(0), LieVector::basis(1)), 4);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    LieVector u = random_vector(rng, 3), v = random_vector(rng, 3);
    EXPECT_EQ(form_eval(L, u, v), form_eval(L, v, u));
  }
  LieData A = validate(abelian_spec(2));
  EXPECT_EQ(form_eval(A, random_vector(rng, 2), random_vector(rng, 2)), 0);
}

TEST(LieDataProperty, InvarianceOnBasisTriples) {
  for (const LieSpec& s : {sl2_spec(), heisenberg_spec(), abelian_spec(3)}) {
    LieData L = validate(s);
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (std::size_t b = 0; b < L.dim(); ++b)
        for (std::size_t c = 0; c < L.dim(); ++c) {
          LieVector x = LieVector::basis(a), y = LieVector::basis(b), z = LieVector::basis(c);
          EXPECT_EQ(form_eval(L, bracket(L, x, y), z) - form_eval(L, x, bracket(L, y, z)), 0);
        }
  }
}

TEST(LieDataProperty, BracketIsBilinear) {
  LieData L = validate(sl2_spec());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int i = 0; i < 50; ++i) {
    LieVector u = random_vector(rng, 3), v = random_vector(rng, 3), w = random_vector(rng, 3);
    Rational alpha(num(rng), den(rng));
    alpha.canonicalize();
    EXPECT_EQ(bracket(L, alpha * u + w, v), alpha * bracket(L, u, v) + bracket(L, w, v));
  }
}

TEST(LieDataProperty, ValidationIsIdempotent) {
  for (const LieSpec& s : {sl2_spec(), heisenberg_spec(), abelian_spec(2)}) {
    LieData once = validate(s);
    LieData twice = validate(once.spec());
    EXPECT_EQ(once.spec().brackets, twice.spec().brackets);
    EXPECT_EQ(once.spec().form, twice.spec().form);
    EXPECT_EQ(once.names(), twice.names());
  }
}

TEST(LieData, OneOrientationIsCompleted) {
  LieData L = validate(sl2_spec());
  EXPECT_EQ(L.bracket(0, 2), Rational(-2) * LieVector::basis(0));
  EXPECT_EQ(L.form(1, 0), 4);
}
