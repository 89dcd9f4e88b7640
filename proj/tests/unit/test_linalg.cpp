#include <doctest.h>

#include <random>

#include "hopfkit/linalg.hpp"

using namespace hopfkit;

namespace {

// Independent oracle: textbook Gauss-Jordan rank over the field, written
// without the fraction-free update the library uses.
std::size_t naive_rank(const Matrix& m) {
  const FieldSpec& f = m.field();
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(f)));
  for (const auto& [ij, v] : m.entries()) a[ij.first][ij.second] = v;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inv();
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar factor = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = a[i][j] - factor * a[r][j];
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(std::mt19937& rng, const FieldSpec& f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> v(-4, 4);
  std::uniform_int_distribution<int> denom(1, 3);
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      int n = v(rng);
      if (n == 0) continue;  // keep it sparse-ish
      Scalar s = f.kind() == FieldKind::prime_field
                     ? Scalar::of_int(f, n)
                     : Scalar::of_rat(f, Rat(n) / Rat(denom(rng)));
      m.set(i, j, s);
    }
  return m;
}

std::vector<Scalar> apply_dense(const Matrix& m, const std::vector<Scalar>& x) {
  return m.apply(x);
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("identity nullspace is empty; [1 1] has the documented kernel") {
  FieldSpec f = FieldSpec::rationals();
  CHECK(nullspace(Matrix::identity(2, f)).empty());
  Matrix m(1, 2, f);
  m.set(0, 0, Scalar::one(f));
  m.set(0, 1, Scalar::one(f));
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == Scalar::one(f));
  CHECK(basis[0][1] == -Scalar::one(f));
}

TEST_CASE("solve: identity, inconsistent, and underdetermined systems") {
  FieldSpec f = FieldSpec::rationals();
  Matrix id = Matrix::identity(3, f);
  std::vector<Scalar> b{Scalar::of_int(f, 2), Scalar::of_int(f, -1), Scalar::zero(f)};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix m(2, 2, f);
  m.set(0, 0, Scalar::one(f));
  m.set(0, 1, Scalar::one(f));
  m.set(1, 0, Scalar::one(f));
  m.set(1, 1, Scalar::one(f));
  CHECK_FALSE(solve(m, {Scalar::one(f), Scalar::zero(f)}).has_value());
  auto y = solve(m, {Scalar::one(f), Scalar::one(f)});
  REQUIRE(y.has_value());
  std::vector<Scalar> residual = apply_dense(m, *y);
  for (auto& r : residual) r = r - Scalar::one(f);
  CHECK(all_zero(residual));
}

TEST_CASE("rank basics") {
  FieldSpec f = FieldSpec::rationals();
  CHECK(rank(Matrix(3, 3, f)) == 0);
  CHECK(rank(Matrix::identity(4, f)) == 4);
  Matrix m(2, 3, f);
  m.set(0, 0, Scalar::one(f));
  m.set(1, 0, Scalar::of_int(f, 2));
  CHECK(rank(m) == 1);
}

TEST_CASE("inverse round-trips and detects singularity") {
  FieldSpec f = FieldSpec::rationals();
  Matrix m(2, 2, f);
  m.set(0, 0, Scalar::of_int(f, 2));
  m.set(0, 1, Scalar::one(f));
  m.set(1, 1, Scalar::of_int(f, 3));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK((*inv * m).is_identity());
  CHECK(m.pow(-2) == inv->pow(2));
  Matrix sing(2, 2, f);
  sing.set(0, 0, Scalar::one(f));
  sing.set(1, 0, Scalar::one(f));
  CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("random systems: kernel vectors satisfy M v = 0, rank agrees with oracle") {
  std::mt19937 rng(424242u);
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime_field(7),
                                FieldSpec::cyclotomic(4)};
  for (const auto& f : fields) {
    CAPTURE(f.str());
    for (int iter = 0; iter < 25; ++iter) {
      std::uniform_int_distribution<std::size_t> dim(1, 6);
      Matrix m = random_matrix(rng, f, dim(rng), dim(rng));
      std::size_t rk = rank(m);
      CHECK(rk == naive_rank(m));
      auto basis = nullspace(m);
      CHECK(rk + basis.size() == m.cols());
      for (const auto& v : basis) {
        CHECK(all_zero(m.apply(v)));
        // normalization: first nonzero coordinate is 1
        for (const auto& c : v) {
          if (c.is_zero()) continue;
          CHECK(c.is_one());
          break;
        }
      }
      // a solvable rhs built from a random x
      std::vector<Scalar> x0;
      std::uniform_int_distribution<int> coef(-3, 3);
      for (std::size_t j = 0; j < m.cols(); ++j) x0.push_back(Scalar::of_int(f, coef(rng)));
      auto sol = solve(m, m.apply(x0));
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == m.apply(x0));
      // consistency detection agrees with an augmented-rank computation
      std::vector<Scalar> rhs;
      for (std::size_t i = 0; i < m.rows(); ++i) rhs.push_back(Scalar::of_int(f, coef(rng)));
      Matrix aug(m.rows(), m.cols() + 1, f);
      for (const auto& [ij, v] : m.entries()) aug.set(ij.first, ij.second, v);
      for (std::size_t i = 0; i < m.rows(); ++i) aug.set(i, m.cols(), rhs[i]);
      bool solvable = solve(m, rhs).has_value();
      CHECK(solvable == (rank(aug) == rk));
    }
  }
}

TEST_CASE("deterministic outputs: same matrix, same kernel bytes") {
  FieldSpec f = FieldSpec::rationals();
  Matrix m(2, 4, f);
  m.set(0, 0, Scalar::one(f));
  m.set(0, 2, Scalar::of_int(f, 3));
  m.set(1, 1, Scalar::of_int(f, -2));
  m.set(1, 3, Scalar::one(f));
  auto b1 = nullspace(m);
  auto b2 = nullspace(m);
  REQUIRE(b1.size() == b2.size());
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < b1[i].size(); ++j) CHECK(b1[i][j].str() == b2[i][j].str());
}
