#pragma once
// Exact linear algebra over a Scalar field: sparse matrices with deterministic
// fraction-free elimination (Bareiss forward pass, field back-substitution).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field);
  static Matrix identity(std::size_t n, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  void set(std::size_t i, std::size_t j, const Scalar& v);  // storing 0 erases
  Scalar at(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix transpose() const;
  Matrix pow(long long k) const;  // negative powers use the inverse
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_identity() const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> e_;
};

// Kernel basis; each vector is normalized so its first nonzero coordinate is 1,
// ordered by free column. Deterministic for a given matrix.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

// A particular solution of m x = rhs (free coordinates set to 0), or nullopt
// when the system is inconsistent. Unique solutions are returned exactly.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

std::size_t rank(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hopfkit
