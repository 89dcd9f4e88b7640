#include "hopfkit/linalg.hpp"

#include <string>

namespace hopfkit {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(std::move(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_)
    fail(errc::out_of_range, "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  if (v.field() != field_) fail(errc::field_mismatch, "matrix entry from a different field");
  auto key = std::make_pair(i, j);
  if (v.is_zero())
    e_.erase(key);
  else
    e_.insert_or_assign(key, v);
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? Scalar::zero(field_) : it->second;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(errc::out_of_range, "matrix product shape mismatch");
  if (field_ != o.field_) fail(errc::field_mismatch, "matrix product across fields");
  Matrix r(rows_, o.cols_, field_);
  // Accumulate per output cell; both operands iterate in key order.
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
  for (const auto& [ij, a] : e_) {
    for (std::size_t k = 0; k < o.cols_; ++k) {
      auto it = o.e_.find({ij.second, k});
      if (it == o.e_.end()) continue;
      Scalar term = a * it->second;
      auto key = std::make_pair(ij.first, k);
      auto cur = acc.find(key);
      if (cur == acc.end())
        acc.emplace(key, std::move(term));
      else
        cur->second = cur->second + term;
    }
  }
  for (const auto& [key, v] : acc) r.set(key.first, key.second, v);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) fail(errc::out_of_range, "matrix apply shape mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (const auto& [ij, a] : e_) {
    if (v[ij.second].is_zero()) continue;
    out[ij.first] = out[ij.first] + a * v[ij.second];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (const auto& [ij, a] : e_) r.set(ij.second, ij.first, a);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  return e_ == o.e_;
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_, field_);
}

Matrix Matrix::pow(long long k) const {
  if (rows_ != cols_) fail(errc::out_of_range, "matrix power of a non-square matrix");
  if (k < 0) {
    auto inv = inverse(*this);
    if (!inv) fail(errc::invalid_argument, "negative power of a singular matrix");
    return inv->pow(-k);
  }
  Matrix acc = identity(rows_, field_);
  Matrix base = *this;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Row echelon form of [m | extra] via the Bareiss update
//   a[i][j] <- (a[p][c] * a[i][j] - a[i][c] * a[p][j]) / prev_pivot.
// The division is a field division, so this is fraction-free on integral input
// and still exact otherwise. Pivots are chosen deterministically: first column
// with a nonzero entry, first such row in order.
struct Echelon {
  std::vector<std::vector<Scalar>> a;  // rows x (cols + extra)
  std::vector<std::size_t> pivot_col;  // per pivot row, ascending
  std::size_t cols;                    // pivot search width
};

Echelon eliminate(const Matrix& m, const std::vector<std::vector<Scalar>>& extra) {
  const FieldSpec& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t width = m.cols() + (extra.empty() ? 0 : extra[0].size());
  Echelon e;
  e.cols = m.cols();
  e.a.assign(rows, std::vector<Scalar>(width, Scalar::zero(f)));
  for (const auto& [ij, v] : m.entries()) e.a[ij.first][ij.second] = v;
  for (std::size_t i = 0; i < extra.size(); ++i)
    for (std::size_t j = 0; j < extra[i].size(); ++j) e.a[i][m.cols() + j] = extra[i][j];

  Scalar prev = Scalar::one(f);
  std::size_t npiv = 0;
  for (std::size_t col = 0; col < m.cols() && npiv < rows; ++col) {
    std::size_t r = npiv;
    while (r < rows && e.a[r][col].is_zero()) ++r;
    if (r == rows) continue;
    if (r != npiv) std::swap(e.a[r], e.a[npiv]);
    const Scalar& piv = e.a[npiv][col];
    for (std::size_t i = npiv + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < width; ++j)
        e.a[i][j] = (piv * e.a[i][j] - e.a[i][col] * e.a[npiv][j]) / prev;
      e.a[i][col] = Scalar::zero(f);
    }
    prev = piv;
    e.pivot_col.push_back(col);
    ++npiv;
  }
  return e;
}

// Solve the echelon system for one augmented column by back-substitution,
// with the free variables fixed to zero.
std::vector<Scalar> back_substitute(const Echelon& e, const FieldSpec& f, std::size_t rhs_index) {
  std::vector<Scalar> x(e.cols, Scalar::zero(f));
  for (std::size_t pi = e.pivot_col.size(); pi-- > 0;) {
    const std::size_t pc = e.pivot_col[pi];
    Scalar s = e.a[pi][e.cols + rhs_index];
    for (std::size_t j = pc + 1; j < e.cols; ++j) {
      if (e.a[pi][j].is_zero() || x[j].is_zero()) continue;
      s = s - e.a[pi][j] * x[j];
    }
    x[pc] = s / e.a[pi][pc];
  }
  return x;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const FieldSpec& f = m.field();
  Echelon e = eliminate(m, {});
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    x[free_col] = Scalar::one(f);
    for (std::size_t pi = e.pivot_col.size(); pi-- > 0;) {
      const std::size_t pc = e.pivot_col[pi];
      if (pc > free_col) continue;  // columns right of free_col are zero here
      Scalar s = Scalar::zero(f);
      for (std::size_t j = pc + 1; j <= free_col; ++j) {
        if (e.a[pi][j].is_zero() || x[j].is_zero()) continue;
        s = s + e.a[pi][j] * x[j];
      }
      x[pc] = -s / e.a[pi][pc];
    }
    // Normalize: first nonzero coordinate becomes 1.
    for (const Scalar& c : x) {
      if (c.is_zero()) continue;
      if (!c.is_one()) {
        Scalar inv = c.inv();
        for (auto& y : x) y = y * inv;
      }
      break;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) fail(errc::out_of_range, "solve shape mismatch");
  std::vector<std::vector<Scalar>> extra;
  extra.reserve(m.rows());
  for (const auto& v : rhs) extra.push_back({v});
  Echelon e = eliminate(m, extra);
  for (std::size_t i = e.pivot_col.size(); i < m.rows(); ++i)
    if (!e.a[i][e.cols].is_zero()) return std::nullopt;
  return back_substitute(e, m.field(), 0);
}

std::size_t rank(const Matrix& m) { return eliminate(m, {}).pivot_col.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::out_of_range, "inverse of a non-square matrix");
  const FieldSpec& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::vector<Scalar>> extra(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) extra[i][i] = Scalar::one(f);
  Echelon e = eliminate(m, extra);
  if (e.pivot_col.size() != n) return std::nullopt;
  Matrix inv(n, n, f);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> col = back_substitute(e, f, k);
    for (std::size_t i = 0; i < n; ++i) inv.set(i, k, col[i]);
  }
  return inv;
}

}  // namespace hopfkit
