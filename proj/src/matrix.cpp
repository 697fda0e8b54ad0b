#include "severi/matrix.hpp"

#include "severi/errors.hpp"

namespace severi {

Matrix::Matrix(Extension L, int rows, int cols) : L_(std::move(L)), rows_(rows), cols_(cols) {
  e_.assign(std::size_t(rows) * std::size_t(cols), ExtElement(L_));
}

Matrix::Matrix(Extension L, int rows, int cols, std::vector<ExtElement> entries)
    : L_(std::move(L)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != std::size_t(rows) * std::size_t(cols)) {
    throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
  }
}

Matrix Matrix::identity(Extension L, int n) {
  Matrix m(L, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = ExtElement::from_int(L, 1);
  return m;
}

Matrix Matrix::from_base(Extension L, const std::vector<std::vector<Scalar>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  Matrix m(L, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[std::size_t(i)].size()) != c) {
      throw Error(ErrorCode::ShapeMismatch, "ragged rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = ExtElement::constant(L, rows[std::size_t(i)][std::size_t(j)]);
  }
  return m;
}

Matrix Matrix::diagonal(const std::vector<ExtElement>& diag) {
  const Extension& L = diag.front().field();
  const int n = static_cast<int>(diag.size());
  Matrix m(L, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[std::size_t(i)];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::ShapeMismatch, "product of incompatible shapes");
  Matrix out(L_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const ExtElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const ExtElement& b = o(k, j);
        if (b.is_zero()) continue;
        out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "sum of different shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "difference of different shapes");
  Matrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

Matrix Matrix::scaled(const ExtElement& s) const {
  Matrix out = *this;
  for (auto& v : out.e_) v *= s;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
  Matrix out(L_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<ExtElement> Matrix::apply(const std::vector<ExtElement>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::ShapeMismatch, "vector length");
  std::vector<ExtElement> out(static_cast<std::size_t>(rows_), ExtElement(L_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) out[std::size_t(i)] += (*this)(i, j) * v[std::size_t(j)];
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : e_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const ExtElement& v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_base() const {
  for (const auto& v : e_) {
    if (!v.is_base()) return false;
  }
  return true;
}

Matrix mul(const Matrix& a, const Matrix& b) { return a * b; }

ExtElement det(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const int n = a.rows();
  const Extension& L = a.field();
  if (n == 0) return ExtElement::from_int(L, 1);
  Matrix m = a;
  ExtElement prev = ExtElement::from_int(L, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return ExtElement(L);
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    ExtElement prev_inv = prev.inverse();
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) * prev_inv;
      }
      m(i, k) = ExtElement(L);
    }
    prev = m(k, k);
  }
  ExtElement d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const int n = a.rows();
  const Extension& L = a.field();
  // Bareiss Gauss-Jordan on [A | I]; at the end the left block is d*I and
  // the right block is d*A^-1 for the (signed) determinant d.
  Matrix m(L, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = ExtElement::from_int(L, 1);
  }
  ExtElement prev = ExtElement::from_int(L, 1);
  for (int k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      int piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) throw Error(ErrorCode::Singular, "matrix is singular");
      for (int j = 0; j < 2 * n; ++j) std::swap(m(k, j), m(piv, j));
    }
    ExtElement prev_inv = prev.inverse();
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) * prev_inv;
      }
      m(i, k) = ExtElement(L);
    }
    prev = m(k, k);
  }
  // After the last step every diagonal entry equals the final pivot.
  ExtElement d_inv = prev.inverse();
  Matrix out(L, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(i, n + j) * d_inv;
  return out;
}

Matrix power(const Matrix& a, int e) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
  if (e < 0) return power(inverse(a), -e);
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix b = a;
  while (e > 0) {
    if (e & 1) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

std::vector<int> rref(std::vector<std::vector<ExtElement>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows.front().size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][std::size_t(c)].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    ExtElement inv = rows[r][std::size_t(c)].inverse();
    for (int j = c; j < cols; ++j) {
      if (!rows[r][std::size_t(j)].is_zero()) rows[r][std::size_t(j)] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      ExtElement f = rows[i][std::size_t(c)];
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        if (!rows[r][std::size_t(j)].is_zero()) rows[i][std::size_t(j)] -= f * rows[r][std::size_t(j)];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank(const Matrix& a) {
  std::vector<std::vector<ExtElement>> rows;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<ExtElement> row;
    for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return static_cast<int>(rref(rows).size());
}

Matrix galois_matrix(const Matrix& a, int j) {
  Matrix out = a;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_base()) out(r, c) = galois_apply(a(r, c), j);
    }
  return out;
}

std::optional<ScaledPermutation> as_scaled_permutation(const Matrix& a) {
  if (!a.is_square()) return std::nullopt;
  const int n = a.rows();
  ScaledPermutation sp;
  std::vector<int> col_hits(std::size_t(n), 0);
  for (int r = 0; r < n; ++r) {
    int found = -1;
    for (int c = 0; c < n; ++c) {
      if (a(r, c).is_zero()) continue;
      if (found >= 0) return std::nullopt;
      found = c;
    }
    if (found < 0) return std::nullopt;
    if (++col_hits[std::size_t(found)] > 1) return std::nullopt;
    sp.perm.push_back(found);
    sp.scales.push_back(a(r, found));
  }
  return sp;
}

bool pgl_equal(const Matrix& a, const Matrix& b, ExtElement* factor) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::optional<ExtElement> c;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const ExtElement& x = a.entries()[i];
    const ExtElement& y = b.entries()[i];
    if (x.is_zero() != y.is_zero()) return false;
    if (x.is_zero()) continue;
    if (!c) c = y / x;
    if (y != *c * x) return false;
  }
  if (!c) return false;
  if (factor) *factor = *c;
  return true;
}

}  // namespace severi
