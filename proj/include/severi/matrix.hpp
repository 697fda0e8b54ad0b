#pragma once

#include <optional>
#include <vector>

#include "severi/extension.hpp"

namespace severi {

/// Dense row-major matrix over an extension L.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Extension L, int rows, int cols);
  Matrix(Extension L, int rows, int cols, std::vector<ExtElement> entries);

  static Matrix identity(Extension L, int n);
  /// Entries given as base-field scalars, row by row.
  static Matrix from_base(Extension L, const std::vector<std::vector<Scalar>>& rows);
  static Matrix diagonal(const std::vector<ExtElement>& diag);

  const Extension& field() const { return L_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const ExtElement& operator()(int r, int c) const { return e_[std::size_t(r * cols_ + c)]; }
  ExtElement& operator()(int r, int c) { return e_[std::size_t(r * cols_ + c)]; }
  const std::vector<ExtElement>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const ExtElement& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  std::vector<ExtElement> apply(const std::vector<ExtElement>& v) const;

  bool is_zero() const;
  bool is_identity() const;
  /// All entries lie in k.
  bool is_base() const;

 private:
  Extension L_;
  int rows_ = 0, cols_ = 0;
  std::vector<ExtElement> e_;
};

Matrix mul(const Matrix& a, const Matrix& b);
/// Fraction-free (Bareiss) determinant.
ExtElement det(const Matrix& a);
/// Fraction-free Gauss-Jordan on [A | I]; throws Singular.
Matrix inverse(const Matrix& a);
Matrix power(const Matrix& a, int e);
int rank(const Matrix& a);

/// sigma^j applied entrywise.
Matrix galois_matrix(const Matrix& a, int j);

struct ScaledPermutation {
  /// Row r has its only nonzero entry in column perm[r], equal to scales[r],
  /// so (A v)_r = scales[r] * v_{perm[r]}.
  std::vector<int> perm;
  std::vector<ExtElement> scales;
};

/// Recognizes monomial matrices; nullopt when some row or column does not
/// have exactly one nonzero entry.
std::optional<ScaledPermutation> as_scaled_permutation(const Matrix& a);

/// True iff b = c * a for a nonzero c in L; the factor is returned via `factor`.
bool pgl_equal(const Matrix& a, const Matrix& b, ExtElement* factor = nullptr);

/// Reduced row echelon form over L of the given rows (zero rows dropped);
/// returns pivot columns.
std::vector<int> rref(std::vector<std::vector<ExtElement>>& rows);

}  // namespace severi
