#include <doctest.h>

#include <random>

#include "severi/errors.hpp"
#include "severi/matrix.hpp"
#include "test_support.hpp"

using namespace severi;

namespace {

Matrix companion(const Extension& L, long a, int n) {
  Matrix A(L, n + 1, n + 1);
  A(0, n) = ExtElement::from_int(L, a);
  for (int i = 1; i <= n; ++i) A(i, i - 1) = ExtElement::from_int(L, 1);
  return A;
}

Matrix random_matrix(const Extension& L, std::mt19937_64& rng, int n) {
  Matrix A(L, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = test_support::random_element(L, rng, 3);
  return A;
}

// Leibniz-formula determinant, used as an independent oracle.
ExtElement leibniz_det(const Matrix& A) {
  const int n = A.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
  ExtElement sum(A.field());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[std::size_t(i)] > perm[std::size_t(j)];
    ExtElement term = ExtElement::from_int(A.field(), inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= A(i, perm[std::size_t(i)]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST_CASE("inverse and determinant examples") {
  Extension L = make_shanks_cubic(1);
  CHECK(inverse(Matrix::identity(L, 3)) == Matrix::identity(L, 3));
  Matrix A = companion(L, 2, 2);
  CHECK(det(A) == ExtElement::from_int(L, 2));
  CHECK(det(A) == leibniz_det(A));
  CHECK(power(A, 3) == Matrix::identity(L, 3).scaled(ExtElement::from_int(L, 2)));
  CHECK((A * inverse(A)).is_identity());

  Matrix S(L, 2, 2);
  S(0, 0) = ExtElement::from_int(L, 1);
  S(0, 1) = ExtElement::from_int(L, 2);
  S(1, 0) = ExtElement::from_int(L, 2);
  S(1, 1) = ExtElement::from_int(L, 4);
  CHECK(det(S).is_zero());
  CHECK(error_code_of([&] { inverse(S); }) == ErrorCode::Singular);
  CHECK(error_code_of([&] { mul(S, Matrix(L, 3, 3)); }) == ErrorCode::ShapeMismatch);
  CHECK(error_code_of([&] { det(Matrix(L, 2, 3)); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("random invertible matrices over Shanks t=1") {
  Extension L = make_shanks_cubic(1);
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 5) {
    Matrix A = random_matrix(L, rng, 4);
    ExtElement d = det(A);
    CHECK(d == leibniz_det(A));
    if (d.is_zero()) continue;
    Matrix Ai = inverse(A);
    CHECK((A * Ai).is_identity());
    CHECK((Ai * A).is_identity());
    CHECK(inverse(Ai) == A);
    ++tested;
  }
}

TEST_CASE("multiplicativity and Galois compatibility") {
  std::mt19937_64 rng(5);
  for (const Extension& L : {make_shanks_cubic(1), make_finite_extension(7, 3), test_support::cyclotomic5()}) {
    for (int s = 0; s < 4; ++s) {
      Matrix A = random_matrix(L, rng, 3);
      Matrix B = random_matrix(L, rng, 3);
      CHECK(det(A * B) == det(A) * det(B));
      CHECK(galois_matrix(A * B, 1) == galois_matrix(A, 1) * galois_matrix(B, 1));
      CHECK(galois_matrix(A, L->degree()) == A);
      CHECK(det(galois_matrix(A, 1)) == galois_apply(det(A), 1));
    }
  }
}

TEST_CASE("galois_matrix examples") {
  Extension L = make_shanks_cubic(1);
  Matrix A = companion(L, 2, 2);
  CHECK(galois_matrix(A, 1) == A);
  NormalBasis nb = find_normal_basis(L, ExtElement::generator(L));
  Matrix D = Matrix::diagonal(nb.elements);
  Matrix D1 = galois_matrix(D, 1);
  CHECK(D1 == Matrix::diagonal({nb.elements[1], nb.elements[2], nb.elements[0]}));
  CHECK(!D.is_base());
  CHECK(A.is_base());
}

TEST_CASE("scaled permutation recognition") {
  Extension L = make_shanks_cubic(1);
  auto sp = as_scaled_permutation(companion(L, 2, 2));
  REQUIRE(sp);
  CHECK(sp->perm == std::vector<int>{2, 0, 1});
  CHECK(sp->scales[0] == ExtElement::from_int(L, 2));
  CHECK(sp->scales[1].is_one());
  CHECK(sp->scales[2].is_one());

  auto id = as_scaled_permutation(Matrix::identity(L, 3));
  REQUIRE(id);
  CHECK(id->perm == std::vector<int>{0, 1, 2});

  Matrix ones(L, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) ones(i, j) = ExtElement::from_int(L, 1);
  CHECK(!as_scaled_permutation(ones));
  Matrix col(L, 2, 2);
  col(0, 0) = ExtElement::from_int(L, 1);
  col(1, 0) = ExtElement::from_int(L, 1);
  CHECK(!as_scaled_permutation(col));
}

TEST_CASE("PGL equality and rank") {
  Extension L = make_shanks_cubic(1);
  ExtElement t = ExtElement::generator(L);
  Matrix A = companion(L, 2, 2);
  ExtElement c;
  CHECK(pgl_equal(A, A.scaled(t), &c));
  CHECK(c == t);
  Matrix B = A;
  B(1, 0) = t;
  CHECK(!pgl_equal(A, B));
  CHECK(!pgl_equal(A, Matrix(L, 3, 3)));
  CHECK(rank(A) == 3);
  Matrix R(L, 2, 3);
  R(0, 0) = t;
  R(1, 0) = t * t;
  CHECK(rank(R) == 1);
}
