#include <doctest.h>

#include "severi/cohomology.hpp"
#include "severi/errors.hpp"
#include "test_support.hpp"

using namespace severi;

namespace {

bool all_base(const Matrix& A) { return A.is_base(); }

}  // namespace

TEST_CASE("cyclic cocycles") {
  Extension L = make_shanks_cubic(1);
  Cocycle xi = cyclic_cocycle(L, 2);
  Matrix expected = Matrix::from_base(L, {{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
  CHECK(xi.at_generator == expected);
  CHECK(power(xi.at_generator, 3) == Matrix::identity(L, 3).scaled(ExtElement::from_int(L, 2)));
  CHECK(xi.scalar_class == ExtElement::from_int(L, 2));
  CHECK(!xi.normalized);
  CHECK(error_code_of([&] { cyclic_cocycle(L, 0); }) == ErrorCode::ZeroA);

  Cocycle xm = cyclic_cocycle(L, -1);
  CHECK(power(xm.at_generator, 3) == Matrix::identity(L, 3).scaled(ExtElement::from_int(L, -1)));

  for (const Extension& L4 : {test_support::cyclotomic5(), make_finite_extension(7, 4)}) {
    Cocycle x4 = cyclic_cocycle(L4, 5);
    CHECK(x4.size == 4);
    CHECK(x4.at_generator(0, 3) == ExtElement::from_int(L4, 5));
    CHECK(x4.at_generator(1, 0).is_one());
    CHECK(x4.at_generator(3, 2).is_one());
    CHECK(power(x4.at_generator, 4) == Matrix::identity(L4, 4).scaled(ExtElement::from_int(L4, 5)));
  }
}

TEST_CASE("Veronese lifts") {
  Extension L = make_shanks_cubic(1);
  Cocycle lift = lift_to_veronese(cyclic_cocycle(L, 2));
  CHECK(lift.size == 10);
  CHECK(lift.normalized);
  CHECK(as_scaled_permutation(lift.at_generator));
  CHECK(twisted_product(lift.at_generator, 3).is_identity());
  CHECK(power(lift.at_generator, 3).is_identity());

  Cocycle id = make_cocycle(L, Matrix::identity(L, 3), 1);
  CHECK(lift_to_veronese(id).at_generator.is_identity());

  // lift(xi(sigma^j)) = twisted product of the lift, after removing a^j
  Cocycle xi = cyclic_cocycle(L, 2);
  MonomialBasis b = monomial_basis(2, 3);
  for (int j = 0; j <= 3; ++j) {
    Matrix lhs = induced_matrix(b, twisted_product(xi.at_generator, j), ExtElement::from_int(L, 1 << j));
    CHECK(lhs == twisted_product(lift.at_generator, j));
  }

  Extension C5 = test_support::cyclotomic5();
  Cocycle l4 = lift_to_veronese(cyclic_cocycle(C5, 5));
  CHECK(l4.size == 35);
  CHECK(twisted_product(l4.at_generator, 4).is_identity());
}

TEST_CASE("generic Hilbert 90") {
  Extension L = make_shanks_cubic(1);
  Cocycle id = make_cocycle(L, Matrix::identity(L, 3), 1);
  Matrix M0 = split_with(id, Matrix::identity(L, 3));
  CHECK(M0 == Matrix::identity(L, 3).scaled(ExtElement::from_int(L, 3)));
  CHECK(is_split(id, M0));

  Cocycle lift = lift_to_veronese(cyclic_cocycle(L, 2));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Matrix M = split_generic(lift, 32, seed);
    CHECK(lift.at_generator * galois_matrix(M, 1) == M);
    CHECK(lift.at_generator == M * inverse(galois_matrix(M, 1)));
  }
  CHECK(split_generic(lift, 32, 7) == split_generic(lift, 32, 7));

  CHECK(error_code_of([&] { split_generic(cyclic_cocycle(L, 2)); }) == ErrorCode::NotHonestCocycle);

  Extension F343 = make_finite_extension(7, 3);
  for (long a = 1; a < 7; ++a) {
    Cocycle lf = lift_to_veronese(cyclic_cocycle(F343, a));
    CHECK(is_split(lf, split_generic(lf)));
  }
}

TEST_CASE("attempt bound") {
  // Over F2 the zero attempt budget exhausts immediately.
  Extension F8 = make_finite_extension(2, 3);
  Cocycle lf = lift_to_veronese(cyclic_cocycle(F8, 1));
  CHECK(error_code_of([&] { split_generic(lf, 0, 0); }) == ErrorCode::AllAttemptsSingular);
}

TEST_CASE("structured split") {
  Extension L = make_shanks_cubic(1);
  NormalBasis nb = find_normal_basis(L, ExtElement::generator(L));
  const auto& l = nb.elements;
  Cocycle lift = lift_to_veronese(cyclic_cocycle(L, 2));
  Matrix M = split_structured(lift, nb);
  CHECK(is_split(lift, M));
  // row of XYZ is the unit vector
  for (int j = 0; j < 10; ++j) CHECK(M(4, j) == (j == 4 ? ExtElement::from_int(L, 1) : ExtElement(L)));
  // row of X^3 carries a^2 l_1, a^2 l_2, a^2 l_3 at w0, w6, w9
  const ExtElement a2 = ExtElement::from_int(L, 4);
  CHECK(M(0, 0) == a2 * l[0]);
  CHECK(M(0, 6) == a2 * l[1]);
  CHECK(M(0, 9) == a2 * l[2]);
  // two splittings differ by a GL(k) factor
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    Matrix G = split_generic(lift, 32, seed);
    CHECK(all_base(inverse(M) * G));
  }
  // conjugating by a k-matrix keeps the cocycle honest but not monomial
  Matrix C = Matrix::identity(L, 10);
  C(0, 1) = ExtElement::from_int(L, 1);
  Cocycle conj = make_cocycle(L, C * lift.at_generator * inverse(C), 2);
  REQUIRE(conj.normalized);
  CHECK(error_code_of([&] { split_structured(conj, nb); }) == ErrorCode::NotMonomialCocycle);
  CHECK(is_split(conj, split_generic(conj)));
}

TEST_CASE("structured split with short orbits (n = 3)") {
  for (const Extension& L : {test_support::cyclotomic5(), make_finite_extension(5, 4)}) {
    NormalBasis nb = find_normal_basis(L, ExtElement::generator(L));
    for (long a : {5L, 2L, -1L}) {
      if (L->base().is_finite() && a % 5 == 0) continue;
      Cocycle lift = lift_to_veronese(cyclic_cocycle(L, a));
      Matrix M = split_structured(lift, nb);
      CHECK(is_split(lift, M));
    }
  }
}

TEST_CASE("coboundaries from norm witnesses") {
  Extension L = make_shanks_cubic(1);
  Coboundary c1 = coboundary_from_witness(L, 1, ExtElement::from_int(L, 1));
  Matrix A1 = cyclic_cocycle(L, 1).at_generator;
  CHECK(A1 * galois_matrix(c1.P, 1) == c1.P);

  ExtElement lam = parse_element(L, "1 + t");
  Coboundary cm = coboundary_from_witness(L, -1, lam);
  Matrix Am = cyclic_cocycle(L, -1).at_generator;
  CHECK(Am * galois_matrix(cm.P, 1) == cm.P.scaled(lam));
  CHECK(pgl_equal(Am, cm.P * inverse(galois_matrix(cm.P, 1))));

  CHECK(error_code_of([&] { coboundary_from_witness(L, 2, ExtElement::from_int(L, 1)); }) ==
        ErrorCode::NotAWitness);

  Extension F343 = make_finite_extension(7, 3);
  NormWitness w = norm_witness(F343, 3, 0);
  REQUIRE(w.witness);
  Coboundary cf = coboundary_from_witness(F343, 3, *w.witness);
  CHECK(cyclic_cocycle(F343, 3).at_generator * galois_matrix(cf.P, 1) == cf.P.scaled(*w.witness));
}
