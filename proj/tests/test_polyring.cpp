#include <doctest.h>

#include <random>

#include "severi/errors.hpp"
#include "severi/multipoly.hpp"
#include "test_support.hpp"

using namespace severi;

namespace {

const std::vector<std::string> XYZ = {"X", "Y", "Z"};

MultiPoly P(const Extension& L, const std::string& s) { return parse_poly(L, s, XYZ); }

MultiPoly random_form(const Extension& L, std::mt19937_64& rng, int nv, int deg, int terms) {
  MultiPoly F(L, nv);
  for (int k = 0; k < terms; ++k) {
    Exponent e(std::size_t(nv), 0);
    int left = deg;
    for (int i = 0; i + 1 < nv; ++i) {
      int take = static_cast<int>(rng() % static_cast<unsigned long>(left + 1));
      e[std::size_t(i)] = take;
      left -= take;
    }
    e[std::size_t(nv - 1)] = left;
    F.add_term(e, test_support::random_element(L, rng, 3));
  }
  return F;
}

Matrix random_matrix(const Extension& L, std::mt19937_64& rng, int n) {
  Matrix A(L, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = test_support::random_element(L, rng, 2);
  return A;
}

}  // namespace

TEST_CASE("printing and parsing") {
  Extension L = make_shanks_cubic(1);
  MultiPoly F = P(L, "Z^3 + X^3 - 2*X*Y*Z + (1/2)*Y^3");
  CHECK(F.to_string(XYZ) == "X^3 - 2*X*Y*Z + (1/2)*Y^3 + Z^3");
  MultiPoly G = P(L, "(1 + t)*X^2 - t^2*Y + 3");
  CHECK(G.to_string(XYZ) == "(1 + t)*X^2 + (-t^2)*Y + 3");
  CHECK(P(L, G.to_string(XYZ)) == G);
  CHECK(!G.is_homogeneous());
  CHECK(F.is_homogeneous());
  CHECK(F.degree() == 3);
  CHECK(MultiPoly(L, 3).to_string(XYZ) == "0");
  MultiPoly W = parse_poly(L, "w0 + w6 + w9", omega_names(10));
  CHECK(W.to_string(omega_names(10)) == "w0 + w6 + w9");
  CHECK(parse_poly(L, "X0^2 - X1*X3", plane_names(4)).to_string(plane_names(4)) == "X0^2 - X1*X3");
  CHECK(error_code_of([&] { P(L, "X + W"); }) == ErrorCode::ParseError);
}

TEST_CASE("substitute_linear examples") {
  Extension L = make_shanks_cubic(1);
  MultiPoly F = P(L, "X^3 + Y^3 + Z^3");
  CHECK(substitute_linear(F, Matrix::identity(L, 3)) == F);

  // [aZ : X : Y] with a = 2
  Matrix A(L, 3, 3);
  A(0, 2) = ExtElement::from_int(L, 2);
  A(1, 0) = ExtElement::from_int(L, 1);
  A(2, 1) = ExtElement::from_int(L, 1);
  MultiPoly G = P(L, "X^3 + 2*Y^3 + 4*Z^3");
  CHECK(substitute_linear(G, A) == G.scaled(ExtElement::from_int(L, 2)));

  MultiPoly XY = parse_poly(L, "X*Y", {"X", "Y"});
  Matrix D = Matrix::diagonal({ExtElement::from_int(L, 2), ExtElement::from_int(L, 3)});
  CHECK(substitute_linear(XY, D) == XY.scaled(ExtElement::from_int(L, 6)));
  CHECK(error_code_of([&] { substitute_linear(F, D); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("substitution properties") {
  std::mt19937_64 rng(3);
  for (const Extension& L : {make_shanks_cubic(1), make_finite_extension(5, 3)}) {
    for (int s = 0; s < 5; ++s) {
      MultiPoly F = random_form(L, rng, 3, 3, 5);
      Matrix A = random_matrix(L, rng, 3);
      Matrix B = random_matrix(L, rng, 3);
      // contravariant composition under F(A x)
      CHECK(substitute_linear(F, A * B) == substitute_linear(substitute_linear(F, A), B));
      MultiPoly G = substitute_linear(F, A);
      CHECK(G.is_homogeneous());
      if (!G.is_zero()) CHECK(G.degree() == 3);
      // evaluation commutes with substitution
      std::vector<ExtElement> x;
      for (int i = 0; i < 3; ++i) x.push_back(test_support::random_element(L, rng, 3));
      CHECK(evaluate(G, x) == evaluate(F, A.apply(x)));
    }
  }
}

TEST_CASE("Euler identity") {
  std::mt19937_64 rng(9);
  for (const Extension& L : {make_shanks_cubic(1), make_finite_extension(7, 3)}) {
    for (int deg : {2, 3, 4, 6}) {
      const long p = L->base().is_finite() ? L->base().characteristic().get_si() : 0;
      if (p != 0 && deg % p == 0) continue;
      MultiPoly F = random_form(L, rng, 3, deg, 6);
      MultiPoly lhs(L, 3);
      auto J = jacobian(F);
      for (int i = 0; i < 3; ++i) lhs += MultiPoly::variable(L, 3, i) * J[std::size_t(i)];
      CHECK(lhs == F.scaled(ExtElement::from_int(L, deg)));
    }
  }
}

TEST_CASE("jacobian and evaluation examples") {
  Extension L = make_shanks_cubic(1);
  MultiPoly F = P(L, "X^3 + 2*Y^3 + 4*Z^3");
  auto J = jacobian(F);
  CHECK(J[0] == P(L, "3*X^2"));
  CHECK(J[1] == P(L, "6*Y^2"));
  CHECK(J[2] == P(L, "12*Z^2"));
  MultiPoly Fe = P(L, "X^3 + Y^3 + Z^3");
  CHECK(evaluate(Fe, {ExtElement::from_int(L, 1), ExtElement::from_int(L, -1), ExtElement(L)}).is_zero());

  // over F2 the partials X^2, Y^2, Z^2 have no common projective zero
  Extension F8 = make_finite_extension(2, 3);
  MultiPoly F2 = P(F8, "X^3 + Y^3 + Z^3");
  auto J2 = jacobian(F2);
  CHECK(J2[0] == P(F8, "X^2"));
  int common = 0;
  for (int v = 1; v < 8; ++v) {
    std::vector<ExtElement> pt{ExtElement::from_int(F8, v & 1), ExtElement::from_int(F8, (v >> 1) & 1),
                               ExtElement::from_int(F8, (v >> 2) & 1)};
    bool all = true;
    for (const auto& d : J2) all = all && evaluate(d, pt).is_zero();
    common += all;
  }
  CHECK(common == 0);
}

TEST_CASE("span_equal") {
  Extension L = make_shanks_cubic(1);
  CHECK(span_equal({P(L, "X + Y")}, {P(L, "2*X + 2*Y")}));
  CHECK(span_equal({P(L, "X"), P(L, "Y")}, {P(L, "X + Y"), P(L, "X - Y")}));
  CHECK(!span_equal({P(L, "X^2")}, {P(L, "X*Y")}));
  CHECK(span_equal({P(L, "t*X^2")}, {P(L, "X^2")}));
  CHECK(!span_equal({P(L, "X")}, {P(L, "X^2")}));
  CHECK(error_code_of([&] { span_equal({P(L, "X"), P(L, "Y^2")}, {P(L, "X")}); }) == ErrorCode::MixedDegrees);

  // over F2, X - Y = X + Y, so {X+Y, X-Y} spans a line
  Extension F8 = make_finite_extension(2, 3);
  CHECK(!span_equal({P(F8, "X"), P(F8, "Y")}, {P(F8, "X + Y"), P(F8, "X - Y")}));

  // equivalence relation on sampled families
  std::mt19937_64 rng(1);
  for (int s = 0; s < 5; ++s) {
    std::vector<MultiPoly> a{random_form(L, rng, 3, 2, 3), random_form(L, rng, 3, 2, 3)};
    Matrix C = random_matrix(L, rng, 2);
    if (det(C).is_zero()) continue;
    std::vector<MultiPoly> b{a[0].scaled(C(0, 0)) + a[1].scaled(C(0, 1)), a[0].scaled(C(1, 0)) + a[1].scaled(C(1, 1))};
    std::vector<MultiPoly> c{b[1], b[0] + b[1]};
    CHECK(span_equal(a, a));
    CHECK(span_equal(a, b) == span_equal(b, a));
    if (span_equal(a, b) && span_equal(b, c)) CHECK(span_equal(a, c));
    CHECK(span_equal(a, b));
  }
}

TEST_CASE("galois_poly") {
  Extension L = make_shanks_cubic(1);
  MultiPoly F = P(L, "t*X + Y");
  CHECK(galois_poly(F, 1) == P(L, "(t^2 - 2*t - 2)*X + Y"));
  CHECK(galois_poly(F, 3) == F);
  CHECK(!F.is_base());
  CHECK(P(L, "X + (1/3)*Y").is_base());
}
