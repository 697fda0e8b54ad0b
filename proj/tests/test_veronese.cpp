#include <doctest.h>

#include <random>
#include <set>

#include "severi/errors.hpp"
#include "severi/veronese.hpp"
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
    for (int j = 0; j < n; ++j) A(i, j) = test_support::random_element(L, rng, 2);
  return A;
}

std::string word(const Exponent& e) {
  const char* names = "XYZ";
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += std::string(std::size_t(e[i]), names[i]);
  return s;
}

}  // namespace

TEST_CASE("monomial bases") {
  MonomialBasis b = monomial_basis(2, 3);
  std::vector<std::string> words;
  for (const auto& e : b.list) words.push_back(word(e));
  CHECK(words == std::vector<std::string>{"XXX", "XXY", "XXZ", "XYY", "XYZ", "XZZ", "YYY", "YYZ", "YZZ", "ZZZ"});
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(b.m() == 10);
  CHECK(b.pure_power(0) == 0);
  CHECK(b.pure_power(1) == 6);
  CHECK(b.pure_power(2) == 9);
  CHECK(b.index_of({1, 1, 1}) == 4);
  CHECK(b.index_of({4, 0, 0}) == -1);
  CHECK(monomial_basis(1, 2).list == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(monomial_basis(3, 4).m() == 35);
  for (int n = 1; n <= 4; ++n) CHECK(monomial_basis(n, n + 1).m() == binomial(2 * n + 1, n));
}

TEST_CASE("veronese points") {
  Extension L = make_shanks_cubic(1);
  MonomialBasis b = monomial_basis(2, 3);
  const ExtElement one = ExtElement::from_int(L, 1), zero(L);
  auto v = veronese_point(b, {one, zero, zero});
  CHECK(v[0].is_one());
  for (int i = 1; i < 10; ++i) CHECK(v[std::size_t(i)].is_zero());
  for (const auto& x : veronese_point(b, {one, one, one})) CHECK(x.is_one());
  CHECK(error_code_of([&] { veronese_point(b, {zero, zero, zero}); }) == ErrorCode::ZeroPoint);

  Extension F8 = make_finite_extension(2, 3);
  std::set<std::vector<std::vector<Scalar>>> images;
  for (int c = 1; c < 8; ++c) {
    std::vector<ExtElement> pt{ExtElement::from_int(F8, c & 1), ExtElement::from_int(F8, (c >> 1) & 1),
                               ExtElement::from_int(F8, (c >> 2) & 1)};
    std::vector<std::vector<Scalar>> img;
    for (const auto& x : veronese_point(b, pt)) img.push_back(x.coords());
    images.insert(img);
  }
  CHECK(images.size() == 7);
}

TEST_CASE("induced matrices") {
  Extension L = make_shanks_cubic(1);
  MonomialBasis b = monomial_basis(2, 3);
  const ExtElement one = ExtElement::from_int(L, 1), two = ExtElement::from_int(L, 2);
  CHECK(induced_matrix(b, Matrix::identity(L, 3), one).is_identity());

  Matrix B = induced_matrix(b, companion(L, 2, 2), two);
  auto sp = as_scaled_permutation(B);
  REQUIRE(sp);
  CHECK(sp->perm[0] == 9);
  CHECK(sp->scales[0] == ExtElement::from_int(L, 4));
  CHECK(sp->perm[4] == 4);
  CHECK(sp->scales[4].is_one());
  CHECK(power(B, 3).is_identity());
  CHECK(power(induced_matrix(b, companion(L, 2, 2), one), 3) ==
        Matrix::identity(L, 10).scaled(ExtElement::from_int(L, 8)));

  Matrix S(L, 3, 3);
  CHECK(error_code_of([&] { induced_matrix(b, S, one); }) == ErrorCode::Singular);

  // n = 3: the normalized lift of A_sigma has order 4
  MonomialBasis b3 = monomial_basis(3, 4);
  CHECK(power(induced_matrix(b3, companion(L, 5, 3), ExtElement::from_int(L, 5)), 4).is_identity());
}

TEST_CASE("induced matrix properties") {
  std::mt19937_64 rng(4);
  for (const Extension& L : {make_shanks_cubic(1), make_finite_extension(7, 3)}) {
    MonomialBasis b = monomial_basis(2, 3);
    const ExtElement one = ExtElement::from_int(L, 1);
    std::vector<MultiPoly> ver = veronese_coordinates(L, b);
    for (int s = 0; s < 3; ++s) {
      Matrix A = random_matrix(L, rng, 3);
      Matrix C = random_matrix(L, rng, 3);
      if (det(A).is_zero() || det(C).is_zero()) continue;
      Matrix IA = induced_matrix(b, A, one);
      CHECK(induced_matrix(b, A * C, one) == IA * induced_matrix(b, C, one));
      // Ver(A x) = IA Ver(x) as polynomial vectors
      std::vector<MultiPoly> lhs;
      for (const auto& w : ver) lhs.push_back(substitute_linear(w, A));
      for (int r = 0; r < b.m(); ++r) {
        MultiPoly rhs(L, 3);
        for (int c = 0; c < b.m(); ++c) rhs += ver[std::size_t(c)].scaled(IA(r, c));
        CHECK(lhs[std::size_t(r)] == rhs);
      }
    }
  }
}

TEST_CASE("veronese ideal") {
  Extension L = make_shanks_cubic(1);
  MonomialBasis b = monomial_basis(2, 3);
  auto Q = veronese_ideal(L, b);
  CHECK(Q.size() == 27);
  CHECK(binomial(11, 2) - binomial(8, 2) == 27);
  CHECK(span_basis(Q).size() == 27);
  MultiPoly target = parse_poly(L, "w0*w6 - w1*w3", omega_names(10));
  CHECK(std::find(Q.begin(), Q.end(), target) != Q.end());
  std::vector<MultiPoly> ver = veronese_coordinates(L, b);
  for (const auto& q : Q) CHECK(substitute(q, ver).is_zero());

  MonomialBasis conic = monomial_basis(1, 2);
  auto Qc = veronese_ideal(L, conic);
  REQUIRE(Qc.size() == 1);
  CHECK(Qc[0] == parse_poly(L, "w0*w2 - w1^2", omega_names(3)));

  MonomialBasis b3 = monomial_basis(3, 4);
  auto Q3 = veronese_ideal(L, b3);
  CHECK(static_cast<long>(Q3.size()) == binomial(36, 2) - binomial(11, 3));
  std::vector<MultiPoly> ver3 = veronese_coordinates(L, b3);
  for (std::size_t i = 0; i < Q3.size(); i += 37) CHECK(substitute(Q3[i], ver3).is_zero());
}

TEST_CASE("canonical embedding") {
  CHECK(canonical_embedding(6).m() == 10);
  CHECK(canonical_embedding(6).degree == 3);
  CHECK(canonical_embedding(4).m() == 3);
  CHECK(canonical_embedding(5).m() == 6);
  for (int d = 4; d <= 9; ++d) CHECK(canonical_embedding(d).m() == (d - 1) * (d - 2) / 2);
  CHECK(error_code_of([] { canonical_embedding(3); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("parametrization map") {
  Extension L = make_shanks_cubic(1);
  MonomialBasis b = monomial_basis(2, 3);
  std::mt19937_64 rng(2);
  Matrix P = random_matrix(L, rng, 10);
  ParametrizationMap phi{b, P};
  std::vector<ExtElement> x{ExtElement::generator(L), ExtElement::from_int(L, 2), ExtElement::from_int(L, -1)};
  auto sym = phi.symbolic(L);
  auto num = phi.apply(x);
  for (int i = 0; i < 10; ++i) CHECK(evaluate(sym[std::size_t(i)], x) == num[std::size_t(i)]);
}
