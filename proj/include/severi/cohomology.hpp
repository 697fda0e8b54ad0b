#pragma once

#include <cstdint>

#include "severi/matrix.hpp"
#include "severi/veronese.hpp"

namespace severi {

/// A 1-cocycle of Gal(L/k) = <sigma>, determined by xi(sigma).
struct Cocycle {
  Extension extension;
  int size = 0;
  /// xi(sigma).
  Matrix at_generator;
  /// c with xi(sigma) sigma(xi(sigma)) ... sigma^n(xi(sigma)) = c I.
  ExtElement scalar_class;
  /// The cyclic-algebra parameter this cocycle was built from.
  Scalar a;
  /// scalar_class == 1.
  bool normalized = false;
  /// When known: xi(sigma) is a scaled permutation whose row r is scaled by
  /// a^scale_exponents[r] exactly, and scalar_class = a^scalar_exponent.
  std::vector<int> scale_exponents;
  int scalar_exponent = 0;
};

/// X sigma(X) ... sigma^(j-1)(X), i.e. the cocycle value at sigma^j; j = 0 gives I.
Matrix twisted_product(const Matrix& X, int j);

/// Validates invertibility and that the full twisted product is scalar.
Cocycle make_cocycle(const Extension& L, const Matrix& at_generator, const Scalar& a);

/// A_sigma: a in the top-right corner, 1 on the subdiagonal, so
/// A_sigma x = (a x_n, x_0, ..., x_{n-1}). Throws ZeroA.
Cocycle cyclic_cocycle(const Extension& L, const Scalar& a);

/// Induced action on the degree-(n+1) monomials, divided by scalar_class so
/// the result is an honest cocycle. Requires entries in k.
Cocycle lift_to_veronese(const Cocycle& xi);

/// M = sum_j xi(sigma^j) sigma^j(R) for the given R; throws Singular when
/// det M = 0, NotHonestCocycle unless xi is normalized.
Matrix split_with(const Cocycle& xi, const Matrix& R);

/// Hilbert 90 averaging with pseudo-random R (entries of height <= 2 over Q,
/// uniform over F_p) drawn from mt19937_64(seed); retries up to `attempts`
/// times. The result satisfies xi(sigma) sigma(M) = M exactly.
/// Throws AllAttemptsSingular or NotHonestCocycle.
Matrix split_generic(const Cocycle& xi, int attempts = 32, std::uint64_t seed = 0);

/// Deterministic split of a monomial cocycle from a normal basis: every
/// orbit of the monomial permutation gets a circulant block in l_1..l_N with
/// exact scalar factors; fixed monomials get unit rows. Throws NotMonomialCocycle.
Matrix split_structured(const Cocycle& xi_lift, const NormalBasis& nb);

/// True iff xi(sigma) sigma(M) = M and M is invertible.
bool is_split(const Cocycle& xi, const Matrix& M);

/// A_sigma = lambda P sigma(P)^-1, the projective split obtained from a norm
/// witness lambda (norm(lambda) = a).
struct Coboundary {
  Matrix P;
  ExtElement lambda;
};

/// Splits lambda^-1 A_sigma (an honest cocycle) by split_generic and returns
/// its splitting matrix; verified as A_sigma sigma(P) = lambda P before
/// returning. Throws NotAWitness.
Coboundary coboundary_from_witness(const Extension& L, const Scalar& a, const ExtElement& lambda,
                                  std::uint64_t seed = 0);

}  // namespace severi
