#pragma once

#include <map>
#include <optional>
#include <vector>

#include "severi/matrix.hpp"
#include "severi/multipoly.hpp"

namespace severi {

/// Degree-`degree` monomials in X0..Xn, in alphabetical order
/// (lexicographically descending exponent vectors: X0^d first, Xn^d last).
struct MonomialBasis {
  int n = 0;
  int degree = 0;
  std::vector<Exponent> list;

  int m() const { return static_cast<int>(list.size()); }
  /// Position of an exponent vector; -1 when absent.
  int index_of(const Exponent& e) const;
  /// Index of the pure power X_i^degree.
  int pure_power(int i) const;
};

MonomialBasis monomial_basis(int n, int degree);

/// C(a, b) for small arguments.
long binomial(int a, int b);

/// Every monomial evaluated at the point; throws ZeroPoint.
std::vector<ExtElement> veronese_point(const MonomialBasis& basis, const std::vector<ExtElement>& point);
/// Every monomial evaluated on polynomial inputs.
std::vector<MultiPoly> veronese_poly(const MonomialBasis& basis, const std::vector<MultiPoly>& forms);
/// veronese_poly of the coordinate variables X0..Xn over L.
std::vector<MultiPoly> veronese_coordinates(const Extension& L, const MonomialBasis& basis);

/// The B with Ver(A x) = B Ver(x), divided by normalize_by. Throws Singular.
Matrix induced_matrix(const MonomialBasis& basis, const Matrix& A, const ExtElement& normalize_by);

/// The Veronese map followed by an optional invertible m x m matrix.
struct ParametrizationMap {
  MonomialBasis basis;
  std::optional<Matrix> post_compose;

  std::vector<ExtElement> apply(const std::vector<ExtElement>& point) const;
  /// Coordinate polynomials in X0..Xn.
  std::vector<MultiPoly> symbolic(const Extension& L) const;
};

/// Basis of the quadrics in w0..w{m-1} vanishing on the Veronese image:
/// exponent pairs grouped by their sum, first pair minus each other pair.
std::vector<MultiPoly> veronese_ideal(const Extension& L, const MonomialBasis& basis);

/// Ver_{d-3} on the plane: the canonical embedding of a smooth plane curve
/// of degree d. Throws DegreeTooSmall for d < 4.
MonomialBasis canonical_embedding(int plane_curve_degree);

}  // namespace severi
