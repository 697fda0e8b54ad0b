#pragma once

#include <string>
#include <vector>

#include "severi/extension.hpp"

namespace severi {

/// A finite-dimensional k-algebra given by structure constants:
/// b_i b_j = sum_k table[(i dim + j) dim + k] b_k.
struct StructureConstants {
  BaseField k = BaseField::rationals();
  int dim = 0;
  std::vector<Scalar> table;

  const Scalar& at(int i, int j, int l) const {
    return table[(std::size_t(i) * std::size_t(dim) + std::size_t(j)) * std::size_t(dim) + std::size_t(l)];
  }
  Scalar& at(int i, int j, int l) {
    return table[(std::size_t(i) * std::size_t(dim) + std::size_t(j)) * std::size_t(dim) + std::size_t(l)];
  }
};

using AlgebraVector = std::vector<Scalar>;

/// Bilinear product through the table. Throws LengthMismatch.
AlgebraVector multiply(const StructureConstants& S, const AlgebraVector& x, const AlgebraVector& y);

/// (b_i b_j) b_l = b_i (b_j b_l) on all basis triples.
bool is_associative(const StructureConstants& S);

/// Dimension over k of {x : x g = g x for every g in generators}; the basis
/// vectors are used when generators is empty.
int center_dimension(const StructureConstants& S, const std::vector<AlgebraVector>& generators = {});

/// The cyclic algebra (L/k, chi, a): basis theta^i e^j at index j N + i,
/// e lambda = sigma'(lambda) e with chi(sigma') = 1, and e^N = a.
struct CyclicAlgebra {
  Extension extension;
  Scalar a;
  int dim = 0;
  std::vector<std::string> labels;
  StructureConstants constants;

  int index(int i, int j) const { return j * extension->degree() + i; }
  /// lambda e^j as a coordinate vector.
  AlgebraVector embed(const ExtElement& lambda, int j = 0) const;
  AlgebraVector theta() const;
  AlgebraVector e() const;
  AlgebraVector one() const;
};

/// Builds the table and verifies e lambda = sigma'(lambda) e on the power
/// basis, e^N = a, associativity and a one-dimensional center. Throws ZeroA.
CyclicAlgebra build_algebra(const Extension& L, const Scalar& a);

AlgebraVector multiply(const CyclicAlgebra& A, const AlgebraVector& x, const AlgebraVector& y);

/// Center computed from the commutators with theta and e.
int center_dimension(const CyclicAlgebra& A);

/// Rank of y -> x y.
int left_multiplication_rank(const StructureConstants& S, const AlgebraVector& x);

/// lambda^-1 e - 1, a zero divisor when norm(lambda) = a.
AlgebraVector split_zero_divisor(const CyclicAlgebra& A, const ExtElement& lambda);

/// L + L + ... (N copies) with componentwise product, over k; commutative.
StructureConstants direct_sum_algebra(const Extension& L, int copies);

}  // namespace severi
