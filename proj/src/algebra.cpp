#include "severi/algebra.hpp"

#include "severi/errors.hpp"
#include "severi/scalar_linalg.hpp"

namespace severi {

AlgebraVector multiply(const StructureConstants& S, const AlgebraVector& x, const AlgebraVector& y) {
  if (static_cast<int>(x.size()) != S.dim || static_cast<int>(y.size()) != S.dim) {
    throw Error(ErrorCode::LengthMismatch, "vectors must have length " + std::to_string(S.dim));
  }
  const BaseField& k = S.k;
  AlgebraVector out(static_cast<std::size_t>(S.dim), Scalar(0));
  for (int i = 0; i < S.dim; ++i) {
    if (k.is_zero(x[std::size_t(i)])) continue;
    for (int j = 0; j < S.dim; ++j) {
      if (k.is_zero(y[std::size_t(j)])) continue;
      const Scalar c = k.mul(x[std::size_t(i)], y[std::size_t(j)]);
      for (int l = 0; l < S.dim; ++l) {
        const Scalar& s = S.at(i, j, l);
        if (!k.is_zero(s)) out[std::size_t(l)] = k.add(out[std::size_t(l)], k.mul(c, s));
      }
    }
  }
  return out;
}

namespace {

AlgebraVector basis_vector(int dim, int i) {
  AlgebraVector v(static_cast<std::size_t>(dim), Scalar(0));
  v[std::size_t(i)] = 1;
  return v;
}

AlgebraVector subtract(const BaseField& k, const AlgebraVector& x, const AlgebraVector& y) {
  AlgebraVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = k.sub(x[i], y[i]);
  return out;
}

}  // namespace

bool is_associative(const StructureConstants& S) {
  std::vector<AlgebraVector> basis;
  for (int i = 0; i < S.dim; ++i) basis.push_back(basis_vector(S.dim, i));
  std::vector<std::vector<AlgebraVector>> prod(static_cast<std::size_t>(S.dim));
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) prod[std::size_t(i)].push_back(multiply(S, basis[std::size_t(i)], basis[std::size_t(j)]));
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j)
      for (int l = 0; l < S.dim; ++l) {
        if (multiply(S, prod[std::size_t(i)][std::size_t(j)], basis[std::size_t(l)]) !=
            multiply(S, basis[std::size_t(i)], prod[std::size_t(j)][std::size_t(l)])) {
          return false;
        }
      }
  return true;
}

int center_dimension(const StructureConstants& S, const std::vector<AlgebraVector>& generators_in) {
  std::vector<AlgebraVector> generators = generators_in;
  if (generators.empty()) {
    for (int i = 0; i < S.dim; ++i) generators.push_back(basis_vector(S.dim, i));
  }
  // Column r of the system is the commutator [b_r, g].
  std::vector<ScalarRow> rows;
  for (const auto& g : generators) {
    std::vector<AlgebraVector> columns;
    for (int r = 0; r < S.dim; ++r) {
      const AlgebraVector b = basis_vector(S.dim, r);
      columns.push_back(subtract(S.k, multiply(S, b, g), multiply(S, g, b)));
    }
    for (int l = 0; l < S.dim; ++l) {
      ScalarRow row;
      for (int r = 0; r < S.dim; ++r) row.push_back(columns[std::size_t(r)][std::size_t(l)]);
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(nullspace_base(S.k, rows, S.dim).size());
}

int left_multiplication_rank(const StructureConstants& S, const AlgebraVector& x) {
  std::vector<ScalarRow> rows;
  for (int r = 0; r < S.dim; ++r) rows.push_back(multiply(S, x, basis_vector(S.dim, r)));
  return rank_base(S.k, rows);
}

AlgebraVector CyclicAlgebra::embed(const ExtElement& lambda, int j) const {
  AlgebraVector v(static_cast<std::size_t>(dim), Scalar(0));
  const int N = extension->degree();
  for (int i = 0; i < N; ++i) v[std::size_t(index(i, j))] = lambda.coords()[std::size_t(i)];
  return v;
}

AlgebraVector CyclicAlgebra::theta() const { return embed(ExtElement::generator(extension)); }
AlgebraVector CyclicAlgebra::e() const { return embed(ExtElement::from_int(extension, 1), 1 % extension->degree()); }
AlgebraVector CyclicAlgebra::one() const { return embed(ExtElement::from_int(extension, 1)); }

AlgebraVector multiply(const CyclicAlgebra& A, const AlgebraVector& x, const AlgebraVector& y) {
  return multiply(A.constants, x, y);
}

int center_dimension(const CyclicAlgebra& A) { return center_dimension(A.constants, {A.theta(), A.e()}); }

CyclicAlgebra build_algebra(const Extension& L, const Scalar& a_in) {
  const BaseField& k = L->base();
  const Scalar a = k.reduce(a_in);
  if (k.is_zero(a)) throw Error(ErrorCode::ZeroA, "a must be nonzero");
  const int N = L->degree();
  const int sp = L->sigma_prime_power();
  CyclicAlgebra A;
  A.extension = L;
  A.a = a;
  A.dim = N * N;
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) {
      std::string label = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      std::string ej = j == 0 ? "" : (j == 1 ? "e" : "e^" + std::to_string(j));
      label = label.empty() && ej.empty() ? "1" : label + (label.empty() || ej.empty() ? "" : "*") + ej;
      A.labels.push_back(label);
    }
  A.constants.k = k;
  A.constants.dim = A.dim;
  A.constants.table.assign(std::size_t(A.dim) * std::size_t(A.dim) * std::size_t(A.dim), Scalar(0));
  const ExtElement t = ExtElement::generator(L);
  std::vector<ExtElement> powers;
  for (int i = 0; i < N; ++i) powers.push_back(t.pow(i));
  // (t^i e^j)(t^r e^l) = t^i sigma'^j(t^r) e^(j+l), with e^N = a.
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i)
      for (int l = 0; l < N; ++l)
        for (int r = 0; r < N; ++r) {
          ExtElement c = powers[std::size_t(i)] * galois_apply(powers[std::size_t(r)], (sp * j) % N);
          int power = j + l;
          if (power >= N) {
            power -= N;
            c = c.scaled(a);
          }
          for (int s = 0; s < N; ++s) {
            A.constants.at(A.index(i, j), A.index(r, l), A.index(s, power)) = k.reduce(c.coords()[std::size_t(s)]);
          }
        }

  const AlgebraVector e = A.e();
  for (int r = 0; r < N; ++r) {
    const AlgebraVector lhs = multiply(A, e, A.embed(powers[std::size_t(r)]));
    const AlgebraVector rhs = multiply(A, A.embed(galois_apply(powers[std::size_t(r)], sp % N)), e);
    if (lhs != rhs) throw Error(ErrorCode::InternalDescentFailure, "e lambda = sigma'(lambda) e fails");
  }
  AlgebraVector ep = A.one();
  for (int j = 0; j < N; ++j) ep = multiply(A, ep, e);
  if (ep != A.embed(ExtElement::constant(L, a))) throw Error(ErrorCode::InternalDescentFailure, "e^N differs from a");
  if (!is_associative(A.constants)) throw Error(ErrorCode::InternalDescentFailure, "table is not associative");
  if (center_dimension(A) != 1) throw Error(ErrorCode::InternalDescentFailure, "center is not k");
  return A;
}

AlgebraVector split_zero_divisor(const CyclicAlgebra& A, const ExtElement& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroInput, "witness must be nonzero");
  AlgebraVector u = A.embed(lambda.inverse(), 1 % A.extension->degree());
  return subtract(A.constants.k, u, A.one());
}

StructureConstants direct_sum_algebra(const Extension& L, int copies) {
  const int N = L->degree();
  StructureConstants S;
  S.k = L->base();
  S.dim = copies * N;
  S.table.assign(std::size_t(S.dim) * std::size_t(S.dim) * std::size_t(S.dim), Scalar(0));
  const ExtElement t = ExtElement::generator(L);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < N; ++i)
      for (int r = 0; r < N; ++r) {
        const ExtElement p = t.pow(i + r);
        for (int s = 0; s < N; ++s) S.at(c * N + i, c * N + r, c * N + s) = S.k.reduce(p.coords()[std::size_t(s)]);
      }
  return S;
}

}  // namespace severi
