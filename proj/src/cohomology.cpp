#include "severi/cohomology.hpp"

#include <algorithm>
#include <random>

#include "severi/errors.hpp"

namespace severi {

Matrix twisted_product(const Matrix& X, int j) {
  if (!X.is_square()) throw Error(ErrorCode::ShapeMismatch, "cocycle values are square");
  Matrix acc = Matrix::identity(X.field(), X.rows());
  for (int i = 0; i < j; ++i) acc = acc * galois_matrix(X, i);
  return acc;
}

Cocycle make_cocycle(const Extension& L, const Matrix& at_generator, const Scalar& a) {
  if (det(at_generator).is_zero()) throw Error(ErrorCode::Singular, "cocycle value is not invertible");
  Matrix full = twisted_product(at_generator, L->degree());
  const ExtElement c = full(0, 0);
  if (c.is_zero() || full != Matrix::identity(L, full.rows()).scaled(c)) {
    throw Error(ErrorCode::InvalidInput, "twisted product of the cocycle value is not scalar");
  }
  Cocycle xi;
  xi.extension = L;
  xi.size = at_generator.rows();
  xi.at_generator = at_generator;
  xi.scalar_class = c;
  xi.a = L->base().reduce(a);
  xi.normalized = c.is_one();
  return xi;
}

Cocycle cyclic_cocycle(const Extension& L, const Scalar& a_in) {
  const Scalar a = L->base().reduce(a_in);
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroA, "a must be nonzero");
  const int N = L->degree();
  Matrix A(L, N, N);
  A(0, N - 1) = ExtElement::constant(L, a);
  for (int i = 1; i < N; ++i) A(i, i - 1) = ExtElement::from_int(L, 1);
  Cocycle xi = make_cocycle(L, A, a);
  xi.scale_exponents.assign(static_cast<std::size_t>(N), 0);
  xi.scale_exponents[0] = 1;
  xi.scalar_exponent = 1;
  return xi;
}

Cocycle lift_to_veronese(const Cocycle& xi) {
  if (!xi.at_generator.is_base()) {
    throw Error(ErrorCode::InvalidInput, "Veronese lift needs a cocycle with entries in k");
  }
  const int n = xi.extension->degree() - 1;
  if (xi.size != n + 1) throw Error(ErrorCode::ShapeMismatch, "cocycle size must equal the extension degree");
  MonomialBasis basis = monomial_basis(n, n + 1);
  Matrix B = induced_matrix(basis, xi.at_generator, xi.scalar_class);
  Cocycle lifted = make_cocycle(xi.extension, B, xi.a);
  if (!lifted.normalized) throw Error(ErrorCode::InternalDescentFailure, "normalized lift is not honest");
  if (!xi.scale_exponents.empty()) {
    // Row r is the monomial x^e in the rows of xi(sigma).
    for (const Exponent& e : basis.list) {
      int total = -xi.scalar_exponent;
      for (int i = 0; i <= n; ++i) total += e[std::size_t(i)] * xi.scale_exponents[std::size_t(i)];
      lifted.scale_exponents.push_back(total);
    }
  }
  return lifted;
}

namespace {

void require_honest(const Cocycle& xi) {
  if (!xi.normalized || !twisted_product(xi.at_generator, xi.extension->degree()).is_identity()) {
    throw Error(ErrorCode::NotHonestCocycle, "cocycle is not normalized (twisted product is not I)");
  }
}

Matrix random_matrix(const Extension& L, int size, std::mt19937_64& rng) {
  const BaseField& k = L->base();
  Matrix R(L, size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      std::vector<Scalar> c;
      for (int d = 0; d < L->degree(); ++d) {
        if (k.is_finite()) {
          c.push_back(Scalar(mpz_class(rng() % k.characteristic().get_ui())));
        } else {
          c.push_back(Scalar(static_cast<long>(rng() % 5) - 2));
        }
      }
      R(i, j) = ExtElement(L, std::move(c));
    }
  return R;
}

}  // namespace

Matrix split_with(const Cocycle& xi, const Matrix& R) {
  require_honest(xi);
  const int N = xi.extension->degree();
  Matrix M(xi.extension, xi.size, xi.size);
  Matrix value = Matrix::identity(xi.extension, xi.size);  // xi(sigma^j)
  for (int j = 0; j < N; ++j) {
    M = M + value * galois_matrix(R, j);
    value = value * galois_matrix(xi.at_generator, j);
  }
  if (det(M).is_zero()) throw Error(ErrorCode::Singular, "averaged matrix is singular");
  return M;
}

Matrix split_generic(const Cocycle& xi, int attempts, std::uint64_t seed) {
  require_honest(xi);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Matrix R = random_matrix(xi.extension, xi.size, rng);
    try {
      Matrix M = split_with(xi, R);
      if (!is_split(xi, M)) throw Error(ErrorCode::InternalDescentFailure, "Hilbert 90 residual is nonzero");
      return M;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular) throw;
    }
  }
  throw Error(ErrorCode::AllAttemptsSingular, "all " + std::to_string(attempts) +
                                                  " Hilbert 90 attempts were singular (seed " +
                                                  std::to_string(seed) + ")");
}

namespace {

/// Smallest-|e| exponent with a^e = s, searched in the order 0, 1, -1, 2, ...
std::optional<int> log_base(const ExtElement& s, const Scalar& a, int limit) {
  if (!s.is_base()) return std::nullopt;
  const Extension& L = s.field();
  const ExtElement A = ExtElement::constant(L, a);
  const ExtElement Ai = A.inverse();
  ExtElement up = ExtElement::from_int(L, 1), down = up;
  if (s == up) return 0;
  for (int e = 1; e <= limit; ++e) {
    up *= A;
    down *= Ai;
    if (s == up) return e;
    if (s == down) return -e;
  }
  return std::nullopt;
}

}  // namespace

Matrix split_structured(const Cocycle& xi, const NormalBasis& nb) {
  require_honest(xi);
  auto sp = as_scaled_permutation(xi.at_generator);
  if (!sp) throw Error(ErrorCode::NotMonomialCocycle, "cocycle value is not a scaled permutation");
  const Extension& L = xi.extension;
  const int N = L->degree();
  const int m = xi.size;
  if (static_cast<int>(nb.elements.size()) != N) throw Error(ErrorCode::ShapeMismatch, "normal basis length");
  // Row r of M obeys N_r = s_r sigma(N_{perm(r)}).
  Matrix M(L, m, m);
  std::vector<bool> done(std::size_t(m), false);
  // Exact exponents are used when they match the scales; otherwise logs.
  std::vector<int> exact;
  if (static_cast<int>(xi.scale_exponents.size()) == m) {
    exact = xi.scale_exponents;
    const ExtElement A = ExtElement::constant(L, xi.a);
    for (int r = 0; r < m && !exact.empty(); ++r) {
      if (A.pow(exact[std::size_t(r)]) != sp->scales[std::size_t(r)]) exact.clear();
    }
  }
  for (int r0 = 0; r0 < m; ++r0) {
    if (done[std::size_t(r0)]) continue;
    std::vector<int> orbit{r0};
    for (int r = sp->perm[std::size_t(r0)]; r != r0; r = sp->perm[std::size_t(r)]) orbit.push_back(r);
    const int k = static_cast<int>(orbit.size());
    if (N % k != 0) throw Error(ErrorCode::NotMonomialCocycle, "orbit length does not divide the degree");
    for (int r : orbit) done[std::size_t(r)] = true;
    std::vector<int> cols = orbit;
    std::sort(cols.begin(), cols.end());

    // Scale c = a^e keeps every row's a-power nonnegative with minimum 0.
    ExtElement c = ExtElement::from_int(L, 1);
    {
      ExtElement q = ExtElement::from_int(L, 1);
      int lowest = 0;
      int exponent_sum = 0;
      bool ok = true;
      for (int i = k - 1; i >= 1 && ok; --i) {
        const int row = orbit[std::size_t(i)];
        q *= sp->scales[std::size_t(row)];
        std::optional<int> e;
        if (exact.empty()) {
          e = log_base(q, xi.a, 4 * N * N);
        } else {
          exponent_sum += exact[std::size_t(row)];
          e = exponent_sum;
        }
        if (!e) ok = false;
        else lowest = std::min(lowest, *e);
      }
      if (ok && lowest < 0) c = ExtElement::constant(L, xi.a).pow(-lowest);
    }

    // v carries l_1..l_k on the orbit's columns; N_{r0} = sum_t T^t(c v)
    // with T the k-step return map, so that N_{r0} = T(N_{r0}).
    std::vector<ExtElement> v(static_cast<std::size_t>(m), ExtElement(L));
    for (int j = 0; j < k; ++j) v[std::size_t(cols[std::size_t(j)])] = nb.elements[std::size_t(j)] * c;
    auto step_back = [&](const std::vector<ExtElement>& next, int row) {
      std::vector<ExtElement> out(next.size(), ExtElement(L));
      const ExtElement& s = sp->scales[std::size_t(row)];
      for (std::size_t j = 0; j < next.size(); ++j) {
        if (!next[j].is_zero()) out[j] = s * galois_apply(next[j], 1);
      }
      return out;
    };
    auto T = [&](const std::vector<ExtElement>& x) {
      std::vector<ExtElement> y = x;
      for (int i = k - 1; i >= 0; --i) y = step_back(y, orbit[std::size_t(i)]);
      return y;
    };
    std::vector<ExtElement> row0 = v;
    if (k == 1 && sp->scales[std::size_t(r0)].is_one()) {
      // A fixed monomial with trivial scale gets the unit row.
      row0[std::size_t(r0)] = ExtElement::from_int(L, 1);
    } else if (k < N) {
      std::vector<ExtElement> term = v;
      for (int t = 1; t < N / k; ++t) {
        term = T(term);
        for (int j = 0; j < m; ++j) row0[std::size_t(j)] += term[std::size_t(j)];
      }
    }
    std::vector<std::vector<ExtElement>> rows(static_cast<std::size_t>(k));
    rows[0] = row0;
    std::vector<ExtElement> next = row0;
    for (int i = k - 1; i >= 1; --i) {
      next = step_back(next, orbit[std::size_t(i)]);
      rows[std::size_t(i)] = next;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < m; ++j) M(orbit[std::size_t(i)], j) = rows[std::size_t(i)][std::size_t(j)];
  }
  if (!is_split(xi, M)) throw Error(ErrorCode::InternalDescentFailure, "structured split failed to verify");
  return M;
}

bool is_split(const Cocycle& xi, const Matrix& M) {
  if (M.rows() != xi.size || !M.is_square()) return false;
  if (xi.at_generator * galois_matrix(M, 1) != M) return false;
  return !det(M).is_zero();
}

Coboundary coboundary_from_witness(const Extension& L, const Scalar& a_in, const ExtElement& lambda,
                                  std::uint64_t seed) {
  const Scalar a = L->base().reduce(a_in);
  Cocycle xi = cyclic_cocycle(L, a);
  if (lambda.is_zero() || norm(lambda) != a) {
    throw Error(ErrorCode::NotAWitness, "norm(" + lambda.to_string() + ") = " + scalar_to_string(norm(lambda)) +
                                            " differs from a = " + scalar_to_string(a));
  }
  Cocycle honest = make_cocycle(L, xi.at_generator.scaled(lambda.inverse()), a);
  Matrix P = split_generic(honest, 32, seed);
  if (xi.at_generator * galois_matrix(P, 1) != P.scaled(lambda)) {
    throw Error(ErrorCode::InternalDescentFailure, "coboundary failed to verify");
  }
  return Coboundary{P, lambda};
}

}  // namespace severi
