#include "severi/veronese.hpp"

#include <algorithm>
#include <functional>

#include "severi/errors.hpp"

namespace severi {

int MonomialBasis::index_of(const Exponent& e) const {
  auto it = std::lower_bound(list.begin(), list.end(), e, std::greater<Exponent>());
  if (it == list.end() || *it != e) return -1;
  return static_cast<int>(it - list.begin());
}

int MonomialBasis::pure_power(int i) const {
  Exponent e(static_cast<std::size_t>(n + 1), 0);
  e[std::size_t(i)] = degree;
  return index_of(e);
}

MonomialBasis monomial_basis(int n, int degree) {
  if (n < 1 || degree < 1) throw Error(ErrorCode::InvalidInput, "monomial basis needs n >= 1 and degree >= 1");
  MonomialBasis b;
  b.n = n;
  b.degree = degree;
  Exponent e(static_cast<std::size_t>(n + 1), 0);
  // Recursion with the leading variable taking its largest exponent first
  // yields lexicographically descending order directly.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      e[std::size_t(i)] = left;
      b.list.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[std::size_t(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return b;
}

long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::vector<ExtElement> veronese_point(const MonomialBasis& basis, const std::vector<ExtElement>& point) {
  if (static_cast<int>(point.size()) != basis.n + 1) throw Error(ErrorCode::ShapeMismatch, "point length");
  if (std::all_of(point.begin(), point.end(), [](const ExtElement& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::ZeroPoint, "the zero vector is not a projective point");
  }
  std::vector<ExtElement> out;
  out.reserve(basis.list.size());
  for (const auto& e : basis.list) {
    ExtElement v = ExtElement::from_int(point.front().field(), 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) v *= point[i].pow(e[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<MultiPoly> veronese_poly(const MonomialBasis& basis, const std::vector<MultiPoly>& forms) {
  if (static_cast<int>(forms.size()) != basis.n + 1) throw Error(ErrorCode::ShapeMismatch, "form count");
  const Extension& L = forms.front().field();
  const int nv = forms.front().nvars();
  // powers[i][k] = forms[i]^k
  std::vector<std::vector<MultiPoly>> powers(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    powers[i].push_back(MultiPoly::constant(L, nv, ExtElement::from_int(L, 1)));
    for (int k = 1; k <= basis.degree; ++k) powers[i].push_back(powers[i].back() * forms[i]);
  }
  std::vector<MultiPoly> out;
  for (const auto& e : basis.list) {
    MultiPoly v = powers[0][std::size_t(e[0])];
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] > 0) v = v * powers[i][std::size_t(e[i])];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<MultiPoly> veronese_coordinates(const Extension& L, const MonomialBasis& basis) {
  std::vector<MultiPoly> vars;
  for (int i = 0; i <= basis.n; ++i) vars.push_back(MultiPoly::variable(L, basis.n + 1, i));
  return veronese_poly(basis, vars);
}

Matrix induced_matrix(const MonomialBasis& basis, const Matrix& A, const ExtElement& normalize_by) {
  if (!A.is_square() || A.rows() != basis.n + 1) throw Error(ErrorCode::ShapeMismatch, "matrix size must be n+1");
  if (det(A).is_zero()) throw Error(ErrorCode::Singular, "induced matrix of a singular matrix");
  if (normalize_by.is_zero()) throw Error(ErrorCode::InvalidInput, "normalization by zero");
  const Extension& L = A.field();
  std::vector<MultiPoly> rows;
  for (int i = 0; i <= basis.n; ++i) {
    std::vector<ExtElement> r;
    for (int j = 0; j <= basis.n; ++j) r.push_back(A(i, j));
    rows.push_back(MultiPoly::linear_form(L, r));
  }
  std::vector<MultiPoly> images = veronese_poly(basis, rows);
  const ExtElement inv = normalize_by.inverse();
  Matrix B(L, basis.m(), basis.m());
  for (int r = 0; r < basis.m(); ++r) {
    for (const auto& [e, c] : images[std::size_t(r)].terms()) {
      B(r, basis.index_of(e)) = c * inv;
    }
  }
  return B;
}

std::vector<ExtElement> ParametrizationMap::apply(const std::vector<ExtElement>& point) const {
  std::vector<ExtElement> v = veronese_point(basis, point);
  return post_compose ? post_compose->apply(v) : v;
}

std::vector<MultiPoly> ParametrizationMap::symbolic(const Extension& L) const {
  std::vector<MultiPoly> v = veronese_coordinates(L, basis);
  if (!post_compose) return v;
  const Matrix& P = *post_compose;
  std::vector<MultiPoly> out;
  for (int i = 0; i < P.rows(); ++i) {
    MultiPoly acc(L, basis.n + 1);
    for (int j = 0; j < P.cols(); ++j) {
      if (!P(i, j).is_zero()) acc += v[std::size_t(j)].scaled(P(i, j));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<MultiPoly> veronese_ideal(const Extension& L, const MonomialBasis& basis) {
  const int m = basis.m();
  // sum exponent -> index pairs (i <= j) in discovery order
  std::map<Exponent, std::vector<std::pair<int, int>>, TermOrder> groups;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      Exponent s = basis.list[std::size_t(i)];
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += basis.list[std::size_t(j)][k];
      groups[s].emplace_back(i, j);
    }
  }
  const ExtElement one = ExtElement::from_int(L, 1);
  auto quad = [&](int i, int j) {
    Exponent e(static_cast<std::size_t>(m), 0);
    e[std::size_t(i)] += 1;
    e[std::size_t(j)] += 1;
    return MultiPoly::monomial(L, e, one);
  };
  std::vector<MultiPoly> out;
  for (const auto& [s, pairs] : groups) {
    const MultiPoly lead = quad(pairs.front().first, pairs.front().second);
    for (std::size_t k = 1; k < pairs.size(); ++k) out.push_back(lead - quad(pairs[k].first, pairs[k].second));
  }
  return out;
}

MonomialBasis canonical_embedding(int plane_curve_degree) {
  if (plane_curve_degree < 4) {
    throw Error(ErrorCode::DegreeTooSmall, "canonical embedding needs a plane curve of degree at least 4");
  }
  return monomial_basis(2, plane_curve_degree - 3);
}

}  // namespace severi
