#include "severi/scalar_linalg.hpp"

#include <cstdint>

namespace severi {

namespace {

std::int64_t inv_mod(std::int64_t x, std::int64_t p) {
  std::int64_t r = 1, b = x % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Same elimination on machine words; valid for p < 2^31.
std::vector<int> rref_mod_p(std::int64_t p, std::vector<ScalarRow>& rows) {
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::int64_t>> w(rows.size(), std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = rows[i][j].get_num().get_si();
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < w.size(); ++c) {
    std::size_t piv = r;
    while (piv < w.size() && w[piv][c] == 0) ++piv;
    if (piv == w.size()) continue;
    std::swap(w[r], w[piv]);
    const std::int64_t inv = inv_mod(w[r][c], p);
    for (std::size_t j = c; j < cols; ++j) w[r][j] = w[r][j] * inv % p;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == r || w[i][c] == 0) continue;
      const std::int64_t f = p - w[i][c];
      auto& row = w[i];
      const auto& prow = w[r];
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = (row[j] + f * prow[j]) % p;
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) rows[i][j] = Scalar(static_cast<long>(w[i][j]));
  return pivots;
}

}  // namespace

std::vector<int> rref_base(const BaseField& k, std::vector<ScalarRow>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  if (k.is_finite() && k.characteristic() < (mpz_class(1) << 31)) {
    for (auto& row : rows)
      for (auto& v : row) v = k.reduce(v);
    return rref_mod_p(k.characteristic().get_si(), rows);
  }
  const int cols = static_cast<int>(rows.front().size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && k.is_zero(rows[piv][std::size_t(c)])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = k.inv(rows[r][std::size_t(c)]);
    for (auto& v : rows[r]) v = k.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Scalar f = rows[i][std::size_t(c)];
      if (k.is_zero(f)) continue;
      for (int j = c; j < cols; ++j) {
        rows[i][std::size_t(j)] = k.sub(rows[i][std::size_t(j)], k.mul(f, rows[r][std::size_t(j)]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank_base(const BaseField& k, std::vector<ScalarRow> rows) {
  return static_cast<int>(rref_base(k, rows).size());
}

std::vector<ScalarRow> nullspace_base(const BaseField& k, std::vector<ScalarRow> rows, int cols) {
  std::vector<int> pivots = rref_base(k, rows);
  std::vector<bool> is_pivot(std::size_t(cols), false);
  for (int p : pivots) is_pivot[std::size_t(p)] = true;
  std::vector<ScalarRow> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    ScalarRow v(std::size_t(cols), Scalar(0));
    v[std::size_t(free)] = k.from_int(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[std::size_t(pivots[i])] = k.neg(rows[i][std::size_t(free)]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace severi
