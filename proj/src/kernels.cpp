#include "severi/kernels.hpp"

#include <algorithm>

#include "severi/errors.hpp"

namespace severi {

ModPSystem to_mod_p(const std::vector<MultiPoly>& polys) {
  ModPSystem S;
  if (polys.empty()) return S;
  const BaseField& k = polys.front().field()->base();
  if (!k.is_finite() || k.characteristic() > 1000000) {
    throw Error(ErrorCode::InvalidInput, "point counting needs a small prime base field");
  }
  S.p = k.characteristic().get_si();
  S.nvars = polys.front().nvars();
  for (const auto& F : polys) {
    if (!F.is_base()) throw Error(ErrorCode::InvalidInput, "equations must have coefficients in k");
    std::vector<ModPSystem::Term> terms;
    for (const auto& [e, c] : F.terms()) {
      terms.push_back({k.reduce(c.base_value()).get_num().get_si(), e});
    }
    S.polys.push_back(std::move(terms));
  }
  return S;
}

std::int64_t evaluate_mod_p(const std::vector<ModPSystem::Term>& poly, const Point& x, std::int64_t p) {
  std::int64_t acc = 0;
  for (const auto& t : poly) {
    std::int64_t v = t.coeff;
    for (std::size_t i = 0; i < x.size() && v != 0; ++i) {
      for (int e = 0; e < t.exponent[i]; ++e) v = v * x[i] % p;
    }
    acc = (acc + v) % p;
  }
  return acc;
}

namespace {

/// The r-th vector of F_p^n in base-p digits; nullopt unless normalized.
bool decode_normalized(std::int64_t r, std::int64_t p, int n, Point& out) {
  out.assign(std::size_t(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    out[std::size_t(i)] = r % p;
    r /= p;
  }
  for (int i = 0; i < n; ++i) {
    if (out[std::size_t(i)] != 0) return out[std::size_t(i)] == 1;
  }
  return false;
}

bool all_vanish(const ModPSystem& S, const Point& x) {
  for (const auto& F : S.polys) {
    if (evaluate_mod_p(F, x, S.p) != 0) return false;
  }
  return true;
}

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<Point> projective_zeros(const ModPSystem& S, Exec exec) {
  std::int64_t total = 1;
  for (int i = 0; i < S.nvars; ++i) total *= S.p;
  std::vector<Point> out;
  if (exec == Exec::serial) {
    Point x;
    for (std::int64_t r = 0; r < total; ++r) {
      if (decode_normalized(r, S.p, S.nvars, x) && all_vanish(S, x)) out.push_back(x);
    }
  } else {
#pragma omp parallel
    {
      std::vector<Point> local;
      Point x;
#pragma omp for schedule(static) nowait
      for (std::int64_t r = 0; r < total; ++r) {
        if (decode_normalized(r, S.p, S.nvars, x) && all_vanish(S, x)) local.push_back(x);
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
  }
  sort_unique(out);
  return out;
}

FqArithmetic::FqArithmetic(const Extension& L) {
  const BaseField& k = L->base();
  if (!k.is_finite()) throw Error(ErrorCode::InvalidInput, "table arithmetic needs a finite field");
  N_ = L->degree();
  if (k.characteristic() > 2048) throw Error(ErrorCode::TooLarge, "field too large for table arithmetic");
  p_ = k.characteristic().get_si();
  q_ = 1;
  for (int i = 0; i < N_; ++i) {
    q_ *= p_;
    if (q_ > 2048) throw Error(ErrorCode::TooLarge, "field too large for table arithmetic");
  }
  auto digits = [&](std::int64_t x) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(N_));
    for (int i = 0; i < N_; ++i) {
      d[std::size_t(i)] = x % p_;
      x /= p_;
    }
    return d;
  };
  add_.resize(std::size_t(q_ * q_));
  for (std::int64_t x = 0; x < q_; ++x) {
    const auto dx = digits(x);
    for (std::int64_t y = 0; y < q_; ++y) {
      const auto dy = digits(y);
      std::int64_t s = 0, w = 1;
      for (int i = 0; i < N_; ++i) {
        s += ((dx[std::size_t(i)] + dy[std::size_t(i)]) % p_) * w;
        w *= p_;
      }
      add_[std::size_t(x * q_ + y)] = int(s);
    }
  }
  // Primitive element: first g whose powers reach every nonzero element.
  log_.assign(std::size_t(q_), -1);
  exp_.assign(std::size_t(q_ - 1), 0);
  for (std::int64_t cand = 1; cand < q_; ++cand) {
    std::vector<Scalar> c;
    for (auto d : digits(cand)) c.push_back(Scalar(static_cast<long>(d)));
    const ExtElement g(L, c);
    ExtElement acc = ExtElement::from_int(L, 1);
    std::fill(log_.begin(), log_.end(), -1);
    bool primitive = true;
    for (std::int64_t e = 0; e < q_ - 1; ++e) {
      const int code = encode(acc);
      if (log_[std::size_t(code)] != -1) {
        primitive = false;
        break;
      }
      log_[std::size_t(code)] = int(e);
      exp_[std::size_t(e)] = code;
      acc *= g;
    }
    if (primitive) return;
  }
  throw Error(ErrorCode::InternalDescentFailure, "no primitive element found");
}

int FqArithmetic::encode(const ExtElement& x) const {
  std::int64_t s = 0, w = 1;
  for (int i = 0; i < N_; ++i) {
    Scalar c = x.coords()[std::size_t(i)];
    s += c.get_num().get_si() * w;
    w *= p_;
  }
  return int(s);
}

namespace {

/// Image of x under P Ver, normalized; false unless F_p-rational.
bool image_point(const FqArithmetic& F, const MonomialBasis& basis, const std::vector<std::vector<int>>& P,
                 const std::vector<int>& x, std::vector<int>& ver, Point& out) {
  const std::size_t m = basis.list.size();
  ver.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    int v = 1;
    const Exponent& e = basis.list[r];
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) v = F.mul(v, x[i]);
    ver[r] = v;
  }
  out.assign(P.size(), 0);
  int scale = 0;
  std::vector<int> w(P.size(), 0);
  for (std::size_t i = 0; i < P.size(); ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (P[i][j] != 0 && ver[j] != 0) acc = F.add(acc, F.mul(P[i][j], ver[j]));
    }
    w[i] = acc;
    if (scale == 0 && acc != 0) scale = F.inv(acc);
  }
  if (scale == 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = F.mul(w[i], scale);
    if (!F.is_base(v)) return false;
    out[i] = v;
  }
  return true;
}

bool decode_projective(std::int64_t r, std::int64_t q, int n, std::vector<int>& x) {
  x.assign(std::size_t(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    x[std::size_t(i)] = int(r % q);
    r /= q;
  }
  for (int i = 0; i < n; ++i) {
    if (x[std::size_t(i)] != 0) return x[std::size_t(i)] == 1;
  }
  return false;
}

}  // namespace

ImageCount rational_image(const FqArithmetic& F, const MonomialBasis& basis, const std::vector<std::vector<int>>& P,
                          Exec exec) {
  const int n = basis.n + 1;
  const auto m2 = static_cast<std::int64_t>(basis.list.size() * basis.list.size());
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= F.q();
    if (total * m2 > kMaxImageWork) throw Error(ErrorCode::TooLarge, "too many source points for the image method");
  }
  ImageCount out;
  if (exec == Exec::serial) {
    std::vector<int> x, ver;
    Point w;
    for (std::int64_t r = 0; r < total; ++r) {
      if (decode_projective(r, F.q(), n, x) && image_point(F, basis, P, x, ver, w)) {
        out.points.push_back(w);
        ++out.preimages;
      }
    }
  } else {
    std::int64_t pre = 0;
#pragma omp parallel reduction(+ : pre)
    {
      std::vector<Point> local;
      std::vector<int> x, ver;
      Point w;
#pragma omp for schedule(static) nowait
      for (std::int64_t r = 0; r < total; ++r) {
        if (decode_projective(r, F.q(), n, x) && image_point(F, basis, P, x, ver, w)) {
          local.push_back(w);
          ++pre;
        }
      }
#pragma omp critical
      out.points.insert(out.points.end(), local.begin(), local.end());
    }
    out.preimages = pre;
  }
  sort_unique(out.points);
  return out;
}

}  // namespace severi
