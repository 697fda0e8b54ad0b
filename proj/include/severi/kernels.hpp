#pragma once

#include <cstdint>
#include <vector>

#include "severi/multipoly.hpp"
#include "severi/veronese.hpp"

namespace severi {

enum class Exec { serial, openmp };

/// A projective point over F_p, normalized so the first nonzero coordinate is 1.
using Point = std::vector<std::int64_t>;

/// Polynomials with coefficients reduced into [0, p).
struct ModPSystem {
  std::int64_t p = 0;
  int nvars = 0;
  struct Term {
    std::int64_t coeff;
    std::vector<int> exponent;
  };
  std::vector<std::vector<Term>> polys;
};

/// Requires k-coefficients over a prime field. Throws InvalidInput.
ModPSystem to_mod_p(const std::vector<MultiPoly>& polys);

std::int64_t evaluate_mod_p(const std::vector<ModPSystem::Term>& poly, const Point& x, std::int64_t p);

/// All common zeros in P^(nvars-1)(F_p), sorted.
std::vector<Point> projective_zeros(const ModPSystem& system, Exec exec);

/// Table arithmetic in F_q, q = p^N: an element is the integer sum c_i p^i of
/// its power-basis coordinates, so the base field is 0..p-1.
class FqArithmetic {
 public:
  /// Throws InvalidInput for Q, TooLarge when q > 2048.
  explicit FqArithmetic(const Extension& L);

  std::int64_t p() const { return p_; }
  int degree() const { return N_; }
  std::int64_t q() const { return q_; }

  int add(int x, int y) const { return add_[std::size_t(x) * std::size_t(q_) + std::size_t(y)]; }
  int mul(int x, int y) const {
    if (x == 0 || y == 0) return 0;
    int s = log_[std::size_t(x)] + log_[std::size_t(y)];
    if (s >= q_ - 1) s -= int(q_ - 1);
    return exp_[std::size_t(s)];
  }
  int inv(int x) const { return exp_[std::size_t((q_ - 1 - log_[std::size_t(x)]) % (q_ - 1))]; }
  bool is_base(int x) const { return x < p_; }

  int encode(const ExtElement& x) const;

 private:
  std::int64_t p_ = 0, q_ = 0;
  int N_ = 0;
  std::vector<int> add_, log_, exp_;
};

struct ImageCount {
  /// Distinct F_p-rational images, sorted.
  std::vector<Point> points;
  /// Points of P^n(F_q) whose image is F_p-rational.
  std::int64_t preimages = 0;
};

/// Cap on q^(n+1) * m^2, the table operations of the image method.
inline constexpr std::int64_t kMaxImageWork = 5'000'000'000;

/// Images w = P Ver(x) for x in P^n(F_q), kept when w is F_p-rational.
/// Throws TooLarge beyond kMaxImageWork.
ImageCount rational_image(const FqArithmetic& F, const MonomialBasis& basis, const std::vector<std::vector<int>>& P,
                          Exec exec);

}  // namespace severi
