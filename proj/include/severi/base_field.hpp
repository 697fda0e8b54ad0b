#pragma once

#include <gmpxx.h>

#include <string>

namespace severi {

using Scalar = mpq_class;

/// The field k: either Q (arbitrary-precision rationals) or a prime field F_p.
/// Scalars are plain mpq_class values; over F_p they are kept as integers in
/// [0, p) and every operation goes through the field so that reduction happens.
class BaseField {
 public:
  static BaseField rationals();
  /// Throws NotPrime unless p is prime.
  static BaseField prime(const mpz_class& p);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  /// 0 for Q.
  const mpz_class& characteristic() const { return p_; }

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  Scalar add(const Scalar& x, const Scalar& y) const;
  Scalar sub(const Scalar& x, const Scalar& y) const;
  Scalar mul(const Scalar& x, const Scalar& y) const;
  Scalar neg(const Scalar& x) const;
  Scalar inv(const Scalar& x) const;
  Scalar div(const Scalar& x, const Scalar& y) const { return mul(x, inv(y)); }
  Scalar pow(const Scalar& x, long e) const;

  bool is_zero(const Scalar& x) const { return sgn(x) == 0; }

  /// Number of elements for F_p; throws for Q.
  const mpz_class& order() const;

  bool operator==(const BaseField& other) const { return p_ == other.p_; }
  bool operator!=(const BaseField& other) const { return p_ != other.p_; }

  std::string describe() const;

 private:
  explicit BaseField(mpz_class p) : p_(std::move(p)) {}
  mpz_class p_;
};

/// "p" or "p/q".
std::string scalar_to_string(const Scalar& x);
/// Accepts "p" or "p/q" (optionally signed); no field reduction.
Scalar parse_scalar(const std::string& text);

}  // namespace severi
