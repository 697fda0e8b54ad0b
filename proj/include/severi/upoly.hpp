#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "severi/base_field.hpp"

namespace severi {

/// Dense univariate polynomial over a BaseField, coefficients low to high,
/// kept trimmed (no trailing zeros; the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  UPoly(const BaseField& k, std::vector<Scalar> coeffs);

  static UPoly monomial(const BaseField& k, const Scalar& c, int degree);
  static UPoly x(const BaseField& k) { return monomial(k, Scalar(1), 1); }
  static UPoly constant(const BaseField& k, const Scalar& c) { return monomial(k, c, 0); }

  const BaseField& field() const { return k_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const;
  const Scalar& leading() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Scalar& s) const;
  bool operator==(const UPoly& o) const { return k_ == o.k_ && c_ == o.c_; }

  Scalar evaluate(const Scalar& x) const;
  UPoly monic() const;
  UPoly derivative() const;

  /// Text form in variable `var`, highest degree first: `x^3 - x^2 - 4*x - 1`.
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  BaseField k_ = BaseField::rationals();
  std::vector<Scalar> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly mod(const UPoly& a, const UPoly& m);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns g = gcd(a, b) and sets s with s*a ≡ g (mod b).
UPoly gcdex(const UPoly& a, const UPoly& b, UPoly& s);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const UPoly& a, const mpz_class& e, const UPoly& m);
/// outer(inner(x)) mod m, Horner style.
UPoly compose_mod(const UPoly& outer, const UPoly& inner, const UPoly& m);

/// Parses the text grammar in variable `var` and reduces into k.
UPoly parse_upoly(const BaseField& k, std::string_view text, std::string_view var = "x");

/// Irreducibility over k. Over F_p this is Rabin's test; over Q a monic
/// rational f is certified irreducible either by a rational-root test
/// (degree ≤ 3) or by finding a prime modulo which it stays irreducible.
/// Returns false when a factor was found; throws NotIrreducible when the
/// prime search is exhausted without a certificate.
bool is_irreducible(const UPoly& f);

}  // namespace severi
