#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "severi/base_field.hpp"
#include "severi/upoly.hpp"

namespace severi {

class CyclicExtension;
/// Extensions are immutable and shared by every element living in them.
using Extension = std::shared_ptr<const CyclicExtension>;

/// An element of L = k[t]/(f), stored by its coordinates in the power basis
/// 1, t, ..., t^(N-1).
class ExtElement {
 public:
  ExtElement() = default;
  explicit ExtElement(Extension L);
  ExtElement(Extension L, std::vector<Scalar> coords);

  static ExtElement constant(Extension L, const Scalar& c);
  static ExtElement from_int(Extension L, long c);
  static ExtElement generator(Extension L);

  const Extension& field() const { return L_; }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when all non-constant coordinates vanish.
  bool is_base() const;
  /// The constant coordinate; throws InternalDescentFailure unless is_base().
  Scalar base_value() const;

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator*(const ExtElement& o) const;
  ExtElement operator/(const ExtElement& o) const { return *this * o.inverse(); }
  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator-=(const ExtElement& o) { return *this = *this - o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }
  ExtElement scaled(const Scalar& s) const;

  bool operator==(const ExtElement& o) const { return c_ == o.c_; }
  bool operator!=(const ExtElement& o) const { return !(*this == o); }

  ExtElement inverse() const;
  ExtElement pow(long e) const;

  /// `(1/2) + 3*t - t^2`, ascending powers of the generator `t`.
  std::string to_string() const;

 private:
  Extension L_;
  std::vector<Scalar> c_;
};

/// A cyclic Galois extension L/k of degree N = n+1 with an explicit generator
/// sigma of Gal(L/k), given by sigma(t) = g(t).
class CyclicExtension {
 public:
  const BaseField& base() const { return k_; }
  int degree() const { return static_cast<int>(f_.degree()); }
  const UPoly& min_poly() const { return f_; }
  const UPoly& galois_gen() const { return g_; }
  /// chi(sigma) as a unit mod N.
  int character() const { return chi_; }
  /// The exponent c with chi(sigma^c) = 1, i.e. sigma' = sigma^c.
  int sigma_prime_power() const;

  /// Coordinates of x*y before reduction; used by ExtElement.
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> apply_sigma_power(const std::vector<Scalar>& x, int j) const;

  /// Field size for finite bases; throws for Q.
  mpz_class order() const;

  std::string describe() const;

 private:
  friend Extension make_extension_unchecked(const BaseField&, const UPoly&, const UPoly&, int);
  CyclicExtension() = default;

  BaseField k_ = BaseField::rationals();
  UPoly f_, g_;
  int chi_ = 0;
  // reduction_[i] = t^(N+i) in the power basis, i = 0..N-2
  std::vector<std::vector<Scalar>> reduction_;
  // sigma_pow_[j] = matrix of sigma^j acting on coordinates, j = 0..N-1,
  // stored column-major: sigma_pow_[j][col] = sigma^j(t^col)
  std::vector<std::vector<std::vector<Scalar>>> sigma_pow_;
};

/// Validated construction. Throws NotIrreducible, NotGalois or WrongOrder.
/// `character` defaults to -1 mod N (the convention chi(sigma) = -1).
Extension make_extension(const BaseField& k, const UPoly& f, const UPoly& g,
                         std::optional<int> character = std::nullopt);
Extension make_extension_unchecked(const BaseField& k, const UPoly& f, const UPoly& g, int character);

/// Shanks' simplest cubic x^3 - t x^2 - (t+3) x - 1 over Q with sigma(t) = -1/(1+t).
Extension make_shanks_cubic(long t);

/// F_{p^N}/F_p with the Frobenius generator g = x^p mod f. Without an explicit
/// modulus the first irreducible monic polynomial of degree N in the order
/// x^N + c_{N-1}x^{N-1} + ... + c_0 with (c_0, ..., c_{N-1}) read as base-p
/// digits of 1, 2, 3, ... is used.
Extension make_finite_extension(const mpz_class& p, int degree,
                                const std::optional<UPoly>& modulus = std::nullopt);

/// sigma^j(x); j is taken mod N, negative allowed.
ExtElement galois_apply(const ExtElement& x, int j);
Scalar norm(const ExtElement& x);
Scalar trace(const ExtElement& x);

/// Replaces the generator sigma by sigma^-1 (the other character convention);
/// the stored character is inverted accordingly.
Extension with_inverse_generator(const Extension& L);

struct NormalBasis {
  std::vector<ExtElement> elements;  // l_1, ..., l_N with sigma(l_i) = l_{i+1}
  Scalar trace_value;
};

/// The fixed enumeration of L used by the searches below, starting at 0.
/// Over F_p: coordinates are the base-p digits of a counter (constant term
/// lowest). Over Q: heights h = 1, 2, ... in turn; within a height, every
/// coordinate vector with max |c| = h, in the order of a base-(2h+1) counter
/// whose digits map zigzag to 0, 1, -1, 2, -2, ... (constant term lowest).
/// So the sequence begins 0, 1, -1, t, 1+t, -1+t, -t, ...
class ElementEnumerator {
 public:
  explicit ElementEnumerator(Extension L);
  ExtElement next();
  /// Height (max |coordinate|) of the element last returned; 0 for F_p.
  long height() const { return height_; }

 private:
  Extension L_;
  long height_ = 0;
  mpz_class counter_ = 0;
  bool started_ = false;
};

/// Tries seed + e for e in ElementEnumerator order until the Galois
/// orbit is k-linearly independent and has nonzero trace.
NormalBasis find_normal_basis(const Extension& L, const ExtElement& seed, long bound = 100000);
bool is_normal_basis(const NormalBasis& nb);

struct NormWitness {
  enum class Status { found, none_found };
  Status status = Status::none_found;
  std::optional<ExtElement> witness;
  long examined = 0;
};

/// Over F_p (norm is surjective) the enumeration is run until a witness is
/// found. Over Q a bounded search: first 1, then the monic linear elements
/// c + t (c = 0, 1, -1, 2, -2, ...), then general elements of growing height
/// with denominators up to the height. `bound` caps the number of candidates
/// over Q; none_found is not a proof that a is not a norm.
NormWitness norm_witness(const Extension& L, const Scalar& a, long bound);

/// Parse an element in the generator variable `t`.
ExtElement parse_element(const Extension& L, std::string_view text);

}  // namespace severi
