#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "severi/extension.hpp"
#include "severi/matrix.hpp"

namespace severi {

using Exponent = std::vector<int>;

/// Total degree descending, then exponent vectors lexicographically
/// descending (the alphabetical order X0^3 < X0^2 X1 < ... used for output).
struct TermOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over L. No zero coefficient is stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, ExtElement, TermOrder>;

  MultiPoly() = default;
  MultiPoly(Extension L, int nvars);

  static MultiPoly constant(Extension L, int nvars, const ExtElement& c);
  static MultiPoly variable(Extension L, int nvars, int i);
  static MultiPoly monomial(Extension L, const Exponent& e, const ExtElement& c);
  /// Sum_j coeffs[j] * X_j.
  static MultiPoly linear_form(Extension L, const std::vector<ExtElement>& coeffs);

  const Extension& field() const { return L_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (zero when absent).
  ExtElement coefficient(const Exponent& e) const;
  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const ExtElement& c);

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for zero and for polynomials whose terms all share one degree.
  bool is_homogeneous() const;
  /// All coefficients lie in k.
  bool is_base() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly scaled(const ExtElement& c) const;
  MultiPoly pow(int e) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Text form with the given variable names; coefficients outside k are
  /// parenthesized elements in `t`.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  Extension L_;
  int nvars_ = 0;
  Terms terms_;
};

/// F(A x): variable i is replaced by sum_j A(i,j) X_j. Hence
/// substitute_linear(F, A B) = substitute_linear(substitute_linear(F, A), B).
MultiPoly substitute_linear(const MultiPoly& F, const Matrix& A);
/// F(images[0], ..., images[nvars-1]).
MultiPoly substitute(const MultiPoly& F, const std::vector<MultiPoly>& images);
/// substitute applied to each of Fs, sharing the images of monomials.
std::vector<MultiPoly> substitute_all(const std::vector<MultiPoly>& Fs, const std::vector<MultiPoly>& images);
MultiPoly derivative(const MultiPoly& F, int i);
std::vector<MultiPoly> jacobian(const MultiPoly& F);
ExtElement evaluate(const MultiPoly& F, const std::vector<ExtElement>& point);
/// sigma^j applied to every coefficient.
MultiPoly galois_poly(const MultiPoly& F, int j);

/// Canonical reduced echelon basis of the L-span of an equal-degree family
/// (leading coefficient 1 in term order). Throws MixedDegrees.
std::vector<MultiPoly> span_basis(const std::vector<MultiPoly>& family);
/// Equality of L-spans of two equal-degree families. Throws MixedDegrees.
bool span_equal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

/// X, Y, Z for three variables, X0..X{n} otherwise.
std::vector<std::string> plane_names(int nvars);
/// w0..w{m-1}.
std::vector<std::string> omega_names(int m);

/// Parses a polynomial over L in the given variable names (plus `t` for the
/// generator of L). Extra aliases map names to slots.
MultiPoly parse_poly(const Extension& L, std::string_view text, const std::vector<std::string>& names,
                     const std::map<std::string, int>& aliases = {});

}  // namespace severi
