#include "severi/base_field.hpp"

#include <cctype>

#include "severi/errors.hpp"

namespace severi {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::InternalDescentFailure: return "InternalDescentFailure";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ZeroA: return "ZeroA";
    case ErrorCode::AllAttemptsSingular: return "AllAttemptsSingular";
    case ErrorCode::NotHonestCocycle: return "NotHonestCocycle";
    case ErrorCode::NotMonomialCocycle: return "NotMonomialCocycle";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::NotGaloisStable: return "NotGaloisStable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

BaseField BaseField::rationals() { return BaseField(mpz_class(0)); }

BaseField BaseField::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  }
  return BaseField(p);
}

Scalar BaseField::reduce(const Scalar& x) const {
  if (p_ == 0) {
    Scalar r = x;
    r.canonicalize();
    return r;
  }
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
  if (den != 1) {
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0) {
      throw Error(ErrorCode::InvalidInput,
                  "denominator " + den.get_str() + " vanishes mod " + p_.get_str());
    }
    r = r * di;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  }
  return Scalar(r);
}

namespace {

inline Scalar mod_int(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

}  // namespace

Scalar BaseField::add(const Scalar& x, const Scalar& y) const {
  if (p_ == 0) return x + y;
  return mod_int(x.get_num() + y.get_num(), p_);
}

Scalar BaseField::sub(const Scalar& x, const Scalar& y) const {
  if (p_ == 0) return x - y;
  return mod_int(x.get_num() - y.get_num(), p_);
}

Scalar BaseField::mul(const Scalar& x, const Scalar& y) const {
  if (p_ == 0) return x * y;
  return mod_int(x.get_num() * y.get_num(), p_);
}

Scalar BaseField::neg(const Scalar& x) const {
  if (p_ == 0) return -x;
  return mod_int(-x.get_num(), p_);
}

Scalar BaseField::inv(const Scalar& x) const {
  if (sgn(x) == 0) throw Error(ErrorCode::Singular, "inverse of zero in " + describe());
  if (p_ == 0) return 1 / x;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), x.get_num_mpz_t(), p_.get_mpz_t());
  return Scalar(r);
}

Scalar BaseField::pow(const Scalar& x, long e) const {
  if (e < 0) return pow(inv(x), -e);
  Scalar result = from_int(1);
  Scalar b = x;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

const mpz_class& BaseField::order() const {
  if (p_ == 0) throw Error(ErrorCode::InvalidInput, "Q has no finite order");
  return p_;
}

std::string BaseField::describe() const { return p_ == 0 ? "Q" : "F_" + p_.get_str(); }

std::string scalar_to_string(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "bad scalar '" + text + "'");
    return Scalar(mpz_class(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::ParseError, "bad scalar '" + text + "'");
  }
  mpz_class d(strip_plus(den));
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  Scalar r(mpz_class(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

}  // namespace severi
