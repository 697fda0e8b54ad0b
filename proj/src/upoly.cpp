#include "severi/upoly.hpp"

#include <sstream>

#include "severi/errors.hpp"
#include "severi/parse.hpp"

namespace severi {

UPoly::UPoly(const BaseField& k, std::vector<Scalar> coeffs) : k_(k), c_(std::move(coeffs)) {
  for (auto& c : c_) c = k_.reduce(c);
  trim();
}

UPoly UPoly::monomial(const BaseField& k, const Scalar& c, int degree) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
  v.back() = c;
  return UPoly(k, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::size_t n = std::max(c_.size(), o.c_.size());
  std::vector<Scalar> r(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) r[i] = k_.add(coeff(int(i)), o.coeff(int(i)));
  return UPoly(k_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::size_t n = std::max(c_.size(), o.c_.size());
  std::vector<Scalar> r(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) r[i] = k_.sub(coeff(int(i)), o.coeff(int(i)));
  return UPoly(k_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(k_, {});
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = k_.add(r[i + j], k_.mul(c_[i], o.c_[j]));
    }
  }
  return UPoly(k_, std::move(r));
}

UPoly UPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& c : r) c = k_.mul(c, s);
  return UPoly(k_, std::move(r));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = k_.add(k_.mul(acc, x), *it);
  return k_.reduce(acc);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(k_.inv(leading()));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(k_, {});
  std::vector<Scalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = k_.mul(c_[i], Scalar(long(i)));
  return UPoly(k_, std::move(r));
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Scalar a = neg ? Scalar(-c) : c;
    bool unit = (a == 1);
    std::string coef = a.get_den() == 1 ? scalar_to_string(a) : "(" + scalar_to_string(a) + ")";
    if (i == 0) {
      os << coef;
    } else {
      if (!unit) os << coef << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
  const BaseField& k = a.field();
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  Scalar inv_lead = k.inv(b.leading());
  int dq = a.degree() - db;
  std::vector<Scalar> quo(dq >= 0 ? std::size_t(dq + 1) : 0, Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    Scalar c = rem[std::size_t(i)];
    if (sgn(c) == 0) continue;
    Scalar f = k.mul(c, inv_lead);
    quo[std::size_t(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto idx = std::size_t(i - db + j);
      rem[idx] = k.sub(rem[idx], k.mul(f, b.coeffs()[std::size_t(j)]));
    }
  }
  q = UPoly(k, std::move(quo));
  r = UPoly(k, std::move(rem));
}

UPoly mod(const UPoly& a, const UPoly& m) {
  if (a.degree() < m.degree()) return a;
  UPoly q, r;
  divmod(a, m, q, r);
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = mod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

UPoly gcdex(const UPoly& a, const UPoly& b, UPoly& s) {
  const BaseField& k = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(k, Scalar(1)), s1(k, {});
  while (!r1.is_zero()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    UPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  if (r0.is_zero()) {
    s = s0;
    return r0;
  }
  Scalar li = k.inv(r0.leading());
  s = s0.scaled(li);
  return r0.scaled(li);
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return mod(a * b, m); }

UPoly powmod(const UPoly& a, const mpz_class& e, const UPoly& m) {
  UPoly result = mod(UPoly::constant(a.field(), Scalar(1)), m);
  UPoly base = mod(a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m);
  }
  return result;
}

UPoly compose_mod(const UPoly& outer, const UPoly& inner, const UPoly& m) {
  const BaseField& k = outer.field();
  UPoly acc(k, {});
  for (int i = outer.degree(); i >= 0; --i) {
    acc = mulmod(acc, inner, m) + UPoly::constant(k, outer.coeff(i));
  }
  return mod(acc, m);
}

UPoly parse_upoly(const BaseField& k, std::string_view text, std::string_view var) {
  VariableTable vars;
  vars.emplace(std::string(var), 0);
  RationalPoly rp = parse_rational_poly(text, vars, 1);
  int deg = 0;
  for (const auto& [m, c] : rp.terms) deg = std::max(deg, m[0]);
  std::vector<Scalar> coeffs(std::size_t(deg) + 1, Scalar(0));
  for (const auto& [m, c] : rp.terms) coeffs[std::size_t(m[0])] = c;
  return UPoly(k, std::move(coeffs));
}

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's irreducibility test for monic f over F_p.
bool rabin_irreducible(const UPoly& f) {
  const BaseField& k = f.field();
  const mpz_class& p = k.characteristic();
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  UPoly x = UPoly::x(k);
  // frob[i] = x^(p^i) mod f
  std::vector<UPoly> frob{mod(x, f)};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), p, f));
  if (!(frob[std::size_t(n)] == mod(x, f))) return false;
  for (long q : prime_divisors(n)) {
    UPoly h = frob[std::size_t(n / q)] - x;
    if (gcd(h, f).degree() != 0) return false;
  }
  return true;
}

bool has_rational_root(const UPoly& f, bool& decided) {
  // f monic rational. Scale to integer monic h(y) = D^n f(y/D).
  int n = f.degree();
  mpz_class D = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> h(std::size_t(n) + 1);
  mpz_class Dp = 1;
  for (int i = n; i >= 0; --i) {
    Scalar v = f.coeff(i) * Scalar(Dp);
    h[std::size_t(i)] = v.get_num();
    Dp *= D;
  }
  decided = true;
  if (h[0] == 0) return true;
  mpz_class c = abs(h[0]);
  if (c > mpz_class("1000000000000")) {
    decided = false;
    return false;
  }
  auto root = [&](const mpz_class& y) {
    mpz_class acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * y + h[std::size_t(i)];
    return acc == 0;
  };
  for (mpz_class d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    mpz_class e = c / d;
    if (root(d) || root(-d) || root(e) || root(-e)) return true;
  }
  return false;
}

}  // namespace

bool is_irreducible(const UPoly& fin) {
  if (fin.degree() <= 0) return false;
  UPoly f = fin.monic();
  const BaseField& k = f.field();
  if (k.is_finite()) return rabin_irreducible(f);
  if (f.degree() == 1) return true;

  mpz_class D = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Scalar> h(f.coeffs().size());
  mpz_class Dp = 1;
  for (int i = f.degree(); i >= 0; --i) {
    h[std::size_t(i)] = f.coeff(i) * Scalar(Dp);
    Dp *= D;
  }
  // An integral monic polynomial irreducible modulo some prime is irreducible over Q.
  for (unsigned long p = 2; p < 3000; ++p) {
    if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0) continue;
    BaseField fp = BaseField::prime(mpz_class(p));
    UPoly hp(fp, h);
    if (hp.degree() != f.degree()) continue;
    if (rabin_irreducible(hp)) return true;
  }
  bool decided = false;
  if (has_rational_root(f, decided)) return false;
  if (decided && f.degree() <= 3) return true;
  throw Error(ErrorCode::NotIrreducible,
              "could not certify irreducibility of " + f.to_string() + " over Q");
}

}  // namespace severi
