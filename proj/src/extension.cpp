#include "severi/extension.hpp"

#include <numeric>
#include <sstream>

#include "severi/errors.hpp"
#include "severi/parse.hpp"
#include "severi/scalar_linalg.hpp"

namespace severi {

// ---------------------------------------------------------------- CyclicExtension

Extension make_extension_unchecked(const BaseField& k, const UPoly& f, const UPoly& g, int character) {
  auto L = std::shared_ptr<CyclicExtension>(new CyclicExtension());
  L->k_ = k;
  L->f_ = f;
  L->g_ = mod(g, f);
  const int N = f.degree();
  L->chi_ = ((character % N) + N) % N;

  UPoly x = UPoly::x(k);
  for (int i = 0; i + 1 < N; ++i) {
    UPoly r = powmod(x, mpz_class(N + i), f);
    std::vector<Scalar> v(std::size_t(N), Scalar(0));
    for (int c = 0; c < N; ++c) v[std::size_t(c)] = r.coeff(c);
    L->reduction_.push_back(std::move(v));
  }

  // sigma^j(t) = g iterated j times
  std::vector<UPoly> iter{mod(x, f)};
  for (int j = 1; j < N; ++j) iter.push_back(compose_mod(iter.back(), L->g_, f));
  for (int j = 0; j < N; ++j) {
    std::vector<std::vector<Scalar>> cols;
    UPoly pw = UPoly::constant(k, Scalar(1));
    for (int c = 0; c < N; ++c) {
      std::vector<Scalar> v(std::size_t(N), Scalar(0));
      for (int r = 0; r < N; ++r) v[std::size_t(r)] = pw.coeff(r);
      cols.push_back(std::move(v));
      pw = mulmod(pw, iter[std::size_t(j)], f);
    }
    L->sigma_pow_.push_back(std::move(cols));
  }
  return L;
}

int CyclicExtension::sigma_prime_power() const {
  const int N = degree();
  for (int c = 1; c < N; ++c) {
    if ((c * chi_) % N == 1 % N) return c;
  }
  return 1;
}

std::vector<Scalar> CyclicExtension::multiply(const std::vector<Scalar>& x,
                                              const std::vector<Scalar>& y) const {
  const std::size_t N = std::size_t(degree());
  std::vector<Scalar> wide(2 * N - 1, Scalar(0));
  for (std::size_t i = 0; i < N; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (sgn(y[j]) == 0) continue;
      wide[i + j] += x[i] * y[j];
    }
  }
  std::vector<Scalar> out(wide.begin(), wide.begin() + std::ptrdiff_t(N));
  for (std::size_t i = N; i < wide.size(); ++i) {
    if (sgn(wide[i]) == 0) continue;
    const auto& red = reduction_[i - N];
    for (std::size_t c = 0; c < N; ++c) {
      if (sgn(red[c]) != 0) out[c] += wide[i] * red[c];
    }
  }
  for (auto& v : out) v = k_.reduce(v);
  return out;
}

std::vector<Scalar> CyclicExtension::apply_sigma_power(const std::vector<Scalar>& x, int j) const {
  const int N = degree();
  j = ((j % N) + N) % N;
  if (j == 0) return x;
  const auto& S = sigma_pow_[std::size_t(j)];
  std::vector<Scalar> out(std::size_t(N), Scalar(0));
  for (int c = 0; c < N; ++c) {
    const Scalar& xc = x[std::size_t(c)];
    if (sgn(xc) == 0) continue;
    for (int r = 0; r < N; ++r) out[std::size_t(r)] += xc * S[std::size_t(c)][std::size_t(r)];
  }
  for (auto& v : out) v = k_.reduce(v);
  return out;
}

mpz_class CyclicExtension::order() const {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), k_.order().get_mpz_t(), static_cast<unsigned long>(degree()));
  return q;
}

std::string CyclicExtension::describe() const {
  std::ostringstream os;
  os << k_.describe() << "[t]/(" << f_.to_string("t") << "), sigma(t) = " << g_.to_string("t");
  return os.str();
}

Extension make_extension(const BaseField& k, const UPoly& f_in, const UPoly& g_in,
                         std::optional<int> character) {
  UPoly f(k, f_in.coeffs());
  UPoly g(k, g_in.coeffs());
  const int N = f.degree();
  if (N < 2) throw Error(ErrorCode::InvalidInput, "extension degree must be at least 2");
  if (f.leading() != 1) throw Error(ErrorCode::InvalidInput, "minimal polynomial must be monic");
  if (!is_irreducible(f)) {
    throw Error(ErrorCode::NotIrreducible, f.to_string() + " factors over " + k.describe());
  }
  g = mod(g, f);
  if (!compose_mod(f, g, f).is_zero()) {
    throw Error(ErrorCode::NotGalois, "f(g) is not 0 mod f for g = " + g.to_string());
  }
  UPoly x = mod(UPoly::x(k), f);
  UPoly h = g;
  for (int i = 1; i <= N; ++i) {
    if (h == x) {
      if (i != N) {
        throw Error(ErrorCode::WrongOrder, "generator has order " + std::to_string(i) +
                                               ", expected " + std::to_string(N));
      }
      int chi = character.value_or(N - 1);
      if (std::gcd(((chi % N) + N) % N, N) != 1) {
        throw Error(ErrorCode::InvalidInput, "character value must be a unit mod degree");
      }
      return make_extension_unchecked(k, f, g, chi);
    }
    h = compose_mod(h, g, f);
  }
  throw Error(ErrorCode::WrongOrder, "generator iterate does not return to t after " +
                                         std::to_string(N) + " steps");
}

Extension make_shanks_cubic(long t) {
  BaseField Q = BaseField::rationals();
  UPoly f(Q, {Scalar(-1), Scalar(-(t + 3)), Scalar(-t), Scalar(1)});
  UPoly one_plus_x(Q, {Scalar(1), Scalar(1)});
  UPoly s;
  UPoly g0 = gcdex(one_plus_x, f, s);
  if (g0.degree() != 0) {
    throw Error(ErrorCode::NotIrreducible, "1 + t is not invertible mod " + f.to_string());
  }
  UPoly g = mod(s.scaled(Scalar(-1)), f);
  return make_extension(Q, f, g);
}

Extension make_finite_extension(const mpz_class& p, int degree, const std::optional<UPoly>& modulus) {
  BaseField k = BaseField::prime(p);
  if (degree < 2) throw Error(ErrorCode::InvalidInput, "extension degree must be at least 2");
  UPoly f;
  if (modulus) {
    f = UPoly(k, modulus->coeffs());
  } else {
    mpz_class limit;
    mpz_pow_ui(limit.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(degree));
    for (mpz_class idx = 1; idx < limit; ++idx) {
      std::vector<Scalar> c(std::size_t(degree) + 1, Scalar(0));
      mpz_class v = idx;
      for (int i = 0; i < degree; ++i) {
        mpz_class d;
        mpz_fdiv_qr(v.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        c[std::size_t(i)] = Scalar(d);
      }
      c.back() = Scalar(1);
      UPoly cand(k, std::move(c));
      if (is_irreducible(cand)) {
        f = cand;
        break;
      }
    }
  }
  UPoly g = powmod(UPoly::x(k), p, f);
  return make_extension(k, f, g);
}

Extension with_inverse_generator(const Extension& L) {
  const int N = L->degree();
  std::vector<Scalar> t(std::size_t(N), Scalar(0));
  t[1] = Scalar(1);
  std::vector<Scalar> inv = L->apply_sigma_power(t, N - 1);
  UPoly g(L->base(), inv);
  return make_extension_unchecked(L->base(), L->min_poly(), g, N - L->character());
}

// ---------------------------------------------------------------- ExtElement

namespace {

void require_same(const Extension& a, const Extension& b) {
  if (!a || !b) throw Error(ErrorCode::FieldMismatch, "element without a field");
  if (a != b) throw Error(ErrorCode::FieldMismatch, "elements live in different extensions");
}

}  // namespace

ExtElement::ExtElement(Extension L) : L_(std::move(L)) {
  c_.assign(std::size_t(L_->degree()), Scalar(0));
}

ExtElement::ExtElement(Extension L, std::vector<Scalar> coords) : L_(std::move(L)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != L_->degree()) {
    throw Error(ErrorCode::LengthMismatch, "element needs " + std::to_string(L_->degree()) +
                                               " coordinates, got " + std::to_string(c_.size()));
  }
  for (auto& v : c_) v = L_->base().reduce(v);
}

ExtElement ExtElement::constant(Extension L, const Scalar& c) {
  ExtElement e(std::move(L));
  e.c_[0] = e.L_->base().reduce(c);
  return e;
}

ExtElement ExtElement::from_int(Extension L, long c) { return constant(std::move(L), Scalar(c)); }

ExtElement ExtElement::generator(Extension L) {
  ExtElement e(std::move(L));
  if (e.c_.size() > 1) {
    e.c_[1] = Scalar(1);
  }
  return e;
}

bool ExtElement::is_zero() const {
  for (const auto& v : c_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

bool ExtElement::is_one() const { return is_base() && c_[0] == 1; }

bool ExtElement::is_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return false;
  }
  return true;
}

Scalar ExtElement::base_value() const {
  if (!is_base()) {
    throw Error(ErrorCode::InternalDescentFailure, to_string() + " is not in the base field");
  }
  return c_[0];
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  require_same(L_, o.L_);
  const BaseField& k = L_->base();
  ExtElement r(L_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k.add(c_[i], o.c_[i]);
  return r;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  require_same(L_, o.L_);
  const BaseField& k = L_->base();
  ExtElement r(L_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k.sub(c_[i], o.c_[i]);
  return r;
}

ExtElement ExtElement::operator-() const {
  const BaseField& k = L_->base();
  ExtElement r(L_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k.neg(c_[i]);
  return r;
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
  require_same(L_, o.L_);
  ExtElement r(L_);
  r.c_ = L_->multiply(c_, o.c_);
  return r;
}

ExtElement ExtElement::scaled(const Scalar& s) const {
  const BaseField& k = L_->base();
  ExtElement r(L_);
  Scalar sr = k.reduce(s);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k.mul(c_[i], sr);
  return r;
}

ExtElement ExtElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero in " + L_->describe());
  const BaseField& k = L_->base();
  if (is_base()) return constant(L_, k.inv(c_[0]));
  UPoly a(k, c_);
  UPoly s;
  UPoly g = gcdex(a, L_->min_poly(), s);
  if (g.degree() != 0) throw Error(ErrorCode::Singular, "element is a zero divisor");
  s = mod(s, L_->min_poly());
  std::vector<Scalar> v(c_.size(), Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.coeff(int(i));
  return ExtElement(L_, std::move(v));
}

ExtElement ExtElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExtElement result = from_int(L_, 1);
  ExtElement b = *this;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string ExtElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Scalar& c = c_[i];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Scalar a = neg ? Scalar(-c) : c;
    std::string coef = a.get_den() == 1 ? scalar_to_string(a) : "(" + scalar_to_string(a) + ")";
    if (i == 0) {
      os << coef;
    } else {
      if (a != 1) os << coef << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

ExtElement galois_apply(const ExtElement& x, int j) {
  const Extension& L = x.field();
  return ExtElement(L, L->apply_sigma_power(x.coords(), j));
}

Scalar norm(const ExtElement& x) {
  const Extension& L = x.field();
  ExtElement acc = ExtElement::from_int(L, 1);
  for (int j = 0; j < L->degree(); ++j) acc *= galois_apply(x, j);
  return acc.base_value();
}

Scalar trace(const ExtElement& x) {
  const Extension& L = x.field();
  ExtElement acc(L);
  for (int j = 0; j < L->degree(); ++j) acc += galois_apply(x, j);
  return acc.base_value();
}

// ---------------------------------------------------------------- enumeration

ElementEnumerator::ElementEnumerator(Extension L) : L_(std::move(L)) {}

ExtElement ElementEnumerator::next() {
  const int N = L_->degree();
  const BaseField& k = L_->base();
  if (!started_) {
    started_ = true;
    return ExtElement(L_);
  }
  if (k.is_finite()) {
    ++counter_;
    if (counter_ >= L_->order()) {
      throw Error(ErrorCode::SearchExhausted, "enumerated all of " + L_->describe());
    }
    std::vector<Scalar> c(std::size_t(N), Scalar(0));
    mpz_class v = counter_;
    for (int i = 0; i < N; ++i) {
      mpz_class d;
      mpz_fdiv_qr(v.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t(), k.characteristic().get_mpz_t());
      c[std::size_t(i)] = Scalar(d);
    }
    return ExtElement(L_, std::move(c));
  }
  if (height_ == 0) height_ = 1;
  for (;;) {
    ++counter_;
    mpz_class base = 2 * height_ + 1;
    mpz_class limit;
    mpz_pow_ui(limit.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(N));
    if (counter_ >= limit) {
      ++height_;
      counter_ = 0;
      continue;
    }
    std::vector<Scalar> c(std::size_t(N), Scalar(0));
    mpz_class v = counter_;
    long maxabs = 0;
    for (int i = 0; i < N; ++i) {
      mpz_class d;
      mpz_fdiv_qr(v.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t());
      long dl = d.get_si();
      long val = (dl % 2 == 1) ? (dl + 1) / 2 : -(dl / 2);
      maxabs = std::max(maxabs, std::labs(val));
      c[std::size_t(i)] = Scalar(val);
    }
    if (maxabs != height_) continue;
    return ExtElement(L_, std::move(c));
  }
}

namespace {

std::vector<ExtElement> orbit(const ExtElement& x) {
  std::vector<ExtElement> out;
  for (int j = 0; j < x.field()->degree(); ++j) out.push_back(galois_apply(x, j));
  return out;
}

bool independent(const std::vector<ExtElement>& elems) {
  const BaseField& k = elems.front().field()->base();
  std::vector<ScalarRow> rows;
  for (const auto& e : elems) rows.push_back(e.coords());
  return rank_base(k, rows) == static_cast<int>(elems.size());
}

}  // namespace

bool is_normal_basis(const NormalBasis& nb) {
  if (nb.elements.empty()) return false;
  const Extension& L = nb.elements.front().field();
  const int N = L->degree();
  if (static_cast<int>(nb.elements.size()) != N) return false;
  for (int i = 0; i < N; ++i) {
    if (galois_apply(nb.elements[std::size_t(i)], 1) != nb.elements[std::size_t((i + 1) % N)]) {
      return false;
    }
  }
  if (!independent(nb.elements)) return false;
  ExtElement sum(L);
  for (const auto& e : nb.elements) sum += e;
  if (!sum.is_base() || sum.base_value() != nb.trace_value) return false;
  return !L->base().is_zero(nb.trace_value);
}

NormalBasis find_normal_basis(const Extension& L, const ExtElement& seed, long bound) {
  ElementEnumerator en(L);
  for (long i = 0; i < bound; ++i) {
    ExtElement cand = seed + en.next();
    if (cand.is_zero()) continue;
    Scalar tr = trace(cand);
    if (L->base().is_zero(tr)) continue;
    auto orb = orbit(cand);
    if (!independent(orb)) continue;
    return NormalBasis{std::move(orb), tr};
  }
  throw Error(ErrorCode::SearchExhausted,
              "no nonzero-trace normal basis within " + std::to_string(bound) + " candidates");
}

NormWitness norm_witness(const Extension& L, const Scalar& a_in, long bound) {
  const BaseField& k = L->base();
  Scalar a = k.reduce(a_in);
  if (k.is_zero(a)) throw Error(ErrorCode::ZeroInput, "norm witness requested for a = 0");
  NormWitness out;
  auto test = [&](const ExtElement& x) {
    ++out.examined;
    if (x.is_zero()) return false;
    if (norm(x) == a) {
      out.status = NormWitness::Status::found;
      out.witness = x;
      return true;
    }
    return false;
  };

  if (k.is_finite()) {
    ElementEnumerator en(L);
    for (;;) {
      if (test(en.next())) return out;
    }
  }

  if (bound <= 0) return out;
  if (test(ExtElement::from_int(L, 1))) return out;
  const ExtElement t = ExtElement::generator(L);
  const long linear_budget = std::max(1L, bound / 4);
  for (long i = 0; i < linear_budget && out.examined < bound; ++i) {
    long c = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    if (test(t + ExtElement::from_int(L, c))) return out;
  }
  ElementEnumerator en(L);
  en.next();
  while (out.examined < bound) {
    ExtElement v = en.next();
    for (long q = 1; q <= en.height() && out.examined < bound; ++q) {
      if (test(v.scaled(Scalar(1, q)))) return out;
    }
  }
  return out;
}

ExtElement parse_element(const Extension& L, std::string_view text) {
  VariableTable vars;
  vars.emplace("t", 0);
  RationalPoly rp = parse_rational_poly(text, vars, 1);
  ExtElement acc(L);
  const ExtElement t = ExtElement::generator(L);
  for (const auto& [m, c] : rp.terms) {
    acc += t.pow(m[0]).scaled(c);
  }
  return acc;
}

}  // namespace severi
