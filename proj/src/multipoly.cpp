#include "severi/multipoly.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "severi/errors.hpp"
#include "severi/parse.hpp"
#include "severi/scalar_linalg.hpp"

namespace severi {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool TermOrder::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(Extension L, int nvars) : L_(std::move(L)), nvars_(nvars) {}

MultiPoly MultiPoly::constant(Extension L, int nvars, const ExtElement& c) {
  MultiPoly p(L, nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Extension L, int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[std::size_t(i)] = 1;
  return monomial(L, e, ExtElement::from_int(L, 1));
}

MultiPoly MultiPoly::monomial(Extension L, const Exponent& e, const ExtElement& c) {
  MultiPoly p(L, static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear_form(Extension L, const std::vector<ExtElement>& coeffs) {
  const int nv = static_cast<int>(coeffs.size());
  MultiPoly p(L, nv);
  for (int j = 0; j < nv; ++j) {
    Exponent e(std::size_t(nv), 0);
    e[std::size_t(j)] = 1;
    p.add_term(e, coeffs[std::size_t(j)]);
  }
  return p;
}

ExtElement MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExtElement(L_) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const ExtElement& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error(ErrorCode::ShapeMismatch, "exponent length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total(terms_.begin()->first) == total(terms_.rbegin()->first);
}

bool MultiPoly::is_base() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_base()) return false;
  }
  return true;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::ShapeMismatch, "polynomials in different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(L_, nvars_);
  Exponent e(static_cast<std::size_t>(nvars_), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const ExtElement& c) const {
  MultiPoly r(L_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidInput, "negative polynomial power");
  MultiPoly result = constant(L_, nvars_, ExtElement::from_int(L_, 1));
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) < nvars_) throw Error(ErrorCode::ShapeMismatch, "too few variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      const int k = e[std::size_t(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[std::size_t(i)];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    std::string coef;
    bool negative = false;
    if (c.is_base()) {
      Scalar v = c.base_value();
      if (sgn(v) < 0) {
        negative = true;
        v = -v;
      }
      if (v != 1 || mono.empty()) {
        coef = v.get_den() == 1 ? v.get_num().get_str() : "(" + scalar_to_string(v) + ")";
      }
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
  }
  return os.str();
}

MultiPoly substitute_linear(const MultiPoly& F, const Matrix& A) {
  if (!A.is_square() || A.rows() != F.nvars()) {
    throw Error(ErrorCode::ShapeMismatch, "substitution matrix must be nvars x nvars");
  }
  std::vector<MultiPoly> images;
  for (int i = 0; i < A.rows(); ++i) {
    std::vector<ExtElement> row;
    for (int j = 0; j < A.cols(); ++j) row.push_back(A(i, j));
    images.push_back(MultiPoly::linear_form(F.field(), row));
  }
  return substitute(F, images);
}

std::vector<MultiPoly> substitute_all(const std::vector<MultiPoly>& Fs, const std::vector<MultiPoly>& images) {
  std::vector<MultiPoly> out;
  if (images.empty()) return Fs;
  const Extension& L = images.front().field();
  const int target = images.front().nvars();
  std::map<Exponent, MultiPoly> cache;
  // Image of x^e, built from the image of e with its last nonzero entry lowered.
  std::function<const MultiPoly&(const Exponent&)> image_of = [&](const Exponent& e) -> const MultiPoly& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    std::size_t last = e.size();
    for (std::size_t i = e.size(); i-- > 0;) {
      if (e[i] > 0) {
        last = i;
        break;
      }
    }
    MultiPoly v = MultiPoly::constant(L, target, ExtElement::from_int(L, 1));
    if (last < e.size()) {
      Exponent lower = e;
      --lower[last];
      v = image_of(lower) * images[last];
    }
    return cache.emplace(e, std::move(v)).first->second;
  };
  for (const auto& F : Fs) {
    if (static_cast<int>(images.size()) != F.nvars()) {
      throw Error(ErrorCode::ShapeMismatch, "need one image per variable");
    }
    MultiPoly acc(L, target);
    for (const auto& [e, c] : F.terms()) acc += image_of(e).scaled(c);
    out.push_back(std::move(acc));
  }
  return out;
}

MultiPoly substitute(const MultiPoly& F, const std::vector<MultiPoly>& images) {
  if (static_cast<int>(images.size()) != F.nvars()) {
    throw Error(ErrorCode::ShapeMismatch, "need one image per variable");
  }
  if (images.empty()) return F;
  const Extension& L = images.front().field() ? images.front().field() : F.field();
  const int target = images.front().nvars();
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(L, target, ExtElement::from_int(L, 1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[std::size_t(k)];
  };
  MultiPoly out(L, target);
  for (const auto& [e, c] : F.terms()) {
    MultiPoly term = MultiPoly::constant(L, target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly derivative(const MultiPoly& F, int i) {
  MultiPoly out(F.field(), F.nvars());
  for (const auto& [e, c] : F.terms()) {
    const int k = e[std::size_t(i)];
    if (k == 0) continue;
    Exponent d = e;
    d[std::size_t(i)] = k - 1;
    out.add_term(d, c.scaled(Scalar(k)));
  }
  return out;
}

std::vector<MultiPoly> jacobian(const MultiPoly& F) {
  std::vector<MultiPoly> out;
  for (int i = 0; i < F.nvars(); ++i) out.push_back(derivative(F, i));
  return out;
}

ExtElement evaluate(const MultiPoly& F, const std::vector<ExtElement>& point) {
  if (static_cast<int>(point.size()) != F.nvars()) throw Error(ErrorCode::ShapeMismatch, "point length");
  ExtElement acc(F.field());
  for (const auto& [e, c] : F.terms()) {
    ExtElement v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) v *= point[i].pow(e[i]);
    }
    acc += v;
  }
  return acc;
}

MultiPoly galois_poly(const MultiPoly& F, int j) {
  MultiPoly out(F.field(), F.nvars());
  for (const auto& [e, c] : F.terms()) out.add_term(e, c.is_base() ? c : galois_apply(c, j));
  return out;
}

std::vector<MultiPoly> span_basis(const std::vector<MultiPoly>& family) {
  int deg = -1;
  std::map<Exponent, int, TermOrder> support;
  Extension L;
  int nv = 0;
  for (const auto& F : family) {
    if (F.is_zero()) continue;
    if (!F.is_homogeneous() || (deg >= 0 && F.degree() != deg)) {
      throw Error(ErrorCode::MixedDegrees, "family is not homogeneous of one degree");
    }
    deg = F.degree();
    L = F.field();
    nv = F.nvars();
    for (const auto& [e, c] : F.terms()) support.emplace(e, 0);
  }
  if (deg < 0) return {};
  std::vector<Exponent> columns;
  int idx = 0;
  for (auto& [e, slot] : support) {
    slot = idx++;
    columns.push_back(e);
  }
  bool base = true;
  for (const auto& F : family) base = base && F.is_base();
  if (base) {
    // Same echelon form, computed on k-scalars.
    const BaseField& k = L->base();
    std::vector<ScalarRow> rows;
    for (const auto& F : family) {
      if (F.is_zero()) continue;
      ScalarRow row(columns.size(), Scalar(0));
      for (const auto& [e, c] : F.terms()) row[std::size_t(support.at(e))] = c.base_value();
      rows.push_back(std::move(row));
    }
    rref_base(k, rows);
    std::vector<MultiPoly> out;
    for (const auto& row : rows) {
      MultiPoly p(L, nv);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) p.add_term(columns[j], ExtElement::constant(L, row[j]));
      }
      out.push_back(std::move(p));
    }
    return out;
  }
  std::vector<std::vector<ExtElement>> rows;
  for (const auto& F : family) {
    if (F.is_zero()) continue;
    std::vector<ExtElement> row(columns.size(), ExtElement(L));
    for (const auto& [e, c] : F.terms()) row[std::size_t(support.at(e))] = c;
    rows.push_back(std::move(row));
  }
  rref(rows);
  std::vector<MultiPoly> out;
  for (const auto& row : rows) {
    MultiPoly p(L, nv);
    for (std::size_t j = 0; j < row.size(); ++j) p.add_term(columns[j], row[j]);
    out.push_back(std::move(p));
  }
  return out;
}

bool span_equal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  std::vector<MultiPoly> ba = span_basis(a);
  std::vector<MultiPoly> bb = span_basis(b);
  if (ba.size() != bb.size()) return false;
  if (ba.empty()) return true;
  if (ba.front().degree() != bb.front().degree()) return false;
  // Equal dimensions and no growth when joined means equal spans.
  std::vector<MultiPoly> joint = ba;
  joint.insert(joint.end(), bb.begin(), bb.end());
  return span_basis(joint).size() == ba.size();
}

std::vector<std::string> plane_names(int nvars) {
  if (nvars == 3) return {"X", "Y", "Z"};
  std::vector<std::string> out;
  for (int i = 0; i < nvars; ++i) out.push_back("X" + std::to_string(i));
  return out;
}

std::vector<std::string> omega_names(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

MultiPoly parse_poly(const Extension& L, std::string_view text, const std::vector<std::string>& names,
                     const std::map<std::string, int>& aliases) {
  const int nv = static_cast<int>(names.size());
  VariableTable vars;
  for (int i = 0; i < nv; ++i) vars.emplace(names[std::size_t(i)], i);
  for (const auto& [name, slot] : aliases) vars.emplace(name, slot);
  vars.emplace("t", nv);
  RationalPoly rp = parse_rational_poly(text, vars, nv + 1);
  MultiPoly out(L, nv);
  const ExtElement t = ExtElement::generator(L);
  for (const auto& [m, c] : rp.terms) {
    Exponent e(m.begin(), m.begin() + nv);
    out.add_term(e, t.pow(m[std::size_t(nv)]).scaled(c));
  }
  return out;
}

}  // namespace severi
