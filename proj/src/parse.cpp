#include "severi/parse.hpp"

#include <cctype>

#include "severi/errors.hpp"

namespace severi {

namespace {

using Terms = std::map<std::vector<int>, Scalar>;

void add_into(Terms& acc, const std::vector<int>& mono, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  } else if (sgn(c) == 0) {
    acc.erase(it);
  }
}

Terms poly_mul(const Terms& x, const Terms& y) {
  Terms out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      std::vector<int> m(mx.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mx[i] + my[i];
      add_into(out, m, cx * cy);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableTable& vars, int nvars)
      : text_(text), vars_(vars), nvars_(nvars) {}

  Terms parse() {
    Terms t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Terms constant(const Scalar& c) const {
    Terms t;
    if (sgn(c) != 0) t.emplace(std::vector<int>(nvars_, 0), c);
    return t;
  }

  Terms expr() {
    Terms acc;
    bool first = true;
    for (;;) {
      int sign = 1;
      skip_ws();
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      Terms t = term();
      for (auto& [m, c] : t) add_into(acc, m, sign * c);
      first = false;
    }
    return acc;
  }

  Terms term() {
    Terms acc = power();
    for (;;) {
      if (accept('*')) {
        acc = poly_mul(acc, power());
      } else if (accept('/')) {
        Terms d = power();
        if (d.size() != 1 || d.begin()->first != std::vector<int>(nvars_, 0)) {
          fail("division by a non-constant");
        }
        Scalar dv = d.begin()->second;
        for (auto& [m, c] : acc) c /= dv;
      } else {
        break;
      }
    }
    return acc;
  }

  long integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Terms power() {
    Terms base = primary();
    if (accept('^')) {
      long e = integer_literal();
      Terms r = constant(Scalar(1));
      for (long i = 0; i < e; ++i) r = poly_mul(r, base);
      return r;
    }
    return base;
  }

  Terms primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Terms t = expr();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (c == '-') {
      ++pos_;
      Terms t = power();
      for (auto& [m, v] : t) v = -v;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Scalar(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown variable '" + std::string(name) + "'");
      std::vector<int> m(nvars_, 0);
      m[it->second] = 1;
      Terms t;
      t.emplace(std::move(m), Scalar(1));
      return t;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableTable& vars_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPoly parse_rational_poly(std::string_view text, const VariableTable& vars, int nvars) {
  Parser p(text, vars, nvars);
  RationalPoly out;
  out.nvars = nvars;
  out.terms = p.parse();
  return out;
}

}  // namespace severi
