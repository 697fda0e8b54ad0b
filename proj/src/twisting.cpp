#include "severi/twisting.hpp"

#include <array>
#include <functional>

#include "severi/errors.hpp"

namespace severi {

namespace {

Matrix shift_matrix(const Extension& L, int n, const Scalar& a) {
  Matrix A(L, n + 1, n + 1);
  A(0, n) = ExtElement::constant(L, a);
  for (int i = 1; i <= n; ++i) A(i, i - 1) = ExtElement::from_int(L, 1);
  return A;
}

MultiPoly omega(const Extension& L, int m, int i) { return MultiPoly::variable(L, m, i); }

/// c with G = c F, or nullopt.
std::optional<ExtElement> proportionality(const MultiPoly& G, const MultiPoly& F) {
  if (F.is_zero() || G.is_zero()) return std::nullopt;
  const auto& [e, f] = *F.terms().begin();
  ExtElement c = G.coefficient(e) / f;
  if (c.is_zero() || G != F.scaled(c)) return std::nullopt;
  return c;
}

NormalBasis default_normal_basis(const Extension& L, const SurfaceOptions& options) {
  if (options.normal_basis) {
    if (!is_normal_basis(*options.normal_basis)) throw Error(ErrorCode::InvalidInput, "not a normal basis");
    return *options.normal_basis;
  }
  return find_normal_basis(L, ExtElement::generator(L));
}

Matrix split(const Cocycle& xi, const NormalBasis& nb, const SurfaceOptions& options) {
  Matrix M = options.split == SplitMethod::structured ? split_structured(xi, nb)
                                                      : split_generic(xi, 32, options.seed);
  if (options.cross_check) {
    Matrix other = options.split == SplitMethod::structured ? split_generic(xi, 32, options.seed)
                                                            : split_structured(xi, nb);
    if (!(inverse(M) * other).is_base()) {
      throw Error(ErrorCode::InternalDescentFailure, "two splittings differ by a non-rational factor");
    }
  }
  return M;
}

/// Descent of span{q(M w)} for a k-rational family I stable under the
/// k-rational cocycle value B: sigma^j(l q(M w)) = sigma^j(l) (q o xi_j^-1)(M w)
/// lies in the span, so the trace forms are k-rational members and span it
/// exactly when their k-rank equals dim I.
std::vector<MultiPoly> descend_transported(const std::vector<MultiPoly>& ideal, const Cocycle& lift,
                                           const Matrix& M, const NormalBasis& nb) {
  const Matrix& B = lift.at_generator;
  if (!B.is_base()) throw Error(ErrorCode::InternalDescentFailure, "cocycle value has entries outside k");
  const std::vector<MultiPoly> basis = span_basis(ideal);
  std::vector<MultiPoly> moved;
  for (const auto& q : basis) {
    if (!q.is_base()) throw Error(ErrorCode::InternalDescentFailure, "ideal has entries outside k");
    moved.push_back(substitute_linear(q, B));
  }
  if (!span_equal(moved, basis)) throw Error(ErrorCode::NotGaloisStable, "ideal is not stable under the cocycle");
  // Tr(l c) = sum_i c_i Tr(l t^i).
  const Extension& L = M.field();
  const BaseField& k = L->base();
  const int N = L->degree();
  std::vector<std::vector<Scalar>> functional;
  for (const auto& l : nb.elements) {
    std::vector<Scalar> w;
    ExtElement ti = ExtElement::from_int(L, 1);
    for (int i = 0; i < N; ++i) {
      w.push_back(trace(l * ti));
      ti *= ExtElement::generator(L);
    }
    functional.push_back(std::move(w));
  }
  std::vector<MultiPoly> traces;
  for (const auto& q : basis) {
    const MultiPoly F = substitute_linear(q, M);
    for (const auto& w : functional) {
      MultiPoly T(L, F.nvars());
      for (const auto& [e, c] : F.terms()) {
        Scalar v = 0;
        for (int i = 0; i < N; ++i) v += c.coords()[std::size_t(i)] * w[std::size_t(i)];
        v = k.reduce(v);
        if (sgn(v) != 0) T.add_term(e, ExtElement::constant(L, v));
      }
      traces.push_back(std::move(T));
    }
  }
  std::vector<MultiPoly> out = span_basis(traces);
  if (out.size() != basis.size()) {
    throw Error(ErrorCode::InternalDescentFailure, "trace forms do not span the transported family");
  }
  return out;
}

SurfaceModel build_model(const Extension& L, const Scalar& a, const Cocycle& lift, const MonomialBasis& basis,
                         Provenance prov, const SurfaceOptions& options) {
  SurfaceModel model;
  model.extension = L;
  model.a = L->base().reduce(a);
  model.n = basis.n;
  model.m = basis.m();
  model.provenance = prov;
  model.normal_basis = default_normal_basis(L, options);
  model.cocycle = lift;
  model.M = split(lift, model.normal_basis, options);
  model.equations = descend_transported(veronese_ideal(L, basis), lift, model.M, model.normal_basis);
  model.parametrization = ParametrizationMap{basis, inverse(model.M)};
  if (!check_model(model)) throw Error(ErrorCode::VerificationFailed, "surface model failed its invariants");
  return model;
}

}  // namespace

FermatHypersurface fermat(const Extension& L, int n, int dprime, const Scalar& a_in) {
  const Scalar a = L->base().reduce(a_in);
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroA, "a must be nonzero");
  if (dprime < 1 || n < 1) throw Error(ErrorCode::InvalidInput, "need n >= 1 and d' >= 1");
  const BaseField& k = L->base();
  FermatHypersurface F;
  F.n = n;
  F.dprime = dprime;
  F.a = a;
  F.poly = MultiPoly(L, n + 1);
  for (int i = 0; i <= n; ++i) {
    Exponent e(static_cast<std::size_t>(n + 1), 0);
    e[std::size_t(i)] = (n + 1) * dprime;
    F.poly.add_term(e, ExtElement::constant(L, k.pow(a, long(i) * dprime)));
  }
  if (n == 2) F.genus = long(3 * dprime - 1) * (3 * dprime - 2) / 2;
  const ExtElement factor = ExtElement::constant(L, k.pow(a, dprime));
  if (substitute_linear(F.poly, shift_matrix(L, n, a)) != F.poly.scaled(factor)) {
    throw Error(ErrorCode::InternalDescentFailure, "Fermat invariance failed");
  }
  return F;
}

std::string provenance_name(Provenance p) { return p == Provenance::main_path ? "main_path" : "appendix_path"; }

Provenance parse_provenance(const std::string& s) {
  if (s == "main_path") return Provenance::main_path;
  if (s == "appendix_path") return Provenance::appendix_path;
  throw Error(ErrorCode::ParseError, "unknown provenance '" + s + "'");
}

std::vector<MultiPoly> descend_to_base(const std::vector<MultiPoly>& family, const NormalBasis& nb) {
  std::vector<MultiPoly> reduced = span_basis(family);
  if (reduced.empty()) return {};
  const int N = static_cast<int>(nb.elements.size());
  std::vector<MultiPoly> conj;
  for (const auto& F : reduced) conj.push_back(galois_poly(F, 1));
  if (!span_equal(reduced, conj)) throw Error(ErrorCode::NotGaloisStable, "family is not Galois-stable");
  std::vector<MultiPoly> traces;
  for (const auto& F : reduced) {
    for (const auto& l : nb.elements) {
      MultiPoly G = F.scaled(l);
      MultiPoly T(G.field(), G.nvars());
      for (int j = 0; j < N; ++j) T += galois_poly(G, j);
      traces.push_back(std::move(T));
    }
  }
  std::vector<MultiPoly> out = span_basis(traces);
  for (const auto& F : out) {
    if (!F.is_base()) throw Error(ErrorCode::InternalDescentFailure, "trace form has coefficients outside k");
  }
  if (out.size() != reduced.size() || !span_equal(out, reduced)) {
    throw Error(ErrorCode::InternalDescentFailure, "descended family spans a different space");
  }
  return out;
}

bool check_model(const SurfaceModel& model) {
  for (const auto& eq : model.equations)
    if (!eq.is_base()) return false;
  for (const auto& v : substitute_all(model.equations, model.parametrization.symbolic(model.extension)))
    if (!v.is_zero()) return false;
  return true;
}

SurfaceModel surface_model(const Extension& L, const Scalar& a, const SurfaceOptions& options) {
  Cocycle lift = lift_to_veronese(cyclic_cocycle(L, a));
  const int n = L->degree() - 1;
  return build_model(L, a, lift, monomial_basis(n, n + 1), Provenance::main_path, options);
}

SurfaceModel appendix_model(const Extension& L, const Scalar& a, int dprime, const SurfaceOptions& options) {
  if (L->degree() != 3) throw Error(ErrorCode::InvalidInput, "the canonical-embedding model needs n = 2");
  FermatHypersurface C = fermat(L, 2, dprime, a);
  const int d = 3 * dprime;
  MonomialBasis basis = canonical_embedding(d);
  Matrix A = cyclic_cocycle(L, a).at_generator;
  auto lambda = proportionality(substitute_linear(C.poly, A), C.poly);
  if (!lambda) throw Error(ErrorCode::InternalDescentFailure, "plane automorphism does not preserve the curve");
  // Canonical forms x^alpha dx/F_z pick up det(A)/lambda under A.
  Matrix B = induced_matrix(basis, A, *lambda / det(A));
  Cocycle lift = make_cocycle(L, B, a);
  if (!lift.normalized) throw Error(ErrorCode::InternalDescentFailure, "canonical lift is not honest");
  // Row x^e is scaled by a^(e_0) / a^(d'-1), since det(A) = a and lambda = a^d'.
  for (const Exponent& e : basis.list) lift.scale_exponents.push_back(e[0] - (dprime - 1));
  return build_model(L, a, lift, basis, Provenance::appendix_path, options);
}

PicardGenerator picard_generator(const Extension& L, const NormalBasis& nb, int dprime) {
  if (dprime < 1) throw Error(ErrorCode::InvalidInput, "d' must be positive");
  const int N = L->degree();
  MonomialBasis basis = monomial_basis(N - 1, N);
  const int m = basis.m();
  MultiPoly G(L, m);
  for (int i = 0; i < N; ++i) {
    MultiPoly form(L, m);
    for (int j = 0; j < N; ++j) {
      form += omega(L, m, basis.pure_power(j)).scaled(nb.elements[std::size_t((i + j) % N)]);
    }
    G += form.pow(dprime);
  }
  if (!G.is_base()) throw Error(ErrorCode::InternalDescentFailure, "Picard generator is not defined over k");
  return PicardGenerator{dprime, G, N * dprime};
}

TwistedCurve twisted_curve_model(const SurfaceModel& model, int dprime) {
  const Extension& L = model.extension;
  if (model.m != monomial_basis(model.n, model.n + 1).m() || model.parametrization.basis.degree != model.n + 1) {
    throw Error(ErrorCode::InvalidInput, "twisted curves live on degree-(n+1) Veronese models");
  }
  TwistedCurve tc;
  tc.generator = picard_generator(L, model.normal_basis, dprime);
  tc.fermat = fermat(L, model.n, dprime, model.a);
  // The generator is written for the structured split; w_s = T w with M = M_s T.
  Matrix Ms = split_structured(model.cocycle, model.normal_basis);
  Matrix T = inverse(Ms) * model.M;
  if (!T.is_base()) throw Error(ErrorCode::InternalDescentFailure, "model split is not k-equivalent");
  if (!T.is_identity()) tc.generator.equation = substitute_linear(tc.generator.equation, T);
  MultiPoly pulled = substitute(tc.generator.equation, model.parametrization.symbolic(L));
  auto c = proportionality(pulled, tc.fermat.poly);
  if (!c) throw Error(ErrorCode::VerificationFailed, "pullback of the generator is not a Fermat multiple");
  tc.pullback_factor = *c;
  tc.equations = model.equations;
  tc.equations.push_back(tc.generator.equation);
  return tc;
}

TwistedCurve twisted_curve_model(const Extension& L, const Scalar& a, int dprime, const SurfaceOptions& options) {
  return twisted_curve_model(surface_model(L, a, options), dprime);
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "fail";
}

namespace {

/// sum over (l index, w index) pairs; l index 0 stands for the coefficient 1.
using LinearFactor = std::vector<std::pair<int, int>>;

struct DisplayedEquation {
  int a_power;
  std::vector<std::pair<LinearFactor, int>> lhs, rhs;
};

LinearFactor F(std::array<int, 3> l, std::array<int, 3> w) {
  return {{l[0], w[0]}, {l[1], w[1]}, {l[2], w[2]}};
}

std::vector<DisplayedEquation> displayed_equations() {
  const LinearFactor A0 = F({3, 1, 2}, {0, 6, 9});
  const LinearFactor B = F({3, 1, 2}, {1, 5, 7});
  const LinearFactor C = F({3, 1, 2}, {2, 3, 8});
  return {
      {2, {{F({1, 2, 3}, {0, 6, 9}), 1}, {A0, 2}}, {{B, 3}}},
      {1, {{F({1, 2, 3}, {1, 5, 7}), 1}, {A0, 2}}, {{B, 2}, {C, 1}}},
      {1, {{F({1, 2, 3}, {2, 3, 8}), 1}, {A0, 2}}, {{B, 2}, {A0, 1}}},
      {1, {{F({2, 3, 1}, {2, 3, 8}), 1}, {A0, 2}}, {{B, 1}, {C, 2}}},
      {0, {{{{0, 4}}, 1}, {A0, 2}}, {{B, 1}, {C, 1}, {A0, 1}}},
      {1, {{F({2, 3, 1}, {0, 6, 9}), 1}, {A0, 2}}, {{C, 3}}},
      {0, {{F({2, 3, 1}, {1, 5, 7}), 1}, {A0, 2}}, {{C, 3}, {A0, 1}}},
  };
}

std::string factor_text(const LinearFactor& f) {
  std::string s;
  for (const auto& [l, w] : f) {
    if (!s.empty()) s += " + ";
    if (l > 0) s += "l" + std::to_string(l) + "*";
    s += "w" + std::to_string(w);
  }
  return f.size() > 1 ? "(" + s + ")" : s;
}

std::string side_text(const std::vector<std::pair<LinearFactor, int>>& side, int a_power) {
  std::string s;
  if (a_power == 1) s = "a";
  if (a_power > 1) s = "a^" + std::to_string(a_power);
  for (const auto& [f, e] : side) {
    if (!s.empty()) s += "*";
    s += factor_text(f);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

MultiPoly factor_poly(const Extension& L, const NormalBasis& nb, const LinearFactor& f) {
  MultiPoly p(L, 10);
  for (const auto& [l, w] : f) {
    const ExtElement c = l == 0 ? ExtElement::from_int(L, 1) : nb.elements[std::size_t(l - 1)];
    p += MultiPoly::variable(L, 10, w).scaled(c);
  }
  return p;
}

MultiPoly side_poly(const Extension& L, const NormalBasis& nb, const std::vector<std::pair<LinearFactor, int>>& side,
                    const ExtElement& coef) {
  MultiPoly p = MultiPoly::constant(L, 10, coef);
  for (const auto& [f, e] : side) p = p * factor_poly(L, nb, f).pow(e);
  return p;
}

int side_degree(const std::vector<std::pair<LinearFactor, int>>& side) {
  int d = 0;
  for (const auto& [f, e] : side) d += e;
  return d;
}

}  // namespace

std::vector<EquationCheck> verify_displayed_equations(const SurfaceModel& model) {
  if (model.n != 2 || model.m != 10) throw Error(ErrorCode::InvalidInput, "the displayed relations need n = 2");
  const Extension& L = model.extension;
  const NormalBasis& nb = model.normal_basis;
  // The displayed relations refer to the structured split.
  Matrix Ms = split_structured(model.cocycle, nb);
  ParametrizationMap param{model.parametrization.basis, inverse(Ms)};
  std::vector<MultiPoly> sym = param.symbolic(L);
  const std::vector<std::string> xyz = plane_names(3);
  const ExtElement a = ExtElement::constant(L, model.a);

  std::vector<EquationCheck> out;
  int index = 0;
  for (const auto& eq : displayed_equations()) {
    EquationCheck ck;
    ck.index = ++index;
    ck.printed = side_text(eq.lhs, eq.a_power) + " = " + side_text(eq.rhs, 0);
    MultiPoly lhs = side_poly(L, nb, eq.lhs, a.pow(eq.a_power));
    MultiPoly rhs = side_poly(L, nb, eq.rhs, ExtElement::from_int(L, 1));
    ck.homogeneous = side_degree(eq.lhs) == side_degree(eq.rhs);
    MultiPoly residual = substitute(lhs - rhs, sym);
    ck.residual = residual.to_string(xyz);
    if (!ck.homogeneous) {
      ck.status = CheckStatus::flagged;
      // Products of the right-hand factors with the left-hand degree.
      const int target = side_degree(eq.lhs);
      std::vector<LinearFactor> factors;
      for (const auto& [f, e] : eq.rhs) factors.push_back(f);
      MultiPoly lhs_pulled = substitute(lhs, sym);
      std::vector<int> ex(factors.size(), 0);
      std::function<bool(std::size_t, int)> search = [&](std::size_t i, int left) -> bool {
        if (i + 1 == factors.size()) {
          ex[i] = left;
          std::vector<std::pair<LinearFactor, int>> side;
          for (std::size_t j = 0; j < factors.size(); ++j) {
            if (ex[j] > 0) side.emplace_back(factors[j], ex[j]);
          }
          MultiPoly cand = side_poly(L, nb, side, ExtElement::from_int(L, 1));
          if (substitute(cand, sym) == lhs_pulled) {
            ck.reconstruction = side_text(eq.lhs, eq.a_power) + " = " + side_text(side, 0);
            return true;
          }
          return false;
        }
        for (int e = left; e >= 0; --e) {
          ex[i] = e;
          if (search(i + 1, left - e)) return true;
        }
        return false;
      };
      if (!factors.empty()) search(0, target);
    } else {
      ck.status = residual.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    }
    out.push_back(std::move(ck));
  }
  return out;
}

Triviality triviality_isomorphism(const SurfaceModel& model, const ExtElement& lambda) {
  const Extension& L = model.extension;
  Triviality tr{coboundary_from_witness(L, model.a, lambda), Matrix(), false, false};
  const MonomialBasis& basis = model.parametrization.basis;
  Matrix A = cyclic_cocycle(L, model.a).at_generator;
  // xi = kappa Ind(A) and Ind(A) = lambda^D Ind(P) sigma(Ind(P))^-1.
  ExtElement kappa;
  if (!pgl_equal(induced_matrix(basis, A, ExtElement::from_int(L, 1)), model.cocycle.at_generator, &kappa)) {
    throw Error(ErrorCode::InvalidInput, "model cocycle is not induced from the cyclic cocycle");
  }
  const ExtElement beta = kappa * lambda.pow(basis.degree);
  // Scalar Hilbert 90: mu = sum_j c_j sigma^j(r) with c_{j+1} = beta sigma(c_j).
  const int N = L->degree();
  ExtElement mu(L);
  ElementEnumerator en(L);
  for (long tries = 0; mu.is_zero(); ++tries) {
    if (tries > 100000) throw Error(ErrorCode::SearchExhausted, "no scalar Hilbert 90 solution found");
    ExtElement r = en.next();
    ExtElement c = ExtElement::from_int(L, 1);
    mu = ExtElement(L);
    for (int j = 0; j < N; ++j) {
      mu += c * galois_apply(r, j);
      c = beta * galois_apply(c, 1);
    }
  }
  Matrix Mp = induced_matrix(basis, tr.coboundary.P, ExtElement::from_int(L, 1)).scaled(mu);
  if (!is_split(model.cocycle, Mp)) throw Error(ErrorCode::InternalDescentFailure, "transported split fails");
  tr.T = inverse(model.M) * Mp;
  tr.T_rational = tr.T.is_base();
  // The quadrics through Ver span exactly the Veronese ideal in degree 2, so
  // with equal dimensions span{Q(T^-1 w)} = span(equations) iff every
  // equation vanishes on T Ver(x).
  const std::vector<MultiPoly> ideal = veronese_ideal(L, basis);
  bool vanish = ideal.size() == model.equations.size() && span_basis(ideal).size() == ideal.size() &&
                span_basis(model.equations).size() == ideal.size();
  if (model.m <= 10) {
    const std::vector<MultiPoly> sym = ParametrizationMap{basis, tr.T}.symbolic(L);
    for (std::size_t i = 0; vanish && i < model.equations.size(); ++i) {
      vanish = substitute(model.equations[i], sym).is_zero();
    }
  } else {
    // E(T Ver(x)) = mu^2 E(M^-1 Ver(P x)): it suffices that
    // Ind(P) Ver(x) = Ver(P x) and that E vanishes on M^-1 Ver.
    const Matrix& P = tr.coboundary.P;
    std::vector<MultiPoly> px;
    for (int i = 0; i <= basis.n; ++i) {
      std::vector<ExtElement> row;
      for (int j = 0; j <= basis.n; ++j) row.push_back(P(i, j));
      px.push_back(MultiPoly::linear_form(L, row));
    }
    const std::vector<MultiPoly> lhs = ParametrizationMap{basis, induced_matrix(basis, P, ExtElement::from_int(L, 1))}
                                           .symbolic(L);
    vanish = vanish && lhs == veronese_poly(basis, px) && check_model(model);
  }
  tr.spans_match = vanish;
  return tr;
}

std::vector<std::string> equation_lines(const SurfaceModel& model) {
  std::vector<std::string> out;
  const auto names = omega_names(model.m);
  for (const auto& eq : model.equations) out.push_back(eq.to_string(names));
  return out;
}

}  // namespace severi
