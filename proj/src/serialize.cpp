#include "severi/serialize.hpp"

#include "severi/errors.hpp"

namespace severi {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field_of(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

void require_schema(const Json& j) {
  if (get<int>(j, "schema") != kSchemaVersion) throw Error(ErrorCode::ParseError, "unsupported schema version");
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return scalar_to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "scalars are strings");
  return parse_scalar(j.get<std::string>());
}

Json field_to_json(const Extension& L) {
  Json j;
  j["f"] = L->min_poly().to_string("x");
  j["g"] = L->galois_gen().to_string("x");
  j["char"] = L->base().characteristic().get_str();
  j["chi"] = L->character();
  return j;
}

Extension field_from_json(const Json& j) {
  const mpz_class p(get<std::string>(j, "char"));
  const BaseField k = p == 0 ? BaseField::rationals() : BaseField::prime(p);
  UPoly f = parse_upoly(k, get<std::string>(j, "f"));
  UPoly g = parse_upoly(k, get<std::string>(j, "g"));
  return make_extension(k, f, g, get<int>(j, "chi"));
}

Json element_to_json(const ExtElement& x) {
  Json j = Json::array();
  for (const auto& c : x.coords()) j.push_back(scalar_to_json(c));
  return j;
}

ExtElement element_from_json(const Extension& L, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != L->degree()) {
    throw Error(ErrorCode::ParseError, "element needs " + std::to_string(L->degree()) + " coordinates");
  }
  std::vector<Scalar> c;
  for (const auto& v : j) c.push_back(L->base().reduce(scalar_from_json(v)));
  return ExtElement(L, std::move(c));
}

Json matrix_to_json(const Matrix& A) {
  Json j;
  j["rows"] = A.rows();
  j["cols"] = A.cols();
  Json entries = Json::array();
  for (int r = 0; r < A.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < A.cols(); ++c) row.push_back(element_to_json(A(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const Extension& L, const Json& j) {
  const int rows = get<int>(j, "rows");
  const int cols = get<int>(j, "cols");
  const Json& entries = field_of(j, "entries");
  if (rows < 0 || cols < 0 || !entries.is_array() || static_cast<int>(entries.size()) != rows) {
    throw Error(ErrorCode::ParseError, "matrix entries do not match rows");
  }
  Matrix A(L, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = entries[std::size_t(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::ParseError, "matrix row does not match cols");
    }
    for (int c = 0; c < cols; ++c) A(r, c) = element_from_json(L, row[std::size_t(c)]);
  }
  return A;
}

Json cocycle_to_json(const Cocycle& xi) {
  Json j;
  j["degree"] = xi.extension->degree();
  j["a"] = scalar_to_json(xi.a);
  j["at_generator"] = matrix_to_json(xi.at_generator);
  j["normalized"] = xi.normalized;
  if (!xi.scale_exponents.empty()) {
    j["scale_exponents"] = xi.scale_exponents;
    j["scalar_exponent"] = xi.scalar_exponent;
  }
  return j;
}

Cocycle cocycle_from_json(const Extension& L, const Json& j) {
  if (get<int>(j, "degree") != L->degree()) throw Error(ErrorCode::ParseError, "cocycle degree differs from field");
  Cocycle xi = make_cocycle(L, matrix_from_json(L, field_of(j, "at_generator")), scalar_from_json(field_of(j, "a")));
  if (xi.normalized != get<bool>(j, "normalized")) throw Error(ErrorCode::ParseError, "normalized flag is wrong");
  if (j.contains("scale_exponents")) {
    xi.scale_exponents = get<std::vector<int>>(j, "scale_exponents");
    xi.scalar_exponent = get<int>(j, "scalar_exponent");
  }
  return xi;
}

Json surface_model_to_json(const SurfaceModel& model) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["field"] = field_to_json(model.extension);
  j["a"] = scalar_to_json(model.a);
  j["n"] = model.n;
  j["m"] = model.m;
  j["M"] = matrix_to_json(model.M);
  j["equations"] = equation_lines(model);
  j["provenance"] = provenance_name(model.provenance);
  j["basis_degree"] = model.parametrization.basis.degree;
  Json nb = Json::array();
  for (const auto& l : model.normal_basis.elements) nb.push_back(element_to_json(l));
  j["normal_basis"] = std::move(nb);
  j["cocycle"] = cocycle_to_json(model.cocycle);
  return j;
}

SurfaceModel surface_model_from_json(const Json& j) {
  require_schema(j);
  SurfaceModel model;
  model.extension = field_from_json(field_of(j, "field"));
  const Extension& L = model.extension;
  model.a = L->base().reduce(scalar_from_json(field_of(j, "a")));
  model.n = get<int>(j, "n");
  model.m = get<int>(j, "m");
  model.provenance = parse_provenance(get<std::string>(j, "provenance"));
  model.M = matrix_from_json(L, field_of(j, "M"));
  const MonomialBasis basis = monomial_basis(model.n, get<int>(j, "basis_degree"));
  if (basis.m() != model.m || model.M.rows() != model.m || !model.M.is_square()) {
    throw Error(ErrorCode::ParseError, "m does not match the basis or the matrix");
  }
  const auto names = omega_names(model.m);
  for (const auto& line : get<std::vector<std::string>>(j, "equations")) {
    model.equations.push_back(parse_poly(L, line, names));
  }
  for (const auto& e : field_of(j, "normal_basis")) model.normal_basis.elements.push_back(element_from_json(L, e));
  if (static_cast<int>(model.normal_basis.elements.size()) != L->degree()) {
    throw Error(ErrorCode::ParseError, "normal basis length differs from the degree");
  }
  model.normal_basis.trace_value = trace(model.normal_basis.elements.front());
  if (!is_normal_basis(model.normal_basis)) throw Error(ErrorCode::ParseError, "normal_basis is not a normal basis");
  model.cocycle = cocycle_from_json(L, field_of(j, "cocycle"));
  model.parametrization = ParametrizationMap{basis, inverse(model.M)};
  if (!is_split(model.cocycle, model.M) || !check_model(model)) {
    throw Error(ErrorCode::VerificationFailed, "parsed model fails its invariants");
  }
  return model;
}

Json twisted_curve_to_json(const TwistedCurve& curve, const SurfaceModel& model) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["field"] = field_to_json(model.extension);
  j["a"] = scalar_to_json(model.a);
  j["dprime"] = curve.generator.dprime;
  j["equation"] = curve.generator.equation.to_string(omega_names(model.m));
  j["degree_in_plane"] = curve.generator.degree_in_plane;
  j["fermat"] = curve.fermat.poly.to_string(plane_names(model.n + 1));
  if (curve.fermat.genus) j["genus"] = *curve.fermat.genus;
  j["pullback_factor"] = element_to_json(curve.pullback_factor);
  return j;
}

PicardGenerator picard_from_json(const Extension& L, const Json& j) {
  require_schema(j);
  PicardGenerator g;
  g.dprime = get<int>(j, "dprime");
  g.degree_in_plane = get<int>(j, "degree_in_plane");
  const int m = binomial(2 * L->degree() - 1, L->degree() - 1);
  g.equation = parse_poly(L, get<std::string>(j, "equation"), omega_names(m));
  return g;
}

Json algebra_to_json(const CyclicAlgebra& A) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["field"] = field_to_json(A.extension);
  j["a"] = scalar_to_json(A.a);
  j["dim"] = A.dim;
  j["labels"] = A.labels;
  Json tensor = Json::array();
  for (int i = 0; i < A.dim; ++i) {
    Json plane = Json::array();
    for (int k = 0; k < A.dim; ++k) {
      Json line = Json::array();
      for (int l = 0; l < A.dim; ++l) line.push_back(scalar_to_json(A.constants.at(i, k, l)));
      plane.push_back(std::move(line));
    }
    tensor.push_back(std::move(plane));
  }
  j["structure_constants"] = std::move(tensor);
  j["associative"] = is_associative(A.constants);
  j["center_dimension"] = center_dimension(A);
  return j;
}

CyclicAlgebra algebra_from_json(const Json& j) {
  require_schema(j);
  Extension L = field_from_json(field_of(j, "field"));
  CyclicAlgebra A = build_algebra(L, scalar_from_json(field_of(j, "a")));
  const Json& tensor = field_of(j, "structure_constants");
  if (get<int>(j, "dim") != A.dim || !tensor.is_array() || static_cast<int>(tensor.size()) != A.dim) {
    throw Error(ErrorCode::ParseError, "structure constants have the wrong dimension");
  }
  for (int i = 0; i < A.dim; ++i) {
    const Json& plane = tensor[std::size_t(i)];
    if (!plane.is_array() || static_cast<int>(plane.size()) != A.dim) {
      throw Error(ErrorCode::ParseError, "structure constants have the wrong dimension");
    }
    for (int k = 0; k < A.dim; ++k) {
      const Json& line = plane[std::size_t(k)];
      if (!line.is_array() || static_cast<int>(line.size()) != A.dim) {
        throw Error(ErrorCode::ParseError, "structure constants have the wrong dimension");
      }
      for (int l = 0; l < A.dim; ++l) {
        if (L->base().reduce(scalar_from_json(line[std::size_t(l)])) != A.constants.at(i, k, l)) {
          throw Error(ErrorCode::ParseError, "structure constants differ from the cyclic algebra");
        }
      }
    }
  }
  return A;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace severi
