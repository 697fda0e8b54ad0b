#include <doctest.h>

#include "severi/errors.hpp"
#include "severi/serialize.hpp"
#include "test_support.hpp"

using namespace severi;

TEST_CASE("field and matrix round trip") {
  for (const Extension& L : {make_shanks_cubic(1), make_finite_extension(7, 3), test_support::cyclotomic5()}) {
    Json fj = field_to_json(L);
    Extension back = field_from_json(fj);
    CHECK(back->min_poly() == L->min_poly());
    CHECK(back->galois_gen() == L->galois_gen());
    CHECK(back->character() == L->character());
    CHECK(field_to_json(back) == fj);

    Matrix A = cyclic_cocycle(L, 3).at_generator;
    A(0, 0) = parse_element(L, "1/2 + t");
    Json mj = matrix_to_json(A);
    CHECK(mj["rows"] == L->degree());
    CHECK(matrix_to_json(matrix_from_json(back, mj)) == mj);
  }
  Json shanks = field_to_json(make_shanks_cubic(1));
  CHECK(shanks["f"] == "x^3 - x^2 - 4*x - 1");
  CHECK(shanks["char"] == "0");
}

TEST_CASE("cocycle round trip") {
  Extension L = make_shanks_cubic(1);
  Cocycle lift = lift_to_veronese(cyclic_cocycle(L, 2));
  Json j = cocycle_to_json(lift);
  CHECK(j["degree"] == 3);
  CHECK(j["normalized"] == true);
  Cocycle back = cocycle_from_json(L, j);
  CHECK(back.at_generator == lift.at_generator);
  CHECK(back.scale_exponents == lift.scale_exponents);
  CHECK(cocycle_to_json(back) == j);
}

TEST_CASE("surface model round trip") {
  Extension L = make_shanks_cubic(1);
  for (const SurfaceModel& model : {surface_model(L, 2), appendix_model(L, 2), surface_model(make_finite_extension(2, 3), 1)}) {
    Json j = surface_model_to_json(model);
    CHECK(j["schema"] == 1);
    CHECK(j["equations"].size() == 27);
    SurfaceModel back = surface_model_from_json(parse_json(j.dump()));
    CHECK(back.M == matrix_from_json(back.extension, j["M"]));
    CHECK(back.provenance == model.provenance);
    CHECK(back.equations.size() == model.equations.size());
    CHECK(surface_model_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("picard and algebra round trip") {
  Extension L = make_shanks_cubic(1);
  SurfaceModel model = surface_model(L, 2);
  TwistedCurve c = twisted_curve_model(model, 1);
  Json j = twisted_curve_to_json(c, model);
  CHECK(j["genus"] == 1);
  PicardGenerator g = picard_from_json(L, j);
  CHECK(g.equation == c.generator.equation);
  CHECK(g.dprime == 1);

  CyclicAlgebra A = build_algebra(make_finite_extension(5, 3), 2);
  Json aj = algebra_to_json(A);
  CHECK(aj["dim"] == 9);
  CHECK(aj["center_dimension"] == 1);
  CHECK(aj["structure_constants"].size() == 9);
  CHECK(aj["structure_constants"][0][0].size() == 9);
  CHECK(algebra_to_json(algebra_from_json(aj)) == aj);
  aj["structure_constants"][1][1][0] = "3";
  CHECK(error_code_of([&] { algebra_from_json(aj); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed input") {
  CHECK(error_code_of([] { parse_json("{not json"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { surface_model_from_json(parse_json("{\"schema\": 2}")); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { surface_model_from_json(parse_json("{\"schema\": 1}")); }) == ErrorCode::ParseError);
  Extension L = make_shanks_cubic(1);
  CHECK(error_code_of([&] { element_from_json(L, parse_json("[\"1\"]")); }) == ErrorCode::ParseError);
  CHECK(error_code_of([&] { matrix_from_json(L, parse_json("{\"rows\": 1, \"cols\": 1, \"entries\": []}")); }) ==
        ErrorCode::ParseError);
}
