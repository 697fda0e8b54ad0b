#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "severi/errors.hpp"
#include "severi/serialize.hpp"
#include "severi/verify.hpp"
#include "test_support.hpp"

using namespace severi;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> body_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

struct SeedEnv {
  explicit SeedEnv(const char* v) { setenv("SEVERI_SEED", v, 1); }
  ~SeedEnv() { unsetenv("SEVERI_SEED"); }
};

}  // namespace

TEST_CASE("field specs") {
  CHECK(cli::parse_field_spec("shanks:t=1", std::nullopt)->degree() == 3);
  CHECK(cli::parse_field_spec("finite:p=7", std::nullopt)->base().characteristic() == 7);
  CHECK(cli::parse_field_spec("finite:p=5", 3)->degree() == 4);
  const Extension L = cli::parse_field_spec("poly:\"x^3 + x^2 - 2*x - 1\";galois:\"x^2 - 2\"", 2);
  CHECK(L->degree() == 3);
  CHECK(L->base().is_finite() == false);
  CHECK(cli::parse_field_spec("poly:\"x^4 + x^3 + x^2 + x + 1\";galois:\"x^2\"", std::nullopt)->degree() == 4);
  CHECK(cli::parse_field_spec("poly:x^2 + 1;galois:-x;p=3", std::nullopt)->base().characteristic() == 3);
  using test_support::error_code_of;
  CHECK(error_code_of([] { cli::parse_field_spec("shanks:t=1", 3); }) == ErrorCode::InvalidInput);
  CHECK(error_code_of([] { cli::parse_field_spec("finite:p=4", std::nullopt); }) == ErrorCode::NotPrime);
  CHECK(error_code_of([] { cli::parse_field_spec("shanks:t=x", std::nullopt); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { cli::parse_field_spec("nothing", std::nullopt); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { cli::parse_field_spec("cubic:t=1", std::nullopt); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { cli::parse_field_spec("poly:\"x^3 - 2\"", std::nullopt); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { cli::parse_field_spec("poly:\"x^3 + x^2 - 2*x - 1\";galois:\"x\"", std::nullopt); }) ==
        ErrorCode::WrongOrder);
}

TEST_CASE("seed precedence") {
  CHECK(cli::effective_seed(4) == 4);
  SeedEnv env("9");
  CHECK(cli::effective_seed(4) == 9);
}

TEST_CASE("surface text is the model's equations in w-grammar") {
  const Outcome o = run({"surface", "--field", "shanks:t=1", "--a", "2", "--emit", "text"});
  CHECK(o.code == cli::kExitOk);
  const SurfaceModel model = surface_model(make_shanks_cubic(1), 2);
  CHECK(body_lines(o.out) == equation_lines(model));
  CHECK(body_lines(o.out).size() == 27);
  // Lines parse back to the same polynomials.
  for (std::size_t i = 0; i < model.equations.size(); ++i) {
    CHECK(parse_poly(model.extension, body_lines(o.out)[i], omega_names(10)) == model.equations[i]);
  }
  const Outcome m = run({"surface", "--print-matrix"});
  CHECK(m.out.find("# splitting matrix M") != std::string::npos);
  CHECK(body_lines(m.out) == body_lines(o.out));
}

TEST_CASE("surface check over a finite field") {
  const Outcome o = run({"surface", "--field", "finite:p=7", "--a", "3", "--check"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out.find("# pass point count [57 (expected 57)]") != std::string::npos);
  CHECK(o.out.find("# surface-check: 5 pass, 0 fail, 0 flagged") != std::string::npos);
  const Outcome j = run({"surface", "--field", "finite:p=2", "--a", "1", "--check", "--method", "exhaustive",
                         "--emit", "json"});
  CHECK(j.code == cli::kExitOk);
  const Json doc = parse_json(j.out);
  CHECK(doc["check"]["schema"] == 1);
  CHECK(doc["check"]["checks"][3]["witness"] == "7 (expected 7)");
  CHECK(run({"surface", "--field", "finite:p=7", "--method", "exhaustive", "--check"}).code == cli::kExitInputError);
}

TEST_CASE("input errors exit with 2 and print nothing on stdout") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"surface", "--a", "0"},
           {"surface", "--a", "7", "--field", "finite:p=7"},
           {"surface", "--a", "two"},
           {"surface", "--field", "finite:p=9"},
           {"verify", "--field", "shanks:t"},
           {"verify", "--suite", "nonsense"},
           {"verify", "--suite", "matrix", "--field", "finite:p=5", "--n", "3"},
           {"verify", "--prime", "4"},
           {"surface", "--provenance", "appendix", "--field", "finite:p=3", "--n", "3"},
           {"surface", "--emit", "xml"},
           {"unknown"},
           {},
       }) {
    const Outcome o = run(args);
    CAPTURE(o.err);
    CHECK(o.code == cli::kExitInputError);
    CHECK(o.out.empty());
  }
  const Outcome z = run({"surface", "--a", "0"});
  CHECK(z.err.find("ZeroA") != std::string::npos);
  SeedEnv env("not-a-number");
  CHECK(run({"surface"}).code == cli::kExitInputError);
}

TEST_CASE("help exits cleanly") {
  const Outcome h = run({"--help"});
  CHECK(h.code == cli::kExitOk);
  CHECK(h.out.find("surface") != std::string::npos);
}

TEST_CASE("picard and algebra") {
  const Outcome p = run({"picard", "--field", "shanks:t=1", "--a", "2", "--dprime", "1"});
  CHECK(p.code == cli::kExitOk);
  CHECK(body_lines(p.out) == std::vector<std::string>{"w0 + w6 + w9"});
  CHECK(p.out.find("# genus: 1") != std::string::npos);
  const Outcome p2 = run({"picard", "--dprime", "2", "--emit", "json"});
  const Json j2 = parse_json(p2.out);
  CHECK(j2["genus"] == 10);
  CHECK(j2["dprime"] == 2);
  CHECK(picard_from_json(make_shanks_cubic(1), j2).dprime == 2);

  const Outcome a = run({"algebra", "--field", "shanks:t=1", "--a", "2"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out.find("\ndim 9\n") != std::string::npos);
  CHECK(a.out.find("\ncenter 1\n") != std::string::npos);
  CHECK(a.out.find("(e) * (e^2) = 2\n") != std::string::npos);
  const Outcome aj = run({"algebra", "--field", "finite:p=5", "--a", "2", "--emit", "json"});
  const Json doc = parse_json(aj.out);
  CHECK(doc["dim"] == 9);
  CHECK(doc["center_dimension"] == 1);
  CHECK(algebra_to_json(algebra_from_json(doc)).dump() == algebra_to_json(build_algebra(make_finite_extension(5, 3), 2)).dump());
}

TEST_CASE("verify") {
  const Outcome o = run({"verify", "--suite", "paper-eqs", "--field", "shanks:t=1", "--a", "2"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out.find("paper-eqs: 6 pass, 0 fail, 1 flagged") != std::string::npos);
  const Outcome j = run({"verify", "--suite", "cocycle", "--suite", "algebra", "--emit", "json", "--no-timing"});
  const Report r = report_from_json(parse_json(j.out));
  CHECK(r.ok());
  CHECK(r.elapsed_ms == 0);
  CHECK(r.checks.front().name.rfind("cocycle/", 0) == 0);
  CHECK(j.out == run({"verify", "--suite", "cocycle", "--suite", "algebra", "--emit", "json", "--no-timing"}).out);
  CHECK(run({"verify", "--field", "finite:p=5", "--n", "3", "--a", "2", "--suite", "cocycle"}).code == cli::kExitOk);
}

TEST_CASE("outputs are deterministic and round-trip") {
  const std::vector<std::string> args{"surface", "--split", "generic", "--seed", "3", "--emit", "json"};
  const Outcome a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const Json doc = parse_json(a.out);
  CHECK(doc["seed"] == 3);
  CHECK(surface_model_to_json(surface_model_from_json(doc)).dump() == [&] {
    Json d = doc;
    d.erase("seed");
    return d.dump();
  }());
  {
    SeedEnv env("5");
    const Outcome e = run(args);
    CHECK(parse_json(e.out)["seed"] == 5);
    CHECK(e.out != a.out);
  }
  const std::string path = "cli_test_output.json";
  CHECK(run({"surface", "--emit", "json", "-o", path}).out.empty());
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == run({"surface", "--emit", "json"}).out);
  std::remove(path.c_str());
}
