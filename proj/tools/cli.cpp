#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "severi/algebra.hpp"
#include "severi/errors.hpp"
#include "severi/serialize.hpp"
#include "severi/verify.hpp"

namespace severi::cli {

namespace {

struct Options {
  std::string field = "shanks:t=1";
  std::string a = "2";
  int n = -1;
  int dprime = 1;
  std::string emit = "text";
  std::string output;
  std::uint64_t seed = 0;
  bool check = false;
  bool print_matrix = false;
  std::string provenance = "main";
  std::string split = "structured";
  std::string method = "auto";
  std::vector<std::string> suites;
  std::vector<std::int64_t> primes;
  long norm_bound = 1000;
  bool no_timing = false;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string unquote(std::string s) {
  s = trim(std::move(s));
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

/// Splits on ';' outside double quotes.
std::vector<std::string> split_parts(const std::string& s) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (c == ';' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unbalanced quote in field spec");
  return out;
}

/// "key=value" or "key:value".
std::pair<std::string, std::string> key_value(const std::string& part, char sep) {
  const auto pos = part.find(sep);
  if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "expected '" + std::string(1, sep) + "' in '" + part + "'");
  return {trim(part.substr(0, pos)), unquote(part.substr(pos + 1))};
}

mpz_class parse_integer(const std::string& s, const std::string& what) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, what + " must be an integer, got '" + s + "'");
  return v;
}

Scalar parse_a(const std::string& text, const BaseField& k) {
  Scalar a;
  try {
    a = parse_scalar(trim(text));
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "a must be an integer or p/q, got '" + text + "'");
  }
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroA, "a must be nonzero");
  a = k.reduce(a);
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroA, "a vanishes in the base field");
  return a;
}

/// Input-shaped failures exit with 2; everything else is a failed computation.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::ParseError:
    case ErrorCode::NotPrime:
    case ErrorCode::NotIrreducible:
    case ErrorCode::NotGalois:
    case ErrorCode::WrongOrder:
    case ErrorCode::ZeroInput:
    case ErrorCode::ZeroA:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::TooLarge:
    case ErrorCode::MixedDegrees:
    case ErrorCode::ZeroPoint:
    case ErrorCode::LengthMismatch:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::FieldMismatch:
      return kExitInputError;
    default:
      return kExitVerificationFailed;
  }
}

std::string header(const std::string& command, const Options& o, const Extension& L, const Scalar& a) {
  std::ostringstream h;
  h << "# " << command << " field=" << o.field << " a=" << scalar_to_string(a) << " n=" << L->degree() - 1
    << " seed=" << o.seed;
  return h.str();
}

/// Report lines as comments, so text output stays a list of equations.
void commented(std::ostringstream& out, const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out << "# " << line << "\n";
}

CountMethod count_method(const std::string& s) {
  if (s == "exhaustive") return CountMethod::exhaustive;
  if (s == "image") return CountMethod::image;
  return CountMethod::automatic;
}

Report surface_check(const SurfaceModel& model, const Options& o) {
  Report r;
  r.suite = "surface-check";
  bool base = true;
  for (const auto& e : model.equations) base = base && e.is_base();
  r.add("coefficients in k", base);
  r.add("splitting matrix splits the cocycle", is_split(model.cocycle, model.M));
  r.add("equations vanish on the parametrization", check_model(model));
  const BaseField& k = model.extension->base();
  if (!k.is_finite()) return r;
  const std::int64_t p = k.characteristic().get_si();
  const std::vector<Point> pts = rational_points(model, count_method(o.method));
  std::int64_t expected = 0, power = 1;
  for (int i = 0; i <= model.n; ++i, power *= p) expected += power;
  r.add("point count", static_cast<std::int64_t>(pts.size()) == expected,
        std::to_string(pts.size()) + " (expected " + std::to_string(expected) + ")");
  const std::size_t sample = pts.size() <= 13 ? 0 : 13;
  const Report sm = smoothness_spot(model, p, sample);
  r.add("Jacobian rank " + std::to_string(model.m - 1 - model.n), sm.ok() && !sm.checks.empty(),
        std::to_string(sm.checks.size()) + " points checked");
  return r;
}

std::string term_text(const Scalar& c, const std::string& label) {
  const std::string s = scalar_to_string(c);
  if (label == "1") return s;
  if (c == 1) return label;
  if (c == -1) return "-" + label;
  return s + "*" + label;
}

std::string cmd_surface(const Options& o, const Extension& L, const Scalar& a, bool& failed) {
  SurfaceOptions opt;
  opt.seed = o.seed;
  opt.split = o.split == "generic" ? SplitMethod::generic : SplitMethod::structured;
  const SurfaceModel model = o.provenance == "appendix" ? appendix_model(L, a, 2, opt) : surface_model(L, a, opt);
  std::optional<Report> check;
  if (o.check) {
    check = surface_check(model, o);
    failed = !check->ok();
  }
  if (o.emit == "json") {
    Json j = surface_model_to_json(model);
    j["seed"] = o.seed;
    if (check) j["check"] = report_to_json(*check);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << header("surface", o, L, a) << " m=" << model.m << " provenance=" << provenance_name(model.provenance) << "\n";
  if (o.print_matrix) {
    out << "# splitting matrix M, one row per line\n";
    for (int i = 0; i < model.M.rows(); ++i) {
      out << "# [";
      for (int j = 0; j < model.M.cols(); ++j) out << (j ? ", " : "") << model.M(i, j).to_string();
      out << "]\n";
    }
  }
  for (const auto& line : equation_lines(model)) out << line << "\n";
  if (check) commented(out, report_text(*check));
  return out.str();
}

std::string cmd_picard(const Options& o, const Extension& L, const Scalar& a) {
  if (o.dprime < 1) throw Error(ErrorCode::InvalidInput, "--dprime must be positive");
  const SurfaceModel model = surface_model(L, a);
  const TwistedCurve tc = twisted_curve_model(model, o.dprime);
  if (o.emit == "json") {
    Json j = twisted_curve_to_json(tc, model);
    j["seed"] = o.seed;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << header("picard", o, L, a) << " dprime=" << o.dprime << "\n";
  out << tc.generator.equation.to_string(omega_names(model.m)) << "\n";
  out << "# degree in the plane: " << tc.generator.degree_in_plane << "\n";
  out << "# fermat: " << tc.fermat.poly.to_string(plane_names(tc.fermat.poly.nvars())) << "\n";
  out << "# pullback factor: " << tc.pullback_factor.to_string() << "\n";
  if (tc.fermat.genus) out << "# genus: " << *tc.fermat.genus << "\n";
  return out.str();
}

std::string cmd_algebra(const Options& o, const Extension& L, const Scalar& a) {
  const CyclicAlgebra A = build_algebra(L, a);
  if (o.emit == "json") {
    Json j = algebra_to_json(A);
    j["seed"] = o.seed;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << header("algebra", o, L, a) << "\n";
  out << "dim " << A.dim << "\n";
  out << "center " << center_dimension(A) << "\n";
  out << "associative " << (is_associative(A.constants) ? "true" : "false") << "\n";
  for (int i = 0; i < A.dim; ++i) {
    for (int j = 0; j < A.dim; ++j) {
      std::string rhs;
      for (int l = 0; l < A.dim; ++l) {
        const Scalar& c = A.constants.at(i, j, l);
        if (sgn(c) == 0) continue;
        std::string t = term_text(c, A.labels[std::size_t(l)]);
        if (rhs.empty()) {
          rhs = t;
        } else if (t.front() == '-') {
          rhs += " - " + t.substr(1);
        } else {
          rhs += " + " + t;
        }
      }
      out << "(" << A.labels[std::size_t(i)] << ") * (" << A.labels[std::size_t(j)] << ") = " << (rhs.empty() ? "0" : rhs)
          << "\n";
    }
  }
  return out.str();
}

std::string cmd_verify(const Options& o, const Extension& L, const Scalar& a, bool& failed) {
  VerifyConfig c;
  c.field = L;
  c.a = a;
  c.seed = o.seed;
  c.norm_bound = o.norm_bound;
  if (!o.primes.empty()) {
    for (auto p : o.primes) BaseField::prime(mpz_class(static_cast<long>(p)));
    c.primes = o.primes;
  }
  if (o.norm_bound < 0) throw Error(ErrorCode::InvalidInput, "--norm-bound must be non-negative");
  const std::vector<std::string> applicable = applicable_suites(c);
  for (const auto& s : o.suites) {
    const auto all = suite_names();
    if (std::find(all.begin(), all.end(), s) == all.end()) throw Error(ErrorCode::InvalidInput, "unknown suite '" + s + "'");
    if (std::find(applicable.begin(), applicable.end(), s) == applicable.end()) {
      throw Error(ErrorCode::InvalidInput, "suite '" + s + "' does not apply to degree " + std::to_string(L->degree()));
    }
  }
  Report r;
  if (o.suites.empty()) {
    r = run_all(c);
  } else if (o.suites.size() == 1) {
    r = run_suite(o.suites.front(), c);
  } else {
    r.suite = "selected";
    for (const auto& s : o.suites) {
      Report one = run_suite(s, c);
      r.elapsed_ms += one.elapsed_ms;
      r.append(one, s + "/");
    }
  }
  if (o.no_timing) r.elapsed_ms = 0;
  failed = !r.ok();
  if (o.emit == "json") {
    Json j = report_to_json(r);
    j["seed"] = o.seed;
    return j.dump(2) + "\n";
  }
  return header("verify", o, L, a) + "\n" + report_text(r);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "shanks:t=T | poly:\"f\";galois:\"g\"[;p=P] | finite:p=P")
      ->capture_default_str();
  sub->add_option("--a", o.a, "nonzero scalar: integer or p/q")->capture_default_str();
  sub->add_option("--n", o.n, "dimension n; finite fields get degree n+1 (default 2)")->check(CLI::PositiveNumber);
  sub->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
  sub->add_option("--seed", o.seed, "rng seed; SEVERI_SEED overrides")->capture_default_str();
}

}  // namespace

Extension parse_field_spec(const std::string& spec_in, std::optional<int> n) {
  const std::string spec = trim(spec_in);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "field spec needs a kind, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  Extension L;
  if (kind == "shanks") {
    const auto [key, value] = key_value(spec.substr(colon + 1), '=');
    if (key != "t") throw Error(ErrorCode::ParseError, "shanks spec is shanks:t=T");
    const mpz_class t = parse_integer(value, "t");
    if (!t.fits_slong_p()) throw Error(ErrorCode::TooLarge, "t out of range");
    L = make_shanks_cubic(t.get_si());
  } else if (kind == "finite") {
    const auto [key, value] = key_value(spec.substr(colon + 1), '=');
    if (key != "p") throw Error(ErrorCode::ParseError, "finite spec is finite:p=P");
    const mpz_class p = parse_integer(value, "p");
    BaseField::prime(p);
    return make_finite_extension(p, n.value_or(2) + 1);
  } else if (kind == "poly") {
    std::optional<std::string> f, g, p;
    for (const auto& part : split_parts(spec)) {
      const std::string t = trim(part);
      const char sep = t.rfind("p=", 0) == 0 ? '=' : ':';
      const auto [key, value] = key_value(t, sep);
      if (key == "poly") f = value;
      else if (key == "galois") g = value;
      else if (key == "p") p = value;
      else throw Error(ErrorCode::ParseError, "unknown field spec key '" + key + "'");
    }
    if (!f || !g) throw Error(ErrorCode::ParseError, "poly spec needs both poly:\"f\" and galois:\"g\"");
    const BaseField k = p ? BaseField::prime(parse_integer(*p, "p")) : BaseField::rationals();
    L = make_extension(k, parse_upoly(k, *f), parse_upoly(k, *g));
  } else {
    throw Error(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
  }
  if (n && *n != L->degree() - 1) {
    throw Error(ErrorCode::InvalidInput, "--n " + std::to_string(*n) + " does not match the field degree " +
                                             std::to_string(L->degree()));
  }
  return L;
}

std::uint64_t effective_seed(std::uint64_t flag_value) {
  const char* env = std::getenv("SEVERI_SEED");
  if (env == nullptr) return flag_value;
  const mpz_class v = parse_integer(trim(env), "SEVERI_SEED");
  if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorCode::ParseError, "SEVERI_SEED out of range");
  return v.get_ui();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact constructions for cyclic Brauer-Severi varieties", "severi"};
  app.require_subcommand(1);
  CLI::App* surface = app.add_subcommand("surface", "equations over k of the Brauer-Severi variety");
  CLI::App* picard = app.add_subcommand("picard", "twisted Fermat generator of d' Pic");
  CLI::App* algebra = app.add_subcommand("algebra", "structure constants of the cyclic algebra");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  for (CLI::App* sub : {surface, picard, algebra, verify}) add_common(sub, o);
  surface->add_flag("--check", o.check, "verify the model; counts points over finite fields");
  surface->add_flag("--print-matrix", o.print_matrix, "print the splitting matrix");
  surface->add_option("--provenance", o.provenance, "main or appendix construction")
      ->check(CLI::IsMember({"main", "appendix"}))
      ->capture_default_str();
  surface->add_option("--split", o.split, "Hilbert 90 splitting")
      ->check(CLI::IsMember({"structured", "generic"}))
      ->capture_default_str();
  surface->add_option("--method", o.method, "point counting method for --check")
      ->check(CLI::IsMember({"auto", "exhaustive", "image"}))
      ->capture_default_str();
  picard->add_option("--dprime", o.dprime, "d'")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--suite", o.suites, "suite name (repeatable); all applicable suites by default");
  verify->add_option("--prime", o.primes, "finite-field primes (repeatable)");
  verify->add_option("--norm-bound", o.norm_bound, "norm witness search bound")->capture_default_str();
  verify->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::string text;
  bool failed = false;
  try {
    o.seed = effective_seed(o.seed);
    const Extension L = parse_field_spec(o.field, o.n > 0 ? std::optional<int>(o.n) : std::nullopt);
    const Scalar a = parse_a(o.a, L->base());
    if (surface->parsed()) text = cmd_surface(o, L, a, failed);
    else if (picard->parsed()) text = cmd_picard(o, L, a);
    else if (algebra->parsed()) text = cmd_algebra(o, L, a);
    else text = cmd_verify(o, L, a, failed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << text)) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitInputError;
    }
  }
  if (failed) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace severi::cli
