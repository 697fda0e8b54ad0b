#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "severi/kernels.hpp"
#include "severi/serialize.hpp"
#include "severi/twisting.hpp"

namespace severi {

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::optional<std::string> witness;
};

/// flagged is used only for the documented inhomogeneous relation.
struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  void add(std::string name, bool passed, std::optional<std::string> witness = std::nullopt);
  void append(const Report& other, const std::string& prefix);
};

/// {suite, checks: [{name, status, witness?}], elapsed_ms}.
Json report_to_json(const Report& r);
Report report_from_json(const Json& j);
/// One line per check: "status name [witness]", then a summary line.
std::string report_text(const Report& r);

/// (d-1)(d-2)/2. Throws InvalidInput for d < 1.
long genus_plane(int d);

/// The 10 x 10 splitting matrix for n = 2 as displayed: orbit blocks in
/// l_1, l_2, l_3 with a-power scales, row w4 the unit vector.
Matrix displayed_splitting_matrix(const Extension& L, const Scalar& a, const NormalBasis& nb);

enum class CountMethod { automatic, exhaustive, image };

/// F_p-points of the model. Exhaustive enumeration of P^(m-1)(F_p) is
/// permitted while p^m <= 3^10 (TooLarge otherwise); the image method counts
/// distinct rational points of M^-1 Ver(P^n(F_q)) and asserts injectivity.
std::vector<Point> rational_points(const SurfaceModel& model, CountMethod method = CountMethod::automatic,
                                   Exec exec = Exec::openmp);
/// Whether some counting method applies to a model of P^n over F_p,
/// i.e. exhaustive enumeration or the image method is within its caps.
bool point_count_feasible(std::int64_t p, int n);

/// Throws InvalidInput unless the model lives over F_p.
std::int64_t count_points(const SurfaceModel& model, std::int64_t p, CountMethod method = CountMethod::automatic,
                          Exec exec = Exec::openmp);

/// Rank of the Jacobian at each point, on the affine chart of its first
/// coordinate equal to 1; each must equal expected_rank.
Report smoothness_report(const std::vector<MultiPoly>& equations, const std::vector<Point>& points,
                         int expected_rank);
/// Jacobian rank m - 1 - n at up to `sample` points (all when 0), taken in
/// sorted order with an even stride.
Report smoothness_spot(const SurfaceModel& model, std::int64_t p, std::size_t sample = 0);

struct VerifyConfig {
  Extension field;
  Scalar a = 2;
  std::vector<std::int64_t> primes = {2, 3, 5, 7};
  std::uint64_t seed = 0;
  long norm_bound = 1000;
  Exec exec = Exec::openmp;
};

/// Shanks t = 1, a = 2.
VerifyConfig default_config();

/// cocycle, hilbert90, matrix, model, paper-eqs, picard, triviality,
/// finite-fields, appendix, algebra.
std::vector<std::string> suite_names();
/// Suites that apply to the configured degree.
std::vector<std::string> applicable_suites(const VerifyConfig& config);
/// Throws InvalidInput for unknown or inapplicable suites.
Report run_suite(const std::string& name, const VerifyConfig& config);
/// Every applicable suite; check names are prefixed "suite/".
Report run_all(const VerifyConfig& config);

}  // namespace severi
