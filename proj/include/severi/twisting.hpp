#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "severi/cohomology.hpp"
#include "severi/multipoly.hpp"
#include "severi/veronese.hpp"

namespace severi {

/// sum_i a^(i d') X_i^((n+1) d').
struct FermatHypersurface {
  int n = 0;
  int dprime = 0;
  Scalar a;
  MultiPoly poly;
  /// (3d'-1)(3d'-2)/2 for plane curves.
  std::optional<long> genus;
};

/// Checks F(A_a x) = a^d' F at construction. Throws ZeroA.
FermatHypersurface fermat(const Extension& L, int n, int dprime, const Scalar& a);

enum class Provenance { main_path, appendix_path };
enum class SplitMethod { structured, generic };

std::string provenance_name(Provenance p);
Provenance parse_provenance(const std::string& s);

struct SurfaceOptions {
  SplitMethod split = SplitMethod::structured;
  std::uint64_t seed = 0;
  /// Also run the other split and check both differ by a GL_m(k) factor.
  bool cross_check = false;
  /// Normal basis; searched from the generator t when absent.
  std::optional<NormalBasis> normal_basis;
};

/// Model Y = { w : Q(M w) = 0 for Q in the Veronese ideal } over k, where M
/// splits the lifted cocycle (xi sigma(M) = M). Its parametrization is
/// w = M^-1 Ver(x).
struct SurfaceModel {
  Extension extension;
  Scalar a;
  int n = 0;
  int m = 0;
  Matrix M;
  std::vector<MultiPoly> equations;
  ParametrizationMap parametrization;
  Provenance provenance = Provenance::main_path;
  NormalBasis normal_basis;
  /// The honest m x m cocycle that M splits.
  Cocycle cocycle;
};

/// Trace forms sum_j sigma^j(l_i F) reduced to an echelon basis with
/// k-coefficients spanning the same L-space. Throws NotGaloisStable or MixedDegrees.
std::vector<MultiPoly> descend_to_base(const std::vector<MultiPoly>& family, const NormalBasis& nb);

/// Both model invariants: k-coefficients, and every equation vanishes on the
/// parametrization identically.
bool check_model(const SurfaceModel& model);

SurfaceModel surface_model(const Extension& L, const Scalar& a, const SurfaceOptions& options = {});

/// The alternative model through the canonical embedding of the degree 3d'
/// Fermat curve; the cocycle is induced on Ver_{d-3} with the factor
/// det(A)/lambda where F(A x) = lambda F.
SurfaceModel appendix_model(const Extension& L, const Scalar& a, int dprime = 2,
                            const SurfaceOptions& options = {});

struct PicardGenerator {
  int dprime = 0;
  /// Homogeneous of degree d' in w, coefficients in k.
  MultiPoly equation;
  int degree_in_plane = 0;
};

/// sum_i (sum_j l_{1+((i+j) mod N)} w_{X_j^N})^d'.
PicardGenerator picard_generator(const Extension& L, const NormalBasis& nb, int dprime);

struct TwistedCurve {
  std::vector<MultiPoly> equations;  // surface equations, then the generator
  PicardGenerator generator;
  FermatHypersurface fermat;
  /// generator(parametrization) = pullback_factor * fermat.poly.
  ExtElement pullback_factor;
};

TwistedCurve twisted_curve_model(const Extension& L, const Scalar& a, int dprime,
                                 const SurfaceOptions& options = {});
/// Same, on an already built main-path model.
TwistedCurve twisted_curve_model(const SurfaceModel& model, int dprime);

enum class CheckStatus { pass, fail, flagged };
std::string status_name(CheckStatus s);

struct EquationCheck {
  int index = 0;  // 1-based
  std::string printed;
  CheckStatus status = CheckStatus::fail;
  bool homogeneous = true;
  std::string residual;  // pullback of lhs - rhs, "0" when it vanishes
  std::optional<std::string> reconstruction;
};

/// The seven cubic relations among the w-coordinates, substituted into the
/// structured parametrization. The seventh is inhomogeneous as printed and
/// is flagged; a homogeneous reconstruction is searched among products of
/// its right-hand factors and attached when one vanishes.
std::vector<EquationCheck> verify_displayed_equations(const SurfaceModel& model);

struct Triviality {
  Coboundary coboundary;
  /// M^-1 M' with M' = mu Ind(P): a k-rational change of coordinates with
  /// span{Q(M w)} = span{Q(T^-1 w)}.
  Matrix T;
  bool spans_match = false;
  bool T_rational = false;
};

/// Given a norm witness, exhibits the model as a k-linear image of the
/// standard Veronese surface.
Triviality triviality_isomorphism(const SurfaceModel& model, const ExtElement& lambda);

/// Texts of the equations, one per entry, in w0..w{m-1}.
std::vector<std::string> equation_lines(const SurfaceModel& model);

}  // namespace severi
