#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadcurves/graded.hpp"
#include "quadcurves/ideal.hpp"

namespace qc {

// ------------------------------------------------------------ certification

struct ComplexCheck {
  bool ok = true;
  /// "composition-zero" or "twist-mismatch" when !ok.
  std::string witness;
  /// For composition-zero: k such that phi_k * phi_{k+1} != 0.
  /// For twist-mismatch: k of the offending map phi_k.
  int position = 0;
  std::string detail;
};

/// Entry degrees must match the twists, and every phi_k * phi_{k+1} must vanish.
ComplexCheck verify_complex(const FreeComplex& c);

struct RankReport {
  int rank = 0;
  int randomized_rank = 0;
  bool agreed = true;
};

/// Exact rank (Bareiss) with a randomized mod-p pre-check; the exact value is
/// authoritative.
RankReport matrix_rank(const PolyMatrix& m);
inline RankReport matrix_rank(const GradedMap& m) { return matrix_rank(m.matrix); }

/// Per-position data of the acyclicity criterion at F_k, k >= 1.
struct ExactnessWitness {
  int position = 0;
  int module_rank = 0;
  /// rank phi_k (the map leaving F_k)
  int rank_out = 0;
  /// rank phi_{k+1} (the map entering F_k); 0 at the end of the complex.
  int rank_in = 0;
  bool rank_ok = false;
  /// Lower bound on codim I_{rank_out}(phi_k) realized by `minors`.
  int codim = 0;
  std::vector<Polynomial> minors;
  bool grade_ok = false;

  bool ok() const { return rank_ok && grade_ok; }
};

struct ExactnessCertificate {
  bool pass = false;
  std::vector<ExactnessWitness> positions;
};

/// Buchsbaum-Eisenbud: 0 -> F_n -> ... -> F_1 is exact iff
/// rank F_k = rank phi_k + rank phi_{k+1} and grade I_{rank phi_k}(phi_k) >= k.
/// Throws MathError("not-a-complex") if verify_complex fails.
ExactnessCertificate buchsbaum_eisenbud_check(const FreeComplex& c);

/// No nonzero constant entry in any map.
bool is_minimal_complex(const FreeComplex& c);

struct ResolutionCertificate {
  ComplexCheck complex;
  bool minimal = false;
  std::optional<ExactnessCertificate> exactness;

  bool pass() const { return complex.ok && minimal && exactness && exactness->pass; }
  /// Name of the first failing check, empty on success.
  std::string failure() const;
};

ResolutionCertificate certify_resolution(const FreeComplex& c);

// ----------------------------------------------------------------- homology

struct Window {
  int lo = 0;
  int hi = 0;
};

/// Degreewise dimensions of a graded module.
struct ModuleTable {
  /// When present, the module (before any reflection) is its cokernel.
  std::optional<GradedMap> presentation;
  /// When present, dims[j] = dim coker(presentation)_{-j - reflection}.
  std::optional<int> reflection;
  /// Nonzero dimensions only.
  std::map<int, std::int64_t> dims;
  /// Degrees that were computed, in the table's own grading.
  Window window;

  std::int64_t at(int j) const;
  std::int64_t total() const;
  bool is_zero() const { return dims.empty(); }
  /// [min, max] of the nonzero degrees.
  std::optional<Window> support() const;
};

/// dims[j] = dim ker(phi_k)_j - rank(phi_{k+1})_j at F_k. At k = 0 the whole
/// of F_0 is the kernel, so the result is the cokernel of phi_1.
/// With an explicit window the two outermost degrees on each side must vanish
/// (MathError("window-too-small") otherwise). Without one, the cokernel
/// position is scanned upward from below its generator degrees until two
/// consecutive zeros past the top generator; interior positions use
/// [-(m + 4), m + 4] with m the largest |twist|.
ModuleTable homology_table(const FreeComplex& c, std::size_t position,
                           std::optional<Window> window = std::nullopt);

/// Table of coker(p).
ModuleTable cokernel_table(const GradedMap& p, std::optional<Window> window = std::nullopt);

/// Hartshorne-Rao module of the curve R/I from a certified resolution of I:
/// dim M(j) = dim Ext^2(I, R)_{-j-4}, with Ext^2 computed as homology of the
/// dual complex. `window` is in the grading of M.
/// Errors: "resolution-not-exact", "resolution-mismatch", "not-a-curve",
/// "not-locally-cm" (Ext^2 not of finite length).
ModuleTable rao_module(const Ideal& i, const FreeComplex& resolution,
                       std::optional<Window> window = std::nullopt);

/// dim M(j) == dim M(shift - j) for every j.
bool duality_check(const ModuleTable& mt, int shift);

/// Basis (reduced echelon form) of the degree-e forms l with l * M = 0.
/// Requires a presentation. Throws MathError("no-presentation").
std::vector<Polynomial> annihilator_space(const ModuleTable& mt, int form_degree);

}  // namespace qc
