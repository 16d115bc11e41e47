#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "quadcurves/homology.hpp"
#include "quadcurves/ideal.hpp"

namespace qc {

// ------------------------------------------------------- reducible quadric xy

/// Curves on the plane pair xy = 0 with mu(I) = 4:
///   I = (xy, x^2 A + x h F, y^2 B + y h G, x A G + y B F + h F G)
/// with A in K[x,z,t], B in K[y,z,t], F, G, h in K[z,t].
struct ReducibleCurveSpec {
  Polynomial A, B, F, G, h;
  int d_F = 0;
  int d_G = 0;
  /// deg h, or deg A - d_F + 1 when h = 0 (the value that keeps the
  /// generators homogeneous and the resolution twists consistent).
  int d_h = 0;

  /// Validates and fills the degrees. Throws MathError with reason
  /// "wrong-variable-support", "not-homogeneous", "AB-zero-with-h-zero",
  /// "wrong-degrees", "not-regular-sequence" or "field-mismatch".
  static ReducibleCurveSpec make(Polynomial A, Polynomial B, Polynomial F, Polynomial G, Polynomial h);
  static ReducibleCurveSpec parse(const std::string& A, const std::string& B, const std::string& F,
                                  const std::string& G, const std::string& h, FieldSpec field = {});

  const FieldSpec& field() const { return F.field(); }
  /// 2 d_h + d_F + d_G.
  int degree() const { return 2 * d_h + d_F + d_G; }
};

Ideal build_reducible_ideal(const ReducibleCurveSpec& s);
/// 0 -> F_3 -> F_2 -> F_1 -> R with the closed-form matrices.
FreeComplex predicted_reducible_resolution(const ReducibleCurveSpec& s);
/// Dimensions of K[z,t]/(F, G) shifted to start in degree d_h.
std::map<int, std::int64_t> predicted_reducible_rao_dims(const ReducibleCurveSpec& s);

// -------------------------------------------------- smooth quadric xz - yt

/// (xz - yt, x^d, x^{d-1} y, ..., y^d). Throws MathError("invalid-degree") for d < 1.
Ideal build_smooth_minimal_ideal(int d, FieldSpec field = {});

struct StructureMatrices {
  PolyMatrix M;  // i x (i-1), y on the diagonal, -x below it
  PolyMatrix N;  // i x (i-1), z on the diagonal, -t below it
  PolyMatrix P;  // 1 x (i+1), x^i, x^{i-1} y, ..., y^i
};

/// M_i and N_i need i >= 2 (they are left empty for i < 2); P_i needs i >= 0.
StructureMatrices smooth_structure_matrices(int i, FieldSpec field = {});

/// R(-2) + R(-d)^{d+1} <- R(-d-1)^{2d} <- R(-d-2)^{d-1}. Needs d >= 2.
FreeComplex predicted_smooth_resolution(int d, FieldSpec field = {});

// ------------------------------------------------------ lines of a ruling

enum class Ruling { First, Second };

struct RulingLine {
  std::int64_t u = 0;
  std::int64_t v = 1;
  int multiplicity = 1;
};

/// Lines of one ruling of xz = yt with multiplicities.
struct MultilineSpec {
  std::vector<RulingLine> lines;
  Ruling ruling = Ruling::First;

  /// Throws MathError("repeated-line"), ("invalid-line") or ("invalid-multiplicity").
  void validate() const;
  int degree() const;
};

/// The two linear forms cutting out a ruling line:
/// first ruling (vx - ut, vy - uz), second ruling (vx - uy, vt - uz).
std::pair<Polynomial, Polynomial> ruling_line_forms(const RulingLine& l, Ruling r, FieldSpec field = {});
Polynomial smooth_quadric(FieldSpec field = {});

/// I_Q + I_{L_1}^{d_1} ... I_{L_m}^{d_m}.
Ideal build_multiline_ideal(const MultilineSpec& s, FieldSpec field = {});
/// d x (d + m) block-diagonal matrix, block i is d_i x (d_i + 1) with l_i on
/// the diagonal and l_i' on the superdiagonal.
PolyMatrix multiline_matrix(const MultilineSpec& s, FieldSpec field = {});
/// I_Q + (maximal minors of multiline_matrix).
Ideal determinantal_multiline_ideal(const MultilineSpec& s, FieldSpec field = {});
/// Intersection of the I_Q + I_{L_i}^{d_i}.
Ideal multiline_intersection_form(const MultilineSpec& s, FieldSpec field = {});

// ---------------------------------------------------------- classification

/// Rank of the symmetric matrix of a quadratic form.
/// Throws MathError("wrong-degree") unless q is a nonzero quadric.
int quadric_rank(const Polynomial& q);

struct ClassificationReport {
  bool contains_quadric = false;
  /// Largest rank in the space of quadrics containing the curve.
  std::optional<int> quadric_rank;
  /// Contained in at least two independent quadrics.
  bool extremal = false;
  /// Absent when neither the quadric test nor a Rao module applies.
  std::optional<bool> acm;
  int mu = 0;
  std::int64_t degree = 0;
  std::int64_t arithmetic_genus = 0;
  std::optional<std::map<int, std::int64_t>> rao_dims;
  /// Number of independent quadrics in the saturated ideal.
  int quadric_count = 0;
};

/// Saturates I, requires dim R/I = 2 (MathError("not-a-curve")), then reports
/// the quadric data, mu, degree and genus. With a resolution of the saturated
/// ideal the Rao module is computed as well.
ClassificationReport classify_curve(const Ideal& i, const std::optional<FreeComplex>& resolution = std::nullopt);

// --------------------------------------------------- Rao module presentations

/// s x (2s + 2) presentation, row i has y, -x in columns i, i+1 and z, -t in
/// columns s+1+i, s+2+i. Source R(-1)^{2s+2}, target R^s.
GradedMap type_ii_presentation(int s, FieldSpec field = {});

struct TypeICurve {
  /// (x^2, xp, p^2 h, phF + xG)
  Ideal ideal;
  /// (x^2, xp, p^2, phF + xG) intersected with (x, h)
  Ideal intersection;
  bool identity_holds = false;
};

/// Checks that x, p, hF, G is a regular sequence ("not-regular-sequence") and
/// that deg h = deg G - deg F - deg p + 1 ("wrong-degrees"), then verifies the
/// intersection identity by reduced Groebner basis equality.
TypeICurve type_i_minimal_curve(const Polynomial& p, const Polynomial& h, const Polynomial& F,
                                const Polynomial& G);

// --------------------------------------------------------- other complexes

/// Koszul complex on homogeneous f_1..f_k; exterior basis in lexicographic subset order.
FreeComplex koszul_complex(std::span<const Polynomial> fs);
/// R <- R^3 <- R^2 for a 2 x 3 matrix: maximal minors and the transpose.
/// Throws MathError("degenerate-matrix") if a minor vanishes.
FreeComplex hilbert_burch_complex(const PolyMatrix& m);
/// Applies a linear change of coordinates to every entry.
FreeComplex substitute_complex(const FreeComplex& c, const LinearSubstitution& sub);
/// Resolution of (x, y) cap (z, t) = (xz, xt, yz, yt).
FreeComplex skew_lines_resolution(FieldSpec field = {});

}  // namespace qc
