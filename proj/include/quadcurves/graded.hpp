#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadcurves/linalg.hpp"
#include "quadcurves/poly_matrix.hpp"

namespace qc {

/// Free module R(n_1) + ... + R(n_r); `twists` holds the n_i, so R(-2) is -2.
/// The generator of R(n) sits in degree -n.
struct FreeGradedModule {
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  /// dim_K of the degree-j piece.
  std::int64_t dim(int j) const;
  FreeGradedModule dual() const;

  friend bool operator==(const FreeGradedModule&, const FreeGradedModule&) = default;
};

/// One basis element of a graded piece: summand index and monomial multiplier.
struct PieceElement {
  std::size_t summand;
  Monomial mono;
};

/// Monomial basis of M_j, summand-major, monomials grevlex-descending.
std::vector<PieceElement> piece_basis(const FreeGradedModule& m, int j);

/// Homogeneous map source -> target given by a target.rank() x source.rank()
/// matrix. A well-graded entry (i, k) is zero or homogeneous of degree
/// target.twists[i] - source.twists[k].
struct GradedMap {
  FreeGradedModule source;
  FreeGradedModule target;
  PolyMatrix matrix;

  /// Throws MathError("dimension-mismatch") when the matrix shape disagrees with the ranks.
  GradedMap(FreeGradedModule source, FreeGradedModule target, PolyMatrix matrix);

  /// First entry that is not homogeneous of the required degree, as (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> degree_violation() const;
  GradedMap dual() const;
};

/// Scalar matrix of the degree-j piece: rows index piece_basis(target, j),
/// columns index piece_basis(source, j).
ScalarMatrix graded_piece(const GradedMap& m, int j);

/// 0 -> F_n -> ... -> F_1 -> F_0 with matrices[k] : F_{k+1} -> F_k.
/// For the resolution of an ideal I, F_0 = R and matrices[0] is the row of
/// generators of I.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// Throws MathError("dimension-mismatch") if shapes do not chain.
  FreeComplex(std::vector<FreeGradedModule> modules, std::vector<PolyMatrix> matrices);

  std::size_t length() const { return matrices_.size(); }
  const std::vector<FreeGradedModule>& modules() const { return modules_; }
  const std::vector<PolyMatrix>& matrices() const { return matrices_; }
  const FreeGradedModule& module(std::size_t k) const { return modules_.at(k); }
  /// phi_k : F_k -> F_{k-1}, 1 <= k <= length().
  GradedMap map(std::size_t k) const;
  const FieldSpec& field() const;

  /// Hom(-, R): D_j = F_{n-j}^*, twists negated, matrices transposed.
  FreeComplex dual() const;

 private:
  std::vector<FreeGradedModule> modules_;
  std::vector<PolyMatrix> matrices_;
};

/// Ranks of a complex indexed by (homological position, twist).
struct BettiTable {
  std::map<std::pair<int, int>, int> entries;

  static BettiTable of(const FreeComplex& c);
  /// Rank of F_i.
  int rank(int i) const;
  std::vector<int> ranks() const;
  /// Macaulay-style diagram: column i, row r counts summands R(-(r + i)) of F_i.
  std::string to_string() const;
};

/// sum_k (-1)^k dim (F_k)_j.
std::int64_t euler_characteristic(const FreeComplex& c, int j);

}  // namespace qc
