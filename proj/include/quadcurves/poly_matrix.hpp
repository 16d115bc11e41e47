#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadcurves/polynomial.hpp"

namespace qc {

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t rows = 0, std::size_t cols = 0, FieldSpec field = {});
  /// Throws MathError("dimension-mismatch") on ragged input.
  static PolyMatrix from_rows(const std::vector<std::vector<Polynomial>>& rows, FieldSpec field = {});
  static PolyMatrix from_strings(const std::vector<std::vector<std::string>>& rows, FieldSpec field = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_zero() const;
  /// Copies `block` with its top-left corner at (r, c).
  void place(const PolyMatrix& block, std::size_t r, std::size_t c);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Polynomial> data_;
};

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

/// Rank over the fraction field by fraction-free (Bareiss) elimination.
int rank_exact(const PolyMatrix& m);
/// Largest scalar rank over Z/p after evaluating at `trials` pseudo-random
/// points (p = 2^31-1 for rational input). Never exceeds the exact rank.
int rank_randomized(const PolyMatrix& m, int trials = 3, std::uint64_t seed = 0x5eed);
Polynomial determinant(const PolyMatrix& m);

/// Every r x r minor, rows and columns in lexicographic subset order.
std::vector<Polynomial> all_minors(const PolyMatrix& m, int r);

struct MinorWitness {
  /// Minors whose ideal realizes `codim`.
  std::vector<Polynomial> minors;
  /// Codimension of the ideal they generate (5 for the unit ideal).
  int codim = 0;
  bool reached = false;
};

/// Collects nonzero r-minors in a fixed pseudo-random order until the ideal
/// they generate has codimension >= target (or all minors are exhausted).
/// The result is a lower bound for codim I_r(m).
MinorWitness minors_codim_witness(const PolyMatrix& m, int r, int target, std::uint64_t seed = 0x5eed);

}  // namespace qc
