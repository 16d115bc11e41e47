#pragma once

#include <cstddef>
#include <vector>

#include "quadcurves/field.hpp"

namespace qc {

using Vector = std::vector<Rational>;

/// Dense matrix over a FieldSpec; exact Gaussian elimination.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows = 0, std::size_t cols = 0, FieldSpec field = {})
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  std::size_t rank() const;
  /// Basis of {v : M v = 0}, in reduced form (free variables set to unit vectors).
  std::vector<Vector> kernel() const;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldSpec field_;
  std::vector<Rational> data_;
};

/// Incrementally built row space. Rows are kept reduced against earlier pivots,
/// so `reduce` yields a normal form modulo the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width, FieldSpec field = {}) : width_(width), field_(field) {}

  /// Adds v to the span; returns true if it increased the rank.
  bool insert(Vector v);
  /// Normal form of v modulo the span (zero iff v lies in the span).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  /// Reduced row echelon basis ordered by pivot column.
  std::vector<Vector> reduced_rows() const;

 private:
  std::size_t width_;
  FieldSpec field_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const Vector& v);

}  // namespace qc
