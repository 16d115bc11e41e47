#include "quadcurves/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qc {

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& a) { return a == 0; });
}

Vector ScalarMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vector ScalarMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool ScalarMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& a) { return a == 0; });
}

std::size_t ScalarMatrix::rank() const {
  // Eliminate along the smaller dimension.
  if (rows_ <= cols_) {
    EchelonBasis basis(cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r) basis.insert(row(r));
    return basis.rank();
  }
  EchelonBasis basis(rows_, field_);
  for (std::size_t c = 0; c < cols_; ++c) basis.insert(column(c));
  return basis.rank();
}

std::vector<Vector> ScalarMatrix::kernel() const {
  EchelonBasis basis(cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) basis.insert(row(r));
  std::vector<Vector> rref = basis.reduced_rows();
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& row : rref) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < rref.size(); ++k) {
      if (rref[k][free] != 0) v[pivots[k]] = field_.neg(rref[k][free]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (f == 0) continue;
    const Vector& row = rows_[k];
    for (std::size_t c = pivots_[k]; c < width_; ++c) {
      if (row[c] != 0) v[c] = field_.sub(v[c], field_.mul(f, row[c]));
    }
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool EchelonBasis::insert(Vector v) {
  for (auto& a : v) a = field_.normalize(a);
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;
  Rational inv = field_.inv(v[p]);
  for (std::size_t c = p; c < width_; ++c) {
    if (v[c] != 0) v[c] = field_.mul(v[c], inv);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> EchelonBasis::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vector> out;
  std::vector<std::size_t> piv;
  for (std::size_t idx : order) {
    out.push_back(rows_[idx]);
    piv.push_back(pivots_[idx]);
  }
  // Back substitution: clear each pivot column in every other row.
  for (std::size_t k = out.size(); k-- > 0;) {
    for (std::size_t m = 0; m < out.size(); ++m) {
      if (m == k) continue;
      const Rational f = out[m][piv[k]];
      if (f == 0) continue;
      for (std::size_t c = piv[k]; c < width_; ++c) {
        if (out[k][c] != 0) out[m][c] = field_.sub(out[m][c], field_.mul(f, out[k][c]));
      }
    }
  }
  return out;
}

}  // namespace qc
