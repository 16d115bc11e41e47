#include "quadcurves/poly_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "quadcurves/errors.hpp"
#include "quadcurves/ideal.hpp"
#include "quadcurves/linalg.hpp"

namespace qc {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Polynomial(field)) {}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Polynomial>>& rows, FieldSpec field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MathError("dimension-mismatch", "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = change_field(rows[r][c], field);
  }
  return m;
}

PolyMatrix PolyMatrix::from_strings(const std::vector<std::vector<std::string>>& rows, FieldSpec field) {
  std::vector<std::vector<Polynomial>> parsed;
  for (const auto& row : rows) {
    std::vector<Polynomial> r;
    for (const auto& s : row) r.push_back(parse_polynomial(s, field));
    parsed.push_back(std::move(r));
  }
  return from_rows(parsed, field);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  PolyMatrix s(rs.size(), cs.size(), field_);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) s.at(i, j) = at(rs[i], cs[j]);
  }
  return s;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void PolyMatrix::place(const PolyMatrix& block, std::size_t r, std::size_t c) {
  if (r + block.rows() > rows_ || c + block.cols() > cols_) {
    throw MathError("dimension-mismatch", "block does not fit");
  }
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) at(r + i, c + j) = block.at(i, j);
  }
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw MathError("dimension-mismatch", "cannot multiply " + std::to_string(a.rows_) + "x" +
                                              std::to_string(a.cols_) + " by " + std::to_string(b.rows_) +
                                              "x" + std::to_string(b.cols_));
  }
  PolyMatrix p(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial acc(a.field_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc = acc + a.at(i, k) * b.at(k, j);
      }
      p.at(i, j) = std::move(acc);
    }
  }
  return p;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += at(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw MathError("dimension-mismatch", "hstack row counts differ");
  PolyMatrix m(a.rows(), a.cols() + b.cols(), a.field());
  m.place(a, 0, 0);
  m.place(b, 0, a.cols());
  return m;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw MathError("dimension-mismatch", "vstack column counts differ");
  PolyMatrix m(a.rows() + b.rows(), a.cols(), a.field());
  m.place(a, 0, 0);
  m.place(b, a.rows(), 0);
  return m;
}

namespace {

struct BareissResult {
  int rank = 0;
  int swaps = 0;
  Polynomial last_pivot;
};

BareissResult bareiss(const PolyMatrix& input) {
  const FieldSpec& field = input.field();
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  std::vector<std::vector<Polynomial>> a(m, std::vector<Polynomial>(n, Polynomial(field)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input.at(i, j);
  }
  BareissResult res{0, 0, Polynomial::constant(1, field)};
  Polynomial prev = Polynomial::constant(1, field);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Prefer the sparsest nonzero pivot to limit growth.
    std::size_t pivot = m;
    for (std::size_t p = r; p < m; ++p) {
      if (a[p][c].is_zero()) continue;
      if (pivot == m || a[p][c].size() < a[pivot][c].size()) pivot = p;
    }
    if (pivot == m) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      ++res.swaps;
    }
    const bool unit_prev = prev.is_constant() && prev.terms().front().coeff == 1;
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Polynomial num = a[r][c] * a[i][j];
        if (!a[i][c].is_zero() && !a[r][j].is_zero()) num = num - a[i][c] * a[r][j];
        if (unit_prev || num.is_zero()) {
          a[i][j] = std::move(num);
        } else {
          auto q = exact_quotient(num, prev);
          if (!q) throw MathError("internal", "Bareiss step not exact");
          a[i][j] = std::move(*q);
        }
      }
      a[i][c] = Polynomial(field);
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = static_cast<int>(r);
  res.last_pivot = prev;
  return res;
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& s) { out.push_back(s); });
  return out;
}

}  // namespace

int rank_exact(const PolyMatrix& m) { return bareiss(m).rank; }

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw MathError("dimension-mismatch", "determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(1, m.field());
  BareissResult res = bareiss(m);
  if (res.rank < static_cast<int>(m.rows())) return Polynomial(m.field());
  return (res.swaps % 2) ? -res.last_pivot : res.last_pivot;
}

int rank_randomized(const PolyMatrix& m, int trials, std::uint64_t seed) {
  const FieldSpec target =
      m.field().is_prime() ? m.field() : FieldSpec::prime(FieldSpec::kLargePrime);
  const std::uint64_t p = target.characteristic();
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::array<Rational, kNumVars> point;
    for (auto& v : point) v = Rational(static_cast<unsigned long>(rng() % p));
    ScalarMatrix s(m.rows(), m.cols(), target);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        s.at(r, c) = evaluate(change_field(m.at(r, c), target), point);
      }
    }
    best = std::max(best, static_cast<int>(s.rank()));
  }
  return best;
}

std::vector<Polynomial> all_minors(const PolyMatrix& m, int r) {
  std::vector<Polynomial> out;
  if (r <= 0) {
    out.push_back(Polynomial::constant(1, m.field()));
    return out;
  }
  for (const auto& rs : subsets(m.rows(), static_cast<std::size_t>(r))) {
    for (const auto& cs : subsets(m.cols(), static_cast<std::size_t>(r))) {
      out.push_back(determinant(m.submatrix(rs, cs)));
    }
  }
  return out;
}

MinorWitness minors_codim_witness(const PolyMatrix& m, int r, int target, std::uint64_t seed) {
  MinorWitness w;
  if (r <= 0) {
    w.minors.push_back(Polynomial::constant(1, m.field()));
    w.codim = kNumVars + 1;
    w.reached = true;
    return w;
  }
  const auto row_sets = subsets(m.rows(), static_cast<std::size_t>(r));
  const auto col_sets = subsets(m.cols(), static_cast<std::size_t>(r));
  std::vector<std::pair<std::size_t, std::size_t>> order;
  order.reserve(row_sets.size() * col_sets.size());
  for (std::size_t a = 0; a < row_sets.size(); ++a) {
    for (std::size_t b = 0; b < col_sets.size(); ++b) order.emplace_back(a, b);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  Ideal current(m.field());
  for (const auto& [a, b] : order) {
    Polynomial minor = determinant(m.submatrix(row_sets[a], col_sets[b]));
    if (minor.is_zero() || current.contains(minor)) continue;
    w.minors.push_back(minor);
    current = Ideal(w.minors, m.field());
    w.codim = current.is_unit() ? kNumVars + 1 : codimension(current);
    if (w.codim >= target) {
      w.reached = true;
      return w;
    }
  }
  w.reached = w.codim >= target;
  return w;
}

}  // namespace qc
