#include "quadcurves/graded.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "quadcurves/errors.hpp"

namespace qc {

namespace {

std::int64_t monomial_count(int d) {
  if (d < 0) return 0;
  const std::int64_t n = d;
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

}  // namespace

std::int64_t FreeGradedModule::dim(int j) const {
  std::int64_t total = 0;
  for (int n : twists) total += monomial_count(j + n);
  return total;
}

FreeGradedModule FreeGradedModule::dual() const {
  FreeGradedModule d;
  for (int n : twists) d.twists.push_back(-n);
  return d;
}

std::vector<PieceElement> piece_basis(const FreeGradedModule& m, int j) {
  std::vector<PieceElement> out;
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (const auto& mono : monomials_of_degree(j + m.twists[s])) out.push_back({s, mono});
  }
  return out;
}

GradedMap::GradedMap(FreeGradedModule src, FreeGradedModule tgt, PolyMatrix mat)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(mat)) {
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank()) {
    throw MathError("dimension-mismatch",
                    "matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                        " but the map goes from rank " + std::to_string(source.rank()) + " to rank " +
                        std::to_string(target.rank()));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> GradedMap::degree_violation() const {
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t k = 0; k < matrix.cols(); ++k) {
      const Polynomial& e = matrix.at(i, k);
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree();
      if (!d || *d != target.twists[i] - source.twists[k]) return std::make_pair(i, k);
    }
  }
  return std::nullopt;
}

GradedMap GradedMap::dual() const { return GradedMap(target.dual(), source.dual(), matrix.transpose()); }

ScalarMatrix graded_piece(const GradedMap& m, int j) {
  const auto src = piece_basis(m.source, j);
  const auto tgt = piece_basis(m.target, j);
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  for (std::size_t r = 0; r < tgt.size(); ++r) index[{tgt[r].summand, tgt[r].mono}] = r;

  ScalarMatrix out(tgt.size(), src.size(), m.matrix.field());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto& [s, mono] = src[c];
    for (std::size_t i = 0; i < m.target.rank(); ++i) {
      for (const auto& term : m.matrix.at(i, s).terms()) {
        auto it = index.find({i, term.mono * mono});
        if (it == index.end()) {
          throw MathError("twist-mismatch", "entry (" + std::to_string(i) + ", " + std::to_string(s) +
                                                ") does not have the degree its twists require");
        }
        out.at(it->second, c) = m.matrix.field().add(out.at(it->second, c), term.coeff);
      }
    }
  }
  return out;
}

FreeComplex::FreeComplex(std::vector<FreeGradedModule> modules, std::vector<PolyMatrix> matrices)
    : modules_(std::move(modules)), matrices_(std::move(matrices)) {
  if (modules_.size() != matrices_.size() + 1) {
    throw MathError("dimension-mismatch", std::to_string(modules_.size()) + " modules for " +
                                              std::to_string(matrices_.size()) + " maps");
  }
  for (std::size_t k = 0; k < matrices_.size(); ++k) {
    if (matrices_[k].rows() != modules_[k].rank() || matrices_[k].cols() != modules_[k + 1].rank()) {
      throw MathError("dimension-mismatch", "map " + std::to_string(k + 1) + " has shape " +
                                                std::to_string(matrices_[k].rows()) + "x" +
                                                std::to_string(matrices_[k].cols()) + ", expected " +
                                                std::to_string(modules_[k].rank()) + "x" +
                                                std::to_string(modules_[k + 1].rank()));
    }
    if (!(matrices_[k].field() == matrices_.front().field())) {
      throw MathError("field-mismatch", "maps of a complex over different fields");
    }
  }
}

GradedMap FreeComplex::map(std::size_t k) const {
  if (k == 0 || k > matrices_.size()) throw MathError("dimension-mismatch", "no map at position " + std::to_string(k));
  return GradedMap(modules_[k], modules_[k - 1], matrices_[k - 1]);
}

const FieldSpec& FreeComplex::field() const {
  static const FieldSpec rationals;
  return matrices_.empty() ? rationals : matrices_.front().field();
}

FreeComplex FreeComplex::dual() const {
  const std::size_t n = matrices_.size();
  std::vector<FreeGradedModule> mods;
  std::vector<PolyMatrix> mats;
  for (std::size_t j = 0; j <= n; ++j) mods.push_back(modules_[n - j].dual());
  // D_j -> D_{j-1} is the transpose of phi_{n-j+1}.
  for (std::size_t j = 1; j <= n; ++j) mats.push_back(matrices_[n - j].transpose());
  return FreeComplex(std::move(mods), std::move(mats));
}

BettiTable BettiTable::of(const FreeComplex& c) {
  BettiTable b;
  for (std::size_t i = 0; i < c.modules().size(); ++i) {
    for (int n : c.module(i).twists) b.entries[{static_cast<int>(i), n}] += 1;
  }
  return b;
}

int BettiTable::rank(int i) const {
  int r = 0;
  for (const auto& [key, v] : entries) {
    if (key.first == i) r += v;
  }
  return r;
}

std::vector<int> BettiTable::ranks() const {
  int top = -1;
  for (const auto& [key, v] : entries) top = std::max(top, key.first);
  std::vector<int> out;
  for (int i = 0; i <= top; ++i) out.push_back(rank(i));
  return out;
}

std::string BettiTable::to_string() const {
  if (entries.empty()) return "";
  int cols = 0;
  int rmin = 0;
  int rmax = 0;
  bool first = true;
  for (const auto& [key, v] : entries) {
    const int r = -key.second - key.first;
    cols = std::max(cols, key.first + 1);
    rmin = first ? r : std::min(rmin, r);
    rmax = first ? r : std::max(rmax, r);
    first = false;
  }
  std::ostringstream out;
  const int w = 6;
  out << std::setw(8) << "";
  for (int i = 0; i < cols; ++i) out << std::setw(w) << i;
  out << "\n" << std::setw(8) << "total:";
  for (int i = 0; i < cols; ++i) out << std::setw(w) << rank(i);
  out << "\n";
  for (int r = rmin; r <= rmax; ++r) {
    out << std::setw(7) << r << ":";
    for (int i = 0; i < cols; ++i) {
      auto it = entries.find({i, -(r + i)});
      if (it == entries.end()) {
        out << std::setw(w) << ".";
      } else {
        out << std::setw(w) << it->second;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::int64_t euler_characteristic(const FreeComplex& c, int j) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < c.modules().size(); ++k) {
    const std::int64_t d = c.module(k).dim(j);
    total += (k % 2 == 0) ? d : -d;
  }
  return total;
}

}  // namespace qc
