#include "quadcurves/homology.hpp"

#include <algorithm>
#include <cstdlib>

#include "quadcurves/errors.hpp"

namespace qc {

// ------------------------------------------------------------ certification

ComplexCheck verify_complex(const FreeComplex& c) {
  ComplexCheck check;
  for (std::size_t k = 1; k <= c.length(); ++k) {
    GradedMap phi = c.map(k);
    if (auto bad = phi.degree_violation()) {
      const auto [i, j] = *bad;
      check.ok = false;
      check.witness = "twist-mismatch";
      check.position = static_cast<int>(k);
      check.detail = "phi_" + std::to_string(k) + " entry (" + std::to_string(i + 1) + ", " +
                     std::to_string(j + 1) + ") = " + phi.matrix.at(i, j).to_string() +
                     " should have degree " + std::to_string(phi.target.twists[i] - phi.source.twists[j]);
      return check;
    }
  }
  for (std::size_t k = 1; k < c.length(); ++k) {
    PolyMatrix prod = c.matrices()[k - 1] * c.matrices()[k];
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        if (prod.at(i, j).is_zero()) continue;
        check.ok = false;
        check.witness = "composition-zero";
        check.position = static_cast<int>(k);
        check.detail = "(phi_" + std::to_string(k) + " phi_" + std::to_string(k + 1) + ")(" +
                       std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") = " + prod.at(i, j).to_string();
        return check;
      }
    }
  }
  return check;
}

RankReport matrix_rank(const PolyMatrix& m) {
  RankReport r;
  r.randomized_rank = rank_randomized(m);
  r.rank = rank_exact(m);
  r.agreed = r.rank == r.randomized_rank;
  return r;
}

ExactnessCertificate buchsbaum_eisenbud_check(const FreeComplex& c) {
  ComplexCheck check = verify_complex(c);
  if (!check.ok) throw MathError("not-a-complex", check.witness + ": " + check.detail);

  const std::size_t n = c.length();
  std::vector<int> ranks(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k) ranks[k] = matrix_rank(c.matrices()[k - 1]).rank;

  ExactnessCertificate cert;
  cert.pass = true;
  for (std::size_t k = 1; k <= n; ++k) {
    ExactnessWitness w;
    w.position = static_cast<int>(k);
    w.module_rank = static_cast<int>(c.module(k).rank());
    w.rank_out = ranks[k];
    w.rank_in = ranks[k + 1];
    w.rank_ok = w.module_rank == w.rank_out + w.rank_in;
    if (w.rank_ok) {
      MinorWitness mw = minors_codim_witness(c.matrices()[k - 1], w.rank_out, static_cast<int>(k));
      w.codim = mw.codim;
      w.minors = std::move(mw.minors);
      w.grade_ok = mw.reached;
    }
    cert.pass = cert.pass && w.ok();
    cert.positions.push_back(std::move(w));
  }
  return cert;
}

bool is_minimal_complex(const FreeComplex& c) {
  for (const auto& m : c.matrices()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.at(i, j).is_zero() && m.at(i, j).is_constant()) return false;
      }
    }
  }
  return true;
}

std::string ResolutionCertificate::failure() const {
  if (!complex.ok) return complex.witness;
  if (!exactness || !exactness->pass) {
    if (exactness) {
      for (const auto& w : exactness->positions) {
        if (!w.rank_ok) return "rank-condition";
        if (!w.grade_ok) return "grade-condition";
      }
    }
    return "not-exact";
  }
  if (!minimal) return "not-minimal";
  return "";
}

ResolutionCertificate certify_resolution(const FreeComplex& c) {
  ResolutionCertificate cert;
  cert.complex = verify_complex(c);
  if (!cert.complex.ok) return cert;
  cert.minimal = is_minimal_complex(c);
  cert.exactness = buchsbaum_eisenbud_check(c);
  return cert;
}

// ----------------------------------------------------------------- homology

std::int64_t ModuleTable::at(int j) const {
  auto it = dims.find(j);
  return it == dims.end() ? 0 : it->second;
}

std::int64_t ModuleTable::total() const {
  std::int64_t t = 0;
  for (const auto& [j, v] : dims) t += v;
  return t;
}

std::optional<Window> ModuleTable::support() const {
  if (dims.empty()) return std::nullopt;
  return Window{dims.begin()->first, dims.rbegin()->first};
}

namespace {

std::int64_t homology_dim(const FreeComplex& c, std::size_t k, int j) {
  std::int64_t d = c.module(k).dim(j);
  if (d == 0) return 0;
  if (k >= 1) d -= static_cast<std::int64_t>(graded_piece(c.map(k), j).rank());
  if (k < c.length()) d -= static_cast<std::int64_t>(graded_piece(c.map(k + 1), j).rank());
  return d;
}

}  // namespace

ModuleTable homology_table(const FreeComplex& c, std::size_t position, std::optional<Window> window) {
  if (position > c.length()) {
    throw MathError("dimension-mismatch", "complex has no position " + std::to_string(position));
  }
  ModuleTable t;
  if (window) {
    if (window->hi - window->lo < 3) {
      throw MathError("window-too-small", "window must span at least 4 degrees for the zero margins");
    }
    for (int j = window->lo; j <= window->hi; ++j) {
      const std::int64_t d = homology_dim(c, position, j);
      if (d != 0) t.dims[j] = d;
    }
    t.window = *window;
    for (int j : {window->lo, window->lo + 1, window->hi - 1, window->hi}) {
      if (t.at(j) != 0) {
        throw MathError("window-too-small", "homology is nonzero in margin degree " + std::to_string(j) +
                                                " of [" + std::to_string(window->lo) + ", " +
                                                std::to_string(window->hi) + "]");
      }
    }
    return t;
  }

  if (position == 0) {
    const auto& tw = c.module(0).twists;
    if (tw.empty()) {
      t.window = {0, 0};
      return t;
    }
    // Generator of R(n) lives in degree -n. A cokernel vanishes from the first
    // zero degree at or above its top generator degree onwards.
    const int low_gen = -*std::max_element(tw.begin(), tw.end());
    const int top_gen = -*std::min_element(tw.begin(), tw.end());
    constexpr int kScanLimit = 256;
    const int lo = low_gen - 2;
    int zeros = 0;
    int j = lo;
    for (;; ++j) {
      const std::int64_t d = homology_dim(c, 0, j);
      if (d != 0) t.dims[j] = d;
      zeros = d == 0 ? zeros + 1 : 0;
      if (j > top_gen && zeros >= 2) break;
      if (j > top_gen + kScanLimit) {
        throw MathError("window-too-small", "cokernel still nonzero " + std::to_string(kScanLimit) +
                                                " degrees above its generators; not of finite length");
      }
    }
    t.window = {lo, j};
    return t;
  }

  int m = 0;
  for (const auto& mod : c.modules()) {
    for (int n : mod.twists) m = std::max(m, std::abs(n));
  }
  return homology_table(c, position, Window{-(m + 4), m + 4});
}

ModuleTable cokernel_table(const GradedMap& p, std::optional<Window> window) {
  FreeComplex c({p.target, p.source}, {p.matrix});
  ModuleTable t = homology_table(c, 0, window);
  t.presentation = p;
  return t;
}

ModuleTable rao_module(const Ideal& i, const FreeComplex& res, std::optional<Window> window) {
  ResolutionCertificate cert = certify_resolution(res);
  if (!cert.complex.ok || !cert.exactness || !cert.exactness->pass) {
    throw MathError("resolution-not-exact", "certification failed: " + cert.failure());
  }
  if (res.length() == 0 || res.module(0).twists != std::vector<int>{0}) {
    throw MathError("resolution-mismatch", "resolution must end in F_0 = R");
  }
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < res.matrices()[0].cols(); ++k) gens.push_back(res.matrices()[0].at(0, k));
  if (!(Ideal(gens, i.field()) == i)) {
    throw MathError("resolution-mismatch", "the first map does not generate the given ideal");
  }
  if (krull_dimension(i) != 2) {
    throw MathError("not-a-curve", "R/I has Krull dimension " + std::to_string(krull_dimension(i)));
  }

  ModuleTable t;
  t.reflection = 4;
  const std::size_t n = res.length();
  if (n < 3) {
    // Ext^2(I, R) vanishes when the resolution has length < 3.
    t.window = window.value_or(Window{0, 0});
    return t;
  }
  if (n == 3) {
    const int r = static_cast<int>(res.module(3).rank());
    MinorWitness fitting = minors_codim_witness(res.matrices()[2], r, kNumVars);
    if (!fitting.reached) {
      throw MathError("not-locally-cm", "Ext^2(I, R) is not of finite length (Fitting ideal has codim " +
                                            std::to_string(fitting.codim) + ")");
    }
  }

  FreeComplex dual = res.dual();
  std::optional<Window> ext_window;
  if (window) ext_window = Window{-window->hi - 4, -window->lo - 4};
  ModuleTable ext = homology_table(dual, n - 3, ext_window);
  for (const auto& [e, d] : ext.dims) t.dims[-e - 4] = d;
  t.window = {-ext.window.hi - 4, -ext.window.lo - 4};
  if (n == 3) t.presentation = dual.map(1);
  return t;
}

bool duality_check(const ModuleTable& mt, int shift) {
  for (const auto& [j, d] : mt.dims) {
    if (mt.at(shift - j) != d) return false;
  }
  return true;
}

std::vector<Polynomial> annihilator_space(const ModuleTable& mt, int e) {
  if (!mt.presentation) throw MathError("no-presentation", "annihilator needs a module presentation");
  const GradedMap& p = *mt.presentation;
  const FieldSpec& field = p.matrix.field();
  const auto forms = monomials_of_degree(e);

  std::vector<int> degrees;
  for (const auto& [j, d] : mt.dims) degrees.push_back(mt.reflection ? -j - *mt.reflection : j);

  std::vector<Vector> conditions;
  for (int c : degrees) {
    const auto src = piece_basis(p.target, c);
    const auto dst = piece_basis(p.target, c + e);
    if (dst.empty()) continue;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index[{dst[r].summand, dst[r].mono}] = r;

    EchelonBasis image(dst.size(), field);
    ScalarMatrix g = graded_piece(p, c + e);
    for (std::size_t col = 0; col < g.cols(); ++col) image.insert(g.column(col));
    if (image.rank() == dst.size()) continue;

    for (const auto& [q, m] : src) {
      std::vector<Vector> reduced;
      for (const auto& f : forms) {
        Vector v(dst.size(), 0);
        v[index.at({q, f * m})] = 1;
        reduced.push_back(image.reduce(std::move(v)));
      }
      for (std::size_t r = 0; r < dst.size(); ++r) {
        Vector row(forms.size(), 0);
        for (std::size_t k = 0; k < forms.size(); ++k) row[k] = reduced[k][r];
        if (!is_zero_vector(row)) conditions.push_back(std::move(row));
      }
    }
  }

  ScalarMatrix system(conditions.size(), forms.size(), field);
  for (std::size_t r = 0; r < conditions.size(); ++r) {
    for (std::size_t k = 0; k < forms.size(); ++k) system.at(r, k) = conditions[r][k];
  }
  EchelonBasis kernel(forms.size(), field);
  for (auto& v : system.kernel()) kernel.insert(std::move(v));

  std::vector<Polynomial> out;
  for (const auto& v : kernel.reduced_rows()) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) terms.push_back({forms[k], v[k]});
    }
    out.push_back(Polynomial::from_terms(std::move(terms), field));
  }
  return out;
}

}  // namespace qc
