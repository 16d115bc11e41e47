#include "quadcurves/curves.hpp"

#include <algorithm>
#include <random>

#include "quadcurves/errors.hpp"

namespace qc {

namespace {

Polynomial var(int i, const FieldSpec& f) { return Polynomial::variable(i, f); }
Polynomial cst(long c, const FieldSpec& f) { return Polynomial::constant(c, f); }

const Polynomial& require_field(const Polynomial& p, const FieldSpec& f, const char* name) {
  if (!(p.field() == f)) throw MathError("field-mismatch", std::string(name) + " is over a different field");
  return p;
}

void require_support(const Polynomial& p, std::initializer_list<int> allowed, const char* name,
                     const char* ring) {
  if (!p.uses_only(allowed)) {
    throw MathError("wrong-variable-support", std::string(name) + " = " + p.to_string() + " must lie in " + ring);
  }
}

void require_homogeneous(const Polynomial& p, const char* name) {
  if (!p.is_zero() && !p.is_homogeneous()) {
    throw MathError("not-homogeneous", std::string(name) + " = " + p.to_string() + " is not homogeneous");
  }
}

PolyMatrix row_of(const std::vector<Polynomial>& entries, const FieldSpec& f) {
  return PolyMatrix::from_rows({entries}, f);
}

}  // namespace

// ------------------------------------------------------- reducible quadric xy

ReducibleCurveSpec ReducibleCurveSpec::make(Polynomial A, Polynomial B, Polynomial F, Polynomial G, Polynomial h) {
  const FieldSpec field = F.field();
  require_field(A, field, "A");
  require_field(B, field, "B");
  require_field(G, field, "G");
  require_field(h, field, "h");

  require_support(A, {0, 2, 3}, "A", "K[x,z,t]");
  require_support(B, {1, 2, 3}, "B", "K[y,z,t]");
  require_support(F, {2, 3}, "F", "K[z,t]");
  require_support(G, {2, 3}, "G", "K[z,t]");
  require_support(h, {2, 3}, "h", "K[z,t]");
  require_homogeneous(A, "A");
  require_homogeneous(B, "B");
  require_homogeneous(F, "F");
  require_homogeneous(G, "G");
  require_homogeneous(h, "h");

  if (F.is_zero() || G.is_zero() || F.degree() < 1 || G.degree() < 1) {
    throw MathError("not-regular-sequence", "F and G must be nonconstant, so x, y, F, G is not regular");
  }
  if (h.is_zero() && (A.is_zero() || B.is_zero())) {
    throw MathError("AB-zero-with-h-zero", "h = 0 requires A B != 0");
  }

  ReducibleCurveSpec s{std::move(A), std::move(B), std::move(F), std::move(G), std::move(h)};
  s.d_F = s.F.degree();
  s.d_G = s.G.degree();
  s.d_h = s.h.is_zero() ? s.A.degree() - s.d_F + 1 : s.h.degree();
  if (!s.A.is_zero() && s.A.degree() != s.d_F + s.d_h - 1) {
    throw MathError("wrong-degrees", "deg A = " + std::to_string(s.A.degree()) + " but d_F + d_h - 1 = " +
                                         std::to_string(s.d_F + s.d_h - 1));
  }
  if (!s.B.is_zero() && s.B.degree() != s.d_G + s.d_h - 1) {
    throw MathError("wrong-degrees", "deg B = " + std::to_string(s.B.degree()) + " but d_G + d_h - 1 = " +
                                         std::to_string(s.d_G + s.d_h - 1));
  }
  std::vector<Polynomial> seq = {var(0, field), var(1, field), s.F, s.G};
  if (!is_regular_sequence(seq)) {
    throw MathError("not-regular-sequence", "x, y, " + s.F.to_string() + ", " + s.G.to_string() +
                                                " is not a regular sequence");
  }
  return s;
}

ReducibleCurveSpec ReducibleCurveSpec::parse(const std::string& A, const std::string& B, const std::string& F,
                                             const std::string& G, const std::string& h, FieldSpec field) {
  return make(parse_polynomial(A, field), parse_polynomial(B, field), parse_polynomial(F, field),
              parse_polynomial(G, field), parse_polynomial(h, field));
}

namespace {

std::vector<Polynomial> reducible_generators(const ReducibleCurveSpec& s) {
  const FieldSpec& f = s.field();
  const Polynomial x = var(0, f);
  const Polynomial y = var(1, f);
  return {x * y, x * x * s.A + x * s.h * s.F, y * y * s.B + y * s.h * s.G,
          x * s.A * s.G + y * s.B * s.F + s.h * s.F * s.G};
}

}  // namespace

Ideal build_reducible_ideal(const ReducibleCurveSpec& s) { return Ideal(reducible_generators(s), s.field()); }

FreeComplex predicted_reducible_resolution(const ReducibleCurveSpec& s) {
  const FieldSpec& f = s.field();
  const Polynomial x = var(0, f);
  const Polynomial y = var(1, f);
  const Polynomial zero(f);
  const int dF = s.d_F;
  const int dG = s.d_G;
  const int dh = s.d_h;

  FreeGradedModule F0{{0}};
  FreeGradedModule F1{{-2, -dF - dh - 1, -dG - dh - 1, -dF - dG - dh}};
  FreeGradedModule F2{{-dF - dh - 2, -dG - dh - 2, -dF - dG - dh - 1, -dF - dG - dh - 1}};
  FreeGradedModule F3{{-dF - dG - dh - 2}};

  PolyMatrix phi1 = row_of(reducible_generators(s), f);
  PolyMatrix phi2 = PolyMatrix::from_rows({{x * s.A + s.h * s.F, y * s.B + s.h * s.G, s.A * s.G, s.B * s.F},
                                           {-y, zero, zero, s.G},
                                           {zero, -x, s.F, zero},
                                           {zero, zero, -y, -x}},
                                          f);
  PolyMatrix phi3 = PolyMatrix::from_rows({{s.G}, {-s.F}, {-x}, {y}}, f);
  return FreeComplex({F0, F1, F2, F3}, {phi1, phi2, phi3});
}

std::map<int, std::int64_t> predicted_reducible_rao_dims(const ReducibleCurveSpec& s) {
  // K[z,t]/(F, G) for a regular sequence of degrees a, b has Hilbert series
  // (1 - s^a)(1 - s^b)/(1 - s)^2.
  std::map<int, std::int64_t> out;
  for (int k = 0; k <= s.d_F + s.d_G - 2; ++k) {
    std::int64_t dim = 0;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      if (i < s.d_F && j < s.d_G) ++dim;
    }
    if (dim) out[k + s.d_h] = dim;
  }
  return out;
}

// -------------------------------------------------- smooth quadric xz - yt

Polynomial smooth_quadric(FieldSpec f) { return var(0, f) * var(2, f) - var(1, f) * var(3, f); }

Ideal build_smooth_minimal_ideal(int d, FieldSpec f) {
  if (d < 1) throw MathError("invalid-degree", "d must be at least 1");
  std::vector<Polynomial> gens = {smooth_quadric(f)};
  for (int k = 0; k <= d; ++k) gens.push_back(Polynomial::term(Monomial{{d - k, k, 0, 0}}, 1, f));
  return Ideal(std::move(gens), f);
}

StructureMatrices smooth_structure_matrices(int i, FieldSpec f) {
  if (i < 0) throw MathError("invalid-degree", "i must be non-negative");
  StructureMatrices s;
  if (i >= 2) {
    s.M = PolyMatrix(i, i - 1, f);
    s.N = PolyMatrix(i, i - 1, f);
    for (int j = 0; j < i - 1; ++j) {
      s.M.at(j, j) = var(1, f);
      s.M.at(j + 1, j) = -var(0, f);
      s.N.at(j, j) = var(2, f);
      s.N.at(j + 1, j) = -var(3, f);
    }
  }
  s.P = PolyMatrix(1, i + 1, f);
  for (int k = 0; k <= i; ++k) s.P.at(0, k) = Polynomial::term(Monomial{{i - k, k, 0, 0}}, 1, f);
  return s;
}

FreeComplex predicted_smooth_resolution(int d, FieldSpec f) {
  if (d < 2) throw MathError("invalid-degree", "the closed-form resolution needs d >= 2");
  const auto big = smooth_structure_matrices(d + 1, f);
  const auto mid = smooth_structure_matrices(d, f);
  const auto low = smooth_structure_matrices(d - 1, f);

  FreeGradedModule F0{{0}};
  FreeGradedModule F1{std::vector<int>(d + 2, -d)};
  F1.twists[0] = -2;
  FreeGradedModule F2{std::vector<int>(2 * d, -d - 1)};
  FreeGradedModule F3{std::vector<int>(d - 1, -d - 2)};

  PolyMatrix phi1(1, d + 2, f);
  phi1.at(0, 0) = smooth_quadric(f);
  phi1.place(mid.P, 0, 1);

  // [[0, -P_{d-1}], [M_{d+1}, N_{d+1}]]
  PolyMatrix phi2(d + 2, 2 * d, f);
  for (int k = 0; k < d; ++k) phi2.at(0, d + k) = -low.P.at(0, k);
  phi2.place(big.M, 1, 0);
  phi2.place(big.N, 1, d);

  // [[N_d], [-M_d]]
  PolyMatrix phi3(2 * d, d - 1, f);
  phi3.place(mid.N, 0, 0);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d - 1; ++c) phi3.at(d + r, c) = -mid.M.at(r, c);
  }
  return FreeComplex({F0, F1, F2, F3}, {phi1, phi2, phi3});
}

// ------------------------------------------------------ lines of a ruling

void MultilineSpec::validate() const {
  if (lines.empty()) throw MathError("invalid-line", "at least one line is required");
  for (std::size_t a = 0; a < lines.size(); ++a) {
    const auto& l = lines[a];
    if (l.u == 0 && l.v == 0) throw MathError("invalid-line", "(0:0) is not a point of P^1");
    if (l.multiplicity < 1) throw MathError("invalid-multiplicity", "multiplicities must be at least 1");
    for (std::size_t b = 0; b < a; ++b) {
      if (lines[b].u * l.v == lines[b].v * l.u) {
        throw MathError("repeated-line", "(" + std::to_string(l.u) + ":" + std::to_string(l.v) + ") appears twice");
      }
    }
  }
}

int MultilineSpec::degree() const {
  int d = 0;
  for (const auto& l : lines) d += l.multiplicity;
  return d;
}

std::pair<Polynomial, Polynomial> ruling_line_forms(const RulingLine& l, Ruling r, FieldSpec f) {
  const Polynomial u = cst(static_cast<long>(l.u), f);
  const Polynomial v = cst(static_cast<long>(l.v), f);
  const Polynomial x = var(0, f), y = var(1, f), z = var(2, f), t = var(3, f);
  if (r == Ruling::First) return {v * x - u * t, v * y - u * z};
  return {v * x - u * y, v * t - u * z};
}

namespace {

Ideal line_ideal(const RulingLine& l, Ruling r, const FieldSpec& f) {
  auto [a, b] = ruling_line_forms(l, r, f);
  return Ideal({a, b}, f);
}

}  // namespace

Ideal build_multiline_ideal(const MultilineSpec& s, FieldSpec f) {
  s.validate();
  Ideal prod = Ideal::unit(f);
  for (const auto& l : s.lines) prod = ideal_product(prod, ideal_power(line_ideal(l, s.ruling, f), l.multiplicity));
  std::vector<Polynomial> gens;
  for (const auto& g : minimal_generators(ideal_sum(Ideal({smooth_quadric(f)}, f), prod))) gens.push_back(g.monic());
  return Ideal(std::move(gens), f);
}

PolyMatrix multiline_matrix(const MultilineSpec& s, FieldSpec f) {
  s.validate();
  const int d = s.degree();
  const int m = static_cast<int>(s.lines.size());
  PolyMatrix a(d, d + m, f);
  int row = 0;
  int col = 0;
  for (const auto& l : s.lines) {
    auto [ell, ell2] = ruling_line_forms(l, s.ruling, f);
    for (int k = 0; k < l.multiplicity; ++k) {
      a.at(row + k, col + k) = ell;
      a.at(row + k, col + k + 1) = ell2;
    }
    row += l.multiplicity;
    col += l.multiplicity + 1;
  }
  return a;
}

Ideal determinantal_multiline_ideal(const MultilineSpec& s, FieldSpec f) {
  const PolyMatrix a = multiline_matrix(s, f);
  std::vector<Polynomial> gens = all_minors(a, static_cast<int>(a.rows()));
  gens.push_back(smooth_quadric(f));
  return Ideal(std::move(gens), f);
}

Ideal multiline_intersection_form(const MultilineSpec& s, FieldSpec f) {
  s.validate();
  std::vector<Ideal> parts;
  const Ideal q({smooth_quadric(f)}, f);
  for (const auto& l : s.lines) parts.push_back(ideal_sum(q, ideal_power(line_ideal(l, s.ruling, f), l.multiplicity)));
  return ideal_intersection(parts);
}

// ---------------------------------------------------------- classification

int quadric_rank(const Polynomial& q) {
  if (q.is_zero() || q.homogeneous_degree() != 2) {
    throw MathError("wrong-degree", q.to_string() + " is not a nonzero quadratic form");
  }
  const FieldSpec& f = q.field();
  ScalarMatrix s(kNumVars, kNumVars, f);
  const Rational half = f.inv(2);
  for (const auto& term : q.terms()) {
    std::vector<int> idx;
    for (int v = 0; v < kNumVars; ++v) {
      for (int e = 0; e < term.mono.exps[v]; ++e) idx.push_back(v);
    }
    if (idx[0] == idx[1]) {
      s.at(idx[0], idx[0]) = term.coeff;
    } else {
      const Rational c = f.mul(term.coeff, half);
      s.at(idx[0], idx[1]) = c;
      s.at(idx[1], idx[0]) = c;
    }
  }
  return static_cast<int>(s.rank());
}

ClassificationReport classify_curve(const Ideal& input, const std::optional<FreeComplex>& resolution) {
  const Ideal i = saturate(input);
  if (krull_dimension(i) != 2) {
    throw MathError("not-a-curve", "R/I has Krull dimension " + std::to_string(krull_dimension(i)));
  }
  ClassificationReport r;
  const HilbertData hd = hilbert_data(i);
  r.degree = hd.degree.value_or(0);
  r.arithmetic_genus = hd.arithmetic_genus.value_or(0);
  r.mu = minimal_generator_count(i).mu;

  const auto quadrics = homogeneous_component(i, 2);
  r.quadric_count = static_cast<int>(quadrics.size());
  r.contains_quadric = !quadrics.empty();
  r.extremal = quadrics.size() >= 2;
  if (r.contains_quadric) {
    int best = 0;
    for (const auto& q : quadrics) best = std::max(best, quadric_rank(q));
    // Generic member of the pencil/net: a few fixed pseudo-random combinations.
    std::mt19937_64 rng(0x9e3779b9);
    for (int trial = 0; trial < 4 && quadrics.size() > 1; ++trial) {
      Polynomial combo(i.field());
      for (const auto& q : quadrics) combo = combo + q.scaled(Rational(static_cast<long>(rng() % 97) + 1));
      if (!combo.is_zero()) best = std::max(best, quadric_rank(combo));
    }
    r.quadric_rank = best;
    r.acm = r.mu <= 3;
  }
  if (resolution) {
    ModuleTable t = rao_module(i, *resolution);
    r.rao_dims = t.dims;
    if (!r.acm) r.acm = t.is_zero();
  }
  return r;
}

// --------------------------------------------------- Rao module presentations

GradedMap type_ii_presentation(int s, FieldSpec f) {
  if (s < 1) throw MathError("invalid-degree", "s must be at least 1");
  PolyMatrix m(s, 2 * s + 2, f);
  for (int i = 0; i < s; ++i) {
    m.at(i, i) = var(1, f);
    m.at(i, i + 1) = -var(0, f);
    m.at(i, s + 1 + i) = var(2, f);
    m.at(i, s + 2 + i) = -var(3, f);
  }
  return GradedMap(FreeGradedModule{std::vector<int>(2 * s + 2, -1)}, FreeGradedModule{std::vector<int>(s, 0)},
                   std::move(m));
}

TypeICurve type_i_minimal_curve(const Polynomial& p, const Polynomial& h, const Polynomial& F, const Polynomial& G) {
  const FieldSpec f = p.field();
  require_field(h, f, "h");
  require_field(F, f, "F");
  require_field(G, f, "G");
  for (auto [poly, name] : {std::pair{&p, "p"}, {&h, "h"}, {&F, "F"}, {&G, "G"}}) {
    if (poly->is_zero()) throw MathError("not-regular-sequence", std::string(name) + " is zero");
    require_homogeneous(*poly, name);
  }
  if (h.degree() != G.degree() - F.degree() - p.degree() + 1) {
    throw MathError("wrong-degrees", "deg h = " + std::to_string(h.degree()) + " but deg G - deg F - deg p + 1 = " +
                                         std::to_string(G.degree() - F.degree() - p.degree() + 1));
  }
  const Polynomial x = var(0, f);
  std::vector<Polynomial> seq = {x, p, h * F, G};
  if (!is_regular_sequence(seq)) {
    throw MathError("not-regular-sequence", "x, " + p.to_string() + ", " + (h * F).to_string() + ", " +
                                                G.to_string() + " is not a regular sequence");
  }
  const Polynomial last = p * h * F + x * G;
  TypeICurve out{Ideal({x * x, x * p, p * p * h, last}, f), Ideal(f), false};
  out.intersection = ideal_intersection(Ideal({x * x, x * p, p * p, last}, f), Ideal({x, h}, f));
  out.identity_holds = out.ideal == out.intersection;
  return out;
}

// --------------------------------------------------------- other complexes

FreeComplex koszul_complex(std::span<const Polynomial> fs) {
  if (fs.empty()) throw MathError("empty-input", "Koszul complex of no elements");
  const FieldSpec f = fs.front().field();
  const std::size_t k = fs.size();
  std::vector<int> deg;
  for (const auto& g : fs) {
    if (g.is_zero() || !g.is_homogeneous()) throw MathError("not-homogeneous", "Koszul entries must be nonzero forms");
    deg.push_back(g.degree());
  }
  // subsets[i] = i-element subsets as bitmasks, in lexicographic order
  std::vector<std::vector<unsigned>> subsets(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(i), true);
    do {
      unsigned mask = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (pick[b]) mask |= 1u << b;
      }
      subsets[i].push_back(mask);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<FreeGradedModule> mods;
  for (std::size_t i = 0; i <= k; ++i) {
    FreeGradedModule m;
    for (unsigned mask : subsets[i]) {
      int total = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (1u << b)) total += deg[b];
      }
      m.twists.push_back(-total);
    }
    mods.push_back(std::move(m));
  }
  std::vector<PolyMatrix> mats;
  for (std::size_t i = 1; i <= k; ++i) {
    PolyMatrix m(subsets[i - 1].size(), subsets[i].size(), f);
    for (std::size_t c = 0; c < subsets[i].size(); ++c) {
      const unsigned mask = subsets[i][c];
      int pos = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (!(mask & (1u << b))) continue;
        const unsigned face = mask & ~(1u << b);
        const auto it = std::find(subsets[i - 1].begin(), subsets[i - 1].end(), face);
        const auto r = static_cast<std::size_t>(it - subsets[i - 1].begin());
        m.at(r, c) = (pos % 2 == 0) ? fs[b] : -fs[b];
        ++pos;
      }
    }
    mats.push_back(std::move(m));
  }
  return FreeComplex(std::move(mods), std::move(mats));
}

FreeComplex hilbert_burch_complex(const PolyMatrix& m) {
  if (m.rows() != 2 || m.cols() != 3) throw MathError("dimension-mismatch", "Hilbert-Burch needs a 2 x 3 matrix");
  const FieldSpec& f = m.field();
  PolyMatrix phi1(1, 3, f);
  FreeGradedModule F1;
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < 3; ++c) {
      if (c != j) cols.push_back(c);
    }
    Polynomial minor = determinant(m.submatrix({0, 1}, cols));
    if (j == 1) minor = -minor;
    if (minor.is_zero() || !minor.is_homogeneous()) {
      throw MathError("degenerate-matrix", "maximal minor " + std::to_string(j + 1) + " is zero or inhomogeneous");
    }
    F1.twists.push_back(-minor.degree());
    phi1.at(0, j) = std::move(minor);
  }
  FreeGradedModule F2;
  for (std::size_t i = 0; i < 2; ++i) {
    std::optional<int> tw;
    for (std::size_t j = 0; j < 3 && !tw; ++j) {
      if (!m.at(i, j).is_zero()) tw = F1.twists[j] - m.at(i, j).degree();
    }
    if (!tw) throw MathError("degenerate-matrix", "zero row");
    F2.twists.push_back(*tw);
  }
  return FreeComplex({FreeGradedModule{{0}}, F1, F2}, {phi1, m.transpose()});
}

FreeComplex substitute_complex(const FreeComplex& c, const LinearSubstitution& sub) {
  std::vector<PolyMatrix> mats;
  for (const auto& m : c.matrices()) {
    PolyMatrix out(m.rows(), m.cols(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = apply_linear_substitution(m.at(i, j), sub);
    }
    mats.push_back(std::move(out));
  }
  return FreeComplex(c.modules(), std::move(mats));
}

FreeComplex skew_lines_resolution(FieldSpec f) {
  // (xy, xz, yt, zt) = (x, t) cap (y, z) is the reducible family member with
  // A = B = 0, h = 1, F = z, G = t; swapping y and t moves it to (x, y) cap (z, t).
  const auto spec = ReducibleCurveSpec::make(Polynomial(f), Polynomial(f), var(2, f), var(3, f), cst(1, f));
  return substitute_complex(predicted_reducible_resolution(spec), swap_substitution(1, 3));
}

}  // namespace qc
