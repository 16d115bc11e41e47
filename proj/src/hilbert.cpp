#include <algorithm>
#include <map>

#include "quadcurves/errors.hpp"
#include "quadcurves/ideal.hpp"
#include "quadcurves/linalg.hpp"

namespace qc {

namespace {

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

IntPoly shift(const IntPoly& a, int by) {
  if (a.empty()) return a;
  IntPoly r(a.size() + static_cast<std::size_t>(by), 0);
  std::copy(a.begin(), a.end(), r.begin() + by);
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& m : gens) {
    if (m.degree() == 0) return {};  // unit ideal: R/M = 0
  }
  // Find a variable shared by two generators; if none, they are pairwise coprime.
  int pivot_var = -1;
  for (int v = 0; v < kNumVars && pivot_var < 0; ++v) {
    int count = 0;
    for (const auto& m : gens) count += m.exps[v] > 0 ? 1 : 0;
    if (count >= 2) pivot_var = v;
  }
  if (pivot_var < 0) {
    IntPoly r = {1};
    for (const auto& m : gens) r = poly_sub(r, shift(r, m.degree()));
    return r;
  }
  // N(M) = N(M + (v)) + s * N(M : v)
  Monomial v = Monomial::var(pivot_var);
  std::vector<Monomial> with_v = gens;
  with_v.push_back(v);
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.exps[pivot_var] > 0) q.exps[pivot_var] -= 1;
    colon.push_back(q);
  }
  IntPoly a = numerator_rec(std::move(with_v));
  IntPoly b = shift(numerator_rec(std::move(colon)), 1);
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::int64_t binomial3(std::int64_t n) {
  // C(n + 3, 3) for n >= 0
  if (n < 0) return 0;
  return (n + 1) * (n + 2) * (n + 3) / 6;
}

}  // namespace

IntPoly hilbert_numerator(const std::vector<Monomial>& generators) {
  return numerator_rec(generators);
}

std::int64_t HilbertData::value(int j) const {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    acc += numerator[i] * binomial3(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i));
  }
  return acc;
}

HilbertData hilbert_data(const Ideal& i) {
  HilbertData h;
  if (i.is_zero()) {
    h.numerator = {1};
    h.dimension = 4;
    h.zero_ideal = true;
    return h;
  }
  h.numerator = hilbert_numerator(i.initial_monomials());
  if (h.numerator.empty()) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  IntPoly q = h.numerator;
  int factors = 0;
  auto at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (at_one(q) == 0) {
    IntPoly next(q.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      next[k] = run;
    }
    q = std::move(next);
    ++factors;
  }
  h.dimension = kNumVars - factors;
  h.degree = at_one(q);
  if (h.dimension == 2) {
    std::int64_t c = 0;
    for (std::size_t k = 0; k < q.size(); ++k) c += q[k] * (1 - static_cast<std::int64_t>(k));
    h.hilbert_polynomial = HilbertData::Line{*h.degree, c};
    h.arithmetic_genus = 1 - c;
  }
  return h;
}

std::int64_t hilbert_function(const Ideal& i, int j) {
  if (i.is_zero()) return static_cast<std::int64_t>(monomials_of_degree(j).size());
  const auto lead = i.initial_monomials();
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(j)) {
    bool standard = std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
  }
  return count;
}

int krull_dimension(const Ideal& i) {
  if (i.is_zero()) return kNumVars;
  const auto lead = i.initial_monomials();
  int best = -1;
  for (unsigned mask = 0; mask < (1u << kNumVars); ++mask) {
    bool ok = true;
    for (const auto& m : lead) {
      bool inside = true;
      for (int v = 0; v < kNumVars; ++v) {
        if (m.exps[v] > 0 && !(mask & (1u << v))) inside = false;
      }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

int codimension(const Ideal& i) { return kNumVars - krull_dimension(i); }

// ------------------------------------------------------ graded components

namespace {

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = k;
  return idx;
}

Vector coordinates(const Polynomial& f, const std::map<Monomial, std::size_t>& idx, std::size_t n) {
  Vector v(n, 0);
  for (const auto& t : f.terms()) v[idx.at(t.mono)] = t.coeff;
  return v;
}

// Inserts m * g for all monomials m of degree j - deg g.
void insert_multiples(EchelonBasis& basis, const Polynomial& g, int j,
                      const std::map<Monomial, std::size_t>& idx, std::size_t n) {
  const int dg = g.degree();
  if (dg > j) return;
  for (const auto& m : monomials_of_degree(j - dg)) {
    basis.insert(coordinates(g.times_monomial(m), idx, n));
  }
}

}  // namespace

std::vector<Polynomial> homogeneous_component(const Ideal& i, int j) {
  const auto mons = monomials_of_degree(j);
  const auto idx = index_of(mons);
  EchelonBasis basis(mons.size(), i.field());
  for (const auto& g : i.groebner_basis()) insert_multiples(basis, g, j, idx, mons.size());
  std::vector<Polynomial> out;
  for (const auto& row : basis.reduced_rows()) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) terms.push_back({mons[k], row[k]});
    }
    out.push_back(Polynomial::from_terms(std::move(terms), i.field()));
  }
  return out;
}

std::vector<Polynomial> minimal_generators(const Ideal& i) {
  std::vector<Polynomial> out;
  std::map<int, std::vector<const Polynomial*>> by_degree;
  for (const auto& g : i.generators()) by_degree[g.degree()].push_back(&g);
  for (const auto& [j, top] : by_degree) {
    const auto mons = monomials_of_degree(j);
    const auto idx = index_of(mons);
    EchelonBasis basis(mons.size(), i.field());
    for (const auto& [dg, gs] : by_degree) {
      if (dg >= j) break;
      for (const auto* g : gs) insert_multiples(basis, *g, j, idx, mons.size());
    }
    for (const auto* g : top) {
      if (basis.insert(coordinates(*g, idx, mons.size()))) out.push_back(*g);
    }
  }
  return out;
}

GeneratorCount minimal_generator_count(const Ideal& i) {
  GeneratorCount out;
  for (const auto& g : minimal_generators(i)) {
    ++out.per_degree[g.degree()];
    ++out.mu;
  }
  return out;
}

bool is_regular_sequence(std::span<const Polynomial> fs) {
  if (fs.empty()) throw MathError("empty-input", "regular sequence test needs at least one element");
  FieldSpec field = fs.front().field();
  std::vector<Polynomial> gens;
  for (const auto& f : fs) {
    if (f.is_zero()) throw MathError("zero-element", "regular sequence element is zero");
    if (!f.is_homogeneous()) {
      throw MathError("not-homogeneous", f.to_string() + " is not homogeneous");
    }
    gens.push_back(f);
  }
  if (gens.size() > static_cast<std::size_t>(kNumVars)) return false;
  Ideal ideal(std::move(gens), field);
  if (ideal.is_unit()) return false;
  return codimension(ideal) == static_cast<int>(fs.size());
}

AcmVerdict is_acm_curve(const Ideal& i) {
  if (krull_dimension(i) != 2) {
    throw MathError("not-a-curve", "R/I has Krull dimension " + std::to_string(krull_dimension(i)));
  }
  AcmVerdict v;
  v.mu = minimal_generator_count(i).mu;
  v.has_quadric = !homogeneous_component(i, 2).empty();
  if (v.has_quadric) {
    v.acm = v.mu <= 3;
    v.reason = "lies on a quadric and mu = " + std::to_string(v.mu) + (v.mu <= 3 ? " <= 3" : " > 3");
  } else {
    v.reason = "no quadric in the ideal; decide by the Hartshorne-Rao module";
  }
  return v;
}

}  // namespace qc
