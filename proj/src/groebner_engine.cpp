#include "groebner_engine.hpp"

#include <algorithm>

#include "order_impl.hpp"
#include "quadcurves/errors.hpp"

namespace qc::detail {

EngineOrder EngineOrder::from(const MonomialOrder& o) {
  switch (o.kind()) {
    case MonomialOrder::Kind::Grevlex:
      return {Kind::Grevlex, 0};
    case MonomialOrder::Kind::Lex:
      return {Kind::Lex, 0};
    case MonomialOrder::Kind::Elimination:
      return {Kind::Block, o.block()};
  }
  return {};
}

int EngineOrder::compare(const Exp& a, const Exp& b) const {
  const int* pa = a.data();
  const int* pb = b.data();
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_compare(pa, pb, 0, kNumVars);
    case Kind::Lex:
      return lex_compare(pa, pb, 0, kNumVars);
    case Kind::Block: {
      int c = grevlex_compare(pa, pb, 0, block);
      return c != 0 ? c : grevlex_compare(pa, pb, block, kNumVars);
    }
    case Kind::AuxElimination:
      if (a[kAuxSlot] != b[kAuxSlot]) return a[kAuxSlot] < b[kAuxSlot] ? -1 : 1;
      return grevlex_compare(pa, pb, 0, kNumVars);
  }
  return 0;
}

namespace {

bool divides(const Exp& a, const Exp& b) {
  for (int i = 0; i < kSlots; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kSlots; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exp minus(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kSlots; ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exp& a, const Exp& b) {
  for (int i = 0; i < kSlots; ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exp lcm;
  int degree;
};

}  // namespace

EPoly Engine::sort_terms(std::vector<ETerm> terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const ETerm& a, const ETerm& b) { return order.compare(a.e, b.e) < 0; });
  EPoly out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().e == t.e) {
      out.back().c = field.add(out.back().c, t.c);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const ETerm& t) { return t.c == 0; });
  return out;
}

EPoly Engine::import(const Polynomial& f) const {
  std::vector<ETerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exp e{};
    for (int i = 0; i < kNumVars; ++i) e[i] = t.mono.exps[i];
    terms.push_back({e, field.normalize(t.coeff)});
  }
  return sort_terms(std::move(terms));
}

Polynomial Engine::export_poly(const EPoly& f) const {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) {
    if (t.e[kAuxSlot] != 0) {
      throw MathError("internal", "auxiliary variable escaped an elimination");
    }
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.exps[i] = t.e[i];
    terms.push_back({m, t.c});
  }
  return Polynomial::from_terms(std::move(terms), field);
}

EPoly Engine::times_aux(const EPoly& f) const {
  EPoly r = f;
  for (auto& t : r) t.e[kAuxSlot] += 1;
  return r;
}

EPoly Engine::one_minus_aux_times(const EPoly& f) const {
  std::vector<ETerm> terms;
  terms.reserve(2 * f.size());
  for (const auto& t : f) {
    terms.push_back(t);
    ETerm w = t;
    w.e[kAuxSlot] += 1;
    w.c = field.neg(w.c);
    terms.push_back(std::move(w));
  }
  return sort_terms(std::move(terms));
}

EPoly Engine::make_monic(EPoly f) const {
  if (f.empty()) return f;
  Rational inv = field.inv(f.back().c);
  if (inv == 1) return f;
  for (auto& t : f) t.c = field.mul(t.c, inv);
  return f;
}

namespace {

// p - c * shift * g, all ascending.
EPoly sub_scaled_shift(const Engine& eng, const EPoly& p, const Rational& c, const Exp& shift,
                       const EPoly& g) {
  EPoly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Exp e;
    for (int k = 0; k < kSlots; ++k) e[k] = g[j].e[k] + shift[k];
    int cmp = (i == p.size()) ? 1 : eng.order.compare(p[i].e, e);
    if (cmp < 0) {
      out.push_back(p[i++]);
    } else if (cmp > 0) {
      out.push_back({e, eng.field.neg(eng.field.mul(c, g[j].c))});
      ++j;
    } else {
      Rational v = eng.field.sub(p[i].c, eng.field.mul(c, g[j].c));
      if (v != 0) out.push_back({e, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EPoly Engine::normal_form(EPoly f, const std::vector<EPoly>& basis) const {
  std::vector<ETerm> rem;
  while (!f.empty()) {
    const ETerm& lt = f.back();
    const EPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && divides(g.back().e, lt.e)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      rem.push_back(std::move(f.back()));
      f.pop_back();
      continue;
    }
    Rational c = field.div(lt.c, reducer->back().c);
    Exp shift = minus(lt.e, reducer->back().e);
    f = sub_scaled_shift(*this, f, c, shift, *reducer);
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

std::vector<EPoly> Engine::reduced_basis(const std::vector<EPoly>& generators) const {
  std::vector<EPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_basis = [&]() {
    std::vector<EPoly> g;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) g.push_back(polys[k]);
    }
    return g;
  };

  // Gebauer-Moeller installation of a new element (product + chain criteria).
  auto update = [&](std::size_t h) {
    const Exp& lh = polys[h].back().e;
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      Exp l = lcm(lh, polys[g].back().e);
      fresh.push_back({g, h, l, x_degree(l)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool disjoint = coprime(lh, polys[p.i].back().e);
      bool dominated = false;
      if (!disjoint) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b) {
          dominated = divides(fresh[b].lcm, p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          dominated = divides(kept[b].lcm, p.lcm);
        }
      }
      if (disjoint || !dominated) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return coprime(lh, polys[p.i].back().e); });

    std::erase_if(pairs, [&](const Pair& p) {
      if (!divides(lh, p.lcm)) return false;
      Exp li = lcm(polys[p.i].back().e, lh);
      Exp lj = lcm(polys[p.j].back().e, lh);
      return li != p.lcm && lj != p.lcm;
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());

    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && divides(lh, polys[g].back().e)) active[g] = false;
    }
  };

  auto add = [&](EPoly f) {
    polys.push_back(make_monic(std::move(f)));
    active.push_back(true);
    update(polys.size() - 1);
  };

  // Inputs sorted by degree so homogeneous ideals are processed degree by degree.
  std::vector<EPoly> inputs;
  for (const auto& g : generators) {
    if (!g.empty()) inputs.push_back(g);
  }
  std::stable_sort(inputs.begin(), inputs.end(), [&](const EPoly& a, const EPoly& b) {
    return x_degree(a.back().e) < x_degree(b.back().e);
  });
  for (auto& g : inputs) {
    EPoly r = normal_form(g, active_basis());
    if (!r.empty()) add(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return order.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = *best;
    pairs.erase(best);

    const EPoly& f = polys[p.i];
    const EPoly& g = polys[p.j];
    EPoly s = sub_scaled_shift(*this, EPoly{}, field.neg(Rational(1)), minus(p.lcm, f.back().e), f);
    s = sub_scaled_shift(*this, s, Rational(1), minus(p.lcm, g.back().e), g);
    EPoly r = normal_form(std::move(s), active_basis());
    if (!r.empty()) add(std::move(r));
  }

  // Interreduce the minimal basis.
  std::vector<EPoly> basis = active_basis();
  std::vector<EPoly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Exp& la = basis[a].back().e;
      const Exp& lb = basis[b].back().e;
      if (divides(lb, la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  std::vector<EPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<EPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    EPoly lead{minimal[a].back()};
    EPoly tail(minimal[a].begin(), minimal[a].end() - 1);
    EPoly nf = normal_form(std::move(tail), others);
    nf.push_back(lead.front());
    reduced.push_back(make_monic(std::move(nf)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const EPoly& a, const EPoly& b) {
    return order.compare(a.back().e, b.back().e) > 0;
  });
  return reduced;
}

}  // namespace qc::detail
