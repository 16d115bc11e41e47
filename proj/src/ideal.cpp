#include "quadcurves/ideal.hpp"

#include <mutex>

#include "groebner_engine.hpp"
#include "quadcurves/errors.hpp"

namespace qc {

struct Ideal::Cache {
  std::mutex mutex;
  std::map<MonomialOrder, std::vector<Polynomial>> bases;
};

Ideal::Ideal(FieldSpec field) : field_(field), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(std::vector<Polynomial> generators, FieldSpec field)
    : field_(field), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.field() == field_)) {
      throw MathError("field-mismatch", "generator " + g.to_string() + " is over " +
                                            g.field().to_string() + ", ideal over " +
                                            field_.to_string());
    }
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw MathError("not-homogeneous", "generator " + g.to_string() + " is not homogeneous");
    }
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(FieldSpec field) { return Ideal({Polynomial::constant(1, field)}, field); }

Ideal Ideal::maximal(FieldSpec field) {
  std::vector<Polynomial> v;
  for (int i = 0; i < kNumVars; ++i) v.push_back(Polynomial::variable(i, field));
  return Ideal(std::move(v), field);
}

Ideal Ideal::from_strings(const std::vector<std::string>& generators, FieldSpec field) {
  std::vector<Polynomial> v;
  v.reserve(generators.size());
  for (const auto& s : generators) v.push_back(parse_polynomial(s, field));
  return Ideal(std::move(v), field);
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
  }
  detail::Engine eng{field_, detail::EngineOrder::from(order)};
  std::vector<detail::EPoly> input;
  input.reserve(gens_.size());
  for (const auto& g : gens_) input.push_back(eng.import(g));
  std::vector<Polynomial> basis;
  for (const auto& b : eng.reduced_basis(input)) basis.push_back(eng.export_poly(b));
  std::lock_guard lock(cache_->mutex);
  // First writer wins; any concurrent result is identical.
  auto [it, inserted] = cache_->bases.emplace(order, std::move(basis));
  return it->second;
}

std::vector<Monomial> Ideal::initial_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.leading_term().mono);
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  detail::Engine eng{field_, detail::EngineOrder::from(MonomialOrder::grevlex())};
  std::vector<detail::EPoly> basis;
  for (const auto& g : groebner_basis()) basis.push_back(eng.import(g));
  return eng.export_poly(eng.normal_form(eng.import(change_field(f, field_)), basis));
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ", ";
    out += gens_[k].to_string();
  }
  return out + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.groebner_basis() == b.groebner_basis();
}

// ---------------------------------------------------------------- ideal ops

namespace {

void require_same_field(const Ideal& i, const Ideal& j) {
  if (!(i.field() == j.field())) {
    throw MathError("field-mismatch", "ideals over different fields");
  }
}

}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_field(i, j);
  std::vector<Polynomial> g = i.generators();
  g.insert(g.end(), j.generators().begin(), j.generators().end());
  return Ideal(std::move(g), i.field());
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_field(i, j);
  std::vector<Polynomial> g;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) g.push_back(a * b);
  }
  return Ideal(std::move(g), i.field());
}

Ideal ideal_power(const Ideal& i, int e) {
  Ideal r = Ideal::unit(i.field());
  for (int k = 0; k < e; ++k) r = ideal_product(r, i);
  return r;
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_field(i, j);
  if (i.is_zero() || j.is_zero()) return Ideal(i.field());
  detail::Engine eng{i.field(), detail::EngineOrder::aux_elimination()};
  std::vector<detail::EPoly> input;
  for (const auto& f : i.generators()) input.push_back(eng.times_aux(eng.import(f)));
  for (const auto& g : j.generators()) input.push_back(eng.one_minus_aux_times(eng.import(g)));
  std::vector<Polynomial> out;
  for (const auto& b : eng.reduced_basis(input)) {
    if (b.back().e[detail::kAuxSlot] == 0) out.push_back(eng.export_poly(b));
  }
  return Ideal(std::move(out), i.field());
}

Ideal ideal_intersection(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw MathError("empty-input", "intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersection(acc, ideals[k]);
  return acc;
}

Ideal ideal_quotient(const Ideal& i, const Polynomial& g) {
  if (g.is_zero()) return Ideal::unit(i.field());
  Ideal inter = ideal_intersection(i, Ideal({g}, i.field()));
  std::vector<Polynomial> out;
  for (const auto& h : inter.generators()) {
    auto q = exact_quotient(h, g);
    if (!q) throw MathError("internal", "intersection with (g) not divisible by g");
    out.push_back(std::move(*q));
  }
  return Ideal(std::move(out), i.field());
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  require_same_field(i, j);
  if (j.is_zero()) return Ideal::unit(i.field());
  std::vector<Ideal> parts;
  for (const auto& g : j.generators()) parts.push_back(ideal_quotient(i, g));
  return ideal_intersection(parts);
}

Ideal ideal_ops(const Ideal& i, const Ideal& j, IdealOp op) {
  switch (op) {
    case IdealOp::Sum:
      return ideal_sum(i, j);
    case IdealOp::Product:
      return ideal_product(i, j);
    case IdealOp::Intersection:
      return ideal_intersection(i, j);
    case IdealOp::Quotient:
      return ideal_quotient(i, j);
  }
  return i;
}

Ideal saturation(const Ideal& i, const Ideal& j) {
  constexpr int kMaxPasses = 50;
  Ideal current = i;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    Ideal next = ideal_quotient(current, j);
    if (next == current) return current;
    current = std::move(next);
  }
  throw MathError("saturation-diverged", "no stable ideal after 50 quotient passes");
}

Ideal saturate(const Ideal& i) { return saturation(i, Ideal::maximal(i.field())); }

}  // namespace qc
