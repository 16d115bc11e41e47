#pragma once

// Buchberger engine shared by Ideal and the elimination-based ideal operations.
// Works on five exponent slots: x, y, z, t and an auxiliary variable w that
// only ever appears inside elimination computations.

#include <array>
#include <vector>

#include "quadcurves/field.hpp"
#include "quadcurves/polynomial.hpp"

namespace qc::detail {

inline constexpr int kSlots = 5;
inline constexpr int kAuxSlot = 4;

using Exp = std::array<int, kSlots>;

struct EngineOrder {
  enum class Kind { Grevlex, Lex, Block, AuxElimination };
  Kind kind = Kind::Grevlex;
  int block = 0;

  static EngineOrder from(const MonomialOrder& o);
  static EngineOrder aux_elimination() { return {Kind::AuxElimination, 0}; }

  int compare(const Exp& a, const Exp& b) const;
};

struct ETerm {
  Exp e;
  Rational c;
};

// Terms sorted ascending in the engine order; the leading term is back().
using EPoly = std::vector<ETerm>;

struct Engine {
  FieldSpec field;
  EngineOrder order;

  EPoly import(const Polynomial& f) const;
  // Throws if the auxiliary variable survives.
  Polynomial export_poly(const EPoly& f) const;

  EPoly times_aux(const EPoly& f) const;            // w * f
  EPoly one_minus_aux_times(const EPoly& f) const;  // (1 - w) * f

  EPoly normal_form(EPoly f, const std::vector<EPoly>& basis) const;
  std::vector<EPoly> reduced_basis(const std::vector<EPoly>& generators) const;

  EPoly make_monic(EPoly f) const;
  EPoly sort_terms(std::vector<ETerm> terms) const;
};

inline int x_degree(const Exp& e) { return e[0] + e[1] + e[2] + e[3]; }

}  // namespace qc::detail
