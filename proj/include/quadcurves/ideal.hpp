#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadcurves/polynomial.hpp"

namespace qc {

/// Homogeneous ideal of K[x,y,z,t]. Generators are immutable; reduced Groebner
/// bases are computed on demand and cached per monomial order. Copies share
/// the cache.
class Ideal {
 public:
  explicit Ideal(FieldSpec field = {});
  /// Zero generators are dropped. Throws MathError("not-homogeneous") or
  /// MathError("field-mismatch").
  Ideal(std::vector<Polynomial> generators, FieldSpec field = {});

  static Ideal unit(FieldSpec field = {});
  static Ideal maximal(FieldSpec field = {});
  static Ideal from_strings(const std::vector<std::string>& generators, FieldSpec field = {});

  const std::vector<Polynomial>& generators() const { return gens_; }
  const FieldSpec& field() const { return field_; }

  /// Reduced Groebner basis, sorted by leading monomial (descending).
  /// Canonical: independent of the generator order.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;
  /// Leading monomials of the grevlex basis.
  std::vector<Monomial> initial_monomials() const;

  /// Remainder modulo the reduced grevlex basis.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  std::string to_string() const;

  /// Ideal equality: identical reduced grevlex bases.
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache;
  std::vector<Polynomial> gens_;
  FieldSpec field_;
  std::shared_ptr<Cache> cache_;
};

// ------------------------------------------------------------- operations

enum class IdealOp { Sum, Product, Intersection, Quotient };

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
/// Elimination of an auxiliary variable w from w*I + (1-w)*J.
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(std::span<const Ideal> ideals);
/// I : (g) = (I cap (g)) / g.
Ideal ideal_quotient(const Ideal& i, const Polynomial& g);
/// I : J as the intersection of I : g over the generators g of J.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
Ideal ideal_ops(const Ideal& i, const Ideal& j, IdealOp op);
Ideal ideal_power(const Ideal& i, int e);

/// Iterates I := I : J until the reduced basis stabilizes (at most 50 passes,
/// else MathError("saturation-diverged")).
Ideal saturation(const Ideal& i, const Ideal& j);
/// Saturation with respect to the irrelevant ideal (x,y,z,t).
Ideal saturate(const Ideal& i);

// ---------------------------------------------------------------- Hilbert

/// Univariate integer polynomial, coefficient k is the coefficient of s^k.
using IntPoly = std::vector<std::int64_t>;

struct HilbertData {
  /// Hilbert series of R/I is numerator(s) / (1 - s)^4.
  IntPoly numerator;
  /// Krull dimension of R/I; -1 for the unit ideal.
  int dimension = 0;
  /// Multiplicity; absent for the zero ideal, whose degree is not reported.
  std::optional<std::int64_t> degree;
  bool zero_ideal = false;
  /// For dimension 2 (a curve): Hilbert polynomial d*j + c.
  struct Line {
    std::int64_t leading;
    std::int64_t constant;
  };
  std::optional<Line> hilbert_polynomial;
  /// 1 - c for curves.
  std::optional<std::int64_t> arithmetic_genus;

  /// dim_K (R/I)_j from the series expansion.
  std::int64_t value(int j) const;
};

HilbertData hilbert_data(const Ideal& i);
/// Numerator of the Hilbert series of R/M for a monomial ideal M.
IntPoly hilbert_numerator(const std::vector<Monomial>& generators);
/// dim_K (R/I)_j by counting standard monomials of the grevlex basis.
std::int64_t hilbert_function(const Ideal& i, int j);
/// Krull dimension of R/I (4 for the zero ideal, -1 for the unit ideal).
int krull_dimension(const Ideal& i);
/// Codimension of I in R (4 - dim R/I; 5 for the unit ideal).
int codimension(const Ideal& i);

// ------------------------------------------------------- graded components

/// Basis of I_j in reduced row echelon form over the grevlex-descending
/// monomial basis of R_j.
std::vector<Polynomial> homogeneous_component(const Ideal& i, int j);

struct GeneratorCount {
  int mu = 0;
  /// degree -> number of minimal generators in that degree
  std::map<int, int> per_degree;
};

/// A minimal generating set chosen from the given generators, lowest degrees first.
std::vector<Polynomial> minimal_generators(const Ideal& i);
/// mu(I) = sum_j dim I_j - dim (R_1 I_{j-1}), by degreewise linear algebra.
GeneratorCount minimal_generator_count(const Ideal& i);

/// Homogeneous f_1..f_k form a regular sequence iff codim(f_1..f_k) = k.
/// Throws MathError("not-homogeneous") / MathError("zero-element").
bool is_regular_sequence(std::span<const Polynomial> fs);

struct AcmVerdict {
  /// Absent when the ideal contains no quadric and no other criterion applies.
  std::optional<bool> acm;
  int mu = 0;
  bool has_quadric = false;
  std::string reason;
};

/// Minimal-generator test for curves on a quadric. Requires a saturated ideal
/// with dim R/I = 2; throws MathError("not-a-curve") otherwise.
AcmVerdict is_acm_curve(const Ideal& i);

}  // namespace qc
