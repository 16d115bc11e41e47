#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadcurves/field.hpp"

namespace qc {

inline constexpr int kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames = {'x', 'y', 'z', 't'};

/// Exponent vector over (x, y, z, t).
struct Monomial {
  std::array<int, kNumVars> exps{};

  static Monomial one() { return {}; }
  static Monomial var(int index, int power = 1) {
    Monomial m;
    m.exps[index] = power;
    return m;
  }

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(): returns *this / other.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// All monomials of total degree `d`, grevlex-descending. Empty for d < 0.
std::vector<Monomial> monomials_of_degree(int d);

/// Global monomial orders on K[x,y,z,t] with x > y > z > t.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Block order: grevlex on the first `k` variables, ties broken by grevlex
  /// on the remaining ones. Eliminates the first k variables.
  static MonomialOrder elimination(int k);

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  Kind kind_;
  int block_;
};

/// Sparse polynomial in K[x,y,z,t]. Terms are kept grevlex-descending with no
/// zero coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

  static Polynomial constant(const Rational& c, FieldSpec field = {});
  static Polynomial variable(int index, FieldSpec field = {});
  static Polynomial term(const Monomial& m, const Rational& c, FieldSpec field = {});
  /// Combines like terms, normalizes coefficients into the field, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, FieldSpec field = {});

  const std::vector<Term>& terms() const { return terms_; }
  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Degree when homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;
  /// True if no term involves a variable outside `allowed` (indices into x,y,z,t).
  bool uses_only(std::initializer_list<int> allowed) const;
  Rational coefficient(const Monomial& m) const;

  /// Leading term under grevlex. Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.field_ == g.field_ && f.terms_ == g.terms_;
  }

  /// Canonical text: grevlex-descending, explicit signs, '^' powers, no '*'.
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Throws MathError("field-mismatch") when the operands live over different fields.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op);

struct HomogeneityReport {
  bool homogeneous;
  std::optional<int> degree;  // absent for the zero polynomial
};
HomogeneityReport is_homogeneous(const Polynomial& f);

using LinearSubstitution = std::array<std::array<Rational, kNumVars>, kNumVars>;

/// Row i gives the linear form that replaces variable i.
/// Throws MathError("singular-matrix") unless the matrix is invertible.
Polynomial apply_linear_substitution(const Polynomial& f, const LinearSubstitution& m);
LinearSubstitution identity_substitution();
LinearSubstitution swap_substitution(int a, int b);

/// f / g when g divides f exactly, otherwise nullopt. Throws on g == 0.
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);

/// Value at a point (in the polynomial's field).
Rational evaluate(const Polynomial& f, std::span<const Rational, kNumVars> point);

/// Reduces every coefficient into `field` (e.g. rationals -> Z/p).
Polynomial change_field(const Polynomial& f, FieldSpec field);

/// Parses the polynomial grammar
///   poly := term (('+'|'-') term)*
///   term := coeff ('*'? varpow)* | varpow ('*' varpow)*
///   varpow := var ('^' nat)?    var in {x,y,z,t}    coeff := int | int '/' int
/// Whitespace is ignored; a leading sign is allowed. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, FieldSpec field = {});

}  // namespace qc
