#include "quadcurves/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "order_impl.hpp"
#include "quadcurves/errors.hpp"

namespace qc {

// ---------------------------------------------------------------- Monomial

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps[i] = exps[i] + other.exps[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps[i] = exps[i] - other.exps[i];
  return r;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) {
      for (int c = d - a - b; c >= 0; --c) {
        out.push_back(Monomial{{a, b, c, d - a - b - c}});
      }
    }
  }
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& u, const Monomial& v) { return order.compare(u, v) > 0; });
  return out;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::elimination(int k) {
  if (k < 1 || k >= kNumVars) {
    throw MathError("invalid-order", "elimination block must eliminate 1..3 variables");
  }
  return MonomialOrder(Kind::Elimination, k);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int* pa = a.exps.data();
  const int* pb = b.exps.data();
  switch (kind_) {
    case Kind::Grevlex:
      return detail::grevlex_compare(pa, pb, 0, kNumVars);
    case Kind::Lex:
      return detail::lex_compare(pa, pb, 0, kNumVars);
    case Kind::Elimination: {
      int c = detail::grevlex_compare(pa, pb, 0, block_);
      if (c != 0) return c;
      return detail::grevlex_compare(pa, pb, block_, kNumVars);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim" + std::to_string(block_);
  }
  return "?";
}

// -------------------------------------------------------------- Polynomial

namespace {

void sort_and_combine(std::vector<Polynomial::Term>& terms, const FieldSpec& field) {
  const auto order = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(), [&](const auto& u, const auto& v) {
    return order.compare(u.mono, v.mono) > 0;
  });
  std::vector<Polynomial::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff == 0; });
  terms = std::move(out);
}

void require_same_field(const Polynomial& f, const Polynomial& g) {
  if (!(f.field() == g.field())) {
    throw MathError("field-mismatch",
                    "operands over " + f.field().to_string() + " and " + g.field().to_string());
  }
}

}  // namespace

Polynomial Polynomial::constant(const Rational& c, FieldSpec field) {
  return term(Monomial::one(), c, field);
}

Polynomial Polynomial::variable(int index, FieldSpec field) {
  return term(Monomial::var(index), 1, field);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c, FieldSpec field) {
  Polynomial p(field);
  Rational v = field.normalize(c);
  if (v != 0) p.terms_.push_back({m, std::move(v)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, FieldSpec field) {
  for (auto& t : terms) t.coeff = field.normalize(t.coeff);
  sort_and_combine(terms, field);
  Polynomial p(field);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

int Polynomial::degree() const {
  // grevlex is degree-compatible, so the leading term has maximal degree.
  return terms_.empty() ? -1 : terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().mono.degree() == terms_.back().mono.degree();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree();
}

bool Polynomial::uses_only(std::initializer_list<int> allowed) const {
  for (const auto& t : terms_) {
    for (int i = 0; i < kNumVars; ++i) {
      if (t.mono.exps[i] > 0 && std::find(allowed.begin(), allowed.end(), i) == allowed.end()) {
        return false;
      }
    }
  }
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Rational v = field_.normalize(c);
  Polynomial r(field_);
  if (v == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, v);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(field_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  const auto order = MonomialOrder::grevlex();
  Polynomial r(f.field_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.terms_.size() || j < g.terms_.size()) {
    int c;
    if (i == f.terms_.size()) {
      c = -1;
    } else if (j == g.terms_.size()) {
      c = 1;
    } else {
      c = order.compare(f.terms_[i].mono, g.terms_[j].mono);
    }
    if (c > 0) {
      r.terms_.push_back(f.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Rational s = f.field_.add(f.terms_[i].coeff, g.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({f.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  std::vector<Polynomial::Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      prod.push_back({a.mono * b.mono, f.field_.mul(a.coeff, b.coeff)});
    }
  }
  sort_and_combine(prod, f.field_);
  Polynomial r(f.field_);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(1, field_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = field_.format(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = (c == "1");
    if (!unit || t.mono.degree() == 0) out += c;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.mono.exps[i];
      if (e == 0) continue;
      out += kVarNames[i];
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// ----------------------------------------------------------- free functions

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  return Polynomial(f.field());
}

HomogeneityReport is_homogeneous(const Polynomial& f) {
  return {f.is_homogeneous(), f.homogeneous_degree()};
}

LinearSubstitution identity_substitution() {
  LinearSubstitution m;
  for (int i = 0; i < kNumVars; ++i) {
    for (int j = 0; j < kNumVars; ++j) m[i][j] = (i == j) ? 1 : 0;
  }
  return m;
}

LinearSubstitution swap_substitution(int a, int b) {
  LinearSubstitution m = identity_substitution();
  std::swap(m[a], m[b]);
  return m;
}

namespace {

bool is_invertible(const LinearSubstitution& m, const FieldSpec& field) {
  auto a = m;
  for (auto& row : a) {
    for (auto& v : row) v = field.normalize(v);
  }
  for (int c = 0; c < kNumVars; ++c) {
    int pivot = -1;
    for (int r = c; r < kNumVars; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(a[c], a[pivot]);
    for (int r = c + 1; r < kNumVars; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = field.div(a[r][c], a[c][c]);
      for (int k = c; k < kNumVars; ++k) a[r][k] = field.sub(a[r][k], field.mul(f, a[c][k]));
    }
  }
  return true;
}

}  // namespace

Polynomial apply_linear_substitution(const Polynomial& f, const LinearSubstitution& m) {
  const FieldSpec& field = f.field();
  if (!is_invertible(m, field)) {
    throw MathError("singular-matrix", "linear substitution is not invertible");
  }
  std::array<Polynomial, kNumVars> images{Polynomial(field), Polynomial(field), Polynomial(field),
                                          Polynomial(field)};
  for (int i = 0; i < kNumVars; ++i) {
    std::vector<Polynomial::Term> terms;
    for (int j = 0; j < kNumVars; ++j) terms.push_back({Monomial::var(j), m[i][j]});
    images[i] = Polynomial::from_terms(std::move(terms), field);
  }
  Polynomial result(field);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(t.coeff, field);
    for (int i = 0; i < kNumVars; ++i) {
      if (t.mono.exps[i] > 0) p = p * images[i].pow(t.mono.exps[i]);
    }
    result = result + p;
  }
  return result;
}

std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw MathError("division-by-zero", "exact_quotient by zero");
  const FieldSpec& field = f.field();
  const auto& lt = g.leading_term();
  Rational lc_inv = field.inv(lt.coeff);
  Polynomial rem = f;
  std::vector<Polynomial::Term> quotient;
  while (!rem.is_zero()) {
    const auto& r = rem.leading_term();
    if (!lt.mono.divides(r.mono)) return std::nullopt;
    Polynomial::Term q{r.mono / lt.mono, field.mul(r.coeff, lc_inv)};
    rem = rem - g.times_monomial(q.mono).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(std::move(quotient), field);
}

Rational evaluate(const Polynomial& f, std::span<const Rational, kNumVars> point) {
  const FieldSpec& field = f.field();
  Rational acc = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (int i = 0; i < kNumVars; ++i) {
      for (int e = 0; e < t.mono.exps[i]; ++e) v = field.mul(v, point[i]);
    }
    acc = field.add(acc, v);
  }
  return acc;
}

Polynomial change_field(const Polynomial& f, FieldSpec field) {
  std::vector<Polynomial::Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(std::move(terms), field);
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, FieldSpec field) : field_(field) {
    // Normalize U+2212 MINUS SIGN to '-' while keeping a column map.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        src_.push_back('-');
        cols_.push_back(static_cast<int>(i) + 1);
        i += 2;
        continue;
      }
      src_.push_back(text[i]);
      cols_.push_back(static_cast<int>(i) + 1);
    }
  }

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Polynomial::Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = (peek() == '-');
      ++pos_;
      skip_ws();
    }
    terms.push_back(parse_term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial::from_terms(std::move(terms), field_);
  }

 private:
  Polynomial::Term parse_term(bool negative) {
    Polynomial::Term term{Monomial::one(), 1};
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_coeff();
      have_coeff = true;
      skip_ws();
    }
    bool have_var = false;
    while (!at_end()) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        if (!have_coeff && !have_var) fail("'*' before any factor");
        ++pos_;
        skip_ws();
        if (at_end() || var_index(peek()) < 0) fail("expected variable after '*'");
        continue;
      }
      int v = var_index(c);
      if (v < 0) break;
      ++pos_;
      int power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        power = parse_nat();
      }
      term.mono.exps[v] += power;
      have_var = true;
    }
    if (!have_coeff && !have_var) fail("expected a term");
    if (negative) term.coeff = -term.coeff;
    return term;
  }

  Rational parse_coeff() {
    mpz_class num = parse_int();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      mpz_class den = parse_int();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  mpz_class parse_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(src_.substr(start, pos_ - start));
  }

  int parse_nat() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  static int var_index(char c) {
    for (int i = 0; i < kNumVars; ++i) {
      if (kVarNames[i] == c) return i;
    }
    return -1;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    int col = pos_ < cols_.size() ? cols_[pos_] : (cols_.empty() ? 1 : cols_.back() + 1);
    throw ParseError(msg, 0, col);
  }

  FieldSpec field_;
  std::string src_;
  std::vector<int> cols_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, FieldSpec field) {
  return PolyParser(text, field).parse();
}

}  // namespace qc
