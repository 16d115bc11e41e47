#include "quadcurves/field.hpp"

#include "quadcurves/errors.hpp"

namespace qc {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) {
    throw MathError("invalid-field", "characteristic 2 is not supported (quadric rank needs char != 2)");
  }
  if (!is_prime_number(p)) {
    throw MathError("invalid-field", std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

namespace {

mpz_class mod_p(const mpz_class& a, std::uint64_t p) {
  mpz_class r;
  mpz_class pm(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pm.get_mpz_t());
  return r;
}

}  // namespace

Rational FieldSpec::normalize(const Rational& a) const {
  if (!is_prime()) return a;
  mpz_class num = mod_p(a.get_num(), p_);
  if (a.get_den() == 1) return Rational(num);
  mpz_class den = mod_p(a.get_den(), p_);
  if (den == 0) {
    throw MathError("division-by-zero", "denominator vanishes modulo " + std::to_string(p_));
  }
  mpz_class pm(static_cast<unsigned long>(p_));
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
  return Rational(mod_p(num * den_inv, p_));
}

Rational FieldSpec::add(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a + b;
  return Rational(mod_p(a.get_num() + b.get_num(), p_));
}

Rational FieldSpec::sub(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a - b;
  return Rational(mod_p(a.get_num() - b.get_num(), p_));
}

Rational FieldSpec::mul(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a * b;
  return Rational(mod_p(a.get_num() * b.get_num(), p_));
}

Rational FieldSpec::neg(const Rational& a) const {
  if (!is_prime()) return -a;
  return Rational(mod_p(-a.get_num(), p_));
}

Rational FieldSpec::inv(const Rational& a) const {
  if (a == 0) throw MathError("division-by-zero", "inverse of zero");
  if (!is_prime()) return 1 / a;
  mpz_class pm(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pm.get_mpz_t());
  return Rational(r);
}

std::string FieldSpec::format(const Rational& a) const {
  if (!is_prime()) return a.get_str();
  mpz_class v = a.get_num();
  mpz_class pm(static_cast<unsigned long>(p_));
  if (2 * v > pm) v -= pm;
  return v.get_str();
}

std::string FieldSpec::to_string() const {
  if (!is_prime()) return "QQ";
  return "ZZ/" + std::to_string(p_);
}

}  // namespace qc
