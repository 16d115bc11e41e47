#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qc {

using Rational = mpq_class;

/// Coefficient field: exact rationals, or Z/p for an odd prime p.
///
/// Elements of both fields are carried as `Rational`. Over Z/p the stored
/// representative is always an integer in [0, p).
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws MathError("invalid-field") unless p is an odd prime.
  static FieldSpec prime(std::uint64_t p);

  /// 2^31 - 1, used for randomized rank pre-checks.
  static constexpr std::uint64_t kLargePrime = 2147483647ULL;

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint64_t characteristic() const { return is_prime() ? p_ : 0; }

  Rational normalize(const Rational& a) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws MathError("division-by-zero").
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// Text form of a normalized element. Over Z/p the symmetric representative
  /// in (-p/2, p/2] is printed.
  std::string format(const Rational& a) const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

}  // namespace qc
