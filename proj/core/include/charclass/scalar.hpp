#ifndef CHARCLASS_SCALAR_HPP
#define CHARCLASS_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "charclass/errors.hpp"

namespace charclass {

// Coefficient field: exact rationals, or F_p with p prime, p < 2^62.
// F_p is a performance surrogate; final integer outputs must agree with
// rational mode wherever the latter completes.
struct Field {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static Field rationals() { return Field{Kind::Rationals, 0}; }
  static Field prime(std::uint64_t p);

  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

// An element of the coefficient field, tagged by its field descriptor.
// Rationals are kept in lowest terms with positive denominator (mpq_class
// canonical form); prime-field values are reduced to [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(1, f); }
  static Scalar from_int(long v, const Field& f);
  static Scalar from_mpq(const mpq_class& q, const Field& f);
  // Parses "n" or "n/m".
  static Scalar from_string(const std::string& s, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;
  // Rational-mode accessor; requires is_integer().
  mpz_class numerator() const;
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void check_same(const Scalar& o) const;
  Field field_;
  mpq_class q_;          // Rationals mode
  std::uint64_t r_ = 0;  // Prime mode
};

}  // namespace charclass

#endif
