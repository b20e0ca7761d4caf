#include "charclass/scalar.hpp"

namespace charclass {

namespace {

bool is_probable_prime(std::uint64_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t(1) << 62) || !is_probable_prime(p))
    throw UsageError("field modulus must be a prime < 2^62");
  return Field{Kind::Prime, p};
}

std::string Field::to_string() const {
  return kind == Kind::Rationals ? "q" : ("fp:" + std::to_string(p));
}

Scalar Scalar::from_int(long v, const Field& f) {
  Scalar s(f);
  if (f.kind == Field::Kind::Rationals) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += static_cast<long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q, const Field& f) {
  Scalar s(f);
  if (f.kind == Field::Kind::Rationals) {
    s.q_ = q;
    s.q_.canonicalize();
  } else {
    mpz_class p(static_cast<unsigned long>(f.p));
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw UsageError("denominator divisible by field characteristic");
    std::uint64_t n = num.get_ui();
    std::uint64_t d = mpz_class(den).get_ui();
    s.r_ = mulmod(n, powmod(d, f.p - 2, f.p), f.p);
  }
  return s;
}

Scalar Scalar::from_string(const std::string& str, const Field& f) {
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw UsageError("bad rational literal: " + str);
  q.canonicalize();
  return from_mpq(q, f);
}

bool Scalar::is_zero() const {
  return field_.kind == Field::Kind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == Field::Kind::Rationals ? q_ == 1 : r_ == 1;
}

bool Scalar::is_integer() const {
  return field_.kind == Field::Kind::Prime || q_.get_den() == 1;
}

mpz_class Scalar::numerator() const {
  if (field_.kind == Field::Kind::Prime) return mpz_class(static_cast<unsigned long>(r_));
  return q_.get_num();
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw UsageError("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rationals) {
    s.q_ = q_ + o.q_;
  } else {
    std::uint64_t r = r_ + o.r_;  // p < 2^62, no overflow
    s.r_ = r >= field_.p ? r - field_.p : r;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rationals)
    s.q_ = q_ * o.q_;
  else
    s.r_ = mulmod(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("division by zero scalar");
  Scalar s(field_);
  if (field_.kind == Field::Kind::Rationals)
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, field_.p - 2, field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == Field::Kind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (field_.kind == Field::Kind::Rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace charclass
