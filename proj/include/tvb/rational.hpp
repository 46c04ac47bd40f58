#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tvb {

// Exact rational scalar. Canonical form invariant: denominator > 0,
// gcd(|num|, den) = 1, and zero is stored as 0/1. Constructors
// canonicalize; the arithmetic below preserves the invariant.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(static_cast<signed long>(n)) {}
  explicit Rat(const mpz_class& n) : q_(n) {}

  Rat(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  // Parses "num" or "num/den" with optional leading '-'. Rejects anything
  // else (whitespace, exponents, decimals) so config files stay canonical.
  static Rat parse(const std::string& s);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }

  Rat operator-() const { return Rat(static_cast<mpq_class>(-q_)); }
  Rat operator+(const Rat& o) const { return Rat(static_cast<mpq_class>(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(static_cast<mpq_class>(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(static_cast<mpq_class>(q_ * o.q_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rat(static_cast<mpq_class>(q_ / o.q_));
  }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  bool operator==(const Rat& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) == 0; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t()) < 0; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  // Always "num/den" (canonical bytes, used by the config file format).
  std::string str() const;
  // "num" when den == 1, else "num/den" (for human-facing output).
  std::string pretty() const;

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rat(const mpq_class& q) : q_(q) {}  // trusted: ops on canonical args stay canonical
  mpq_class q_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

}  // namespace tvb
