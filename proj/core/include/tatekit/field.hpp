#ifndef TATEKIT_FIELD_HPP
#define TATEKIT_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "tatekit/errors.hpp"

namespace kt {

// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
  unsigned long p = 0;
  bool operator==(const Field&) const = default;
  bool is_rational() const { return p == 0; }
  std::string name() const { return p ? "F" + std::to_string(p) : "QQ"; }
};

Field make_field_qq();
Field make_field_fp(unsigned long p);  // checks primality

// Exact field element.  Rationals are kept canonical (lowest terms, positive
// denominator); F_p elements are the residue 0..p-1 with denominator 1.
class Scalar {
 public:
  Scalar() : v_(0), p_(0) {}
  static Scalar zero(const Field& f) { return Scalar(mpq_class(0), f.p); }
  static Scalar one(const Field& f) { return Scalar(mpq_class(1), f.p); }
  static Scalar of_long(long n, const Field& f);
  static Scalar of_mpz(const mpz_class& n, const Field& f);
  static Scalar of_mpq(const mpq_class& q, const Field& f);  // reduces mod p

  Field field() const { return Field{p_}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& rep() const { return v_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order used only for canonical printing/sorting, not math.
  bool operator<(const Scalar& o) const { return v_ < o.v_; }

  std::string str() const;

 private:
  Scalar(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) {}
  void reduce();
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw SpecError("field mismatch in scalar arithmetic");
  }
  mpq_class v_;
  unsigned long p_;
};

// Integer combinatorics used by divided-power coefficients; computed in Z,
// then mapped into the coefficient field.
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
// (n*p)! / (p! * (n!)^p): the number of block-ordered partitions behind
// gamma_p on a length-n word; always an integer.
mpz_class gamma_coeff(unsigned long n, unsigned long p);

}  // namespace kt

#endif
