#include "tatekit/field.hpp"

namespace kt {

Field make_field_qq() { return Field{0}; }

Field make_field_fp(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw SpecError("field characteristic must be prime, got " + std::to_string(p));
  return Field{p};
}

void Scalar::reduce() {
  if (p_ == 0) {
    v_.canonicalize();
    return;
  }
  // Bring to residue form: numerator * den^{-1} mod p.
  v_.canonicalize();
  mpz_class num = v_.get_num(), den = v_.get_den(), p(static_cast<unsigned long>(p_));
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw SpecError("denominator not invertible mod " + std::to_string(p_));
    num *= dinv;
  }
  mpz_class r = num % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

Scalar Scalar::of_long(long n, const Field& f) {
  Scalar s(mpq_class(n), f.p);
  s.reduce();
  return s;
}

Scalar Scalar::of_mpz(const mpz_class& n, const Field& f) {
  Scalar s(mpq_class(n), f.p);
  s.reduce();
  return s;
}

Scalar Scalar::of_mpq(const mpq_class& q, const Field& f) {
  Scalar s(q, f.p);
  s.reduce();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(-v_, p_);
  s.reduce();
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s(v_ + o.v_, p_);
  s.reduce();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar s(v_ - o.v_, p_);
  s.reduce();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s(v_ * o.v_, p_);
  s.reduce();
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw MathError("division by zero scalar");
  if (p_ == 0) {
    Scalar s(1 / v_, p_);
    s.reduce();
    return s;
  }
  mpz_class r, a = v_.get_num(), p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(r), p_);
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar r = Scalar::one(field());
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::str() const { return v_.get_str(); }

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class gamma_coeff(unsigned long n, unsigned long p) {
  mpz_class num = factorial(n * p);
  mpz_class den = factorial(p);
  mpz_class fn = factorial(n);
  mpz_class fnp;
  mpz_pow_ui(fnp.get_mpz_t(), fn.get_mpz_t(), p);
  den *= fnp;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw MathError("gamma coefficient not integral");
  return q;
}

}  // namespace kt
