#ifndef TATEKIT_POLY_HPP
#define TATEKIT_POLY_HPP

#include <string>
#include <vector>

#include "tatekit/field.hpp"

namespace kt {

// Exponent vector; the variable set is positional (x_1 ... x_n).
struct Monomial {
  std::vector<unsigned> e;

  explicit Monomial(unsigned nvars = 0) : e(nvars, 0) {}
  unsigned nvars() const { return static_cast<unsigned>(e.size()); }
  unsigned deg() const;
  bool is_one() const { return deg() == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial operator/(const Monomial& m) const;  // requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& m) const;
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with x_1 > x_2 > ... > x_n.
bool grlex_less(const Monomial& a, const Monomial& b);
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

struct Term {
  Monomial m;
  Scalar c;
};

// Sparse polynomial; terms kept in strictly descending grlex order, no zero
// coefficients.  The zero polynomial has no terms.
class Poly {
 public:
  Poly() : nv_(0) {}
  Poly(unsigned nvars, const Field& f) : nv_(nvars), f_(f) {}
  static Poly zero(unsigned nvars, const Field& f) { return Poly(nvars, f); }
  static Poly constant(const Scalar& c, unsigned nvars);
  static Poly monomial(const Monomial& m, const Scalar& c);
  static Poly variable(unsigned i, unsigned nvars, const Field& f);

  unsigned nvars() const { return nv_; }
  const Field& field() const { return f_; }
  bool is_zero() const { return ts_.empty(); }
  const std::vector<Term>& terms() const { return ts_; }
  const Term& lt() const;     // leading term (grlex-largest); throws on zero
  unsigned deg() const;       // total degree; 0 for the zero polynomial
  bool is_homogeneous() const;
  bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].m.is_one()); }
  Scalar constant_term() const;
  Scalar coeff(const Monomial& m) const;
  // True when every term has total degree >= d.
  bool in_power_of_max_ideal(unsigned d) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scale(const Scalar& c) const;
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  Poly monic() const;  // divide by leading coefficient
  Poly homogeneous_part(unsigned d) const;

  // Construction helper: adds c*m into the polynomial.
  void add_term(const Monomial& m, const Scalar& c);

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Canonical total order (degree of lead, then termwise); for sorting output.
  static bool canonical_less(const Poly& a, const Poly& b);

 private:
  unsigned nv_;
  Field f_;
  std::vector<Term> ts_;
};

// Canonical text form: terms in descending grlex, "*" products, "^" powers,
// "a/b" rational coefficients, unit coefficients suppressed except on the
// constant term.  parse_poly accepts the same grammar plus parentheses and
// reports positions on error.
std::string poly_str(const Poly& p, const std::vector<std::string>& vars);
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, const Field& f);

// Variable names must be distinct identifiers ([A-Za-z_][A-Za-z0-9_]*).
void check_var_names(const std::vector<std::string>& vars);

}  // namespace kt

#endif
