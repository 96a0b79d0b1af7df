#ifndef TATEKIT_GROEBNER_HPP
#define TATEKIT_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "tatekit/poly.hpp"

namespace kt {

struct DivisionResult {
  Poly rem;
  std::vector<Poly> quot;  // one per divisor: f = sum quot[i]*G[i] + rem
};

// Multivariate division: remainder has no term divisible by any lt(G[i]).
// Divisors are tried in list order; fully deterministic.
DivisionResult divide(const Poly& f, const std::vector<Poly>& G);
Poly normal_form(const Poly& f, const std::vector<Poly>& G);

// Reduced Groebner basis (monic, auto-reduced, sorted by leading monomial
// ascending).  degree_cap > 0 aborts with CapError when an S-polynomial
// reduction exceeds that total degree.
std::vector<Poly> buchberger(std::vector<Poly> gens, unsigned degree_cap = 0);

// R = k[x_1..x_n]/I with a cached reduced Groebner basis; nf() gives the
// canonical representative of a residue class.
struct QuotientRing {
  Field field;
  std::vector<std::string> vars;
  std::vector<Poly> relations;
  std::vector<Poly> gb;

  QuotientRing() = default;
  QuotientRing(Field f, std::vector<std::string> v, std::vector<Poly> rels,
               unsigned degree_cap = 0);

  unsigned nvars() const { return static_cast<unsigned>(vars.size()); }
  Poly nf(const Poly& f) const { return normal_form(f, gb); }
  bool is_trivial() const;  // 1 in I
  bool homogeneous_relations() const;
  unsigned max_relation_degree() const;
  // Monomials of degree d not divisible by any gb leading monomial,
  // descending grlex; a k-basis of R_d when I is homogeneous and of the
  // degree-d filtration layer otherwise.
  std::vector<Monomial> standard_monomials(unsigned d) const;
};

// Upper-triangular table of the degree-2 coefficients of a relation.
struct QuadForm {
  unsigned n = 0;
  Field field;
  std::vector<Scalar> upper;  // row-major over pairs i <= j
  Scalar q(unsigned i, unsigned j) const;  // i <= j
};

// Extracts q^p_{ij} from a relation; rejects relations with nonzero
// constant or linear part.
QuadForm quadratic_part(const Poly& c);

}  // namespace kt

#endif
