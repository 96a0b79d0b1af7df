#ifndef TATEKIT_YONEDA_HPP
#define TATEKIT_YONEDA_HPP

#include <map>
#include <string>
#include <vector>

#include "tatekit/lie.hpp"
#include "tatekit/resolution.hpp"

namespace kt {

// A class in Ext^m_R(k,k) = Hom_R(P_m, k): since the resolution is minimal,
// classes are literal k-valued functionals on the PBW basis of P_m.
struct ExtElem {
  int m = 0;
  Field field;
  std::map<PBWMono, Scalar> vals;  // finitely supported; zeros dropped

  bool is_zero() const { return vals.empty(); }
  Scalar value(const PBWMono& b) const;
  ExtElem& add_term(const PBWMono& b, const Scalar& c);
  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem scale(const Scalar& c) const;
  bool operator==(const ExtElem& o) const { return m == o.m && vals == o.vals; }
  std::string str(const PDContext& ctx) const;  // e.g. "[S_1]^ - 2*[T_1*T_2]^"
};

// Augmentation eps: R -> k (constant term of the normal form) and its
// extension to homological degree 0 elements of the resolution.
Scalar augment(const QuotientRing& R, const Poly& p);
Scalar augment(const PDElem& z);

// A pd-derivation of homological degree r (r < 0 for lifts of duals,
// r >= 0 in the derivation complex), determined by its values on the
// generators: D(g) lies in P_{hdeg(g)+r}, and D extends by
// D(uv) = D(u)v + (-1)^{r|u|} u D(v),  D(a^{(j)}) = D(a) a^{(j-1)}.
struct DerLift {
  int r = 0;
  DerivationValues dv;  // dv.parity == |r| mod 2; one value per generator
};

// Derivation extension of the generator values applied to z.
PDElem apply_lift(const Resolution& res, const DerLift& L, const PDElem& z);

// Lift of the dual b^vee of generator gen_idx: a degree -hdeg(b)
// pd-derivation cocycle with eps(L(g)) = [g == b] on same-degree
// generators.  Values on higher generators solve d(Z) = (-1)^{hdeg b}
// L(d(g)): against the Koszul relations by polynomial division when Z has
// degree 1, by graded linear algebra (homogeneous relations) otherwise.
// Throws "lift incomplete at degree D" when no solution exists within the
// truncation.
DerLift lift_dual(const Resolution& res, int gen_idx);

// d(L(g)) == (-1)^r L(d(g)) on every generator.
bool cocycle_check(const Resolution& res, const DerLift& L);

// Differential of the derivation complex: delta(L) = d.L - (-1)^r L.d,
// again a pd-derivation (degree r - 1); zero exactly on cocycles.
DerLift der_delta(const Resolution& res, const DerLift& L);

// Pointwise sum / R-scalar multiple (degrees must match for the sum).
DerLift der_add(const Resolution& res, const DerLift& a, const DerLift& b);
DerLift der_scale(const Resolution& res, const Poly& c, const DerLift& a);

// Super-commutator a.b - (-1)^{|a||b|} b.a: a pd-derivation of degree
// r_a + r_b, a cocycle whenever both inputs are.
DerLift der_bracket(const Resolution& res, const DerLift& a, const DerLift& b);

// Square D.D of an odd pd-derivation: again a pd-derivation, of degree 2r;
// sends cocycles to cocycles and satisfies [D^2, E] = [D, [D, E]].
DerLift der_square(const Resolution& res, const DerLift& a);

// The class of a lift: u -> eps(L(u)) on the degree -r basis.  For
// lift_dual output this reproduces the target dual exactly.
ExtElem ext_value(const Resolution& res, const DerLift& L);

// The class of a derivation cocycle under the degree normalization
// (-1)^{m(m-1)/2} that matches the commutator of derivations with the
// commutator of Yoneda products (for m = -r <= 2 this is the
// identification of the homotopy Lie bracket with the product formulas).
ExtElem pi_value(const Resolution& res, const DerLift& L);

// Chain-map normalization of a lift applied to a homogeneous-degree
// element: t_j = (-1)^{(j+r)r} L on P_j, the form in which composition is
// literally the Yoneda product.
PDElem chain_apply(const Resolution& res, const DerLift& L, const PDElem& z);

// Yoneda product psi . phi = (-1)^{|psi||phi|} eps(psi(phi(u))): the
// composite class in degree -(r_psi + r_phi).
ExtElem yoneda_product(const Resolution& res, const DerLift& psi, const DerLift& phi);
// n-ary product, rightmost factor applied first; empty list gives the
// class of 1 in Ext^0.
ExtElem yoneda_product(const Resolution& res, const std::vector<const DerLift*>& factors);

// Homotopy Lie structure in degrees 1, 2: brackets [alpha_i, alpha_j] and
// the quadratic operator q(alpha_i) in beta-coordinates, computed BOTH
// from the quadratic parts of the relations and from Yoneda products of
// lifted duals; the two paths must agree.  Requires a complete
// intersection (relations a regular sequence, all terms of degree >= 2).
RestrictedLie homotopy_lie(const RingSpec& spec);

// Presentation of Ext as k[beta_1..beta_k] (x) k<alpha_1..alpha_n> modulo
// anti-commutators and squares with beta-linear right-hand sides.
struct ExtPresentation {
  unsigned n = 0, k = 0;
  // rhs[ut_index(i,j,n)][p]: beta_p-coordinate of alpha_i alpha_j +
  // alpha_j alpha_i (i < j) resp. alpha_i^2 (i == j)
  std::vector<std::vector<Scalar>> rhs;
  std::vector<std::string> relations;  // printable, one per (i <= j)
  bool strictly_graded_commutative = false;  // all right-hand sides vanish
  unsigned generators = 0;                   // minimal generator count
};
ExtPresentation ext_presentation(const RingSpec& spec);

// n + k - rank of the C(n+1,2) x k matrix of quadratic coefficients.
unsigned generator_count(const RingSpec& spec);

// Comultiplication test: z is primitive iff z(u * v mod m) = 0 for all
// pairs of positive-degree basis monomials with hdeg u + hdeg v = z.m.
bool primitivity_check(const Resolution& res, const ExtElem& z);
// Canonical basis (coordinate vectors over basis(m)) of the primitive
// subspace of Ext^m.
std::vector<Vec> primitive_subspace(const Resolution& res, int m);

// dim Ext^m for a complete intersection with n variables, k relations:
// #{(a, b): a_i in {0,1}, b_p >= 0, sum a_i + 2 sum b_p = m}.
unsigned long ext_dimension(const RingSpec& spec, int m);

// Bounded certificate that every pd-derivation cocycle of homological
// degree r in {0, 1} is a boundary in the derivation complex, checked by
// graded linear algebra per internal shift with value degrees <= bound.
struct NegDerReport {
  bool certified = false;  // every checked piece exact
  bool conclusive = false; // false when the hypotheses for the check fail
  long bound = 0;
  int shift_min = 0, shift_max = 0;  // internal shifts covered
  std::string status;
  std::string witness;  // nonzero class location, if any
};
NegDerReport negative_derivation_check(const Resolution& res, long bound);

}  // namespace kt

#endif
