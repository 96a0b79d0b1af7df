#ifndef TATEKIT_MODULE_HPP
#define TATEKIT_MODULE_HPP

#include <vector>

#include "tatekit/groebner.hpp"

namespace kt {

// Element of a free module Pol^t: one polynomial per position.
using PVec = std::vector<Poly>;

PVec pvec_zero(size_t t, unsigned nvars, const Field& f);
bool pvec_is_zero(const PVec& v);
PVec pvec_add(const PVec& a, const PVec& b);
PVec pvec_sub(const PVec& a, const PVec& b);
PVec pvec_mul_term(const PVec& v, const Monomial& m, const Scalar& c);
PVec pvec_scale(const PVec& v, const Scalar& c);
bool pvec_eq(const PVec& a, const PVec& b);
bool pvec_canonical_less(const PVec& a, const PVec& b);

// Groebner basis of the submodule of Pol^t generated by gens, under the
// block order: positions < lead_block dominate positions >= lead_block;
// within a block, grlex on the monomial, then smaller position.  With
// lead_block == t this is a plain TOP-style module order; smaller
// lead_block values give elimination of the trailing positions.
std::vector<PVec> module_groebner(std::vector<PVec> gens, size_t lead_block,
                                  unsigned degree_cap = 0);

// Full reduction of v against a module Groebner basis (same order).
PVec module_normal_form(const PVec& v, const std::vector<PVec>& G, size_t lead_block);

// Generators of the syzygy module of the given columns over Pol:
// all (a_1..a_s) with sum a_j cols[j] = 0.  Computed by eliminating the
// tracking block of an augmented module.  Output is monic, deduplicated,
// canonically sorted.
std::vector<PVec> module_syzygies_poly(const std::vector<PVec>& cols, size_t t,
                                       unsigned degree_cap = 0);

// Same over R = Pol/I: entries are canonical representatives; relation
// columns c*e_i are adjoined before eliminating, and the results are
// normal-formed back into R.
std::vector<PVec> module_syzygies(const QuotientRing& R, const std::vector<PVec>& cols, size_t t,
                                  unsigned degree_cap = 0);

// Membership certificate for v in the R-submodule of R^t generated by cols.
bool module_member(const QuotientRing& R, const PVec& v, const std::vector<PVec>& cols, size_t t,
                   unsigned degree_cap = 0);

// Coefficients u with sum_j u_j cols[j] == v over R (tracked reduction of
// the augmented module), or nullopt when v is not in the column module.
// Deterministic: the canonical normal form of the augmented vector.
std::optional<PVec> module_express(const QuotientRing& R, const PVec& v,
                                   const std::vector<PVec>& cols, size_t t,
                                   unsigned degree_cap = 0);

// Precomputed data for repeated membership tests against one module.
struct ModuleMembership {
  ModuleMembership(const QuotientRing& R, std::vector<PVec> cols, size_t t,
                   unsigned degree_cap = 0);
  bool contains(const PVec& v) const;
  size_t t;
  std::vector<PVec> gb;  // Pol-level basis of cols + relation columns
};

struct RegSeqReport {
  bool regular = false;
  // On failure: gs[fail_index] is a zerodivisor mod (gs[0..fail_index-1]),
  // witnessed by `witness` (nonzero in the quotient, witness*g in the ideal).
  int fail_index = -1;
  Poly witness;
  bool used_coprime_shortcut = false;
};

// Exact test: for each prefix, the colon ideal (I_{s-1} : g_s) equals
// I_{s-1}.  Pairwise coprime leading terms short-circuit to success unless
// allow_shortcut is false (forcing the full colon computation, e.g. when
// the result serves as an independent certificate).
RegSeqReport is_regular_sequence(const std::vector<Poly>& gs, unsigned nvars, const Field& f,
                                 unsigned degree_cap = 0, bool allow_shortcut = true);

}  // namespace kt

#endif
