#ifndef TATEKIT_RESOLUTION_HPP
#define TATEKIT_RESOLUTION_HPP

#include <map>
#include <string>
#include <vector>

#include "tatekit/linalg.hpp"
#include "tatekit/pdalg.hpp"

namespace kt {

// Presentation of the base ring R = k[x_1..x_n]/(c_1..c_k).
struct RingSpec {
  Field field;
  std::vector<std::string> vars;
  std::vector<Poly> relations;
};

// Throws unless every relation is nonzero with all terms of degree >= 2.
void validate_ring_spec(const RingSpec& spec);

// Free pd dg algebra R<T_1..; S_1..; ...> resolving R/m through the
// truncation degree: H_i = 0 for 1 <= i < truncation by construction.
struct Resolution {
  std::shared_ptr<PDContext> ctx;
  DerivationValues d;  // the differential: odd derivation, values per generator
  std::vector<Poly> relations;  // the defining relations, as given
  int truncation = 0;
  bool closed_form = false;  // complete intersection: T's and S's only

  const QuotientRing& ring() const { return ctx->R; }
  std::shared_ptr<const PDContext> cctx() const { return ctx; }
  std::vector<int> gens_at(int hdeg) const;
  // PBW monomials of homological degree m over the current generators,
  // ascending; this is the free-module basis of P_m.
  std::vector<PBWMono> basis(int m) const;
  std::size_t rank(int m) const { return basis(m).size(); }
  PDElem diff(const PDElem& z) const { return differential(z, d); }
};

// Coordinates of an element of P_m relative to basis(m) (entries in R).
PVec pd_coords(const PDElem& z, const std::vector<PBWMono>& basis, const QuotientRing& R);
PDElem pd_from_coords(const std::shared_ptr<const PDContext>& ctx, const PVec& v,
                      const std::vector<PBWMono>& basis);

// Differential matrix d: P_m -> P_{m-1} as columns over R.
std::vector<PVec> differential_columns(const Resolution& res, int m);

// Internal degrees of the PBW basis monomials of one homological degree.
std::vector<int> basis_intdegs(const Resolution& res, const std::vector<PBWMono>& bm);

// Entrywise product u * v followed by normal form.
PVec pvec_mul_poly(const QuotientRing& R, const PVec& v, const Poly& u);

// k-basis of one internal-degree-t piece of a free module with the given
// position weights: pairs (position j, standard monomial of degree t - w_j).
struct PieceIndex {
  std::vector<std::pair<std::size_t, Monomial>> cols;
  std::map<std::size_t, std::map<Monomial, std::size_t, GrlexLess>> lookup;
  std::size_t size() const { return cols.size(); }
};
PieceIndex piece_index(const QuotientRing& R, const std::vector<int>& weights, int t);
// Coordinates of a homogeneous-piece element; throws MathError if v has a
// term outside the piece.
Vec vectorize_piece(const PieceIndex& pi, const PVec& v, const Field& f);
PVec unvectorize_piece(const PieceIndex& pi, const Vec& coords, const QuotientRing& R,
                       std::size_t width);
// Splits v into weighted-homogeneous components, keyed by internal degree.
std::map<int, PVec> weighted_components(const PVec& v, const std::vector<int>& w,
                                        const QuotientRing& R);

// Koszul stage: adjoins odd T_i with d(T_i) = x_i; truncation 1.
Resolution koszul_init(const RingSpec& spec);

struct CycleSet {
  int degree = 0;  // cycles live in P_degree
  std::vector<PDElem> cycles;
};

// Minimal generating set of H_n = Z_n/B_n: syzygy generators of the
// degree-n differential matrix reduced modulo B_n + m*Z_n by graded
// elimination per internal degree (Nakayama).  Requires homogeneous
// relations.  Representatives are the canonical reduced rows, so the
// output is deterministic.
CycleSet homology_generators(const Resolution& res, int n, unsigned degree_cap = 0);

// Adjoins one generator of degree cs.degree + 1 per cycle (killing it);
// verifies each input really is a cycle.  Raises truncation by one.
Resolution& adjoin(Resolution& res, const CycleSet& cs);

// Full construction through degree N.  Regular-sequence relations take the
// closed form (T's + S's, d(S_p) = sum_i c_{p,i} T_i via the least-variable
// split of each monomial); otherwise relations must be homogeneous and
// homology is killed degree by degree.
Resolution build(const RingSpec& spec, int N, unsigned degree_cap = 0);

// d(P) inside m*P: every coefficient of every generator differential has
// zero constant term.
bool is_minimal(const Resolution& res);

struct DegreeCertificate {
  int degree = 0;
  bool zero = false;             // H_degree == 0 (exact verdict)
  std::string status;            // "certified-exact" or a nonzero report
  std::string witness;           // representative of a nonzero class, if any
  bool graded_checked = false;   // graded-piece recomputation ran
  int graded_bound = 0;          // internal-degree bound D of that check
  std::string graded_status;     // "certified-to-degree-D" / piece report
};

struct ExactnessReport {
  bool d_squared_zero = false;
  bool all_zero = false;  // every checked degree exact
  std::vector<DegreeCertificate> degrees;
  std::string overall;
};

// For 1 <= i <= upto: certifies H_i = 0 (or exhibits a witness) via the
// module certificate — syzygy generators of ker d_i tested for membership
// in the column module of d_{i+1}.  For homogeneous rings additionally
// recomputes graded pieces up to the internal-degree bound (default
// (upto+1) * max relation degree).  internal_cap = -1 means the default;
// use_module_certificate = false restricts to the bounded graded check,
// whose verdict is then only "certified-to-degree-D" (or inconclusive).
ExactnessReport verify_exactness(const Resolution& res, int upto, long internal_cap = -1,
                                 bool use_module_certificate = true, unsigned degree_cap = 0);

// Number of monomials (a, b) with a_i in {0,1}, b_p >= 0 and
// sum a_i + 2 sum b_p = m: the rank of P_m in the closed form.
unsigned long closed_form_rank(unsigned n, unsigned k, int m);

}  // namespace kt

#endif
