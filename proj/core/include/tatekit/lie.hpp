#ifndef TATEKIT_LIE_HPP
#define TATEKIT_LIE_HPP

#include <string>
#include <vector>

#include "tatekit/module.hpp"
#include "tatekit/resolution.hpp"

namespace kt {

// Position of the pair (i, j), 0-based with i <= j < n, in the row-major
// upper-triangular layout (0,0), (0,1), ..., (0,n-1), (1,1), ...
std::size_t ut_index(unsigned i, unsigned j, unsigned n);

// A restricted graded Lie algebra concentrated in degrees 1 and 2:
// g_1 = span(alpha_1..alpha_n) odd, g_2 = span(beta_1..beta_k) even and
// central, with symmetric brackets [alpha_i, alpha_j] in g_2 and a
// quadratic operator q: g_1 -> g_2.
struct RestrictedLie {
  Field field;
  unsigned n = 0;  // dim g_1
  unsigned k = 0;  // dim g_2
  // bracket[p][ut_index(i,j,n)] = beta_p-coordinate of [alpha_i, alpha_j]
  std::vector<std::vector<Scalar>> bracket;
  // q[p][i] = beta_p-coordinate of q(alpha_i)
  std::vector<std::vector<Scalar>> q;

  bool operator==(const RestrictedLie& o) const {
    return n == o.n && k == o.k && bracket == o.bracket && q == o.q;
  }
};

RestrictedLie zero_lie(const Field& f, unsigned n, unsigned k);

// Axiom-by-axiom validation of degree-{1,2} data.  Axioms that are vacuous
// in these degrees (even self-brackets, Jacobi, the characteristic-3 form)
// are reported as such; the one nontrivial coordinate condition is the
// polarization consequence [alpha_i, alpha_i] = 2 q(alpha_i).
struct LieCheckReport {
  bool valid = false;
  std::vector<std::string> checks;  // one line per axiom
  std::string witness;              // first failure, empty when valid
};
LieCheckReport validate_lie(const RestrictedLie& g);

// Output of the inverse construction: the ring k[x_1..x_n]/(c_1..c_k) with
// c_p = sum_{i<=j} n^p_{ij} x_i x_j + x_p^3, where n^p is the
// upper-triangular representative of the bracket/q data, together with
// certificates that the emitted relations really present a complete
// intersection.
struct Reconstruction {
  RingSpec spec;
  bool groebner_certified = false;  // {c_p} is its own reduced Groebner basis
  bool regular_certified = false;   // colon-ideal regular-sequence check
  RegSeqReport regularity;
  RestrictedLie roundtrip;  // homotopy Lie algebra recomputed from spec
};

// Requires n >= k (dimension hypothesis) and valid g.  Both certificates
// are recomputed, never assumed from the construction.
Reconstruction reconstruct(const RestrictedLie& g);

struct RoundTripReport {
  bool ok = false;
  std::string witness;  // differing structure constant, empty when ok
};

// reconstruct + homotopy_lie + coordinate-wise comparison of the input
// structure constants against the recomputed ones.
RoundTripReport roundtrip_verify(const RestrictedLie& g);

}  // namespace kt

#endif
