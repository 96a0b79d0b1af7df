#ifndef TATEKIT_PDALG_HPP
#define TATEKIT_PDALG_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tatekit/module.hpp"
#include "tatekit/shuffle.hpp"

namespace kt {

// Adjoined divided-power variable.  Odd homological degree => exterior
// (square zero), even => divided-power sequence gamma_e(b) = b^(e).
struct Generator {
  std::string name;
  int hdeg;
  int intdeg;  // internal degree of the attached cycle (1 for degree-1 gens)
  bool odd() const { return hdeg % 2 != 0; }
};

// Base ring plus the ordered list of adjoined generators.  Generators are
// appended in ascending (hdeg, adjunction) order and never move, so element
// monomials stay valid as the context grows.
struct PDContext {
  QuotientRing R;
  std::vector<Generator> gens;
};

// PBW monomial: product of generator blocks b^(e), ascending generator
// index, exponents > 0, odd exponents <= 1.
struct PBWMono {
  std::vector<std::pair<int, unsigned>> e;

  bool is_one() const { return e.empty(); }
  unsigned poldeg() const;
  int hdeg(const PDContext& c) const;
  int intdeg(const PDContext& c) const;
  unsigned exp(int gen) const;
  auto operator<=>(const PBWMono&) const = default;
};

std::string pbw_str(const PBWMono& m, const PDContext& c);

// Element of the free pd algebra over R on the context generators:
// R-linear combination of PBW monomials, coefficients kept in canonical
// (normal form) representation.
class PDElem {
 public:
  PDElem() = default;
  explicit PDElem(std::shared_ptr<const PDContext> c) : ctx_(std::move(c)) {}
  static PDElem zero(std::shared_ptr<const PDContext> c) { return PDElem(std::move(c)); }
  static PDElem unit(std::shared_ptr<const PDContext> c);
  static PDElem mono(std::shared_ptr<const PDContext> c, const PBWMono& m, const Poly& coeff);
  static PDElem gen(std::shared_ptr<const PDContext> c, int gen_idx);
  static PDElem scalar(std::shared_ptr<const PDContext> c, const Poly& coeff);

  const std::shared_ptr<const PDContext>& ctx() const { return ctx_; }
  const std::map<PBWMono, Poly>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  void add(const PBWMono& m, const Poly& coeff);  // normal-forms the coefficient
  PDElem operator+(const PDElem& o) const;
  PDElem operator-(const PDElem& o) const;
  PDElem operator-() const;
  PDElem scale(const Poly& c) const;
  PDElem scale(const Scalar& c) const;
  bool operator==(const PDElem& o) const { return ts_ == o.ts_; }
  bool operator!=(const PDElem& o) const { return !(*this == o); }

  // All monomials share one homological degree (R-coefficients are degree 0).
  bool homogeneous_hdeg() const;
  int hdeg() const;  // of a homogeneous element; 0 for zero element
  // Max over terms of intdeg(mono) + deg(coefficient monomial).
  int max_intdeg() const;

  std::string str() const;

 private:
  std::shared_ptr<const PDContext> ctx_;
  std::map<PBWMono, Poly> ts_;
};

// Strictly graded-commutative product with divided-power block merges.
PDElem star_mul(const PDElem& a, const PDElem& b);

// n-th divided power of an element whose monomials are all even with
// poldeg >= 1 (coefficients from R are fine: gamma_n(c x) = c^n gamma_n(x)).
PDElem divided_power(const PDElem& a, int n);

// Values of an R-linear graded derivation on generators (by index), plus
// the parity of its homological degree.  Generators without an entry are
// treated as not-yet-lifted: applying to a monomial containing one throws.
struct DerivationValues {
  int parity = 1;  // 1 = odd operator, 0 = even
  std::map<int, PDElem> vals;
};

PDElem apply_derivation(const DerivationValues& dv, const PDElem& a);

// The differential is the derivation with the generators' attached cycles
// as values; this evaluates it.
PDElem differential(const PDElem& a, const DerivationValues& d);

// pd R-algebra morphism determined by generator images (even images must
// lie in the augmentation ideal and match degrees).
struct PDMorphism {
  std::shared_ptr<const PDContext> target;
  std::map<int, PDElem> images;
};

PDMorphism extend_pd_morphism(const std::shared_ptr<const PDContext>& source,
                              std::shared_ptr<const PDContext> target,
                              std::map<int, PDElem> images);
PDElem apply_morphism(const PDMorphism& f, const PDElem& a);

// Bridge into the tensor oracle: generator b becomes a letter of its
// homological degree; requires constant coefficients.
TensorElem pd_to_tensor(const PDElem& a);

struct OracleReport {
  bool ok = true;
  std::string detail;
};

// Brute-force comparisons against the shuffle-module model (total word
// length capped at 8).
OracleReport oracle_compare(const PDElem& a, const PDElem& b);        // products
OracleReport oracle_compare_power(const PDElem& a, int n);            // divided powers

}  // namespace kt

#endif
