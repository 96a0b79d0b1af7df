#ifndef TATEKIT_SHUFFLE_HPP
#define TATEKIT_SHUFFLE_HPP

#include <map>
#include <vector>

#include "tatekit/field.hpp"

namespace kt {

// Permutation of {0..n-1} stored as the image list: p[i] = sigma(i).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
bool perm_is_valid(const Perm& p);

// (m,n)-shuffles: ascending on the first m letters and on the last n.
std::vector<Perm> shuffles(int m, int n);

// Permutations of n*p letters ascending inside each of the p consecutive
// n-blocks, with the block maxima in increasing order; size (np)!/(p!(n!)^p).
// These index the coset sum defining the p-th divided power of a length-n
// word.
std::vector<Perm> kprime(int n, int p);

// Sign of the graded action of sigma on letters of the given degrees:
// (-1)^(sum over inversions (a<b, sigma(a)>sigma(b)) of deg[a]*deg[b]).
int koszul_sign(const Perm& sigma, const std::vector<int>& degs);

// A letter of a graded word: symbol id plus homological degree.
struct Letter {
  int sym;
  int deg;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

// Element of the tensor algebra on graded letters, over a field.
struct TensorElem {
  Field f;
  std::map<Word, Scalar> terms;

  explicit TensorElem(const Field& fld = Field{}) : f(fld) {}
  static TensorElem zero(const Field& f) { return TensorElem(f); }
  static TensorElem unit(const Field& f);  // empty word, coefficient 1
  static TensorElem word(const Word& w, const Field& f);
  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Scalar& c);
  TensorElem operator+(const TensorElem& o) const;
  TensorElem operator-(const TensorElem& o) const;
  TensorElem scale(const Scalar& c) const;
  bool operator==(const TensorElem& o) const { return f == o.f && terms == o.terms; }
};

int word_deg(const Word& w);

// Graded action: sigma . w permutes letters (letter i moves to slot
// sigma(i)) with the Koszul sign.
TensorElem perm_act(const Perm& sigma, const Word& w, const Field& f);

// Shuffle product: sum over Sh(m,n) of the action on the concatenation.
TensorElem star(const TensorElem& a, const TensorElem& b);

// Divided power of a single word of even total degree: the coset sum over
// kprime(len(w), n) of w^(tensor n).
TensorElem gamma_word(const Word& w, int n, const Field& f);

// Divided power of a length-homogeneous element of even total degree:
// expands z^(tensor n) multilinearly, then applies the coset sum.
TensorElem tensor_gamma(const TensorElem& z, int n);

// Extends d (values on letter symbols, homological degree -1) as a graded
// derivation for the deconcatenation-compatible differential on words.
TensorElem tensor_differential(const TensorElem& z, const std::map<int, TensorElem>& d,
                               const Field& f);

// Checks Sh(n,n) = kprime(n,2) disjoint-union kprime(n,2)*c, where c swaps
// the two n-blocks.
bool sh_partition_check(int n);

}  // namespace kt

#endif
