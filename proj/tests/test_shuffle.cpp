#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "tatekit/shuffle.hpp"

using namespace kt;

namespace {
const Field QQ = make_field_qq();

Letter L(int s, int d) { return Letter{s, d}; }

Word rand_word(std::mt19937_64& rng, int len) {
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back(L(static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)));
  return w;
}
}  // namespace

TEST_CASE("shuffle enumeration sizes") {
  CHECK(shuffles(1, 1).size() == 2);
  CHECK(shuffles(2, 1).size() == 3);
  CHECK(shuffles(2, 2).size() == 6);
  CHECK(shuffles(3, 2).size() == 10);
  CHECK(shuffles(4, 3).size() == 35);
  CHECK(shuffles(0, 3).size() == 1);
  for (const Perm& s : shuffles(2, 2)) {
    CHECK(perm_is_valid(s));
    CHECK(s[0] < s[1]);
    CHECK(s[2] < s[3]);
  }
}

TEST_CASE("kprime enumeration sizes match (np)!/(p!(n!)^p)") {
  CHECK(kprime(1, 3).size() == 1);
  CHECK(kprime(2, 2).size() == 3);
  CHECK(kprime(3, 2).size() == 10);
  CHECK(kprime(2, 3).size() == 15);
  CHECK(kprime(4, 2).size() == 35);
  CHECK(kprime(2, 4).size() == 105);
  for (const Perm& s : kprime(2, 3)) {
    CHECK(perm_is_valid(s));
    CHECK(s[0] < s[1]);
    CHECK(s[2] < s[3]);
    CHECK(s[4] < s[5]);
    CHECK(s[1] < s[3]);
    CHECK(s[3] < s[5]);
  }
}

TEST_CASE("Sh(n,n) partitions into block-order cosets") {
  for (int n = 1; n <= 4; ++n) CHECK(sh_partition_check(n));
}

TEST_CASE("koszul sign basic cases") {
  CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 2}) == 1);
  CHECK(koszul_sign({1, 0}, {3, 5}) == -1);
  CHECK(koszul_sign(perm_identity(4), {1, 1, 1, 1}) == 1);
  // 3-cycle 0->1, 1->2, 2->0 on odd letters: two inverted pairs
  CHECK(koszul_sign({1, 2, 0}, {1, 1, 1}) == 1);
  // same cycle, even letter in last slot: it passes both odds without sign
  CHECK(koszul_sign({1, 2, 0}, {1, 1, 2}) == 1);
  // reverse cycle: the odd pair inverts once, odd passes the even once
  CHECK(koszul_sign({2, 0, 1}, {1, 1, 2}) == -1);
}

TEST_CASE("permutation action is a left action with signs") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 40; ++iter) {
    Word w = rand_word(rng, 4);
    Perm a = perm_identity(4), b = perm_identity(4);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    TensorElem wb = perm_act(b, w, QQ);
    TensorElem lhs = TensorElem::zero(QQ);
    for (const auto& [word, c] : wb.terms) lhs = lhs + perm_act(a, word, QQ).scale(c);
    TensorElem rhs = perm_act(perm_compose(a, b), w, QQ);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("star product: frozen small cases") {
  Word a = {L(0, 1)}, b = {L(1, 1)};
  TensorElem ab = star(TensorElem::word(a, QQ), TensorElem::word(b, QQ));
  // odd letters: a*b = (a,b) - (b,a)
  TensorElem expect =
      TensorElem::word({L(0, 1), L(1, 1)}, QQ) - TensorElem::word({L(1, 1), L(0, 1)}, QQ);
  CHECK(ab == expect);

  // even letters: a*b = (a,b) + (b,a)
  TensorElem ev = star(TensorElem::word({L(0, 2)}, QQ), TensorElem::word({L(1, 2)}, QQ));
  TensorElem expect2 =
      TensorElem::word({L(0, 2), L(1, 2)}, QQ) + TensorElem::word({L(1, 2), L(0, 2)}, QQ);
  CHECK(ev == expect2);
}

TEST_CASE("star product: graded commutativity and associativity") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 25; ++iter) {
    Word wa = rand_word(rng, 1 + static_cast<int>(rng() % 2));
    Word wb = rand_word(rng, 1 + static_cast<int>(rng() % 2));
    Word wc = rand_word(rng, 1 + static_cast<int>(rng() % 2));
    TensorElem A = TensorElem::word(wa, QQ), B = TensorElem::word(wb, QQ),
               C = TensorElem::word(wc, QQ);
    long s = (static_cast<long>(word_deg(wa)) * word_deg(wb)) % 2 ? -1 : 1;
    CHECK(star(A, B) == star(B, A).scale(Scalar::of_long(s, QQ)));
    CHECK(star(star(A, B), C) == star(A, star(B, C)));
  }
  // odd z: z*z = 0
  Word z = {L(0, 3)};
  CHECK(star(TensorElem::word(z, QQ), TensorElem::word(z, QQ)).is_zero());
}

TEST_CASE("divided powers of words: defining equations") {
  Word ab = {L(0, 1), L(1, 1)};  // even total degree
  TensorElem z = TensorElem::word(ab, QQ);
  TensorElem g2 = gamma_word(ab, 2, QQ);
  // the three kprime(2,2) cosets give +abab - aabb + aabb: only abab survives
  REQUIRE(g2.terms.size() == 1);
  Word abab = {L(0, 1), L(1, 1), L(0, 1), L(1, 1)};
  auto it = g2.terms.find(abab);
  REQUIRE(it != g2.terms.end());
  CHECK(it->second.is_one());
  CHECK(star(z, z) == g2.scale(Scalar::of_long(2, QQ)));

  CHECK_THROWS_WITH_AS(gamma_word({L(0, 1)}, 2, QQ), "divided power undefined on odd degree",
                       MathError);
  CHECK(gamma_word(ab, 0, QQ) == TensorElem::unit(QQ));
  CHECK(gamma_word(ab, 1, QQ) == z);
}

TEST_CASE("tensor gamma: star powers and composition") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 15; ++iter) {
    Word w = rand_word(rng, 2);
    if (word_deg(w) % 2) w[0].deg += 1;  // force even degree
    TensorElem z = TensorElem::word(w, QQ);
    TensorElem p2 = star(z, z);
    CHECK(p2 == tensor_gamma(z, 2).scale(Scalar::of_long(2, QQ)));
    TensorElem p3 = star(p2, z);
    CHECK(p3 == tensor_gamma(z, 3).scale(Scalar::of_long(6, QQ)));
    // gamma_1 * gamma_2 = binom(3,1) gamma_3
    CHECK(star(tensor_gamma(z, 1), tensor_gamma(z, 2)) ==
          tensor_gamma(z, 3).scale(Scalar::of_long(3, QQ)));
  }
}

TEST_CASE("tensor gamma: sum formula on mixed-length elements") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 10; ++iter) {
    Word wx = rand_word(rng, 1);
    Word wy = rand_word(rng, 2);
    if (word_deg(wx) % 2) wx[0].deg += 1;
    if (word_deg(wy) % 2) wy[1].deg += 1;
    TensorElem x = TensorElem::word(wx, QQ), y = TensorElem::word(wy, QQ);
    // gamma_2(x+y) = gamma_2(x) + x*y + gamma_2(y)
    TensorElem lhs = tensor_gamma(x + y, 2);
    TensorElem rhs = tensor_gamma(x, 2) + star(x, y) + tensor_gamma(y, 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor differential is an odd derivation") {
  std::mt19937_64 rng(41);
  // each symbol carries a fixed degree so d can drop it by exactly one
  auto sym_deg = [](int s) { return 1 + s % 3; };
  auto word_with_fixed_degs = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
      int s = static_cast<int>(rng() % 4);
      w.push_back(L(s, sym_deg(s)));
    }
    return w;
  };
  std::map<int, TensorElem> d;
  for (int s = 0; s < 4; ++s) {
    if (sym_deg(s) == 1)
      d[s] = TensorElem::zero(QQ);
    else
      d[s] = TensorElem::word({L(s + 10, sym_deg(s) - 1)}, QQ);
  }
  for (int iter = 0; iter < 20; ++iter) {
    Word wa = word_with_fixed_degs(2), wb = word_with_fixed_degs(2);
    TensorElem A = TensorElem::word(wa, QQ), B = TensorElem::word(wb, QQ);
    TensorElem dA = tensor_differential(A, d, QQ), dB = tensor_differential(B, d, QQ);
    long s = word_deg(wa) % 2 ? -1 : 1;
    TensorElem lhs = tensor_differential(star(A, B), d, QQ);
    TensorElem rhs = star(dA, B) + star(A, dB).scale(Scalar::of_long(s, QQ));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("divided-power chain rule at the tensor level") {
  // d(gamma_n(z)) = gamma_{n-1}(z) * d(z) for an even-degree letter z
  std::map<int, TensorElem> d;
  for (int s = 0; s < 3; ++s) d[s] = TensorElem::word({L(s + 10, 1)}, QQ);
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 10; ++iter) {
    Word w = {L(static_cast<int>(rng() % 3), 2)};
    TensorElem z = TensorElem::word(w, QQ);
    for (int n = 2; n <= 3; ++n) {
      TensorElem lhs = tensor_differential(tensor_gamma(z, n), d, QQ);
      TensorElem rhs = star(tensor_gamma(z, n - 1), tensor_differential(z, d, QQ));
      CHECK(lhs == rhs);
    }
  }
}
