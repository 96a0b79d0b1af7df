#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tatekit/pdalg.hpp"

using namespace kt;

namespace {
const Field QQ = make_field_qq();

std::shared_ptr<PDContext> make_ctx(const Field& f) {
  auto ctx = std::make_shared<PDContext>(
      PDContext{QuotientRing(f, {"x", "y"}, {}),
                {{"T_1", 1, 1}, {"T_2", 1, 1}, {"S_1", 2, 2}, {"S_2", 2, 2}, {"U", 3, 3}}});
  return ctx;
}

Poly rand_coeff(std::mt19937_64& rng, const QuotientRing& R, bool constant) {
  long c = static_cast<long>(rng() % 7) - 3;
  if (c == 0) c = 1;
  Poly p = Poly::constant(Scalar::of_long(c, R.field), R.nvars());
  if (!constant && rng() % 3 == 0) {
    Monomial m(R.nvars());
    m.e[rng() % R.nvars()] = 1;
    p = p * Poly::monomial(m, Scalar::one(R.field));
  }
  return p;
}

// random element, optionally restricted to even generators (for gamma) and
// constant coefficients (for the tensor oracle)
PDElem rand_elem(std::mt19937_64& rng, const std::shared_ptr<const PDContext>& ctx,
                 bool even_only, bool constant_coeffs, unsigned max_terms = 2,
                 unsigned max_poldeg = 3) {
  PDElem z = PDElem::zero(ctx);
  unsigned nt = 1 + rng() % max_terms;
  for (unsigned t = 0; t < nt; ++t) {
    PBWMono m;
    unsigned budget = 1 + rng() % max_poldeg;
    for (int g = 0; g < static_cast<int>(ctx->gens.size()) && budget > 0; ++g) {
      if (even_only && ctx->gens[g].odd()) continue;
      if (rng() % 2) continue;
      unsigned e = ctx->gens[g].odd() ? 1 : 1 + rng() % budget;
      m.e.push_back({g, e});
      budget -= std::min(budget, e);
    }
    if (m.e.empty()) continue;
    z = z + PDElem::mono(ctx, m, rand_coeff(rng, ctx->R, constant_coeffs));
  }
  return z;
}
}  // namespace

TEST_CASE("PBW monomials: degrees and printing") {
  auto ctx = make_ctx(QQ);
  PBWMono m{{{0, 1}, {2, 3}}};  // T_1 * S_1^(3)
  CHECK(m.poldeg() == 4);
  CHECK(m.hdeg(*ctx) == 7);
  CHECK(m.intdeg(*ctx) == 7);
  CHECK(pbw_str(m, *ctx) == "T_1*S_1^(3)");
  CHECK(pbw_str(PBWMono{}, *ctx) == "1");
  CHECK(pbw_str(PBWMono{{{4, 1}}}, *ctx) == "U");
}

TEST_CASE("star product: frozen values") {
  auto ctx = make_ctx(QQ);
  PDElem T1 = PDElem::gen(ctx, 0), T2 = PDElem::gen(ctx, 1), S = PDElem::gen(ctx, 2);

  CHECK(star_mul(T1, T1).is_zero());  // odd square
  PDElem t12 = star_mul(T1, T2);
  CHECK(star_mul(T2, T1) == -t12);  // anticommute
  REQUIRE(t12.terms().size() == 1);
  CHECK(t12.terms().begin()->first == PBWMono{{{0, 1}, {1, 1}}});

  // divided-power block merge: S^(2) * S^(3) = binom(5,2) S^(5)
  PDElem s2 = divided_power(S, 2), s3 = divided_power(S, 3);
  PDElem s5 = divided_power(S, 5);
  CHECK(star_mul(s2, s3) == s5.scale(Scalar::of_long(10, QQ)));

  // (T_1 S^(2)) * (T_2 S) = 3 T_1 T_2 S^(3), no sign: S blocks are even
  PDElem a = star_mul(T1, s2), b = star_mul(T2, S);
  PDElem prod = star_mul(a, b);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->first == PBWMono{{{0, 1}, {1, 1}, {2, 3}}});
  CHECK(prod.terms().begin()->second == Poly::constant(Scalar::of_long(3, QQ), 2));

  // odd blocks anticommute through odd: (T_2) * (T_1 S) = -T_1 T_2 S
  PDElem c = star_mul(T2, star_mul(T1, S));
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms().begin()->second == Poly::constant(Scalar::of_long(-1, QQ), 2));
}

TEST_CASE("star product: commutativity, associativity, unit") {
  for (unsigned long p : {0ul, 2ul, 3ul}) {
    Field f = p ? make_field_fp(p) : QQ;
    auto ctx = make_ctx(f);
    std::mt19937_64 rng(47 + p);
    for (int iter = 0; iter < 30; ++iter) {
      PDElem a = rand_elem(rng, ctx, false, false);
      PDElem b = rand_elem(rng, ctx, false, false);
      PDElem c = rand_elem(rng, ctx, false, false);
      CHECK(star_mul(star_mul(a, b), c) == star_mul(a, star_mul(b, c)));
      CHECK(star_mul(PDElem::unit(ctx), a) == a);
      if (a.homogeneous_hdeg() && b.homogeneous_hdeg()) {
        long s = (static_cast<long>(a.hdeg()) * b.hdeg()) % 2 ? -1 : 1;
        CHECK(star_mul(a, b) == star_mul(b, a).scale(Scalar::of_long(s, f)));
      }
    }
  }
}

TEST_CASE("divided powers: unit and identity cases") {
  auto ctx = make_ctx(QQ);
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 20; ++iter) {
    PDElem x = rand_elem(rng, ctx, true, false);
    CHECK(divided_power(x, 0) == PDElem::unit(ctx));
    CHECK(divided_power(x, 1) == x);
  }
}

TEST_CASE("divided powers: multiplication rule gamma_n gamma_m") {
  for (unsigned long p : {0ul, 2ul, 3ul}) {
    Field f = p ? make_field_fp(p) : QQ;
    auto ctx = make_ctx(f);
    std::mt19937_64 rng(59 + p);
    for (int iter = 0; iter < 15; ++iter) {
      PDElem x = rand_elem(rng, ctx, true, false, 2, 2);
      for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m) {
          PDElem lhs = star_mul(divided_power(x, n), divided_power(x, m));
          Scalar c = Scalar::of_mpz(binomial(n + m, n), f);
          CHECK(lhs == divided_power(x, n + m).scale(c));
        }
    }
  }
}

TEST_CASE("divided powers: scalar rule gamma_n(a x) = a^n gamma_n(x)") {
  for (unsigned long p : {0ul, 2ul, 3ul}) {
    Field f = p ? make_field_fp(p) : QQ;
    auto ctx = make_ctx(f);
    std::mt19937_64 rng(61 + p);
    for (int iter = 0; iter < 15; ++iter) {
      PDElem x = rand_elem(rng, ctx, true, false, 2, 2);
      Poly a = rand_coeff(rng, ctx->R, false);
      for (int n = 2; n <= 3; ++n) {
        PDElem lhs = divided_power(x.scale(a), n);
        PDElem rhs = divided_power(x, n).scale(a.pow(n));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("divided powers: sum rule") {
  for (unsigned long p : {0ul, 2ul, 3ul}) {
    Field f = p ? make_field_fp(p) : QQ;
    auto ctx = make_ctx(f);
    std::mt19937_64 rng(67 + p);
    for (int iter = 0; iter < 12; ++iter) {
      PDElem x = rand_elem(rng, ctx, true, false, 1, 2);
      PDElem y = rand_elem(rng, ctx, true, false, 1, 2);
      for (int n = 2; n <= 3; ++n) {
        PDElem rhs = PDElem::zero(ctx);
        for (int i = 0; i <= n; ++i)
          rhs = rhs + star_mul(divided_power(x, i), divided_power(y, n - i));
        CHECK(divided_power(x + y, n) == rhs);
      }
    }
  }
}

TEST_CASE("divided powers: composition rule") {
  for (unsigned long p : {0ul, 2ul, 3ul}) {
    Field f = p ? make_field_fp(p) : QQ;
    auto ctx = make_ctx(f);
    std::mt19937_64 rng(71 + p);
    for (int iter = 0; iter < 10; ++iter) {
      PDElem x = rand_elem(rng, ctx, true, false, 1, 1);
      for (int q = 2; q <= 2; ++q)
        for (int pp = 2; pp <= 2; ++pp) {
          PDElem lhs = divided_power(divided_power(x, q), pp);
          Scalar c = Scalar::of_mpz(gamma_coeff(q, pp), f);
          CHECK(lhs == divided_power(x, pp * q).scale(c));
        }
    }
  }
}

TEST_CASE("divided powers: degree multiplicativity and odd products vanish") {
  auto ctx = make_ctx(QQ);
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 15; ++iter) {
    PDElem x = rand_elem(rng, ctx, true, false, 1, 2);
    if (x.is_zero()) continue;
    for (int n = 2; n <= 3; ++n) {
      PDElem g = divided_power(x, n);
      if (!g.is_zero() && x.homogeneous_hdeg())
        CHECK(g.hdeg() == n * x.hdeg());
    }
  }
  // gamma_n(u * v) = 0 for odd u, v and n >= 2
  PDElem T1 = PDElem::gen(ctx, 0), T2 = PDElem::gen(ctx, 1), U = PDElem::gen(ctx, 4);
  CHECK(divided_power(star_mul(T1, T2), 2).is_zero());
  CHECK(divided_power(star_mul(T1, U), 2).is_zero());
  CHECK(divided_power(star_mul(T2, U), 3).is_zero());

  // x^{*n} = n! gamma_n(x)
  for (int iter = 0; iter < 10; ++iter) {
    PDElem x = rand_elem(rng, ctx, true, false, 2, 2);
    PDElem pw = PDElem::unit(ctx);
    for (int i = 0; i < 3; ++i) pw = star_mul(pw, x);
    CHECK(pw == divided_power(x, 3).scale(Scalar::of_long(6, QQ)));
  }
}

TEST_CASE("divided powers: error cases") {
  auto ctx = make_ctx(QQ);
  PDElem T1 = PDElem::gen(ctx, 0);
  CHECK_THROWS_WITH_AS(divided_power(T1, 2), "divided power undefined on odd degree", MathError);
  CHECK_THROWS_WITH_AS(divided_power(PDElem::unit(ctx), 2),
                       "divided power requires augmentation-ideal element", MathError);
}

TEST_CASE("differential: Koszul relations and chain rule") {
  // R = Q[x,y]; T_i kill the variables, S kills the Koszul cycle y T_1 - x T_2
  Field f = QQ;
  auto ctx = std::make_shared<PDContext>(
      PDContext{QuotientRing(f, {"x", "y"}, {}), {{"T_1", 1, 1}, {"T_2", 1, 1}, {"S_1", 2, 2}}});
  const std::vector<std::string> XY = {"x", "y"};
  PDElem T1 = PDElem::gen(ctx, 0), T2 = PDElem::gen(ctx, 1), S = PDElem::gen(ctx, 2);
  DerivationValues d;
  d.parity = 1;
  d.vals[0] = PDElem::scalar(ctx, parse_poly("x", XY, f));
  d.vals[1] = PDElem::scalar(ctx, parse_poly("y", XY, f));
  d.vals[2] = T1.scale(parse_poly("y", XY, f)) - T2.scale(parse_poly("x", XY, f));

  // d^2 = 0 on random elements
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 25; ++iter) {
    PDElem z = rand_elem(rng, ctx, false, false, 3, 4);
    CHECK(differential(differential(z, d), d).is_zero());
  }

  // Leibniz over the star product
  for (int iter = 0; iter < 25; ++iter) {
    PDElem a = rand_elem(rng, ctx, false, false, 2, 3);
    PDElem b = rand_elem(rng, ctx, false, false, 2, 3);
    if (!a.homogeneous_hdeg()) continue;
    long s = a.hdeg() % 2 ? -1 : 1;
    PDElem lhs = differential(star_mul(a, b), d);
    PDElem rhs = star_mul(differential(a, d), b) +
                 star_mul(a, differential(b, d)).scale(Scalar::of_long(s, f));
    CHECK(lhs == rhs);
  }

  // chain rule d gamma_n(x) = gamma_{n-1}(x) d(x)
  for (int iter = 0; iter < 15; ++iter) {
    PDElem x = rand_elem(rng, ctx, true, false, 2, 2);
    for (int n = 2; n <= 3; ++n) {
      PDElem lhs = differential(divided_power(x, n), d);
      PDElem rhs = star_mul(divided_power(x, n - 1), differential(x, d));
      CHECK(lhs == rhs);
    }
  }

  // frozen: d(S^(2)) = (y T_1 - x T_2) S
  PDElem dS2 = differential(divided_power(S, 2), d);
  CHECK(dS2 == star_mul(d.vals[2], S));

  // unlifted generator throws with its degree in the message
  DerivationValues partial;
  partial.parity = 1;
  partial.vals[0] = d.vals[0];
  partial.vals[1] = d.vals[1];
  CHECK_THROWS_WITH_AS(apply_derivation(partial, S), "lift incomplete at degree 2", MathError);
}

TEST_CASE("tensor oracle agrees with the pd engine") {
  auto ctx = make_ctx(QQ);
  std::mt19937_64 rng(83);
  int products = 0, powers = 0;
  while (products < 40 || powers < 25) {
    PDElem a = rand_elem(rng, ctx, false, true, 2, 2);
    PDElem b = rand_elem(rng, ctx, false, true, 2, 2);
    if (products < 40) {
      OracleReport r = oracle_compare(a, b);
      CHECK(r.ok);
      if (!r.ok) FAIL_CHECK(r.detail);
      ++products;
    }
    if (powers < 25) {
      PDElem x = rand_elem(rng, ctx, true, true, 2, 2);
      for (int n = 2; n <= 3; ++n) {
        if (x.is_zero()) break;
        OracleReport r = oracle_compare_power(x, n);
        if (r.detail == "skipped: length cap") continue;
        CHECK(r.ok);
        if (!r.ok) FAIL_CHECK(r.detail);
      }
      ++powers;
    }
  }
  // cap is enforced
  PDElem big = divided_power(PDElem::gen(ctx, 2), 5);
  CHECK_THROWS_AS(oracle_compare(big, big), SpecError);
}

TEST_CASE("morphisms: extension and multiplicativity") {
  auto ctx = make_ctx(QQ);
  // target: same ring, one even generator V of degree 2 and odds W_1, W_2
  auto tgt = std::make_shared<PDContext>(
      PDContext{QuotientRing(QQ, {"x", "y"}, {}),
                {{"W_1", 1, 1}, {"W_2", 1, 1}, {"V", 2, 2}, {"V_2", 2, 2}, {"U", 3, 3}}});
  std::map<int, PDElem> images;
  images[0] = PDElem::gen(tgt, 1);                        // T_1 -> W_2
  images[1] = PDElem::gen(tgt, 0);                        // T_2 -> W_1
  images[2] = PDElem::gen(tgt, 2) + PDElem::gen(tgt, 3);  // S_1 -> V + V_2
  images[3] = PDElem::gen(tgt, 2);                        // S_2 -> V
  images[4] = PDElem::gen(tgt, 4);                        // U -> U
  PDMorphism phi = extend_pd_morphism(ctx, tgt, images);

  std::mt19937_64 rng(89);
  for (int iter = 0; iter < 20; ++iter) {
    PDElem a = rand_elem(rng, ctx, false, false, 2, 2);
    PDElem b = rand_elem(rng, ctx, false, false, 2, 2);
    CHECK(apply_morphism(phi, star_mul(a, b)) ==
          star_mul(apply_morphism(phi, a), apply_morphism(phi, b)));
  }
  // morphisms respect divided powers of even generators
  PDElem S1 = PDElem::gen(ctx, 2);
  CHECK(apply_morphism(phi, divided_power(S1, 2)) == divided_power(images[2], 2));

  // degree mismatch is rejected
  std::map<int, PDElem> bad = images;
  bad[0] = PDElem::gen(tgt, 2);
  CHECK_THROWS_AS(extend_pd_morphism(ctx, tgt, bad), SpecError);
}
