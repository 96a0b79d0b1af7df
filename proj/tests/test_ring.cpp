#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tatekit/groebner.hpp"
#include "tatekit/module.hpp"

using namespace kt;

namespace {
const Field QQ = make_field_qq();
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Poly P(const std::string& s, const std::vector<std::string>& vars, const Field& f = QQ) {
  return parse_poly(s, vars, f);
}

Poly rand_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, const Field& f,
               unsigned maxdeg, unsigned nterms) {
  Poly p(static_cast<unsigned>(vars.size()), f);
  for (unsigned t = 0; t < nterms; ++t) {
    Monomial m(static_cast<unsigned>(vars.size()));
    unsigned d = rng() % (maxdeg + 1);
    for (unsigned i = 0; i < d; ++i) m.e[rng() % vars.size()] += 1;
    long c = static_cast<long>(rng() % 9) - 4;
    p += Poly::monomial(m, Scalar::of_long(c, f));
  }
  return p;
}
}  // namespace

TEST_CASE("scalar canonicalization and arithmetic") {
  Scalar h = Scalar::of_mpq(mpq_class(2, 4), QQ);
  CHECK(h.str() == "1/2");
  Scalar n = Scalar::of_mpq(mpq_class(3, -6), QQ);
  CHECK(n.str() == "-1/2");  // positive denominator
  CHECK((h + n).is_zero());
  CHECK((h * Scalar::of_long(2, QQ)).is_one());
  CHECK(h.inv().str() == "2");

  Field F5 = make_field_fp(5);
  CHECK(Scalar::of_long(7, F5).str() == "2");
  CHECK(Scalar::of_long(-1, F5).str() == "4");
  CHECK((Scalar::of_long(3, F5).inv()).str() == "2");  // 3*2=6=1 mod 5
  CHECK(Scalar::of_mpq(mpq_class(1, 2), F5).str() == "3");  // 2^-1 = 3 mod 5
  CHECK_THROWS_AS(make_field_fp(6), SpecError);
  CHECK_THROWS_AS(Scalar::of_long(1, QQ) / Scalar::zero(QQ), MathError);
}

TEST_CASE("combinatorial integers") {
  CHECK(factorial(5) == 120);
  CHECK(binomial(8, 4) == 70);
  CHECK(gamma_coeff(1, 4) == 1);           // (K')_1^4 is a singleton
  CHECK(gamma_coeff(2, 2) == 3);           // 4!/(2!*2!^2)
  CHECK(gamma_coeff(2, 3) == 15);          // 6!/(3!*8)
  CHECK(gamma_coeff(3, 2) == 10);          // 6!/(2*36)
}

TEST_CASE("grlex order: degree first, then earlier variable") {
  auto m = [&](unsigned a, unsigned b, unsigned c) {
    Monomial r(3);
    r.e = {a, b, c};
    return r;
  };
  CHECK(grlex_less(m(0, 2, 0), m(1, 1, 0)));  // y^2 < x*y
  CHECK(grlex_less(m(1, 1, 0), m(2, 0, 0)));  // x*y < x^2
  CHECK(grlex_less(m(2, 0, 0), m(0, 3, 0)));  // degree dominates
  CHECK(grlex_less(m(0, 0, 2), m(0, 1, 1)));  // y*z > z^2
  CHECK(!grlex_less(m(1, 0, 0), m(1, 0, 0)));
}

TEST_CASE("polynomial parse and canonical print") {
  CHECK(poly_str(P("x^2 + y*z", XYZ), XYZ) == "x^2 + y*z");
  CHECK(poly_str(P("2*x*y - z^3", XYZ), XYZ) == "-z^3 + 2*x*y");
  CHECK(poly_str(P("y*x*2 - 3", XY), XY) == "2*x*y - 3");
  CHECK(poly_str(P("1/2*x - 1/3", XY), XY) == "1/2*x - 1/3");
  CHECK(poly_str(P("x - x", XY), XY) == "0");
  CHECK(poly_str(P("-x + y", XY), XY) == "-x + y");
  CHECK(poly_str(P("(x + y)^2", XY), XY) == "x^2 + 2*x*y + y^2");
  CHECK_THROWS_AS(P("x + w", XY), SpecError);
  CHECK_THROWS_AS(P("x +", XY), SpecError);
  CHECK_THROWS_AS(P("x ^ y", XY), SpecError);

  Field F2 = make_field_fp(2);
  CHECK(poly_str(P("(x + y)^2", XY, F2), XY) == "x^2 + y^2");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Poly p = rand_poly(rng, XYZ, QQ, 4, 5);
    CHECK(parse_poly(poly_str(p, XYZ), XYZ, QQ) == p);
  }
}

TEST_CASE("normal form and division") {
  Poly g = P("x^2 - y", XY);
  CHECK(normal_form(P("x^3", XY), {g}) == P("x*y", XY));
  CHECK(normal_form(P("x^2*y^2", XY), {g}) == P("y^3", XY));
  DivisionResult d = divide(P("x^3 + x", XY), {g});
  CHECK(d.rem == P("x*y + x", XY));
  CHECK(d.quot[0] * g + d.rem == P("x^3 + x", XY));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Poly f = rand_poly(rng, XY, QQ, 5, 6);
    std::vector<Poly> G = {P("x^2 - y", XY), P("x*y - 1", XY)};
    DivisionResult r = divide(f, G);
    CHECK(r.quot[0] * G[0] + r.quot[1] * G[1] + r.rem == f);
    // remainder has no term divisible by a lead
    for (const Term& t : r.rem.terms()) {
      CHECK(!G[0].lt().m.divides(t.m));
      CHECK(!G[1].lt().m.divides(t.m));
    }
  }
}

TEST_CASE("buchberger: frozen example and defining properties") {
  std::vector<Poly> gb = buchberger({P("x^2 - y", XY), P("x*y - y", XY)});
  REQUIRE(gb.size() == 3);
  CHECK(gb[0] == P("y^2 - y", XY));
  CHECK(gb[1] == P("x*y - y", XY));
  CHECK(gb[2] == P("x^2 - y", XY));

  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 12; ++iter) {
    std::vector<Poly> gens = {rand_poly(rng, XY, QQ, 3, 3), rand_poly(rng, XY, QQ, 3, 3)};
    std::vector<Poly> G = buchberger(gens);
    for (const Poly& g : gens) CHECK(normal_form(g, G).is_zero());
    // GB property: all S-polynomials reduce to zero
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = i + 1; j < G.size(); ++j) {
        Monomial l = Monomial::lcm(G[i].lt().m, G[j].lt().m);
        Poly s = G[i].mul_term(l / G[i].lt().m, G[i].lt().c.inv()) -
                 G[j].mul_term(l / G[j].lt().m, G[j].lt().c.inv());
        CHECK(normal_form(s, G).is_zero());
      }
    // reduced: monic, no term divisible by another lead
    for (size_t i = 0; i < G.size(); ++i) {
      CHECK(G[i].lt().c.is_one());
      for (size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        for (const Term& t : G[i].terms()) CHECK(!G[j].lt().m.divides(t.m));
      }
    }
  }
}

TEST_CASE("quotient ring basics") {
  QuotientRing R(QQ, {"x", "y"}, {P("x^2", XY), P("x*y", XY)});
  CHECK(R.gb.size() == 2);
  CHECK(R.nf(P("x^2 + x", XY)) == P("x", XY));
  CHECK(R.homogeneous_relations());
  auto sm2 = R.standard_monomials(2);
  REQUIRE(sm2.size() == 1);
  CHECK(poly_str(Poly::monomial(sm2[0], Scalar::one(QQ)), XY) == "y^2");
  auto sm1 = R.standard_monomials(1);
  CHECK(sm1.size() == 2);

  QuotientRing A1(QQ, {"x", "y", "z"}, {P("x^2 + y*z", XYZ)});
  CHECK(A1.nf(P("x^2", XYZ)) == P("-y*z", XYZ));
  CHECK(A1.standard_monomials(2).size() == 5);  // 6 monomials minus x^2
}

TEST_CASE("quadratic part extraction") {
  Poly c = P("x^2 + 2*x*y + 3*z^2 + x^3", XYZ);
  QuadForm q = quadratic_part(c);
  CHECK(q.q(0, 0).str() == "1");
  CHECK(q.q(0, 1).str() == "2");
  CHECK(q.q(2, 2).str() == "3");
  CHECK(q.q(1, 2).is_zero());
  CHECK_THROWS_WITH_AS(quadratic_part(P("x + x^2", XYZ)), "relation below quadratic order",
                       MathError);
  CHECK_THROWS_WITH_AS(quadratic_part(P("1 + x^2", XYZ)), "relation below quadratic order",
                       MathError);
}

TEST_CASE("module syzygies over the polynomial ring") {
  // matrix (x y): the Koszul syzygy
  std::vector<PVec> cols = {{P("x", XY)}, {P("y", XY)}};
  auto syz = module_syzygies_poly(cols, 1);
  REQUIRE(syz.size() == 1);
  CHECK(syz[0][0] == P("y", XY));
  CHECK(syz[0][1] == P("-x", XY));

  // zero matrix: unit syzygies
  std::vector<PVec> zcols = {{P("0", XY)}, {P("0", XY)}};
  auto zs = module_syzygies_poly(zcols, 1);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0][0].is_zero());
  CHECK(zs[0][1] == P("1", XY));
  CHECK(zs[1][0] == P("1", XY));
  CHECK(zs[1][1].is_zero());

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<PVec> c;
    for (int j = 0; j < 3; ++j)
      c.push_back({rand_poly(rng, XY, QQ, 2, 2), rand_poly(rng, XY, QQ, 2, 2)});
    auto s = module_syzygies_poly(c, 2);
    for (const PVec& z : s) {
      PVec acc = pvec_zero(2, 2, QQ);
      for (size_t j = 0; j < 3; ++j) {
        acc[0] += z[j] * c[j][0];
        acc[1] += z[j] * c[j][1];
      }
      CHECK(pvec_is_zero(acc));
    }
  }
}

TEST_CASE("module syzygies over a quotient ring") {
  QuotientRing R(QQ, {"x"}, {P("x^2", {"x"})});
  std::vector<PVec> cols = {{P("x", {"x"})}};
  auto syz = module_syzygies(R, cols, 1);
  REQUIRE(syz.size() == 1);
  CHECK(syz[0][0] == P("x", {"x"}));

  // membership: (x) over R contains x but not 1
  CHECK(module_member(R, {P("x", {"x"})}, cols, 1));
  CHECK(!module_member(R, {P("1", {"x"})}, cols, 1));
}

TEST_CASE("regular sequence tests") {
  auto rep = is_regular_sequence({P("x^2 + y*z", XYZ)}, 3, QQ);
  CHECK(rep.regular);

  rep = is_regular_sequence({P("x^2", XYZ), P("x*y", XYZ)}, 3, QQ);
  CHECK(!rep.regular);
  CHECK(rep.fail_index == 1);
  CHECK(rep.witness == P("x", XYZ));

  rep = is_regular_sequence({P("x", XYZ), P("y", XYZ), P("z", XYZ)}, 3, QQ);
  CHECK(rep.regular);
  CHECK(rep.used_coprime_shortcut);

  rep = is_regular_sequence({P("x", XYZ), P("x", XYZ)}, 3, QQ);
  CHECK(!rep.regular);
  CHECK(rep.fail_index == 1);

  // non-coprime leads but still regular: forces the colon-ideal path
  rep = is_regular_sequence({P("x^2 + y^2", XY), P("x*y", XY)}, 2, QQ);
  CHECK(rep.regular);
  CHECK(!rep.used_coprime_shortcut);

  rep = is_regular_sequence({P("0", XY)}, 2, QQ);
  CHECK(!rep.regular);
  CHECK(rep.fail_index == 0);
}
