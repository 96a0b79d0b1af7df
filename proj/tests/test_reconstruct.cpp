#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tatekit/lie.hpp"
#include "tatekit/yoneda.hpp"

using namespace kt;

namespace {
const Field QQ = make_field_qq();
const Field F5 = make_field_fp(5);

RingSpec spec_of(const std::vector<std::string>& vars, const std::vector<std::string>& rels,
                 const Field& f = QQ) {
  RingSpec s;
  s.field = f;
  s.vars = vars;
  for (const std::string& r : rels) s.relations.push_back(parse_poly(r, vars, f));
  return s;
}

// degree-2 data of the one-quadric ring x^2 + yz
RestrictedLie a1_data(const Field& f) {
  RestrictedLie L = zero_lie(f, 3, 1);
  L.bracket[0][ut_index(0, 0, 3)] = Scalar::of_long(2, f);
  L.bracket[0][ut_index(1, 2, 3)] = Scalar::one(f);
  L.q[0][0] = Scalar::one(f);
  return L;
}

// random tables satisfying the polarization identity [a,a] = 2 q(a)
RestrictedLie random_valid(std::mt19937& rng, const Field& f, unsigned n, unsigned k) {
  RestrictedLie L = zero_lie(f, n, k);
  auto rnd = [&]() { return Scalar::of_long(static_cast<long>(rng() % 5) - 2, f); };
  for (unsigned p = 0; p < k; ++p) {
    for (unsigned i = 0; i < n; ++i) {
      L.q[p][i] = rnd();
      L.bracket[p][ut_index(i, i, n)] = L.q[p][i] + L.q[p][i];
      for (unsigned j = i + 1; j < n; ++j) L.bracket[p][ut_index(i, j, n)] = rnd();
    }
  }
  return L;
}
}  // namespace

TEST_CASE("upper-triangular pair indexing") {
  CHECK(ut_index(0, 0, 3) == 0);
  CHECK(ut_index(0, 1, 3) == 1);
  CHECK(ut_index(0, 2, 3) == 2);
  CHECK(ut_index(1, 1, 3) == 3);
  CHECK(ut_index(1, 2, 3) == 4);
  CHECK(ut_index(2, 2, 3) == 5);
  CHECK_THROWS_AS(ut_index(1, 0, 3), SpecError);
  CHECK_THROWS_AS(ut_index(0, 3, 3), SpecError);

  RestrictedLie z = zero_lie(QQ, 3, 2);
  CHECK(z.bracket.size() == 2);
  CHECK(z.bracket[0].size() == 6);
  CHECK(z.q[0].size() == 3);
}

TEST_CASE("axiom report for degree-two lie data") {
  LieCheckReport ok = validate_lie(a1_data(QQ));
  CHECK(ok.valid);
  CHECK(ok.witness.empty());
  REQUIRE(ok.checks.size() == 8);
  CHECK(ok.checks[0] == "table shapes: pass");
  CHECK(ok.checks[7] == "(5) restriction axiom for [q(a), -]: vacuous (degree-4 targets are zero): pass");
  for (const std::string& line : ok.checks) CHECK(line.ends_with("pass"));

  // abelian data with zero squaring is always valid
  CHECK(validate_lie(zero_lie(QQ, 4, 2)).valid);
  CHECK(validate_lie(zero_lie(F5, 1, 1)).valid);

  // the polarization identity [a,a] = 2 q(a) is the one coordinate condition
  RestrictedLie bad = zero_lie(QQ, 2, 1);
  bad.bracket[0][ut_index(0, 0, 2)] = Scalar::one(QQ);
  LieCheckReport rep = validate_lie(bad);
  CHECK_FALSE(rep.valid);
  CHECK(rep.witness == "[alpha_1, alpha_1] = 1 on beta_1 but 2 q(alpha_1) = 0");

  // malformed tables are reported before any axiom runs
  RestrictedLie shp = zero_lie(QQ, 2, 1);
  shp.q[0].pop_back();
  LieCheckReport rep2 = validate_lie(shp);
  CHECK_FALSE(rep2.valid);
  CHECK(rep2.witness == "expected 1 bracket rows of length 3 and q rows of length 2");
}

TEST_CASE("reconstruction of the one-quadric ring") {
  Reconstruction rc = reconstruct(a1_data(QQ));
  REQUIRE(rc.spec.vars == std::vector<std::string>{"x1", "x2", "x3"});
  REQUIRE(rc.spec.relations.size() == 1);
  CHECK(rc.spec.relations[0] == parse_poly("x1^3 + x1^2 + x2*x3", rc.spec.vars, QQ));

  // certificate 1: the relation set is its own reduced Groebner basis
  CHECK(rc.groebner_certified);
  // certificate 2: colon-ideal regularity, computed without the coprime
  // leading-term shortcut (the cubes would make it trivially available)
  CHECK(rc.regular_certified);
  CHECK(rc.regularity.regular);
  CHECK_FALSE(rc.regularity.used_coprime_shortcut);

  // the homotopy Lie algebra of the reconstructed ring returns the input
  CHECK(rc.roundtrip == a1_data(QQ));
  CHECK(roundtrip_verify(a1_data(QQ)).ok);
}

TEST_CASE("reconstruction edge cases") {
  // zero data: the pure cube relations
  Reconstruction rz = reconstruct(zero_lie(QQ, 2, 1));
  CHECK(rz.spec.relations[0] == parse_poly("x1^3", rz.spec.vars, QQ));
  CHECK(rz.groebner_certified);
  CHECK(rz.regular_certified);
  CHECK(rz.roundtrip == zero_lie(QQ, 2, 1));

  // more relations than variables cannot come from a complete intersection
  CHECK_THROWS_WITH_AS(reconstruct(zero_lie(QQ, 1, 2)),
                       "reconstruction requires dim g_1 >= dim g_2", MathError);

  // invalid data is rejected with the axiom witness attached
  RestrictedLie bad = zero_lie(QQ, 2, 1);
  bad.bracket[0][ut_index(1, 1, 2)] = Scalar::one(QQ);
  CHECK_THROWS_WITH_AS(reconstruct(bad),
                       "restricted Lie data invalid: [alpha_2, alpha_2] = 1 on beta_1 but 2 "
                       "q(alpha_2) = 0",
                       MathError);
}

TEST_CASE("round trips through rings computed from scratch") {
  // data read off an actual ring, reconstructed into a different presentation
  RestrictedLie from_a1 = homotopy_lie(spec_of({"x", "y", "z"}, {"x^2 + y*z"}));
  CHECK(roundtrip_verify(from_a1).ok);

  RestrictedLie from_e6 = homotopy_lie(spec_of({"x", "y", "z"}, {"x^4 + y^3 + z^2"}));
  CHECK(roundtrip_verify(from_e6).ok);

  RestrictedLie from_pair = homotopy_lie(spec_of({"x", "y"}, {"x^2", "y^2"}, F5));
  CHECK(roundtrip_verify(from_pair).ok);
}

TEST_CASE("random valid tables round-trip over two fields") {
  std::mt19937 rng(4057);
  for (int trial = 0; trial < 4; ++trial) {
    unsigned n = 2 + rng() % 3;          // 2..4
    unsigned k = 1 + rng() % std::min(n, 2u);  // 1..2, never above n
    const Field& f = (trial % 2 == 0) ? QQ : F5;
    RestrictedLie L = random_valid(rng, f, n, k);
    REQUIRE(validate_lie(L).valid);
    RoundTripReport rt = roundtrip_verify(L);
    CHECK(rt.ok);
    if (!rt.ok) MESSAGE(rt.witness);
  }
}
