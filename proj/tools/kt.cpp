// kt: exact Koszul-Tate resolutions, Ext algebras, and degree-two homotopy
// Lie data for finitely generated quotient rings.
//
// Subcommands:
//   resolve      build a pd resolution and certify minimality/exactness
//   ext          presentation, structure constants, dimensions, primitives
//   reconstruct  ring from restricted Lie data, with certificates
//   verify       randomized property suites over the algebraic core
//
// Every run produces one JSON report (--json); the human-readable output is
// rendered from that same report. Exit codes: 0 success, 2 malformed input,
// 3 mathematical precondition failure, 4 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tatekit/lie.hpp"
#include "tatekit/specfile.hpp"
#include "tatekit/yoneda.hpp"

using json = nlohmann::json;
using namespace kt;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json field_json(const Field& f) {
  return f.p == 0 ? json("QQ") : json("Fp " + std::to_string(f.p));
}

json spec_json(const RingSpec& spec) {
  json rels = json::array();
  for (const Poly& r : spec.relations) rels.push_back(poly_str(r, spec.vars));
  return json{{"field", field_json(spec.field)}, {"vars", spec.vars}, {"relations", rels}};
}

json lie_json(const RestrictedLie& g) {
  json brackets = json::array();
  for (unsigned p = 0; p < g.k; ++p)
    for (unsigned i = 0; i < g.n; ++i)
      for (unsigned j = i; j < g.n; ++j) {
        const Scalar& c = g.bracket[p][ut_index(i, j, g.n)];
        if (!c.is_zero())
          brackets.push_back(json{{"p", p + 1}, {"i", i + 1}, {"j", j + 1}, {"value", c.str()}});
      }
  json qs = json::array();
  for (unsigned p = 0; p < g.k; ++p)
    for (unsigned i = 0; i < g.n; ++i)
      if (!g.q[p][i].is_zero())
        qs.push_back(json{{"p", p + 1}, {"i", i + 1}, {"value", g.q[p][i].str()}});
  return json{{"n", g.n},       {"k", g.k},       {"field", field_json(g.field)},
              {"bracket", brackets}, {"q", qs}};
}

// ---------------------------------------------------------------- resolve --

json resolve_report(const SpecFile& sf, int N, long cap) {
  Resolution res = build(sf.spec, N, static_cast<unsigned>(cap > 0 ? cap : 0));
  ExactnessReport ex =
      verify_exactness(res, std::min(N - 1, res.truncation), cap > 0 ? cap : -1, true,
                       static_cast<unsigned>(cap > 0 ? cap : 0));

  json gens = json::array();
  for (const Generator& g : res.ctx->gens)
    gens.push_back(json{{"name", g.name},
                        {"homological_degree", g.hdeg},
                        {"internal_degree", g.intdeg}});
  json betti = json::array();
  for (int m = 0; m <= N; ++m) betti.push_back(res.rank(m));
  json frontier = json::array();
  if (!res.closed_form)
    for (const Generator& g : res.ctx->gens)
      if (g.hdeg == res.truncation) frontier.push_back(g.name);
  json degrees = json::array();
  for (const DegreeCertificate& c : ex.degrees)
    degrees.push_back(json{{"degree", c.degree},
                           {"zero", c.zero},
                           {"status", c.status},
                           {"witness", c.witness},
                           {"graded_checked", c.graded_checked},
                           {"graded_bound", c.graded_bound},
                           {"graded_status", c.graded_status}});
  return json{{"closed_form", res.closed_form},
              {"truncation", res.truncation},
              {"minimal", is_minimal(res)},
              {"minimal_method", "certified-exact"},
              {"generators", gens},
              {"betti", betti},
              {"betti_method", "certified-exact"},
              {"frontier", frontier},
              {"exactness",
               json{{"d_squared_zero", ex.d_squared_zero},
                    {"all_zero", ex.all_zero},
                    {"overall", ex.overall},
                    {"degrees", degrees}}}};
}

void render_resolve(const json& rep) {
  const json& in = rep.at("inputs");
  const json& r = rep.at("resolution");
  std::cout << "ring: field " << in.at("spec").at("field").get<std::string>() << ", vars";
  for (const auto& v : in.at("spec").at("vars")) std::cout << " " << v.get<std::string>();
  std::cout << "\n";
  for (const auto& rel : in.at("spec").at("relations"))
    std::cout << "  rel " << rel.get<std::string>() << "\n";
  std::cout << "resolution through degree " << in.at("max_degree").get<int>() << "\n";
  std::cout << "  closed form: " << (r.at("closed_form").get<bool>() ? "yes" : "no") << "\n";
  std::cout << "  minimal: " << (r.at("minimal").get<bool>() ? "yes" : "no") << " ["
            << r.at("minimal_method").get<std::string>() << "]\n";
  std::cout << "  truncation: " << r.at("truncation").get<int>() << "\n";
  if (!r.at("frontier").empty()) {
    std::cout << "  frontier generators:";
    for (const auto& f : r.at("frontier")) std::cout << " " << f.get<std::string>();
    std::cout << "\n";
  }
  std::cout << "betti numbers [" << r.at("betti_method").get<std::string>() << "]\n  m:   ";
  for (std::size_t m = 0; m < r.at("betti").size(); ++m) std::cout << " " << m;
  std::cout << "\n  rank:";
  for (const auto& b : r.at("betti")) std::cout << " " << b.get<unsigned long>();
  std::cout << "\ngenerators\n";
  for (const auto& g : r.at("generators"))
    std::cout << "  " << g.at("name").get<std::string>() << ": homological degree "
              << g.at("homological_degree").get<int>() << ", internal degree "
              << g.at("internal_degree").get<int>() << "\n";
  const json& ex = r.at("exactness");
  std::cout << "exactness\n  d^2 = 0: " << (ex.at("d_squared_zero").get<bool>() ? "yes" : "no")
            << "\n";
  for (const auto& d : ex.at("degrees")) {
    std::cout << "  H_" << d.at("degree").get<int>() << " = 0: "
              << (d.at("zero").get<bool>() ? "yes" : "no") << " ["
              << d.at("status").get<std::string>();
    if (d.at("graded_checked").get<bool>())
      std::cout << "; graded recheck " << d.at("graded_status").get<std::string>();
    std::cout << "]\n";
    if (!d.at("witness").get<std::string>().empty())
      std::cout << "    witness: " << d.at("witness").get<std::string>() << "\n";
  }
  std::cout << "  overall: " << ex.at("overall").get<std::string>() << "\n";
}

// -------------------------------------------------------------------- ext --

json ext_report(const SpecFile& sf, int M) {
  ExtPresentation ep = ext_presentation(sf.spec);  // throws unless CI
  RestrictedLie lie = homotopy_lie(sf.spec);
  Resolution res = build(sf.spec, 4);

  json rhs = json::array();
  for (const auto& row : ep.rhs) {
    json jr = json::array();
    for (const Scalar& c : row) jr.push_back(c.str());
    rhs.push_back(jr);
  }
  json dims = json::array();
  for (int m = 0; m <= M; ++m) dims.push_back(ext_dimension(sf.spec, m));
  json prims = json::array();
  for (int m = 1; m <= 4; ++m) {
    std::vector<Vec> P = primitive_subspace(res, m);
    json coords = json::array();
    for (const PBWMono& b : res.basis(m)) coords.push_back("[" + pbw_str(b, *res.ctx) + "]^");
    json basis = json::array();
    for (const Vec& v : P) {
      json jv = json::array();
      for (const Scalar& c : v) jv.push_back(c.str());
      basis.push_back(jv);
    }
    prims.push_back(json{{"degree", m},
                         {"dimension", P.size()},
                         {"coordinates", coords},
                         {"basis", basis}});
  }
  return json{{"generator_count", ep.generators},
              {"generator_count_method", "certified-exact"},
              {"strictly_graded_commutative", ep.strictly_graded_commutative},
              {"presentation",
               json{{"alpha_count", ep.n}, {"beta_count", ep.k}, {"relations", ep.relations},
                    {"rhs", rhs}}},
              {"homotopy_lie", lie_json(lie)},
              {"dimensions", json{{"through", M}, {"values", dims},
                                  {"method", "certified-exact"}}},
              {"primitives", prims}};
}

void render_ext(const json& rep) {
  const json& in = rep.at("inputs");
  const json& e = rep.at("ext");
  std::cout << "ext algebra over field " << in.at("spec").at("field").get<std::string>() << "\n";
  for (const auto& rel : in.at("spec").at("relations"))
    std::cout << "  rel " << rel.get<std::string>() << "\n";
  std::cout << "generators: " << e.at("generator_count").get<unsigned>() << " ["
            << e.at("generator_count_method").get<std::string>() << "]\n";
  std::cout << "strictly graded commutative: "
            << (e.at("strictly_graded_commutative").get<bool>() ? "yes" : "no") << "\n";
  std::cout << "presentation (variable duals alpha_i, relation duals beta_p)\n";
  for (const auto& r : e.at("presentation").at("relations"))
    std::cout << "  " << r.get<std::string>() << " = 0\n";
  std::cout << "homotopy lie structure constants\n";
  const json& lie = e.at("homotopy_lie");
  for (const auto& b : lie.at("bracket"))
    std::cout << "  [alpha_" << b.at("i").get<int>() << ", alpha_" << b.at("j").get<int>()
              << "] = " << b.at("value").get<std::string>() << " beta_" << b.at("p").get<int>()
              << "\n";
  for (const auto& q : lie.at("q"))
    std::cout << "  q(alpha_" << q.at("i").get<int>() << ") = "
              << q.at("value").get<std::string>() << " beta_" << q.at("p").get<int>() << "\n";
  if (lie.at("bracket").empty() && lie.at("q").empty())
    std::cout << "  (all brackets and squares vanish)\n";
  const json& d = e.at("dimensions");
  std::cout << "dimension table [" << d.at("method").get<std::string>() << "]\n  m:  ";
  for (std::size_t m = 0; m < d.at("values").size(); ++m) std::cout << " " << m;
  std::cout << "\n  dim:";
  for (const auto& v : d.at("values")) std::cout << " " << v.get<unsigned long>();
  std::cout << "\nprimitive classes\n";
  for (const auto& p : e.at("primitives"))
    std::cout << "  degree " << p.at("degree").get<int>() << ": dimension "
              << p.at("dimension").get<std::size_t>() << "\n";
}

// ------------------------------------------------------------ reconstruct --

json validation_json(const LieCheckReport& chk) {
  return json{{"valid", chk.valid}, {"checks", chk.checks}, {"witness", chk.witness}};
}

json reconstruct_report(const LieFile& lf) {
  Reconstruction rc = reconstruct(lf.lie);
  RoundTripReport rt = roundtrip_verify(lf.lie);
  SpecFile emitted;
  emitted.spec = rc.spec;
  return json{{"validation", validation_json(validate_lie(lf.lie))},
              {"ring", spec_json(rc.spec)},
              {"ring_spec_text", print_spec_file(emitted)},
              {"groebner_certified", rc.groebner_certified},
              {"groebner_method", "certified-exact"},
              {"regular_certified", rc.regular_certified},
              {"regular_method", "certified-exact"},
              {"regularity_witness",
               rc.regularity.regular ? "" : poly_str(rc.regularity.witness, rc.spec.vars)},
              {"roundtrip", json{{"ok", rt.ok}, {"witness", rt.witness}}},
              {"homotopy_lie", lie_json(rc.roundtrip)}};
}

void render_reconstruct(const json& rep) {
  const json& r = rep.at("reconstruction");
  std::cout << "validation\n";
  for (const auto& c : r.at("validation").at("checks"))
    std::cout << "  " << c.get<std::string>() << "\n";
  std::cout << "  valid: " << (r.at("validation").at("valid").get<bool>() ? "yes" : "no") << "\n";
  if (!r.at("validation").at("valid").get<bool>()) {
    std::cout << "  witness: " << r.at("validation").at("witness").get<std::string>() << "\n";
    return;
  }
  std::cout << "reconstructed ring\n";
  std::istringstream spec_text(r.at("ring_spec_text").get<std::string>());
  for (std::string line; std::getline(spec_text, line);) std::cout << "  " << line << "\n";
  std::cout << "certificates\n";
  std::cout << "  groebner basis (Buchberger reduction): "
            << (r.at("groebner_certified").get<bool>() ? "pass" : "fail") << " ["
            << r.at("groebner_method").get<std::string>() << "]\n";
  std::cout << "  regular sequence (colon ideals): "
            << (r.at("regular_certified").get<bool>() ? "pass" : "fail") << " ["
            << r.at("regular_method").get<std::string>() << "]\n";
  const json& rt = r.at("roundtrip");
  std::cout << "round trip\n  homotopy lie constants match the input: "
            << (rt.at("ok").get<bool>() ? "yes" : "no") << "\n";
  if (!rt.at("witness").get<std::string>().empty())
    std::cout << "  witness: " << rt.at("witness").get<std::string>() << "\n";
}

// ----------------------------------------------------------------- verify --

struct Property {
  std::string name;
  bool pass = true;
  int cases = 0;
  std::string detail;  // counterexample description on failure

  void count(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

json properties_json(const std::vector<Property>& props) {
  bool all = true;
  json arr = json::array();
  for (const Property& p : props) {
    all = all && p.pass;
    arr.push_back(json{{"name", p.name}, {"pass", p.pass}, {"cases", p.cases},
                       {"counterexample", p.detail}});
  }
  return json{{"all_pass", all}, {"properties", arr}};
}

// Shared random-element machinery for the free pd-algebra suites.
std::shared_ptr<PDContext> axiom_ctx(const Field& f) {
  return std::make_shared<PDContext>(
      PDContext{QuotientRing(f, {"x", "y"}, {}),
                {{"T_1", 1, 1}, {"T_2", 1, 1}, {"S_1", 2, 2}, {"S_2", 2, 2}, {"U", 3, 3}}});
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

mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

json run_pd_axioms(unsigned long seed) {
  std::vector<Property> props = {
      {"gamma_0 is the unit and gamma_1 the identity"},
      {"scalar rule: gamma_n(c x) = c^n gamma_n(x)"},
      {"sum rule: gamma_n(x + y) = sum_{i+j=n} gamma_i(x) * gamma_j(y)"},
      {"product rule: gamma_m(x) * gamma_n(x) = binom(m+n, m) gamma_{m+n}(x)"},
      {"composition rule: gamma_m(gamma_n(x)) = ((mn)!/(m!(n!)^m)) gamma_{mn}(x)"},
      {"degree rule: gamma_n multiplies homological degree by n"},
      {"strict graded commutativity: a*b = (-1)^{|a||b|} b*a, odd squares vanish"},
      {"tensor-word oracle agrees on products and powers"},
  };
  const Field fields[] = {make_field_qq(), make_field_fp(2), make_field_fp(3)};
  for (const Field& f : fields) {
    std::mt19937_64 rng(seed * 3 + f.p);
    auto ctx = axiom_ctx(f);
    Poly one = Poly::constant(Scalar::one(f), 2);
    for (int trial = 0; trial < 20; ++trial) {
      PDElem x = rand_elem(rng, ctx, true, false);
      PDElem y = rand_elem(rng, ctx, true, false);
      std::string at = "field " + field_json(f).get<std::string>() + ", trial " +
                       std::to_string(trial);

      props[0].count(divided_power(x, 0) == PDElem::unit(ctx) && divided_power(x, 1) == x, at);

      Poly c = rand_coeff(rng, ctx->R, false);
      int n = 2 + static_cast<int>(rng() % 2);
      Poly cn = one;
      for (int i = 0; i < n; ++i) cn = cn * c;
      props[1].count(divided_power(x.scale(c), n) == divided_power(x, n).scale(cn), at);

      PDElem sum = PDElem::zero(ctx);
      for (int i = 0; i <= n; ++i) sum = sum + star_mul(divided_power(x, i), divided_power(y, n - i));
      props[2].count(divided_power(x + y, n) == sum, at);

      int m2 = 1 + static_cast<int>(rng() % 2);
      mpz_class binom = factorial(static_cast<unsigned>(m2 + n)) /
                        (factorial(static_cast<unsigned>(m2)) * factorial(static_cast<unsigned>(n)));
      props[3].count(star_mul(divided_power(x, m2), divided_power(x, n)) ==
                         divided_power(x, m2 + n).scale(
                             Poly::constant(Scalar::of_mpz(binom, f), 2)),
                     at);

      mpz_class comp = factorial(static_cast<unsigned>(2 * n)) /
                       (factorial(2) * factorial(static_cast<unsigned>(n)) *
                        factorial(static_cast<unsigned>(n)));
      props[4].count(divided_power(divided_power(x, n), 2) ==
                         divided_power(x, 2 * n).scale(
                             Poly::constant(Scalar::of_mpz(comp, f), 2)),
                     at);

      PDElem hom = rand_elem(rng, ctx, true, false, 1);
      PDElem g3 = divided_power(hom, 3);
      props[5].count(g3.is_zero() ||
                         (hom.homogeneous_hdeg() && g3.homogeneous_hdeg() &&
                          g3.hdeg() == 3 * hom.hdeg()),
                     at);

      PDElem a = rand_elem(rng, ctx, false, false, 1);
      PDElem b = rand_elem(rng, ctx, false, false, 1);
      bool comm = true;
      if (a.homogeneous_hdeg() && b.homogeneous_hdeg() && !a.is_zero() && !b.is_zero()) {
        PDElem ab = star_mul(a, b), ba = star_mul(b, a);
        comm = (a.hdeg() % 2 != 0 && b.hdeg() % 2 != 0) ? (ab == ba.scale(-one)) : (ab == ba);
        if (a.hdeg() % 2 != 0) comm = comm && star_mul(a, a).is_zero();
      }
      props[6].count(comm, at);

      PDElem sa = rand_elem(rng, ctx, false, true, 1, 2);
      PDElem sb = rand_elem(rng, ctx, false, true, 1, 2);
      OracleReport orp = oracle_compare(sa, sb);
      PDElem se = rand_elem(rng, ctx, true, true, 1, 2);
      OracleReport orw = oracle_compare_power(se, 2);
      props[7].count(orp.ok && orw.ok, at + (orp.ok ? orw.detail : orp.detail));
    }
  }
  return properties_json(props);
}

json run_shuffle(unsigned long) {
  std::vector<Property> props = {
      {"every shuffle is a valid permutation increasing on both blocks"},
      {"|Sh(m, n)| = binom(m+n, m) for m+n <= 8"},
      {"|(K')_n^p| = (np)!/(p!(n!)^p) for np <= 8"},
      {"Sh(n, n) partitions into (K')_n^2 and its shifted complement for n <= 4"},
  };
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; m + n <= 8; ++n) {
      std::vector<Perm> sh = shuffles(m, n);
      bool valid = true;
      for (const Perm& p : sh) valid = valid && perm_is_valid(p);
      props[0].count(valid, "Sh(" + std::to_string(m) + "," + std::to_string(n) + ")");
      mpz_class expect = factorial(static_cast<unsigned>(m + n)) /
                         (factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n)));
      props[1].count(mpz_class(static_cast<unsigned long>(sh.size())) == expect,
                     "Sh(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (int n = 1; n <= 8; ++n)
    for (int p = 1; n * p <= 8; ++p) {
      std::vector<Perm> kp = kprime(n, p);
      mpz_class expect = factorial(static_cast<unsigned>(n * p)) /
                         (factorial(static_cast<unsigned>(p)) *
                          [&] {
                            mpz_class d = 1;
                            for (int i = 0; i < p; ++i) d *= factorial(static_cast<unsigned>(n));
                            return d;
                          }());
      props[2].count(mpz_class(static_cast<unsigned long>(kp.size())) == expect,
                     "(K')_" + std::to_string(n) + "^" + std::to_string(p));
    }
  for (int n = 1; n <= 4; ++n)
    props[3].count(sh_partition_check(n), "n = " + std::to_string(n));
  return properties_json(props);
}

json run_lifts(unsigned long seed) {
  std::vector<Property> props = {
      {"generator-dual lifts are cocycles"},
      {"evaluating a lift returns the dual class"},
      {"products recover the quadratic coefficients of the relations"},
      {"relation duals are central"},
      {"products are invariant under homotopy perturbation"},
  };
  std::vector<RingSpec> specs;
  {
    RingSpec a1;
    a1.field = make_field_qq();
    a1.vars = {"x", "y", "z"};
    a1.relations = {parse_poly("x^2 + y*z", a1.vars, a1.field)};
    specs.push_back(a1);
    RingSpec tw;
    tw.field = make_field_fp(5);
    tw.vars = {"x", "y"};
    tw.relations = {parse_poly("x^2", tw.vars, tw.field), parse_poly("y^2", tw.vars, tw.field)};
    specs.push_back(tw);
  }
  for (const RingSpec& spec : specs) {
    Resolution res = build(spec, 4);
    unsigned n = static_cast<unsigned>(spec.vars.size());
    unsigned k = static_cast<unsigned>(spec.relations.size());
    std::string at = "ring with " + std::to_string(n) + " vars, " + std::to_string(k) +
                     " relations";
    std::vector<DerLift> alpha, beta;
    for (unsigned i = 0; i < n; ++i) alpha.push_back(lift_dual(res, static_cast<int>(i)));
    for (unsigned p = 0; p < k; ++p) beta.push_back(lift_dual(res, static_cast<int>(n + p)));

    for (unsigned g = 0; g < n + k; ++g) {
      const DerLift& L = g < n ? alpha[g] : beta[g - n];
      props[0].count(cocycle_check(res, L), at + ", generator " + std::to_string(g + 1));
      ExtElem ev = ext_value(res, L);
      ExtElem want;
      want.m = -L.r;
      want.field = spec.field;
      want.add_term(PBWMono{{{static_cast<int>(g), 1}}}, Scalar::one(spec.field));
      props[1].count(ev == want, at + ", generator " + std::to_string(g + 1));
    }

    // the relation-dual coordinate of alpha_j . alpha_i is the coefficient
    // n_{ij} of x_i x_j in the quadratic part (upper-triangular convention)
    std::vector<QuadForm> qf;
    for (const Poly& c : spec.relations) qf.push_back(quadratic_part(c));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        ExtElem prod = yoneda_product(res, alpha[j], alpha[i]);
        bool ok = true;
        for (unsigned p = 0; p < k; ++p) {
          Scalar coeff = prod.value(PBWMono{{{static_cast<int>(n + p), 1}}});
          Scalar expect = (i <= j) ? qf[p].q(i, j) : Scalar::zero(spec.field);
          ok = ok && coeff == expect;
        }
        props[2].count(ok, at + ", pair (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
      }

    for (unsigned p = 0; p < k; ++p)
      for (unsigned i = 0; i < n; ++i)
        props[3].count(yoneda_product(res, alpha[i], beta[p]) ==
                           yoneda_product(res, beta[p], alpha[i]),
                       at + ", beta_" + std::to_string(p + 1));

    std::mt19937_64 rng(seed + n * 100 + k);
    auto rnd_der = [&](int r) {
      DerLift E;
      E.r = r;
      E.dv.parity = std::abs(r) % 2;
      for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
        int h = res.ctx->gens[g].hdeg + r;
        PDElem v = PDElem::zero(res.cctx());
        for (const PBWMono& b : res.basis(h)) {
          long cv = static_cast<long>(rng() % 5) - 2;
          if (cv == 0) continue;
          v = v + PDElem::mono(res.cctx(), b,
                               Poly::constant(Scalar::of_long(cv, spec.field),
                                              static_cast<unsigned>(spec.vars.size())));
        }
        E.dv.vals[static_cast<int>(g)] = v;
      }
      return E;
    };
    for (int trial = 0; trial < 2; ++trial) {
      DerLift a0p = der_add(res, alpha[0], der_delta(res, rnd_der(0)));
      bool ok = cocycle_check(res, a0p) && ext_value(res, a0p) == ext_value(res, alpha[0]);
      for (unsigned j = 0; j < n; ++j)
        ok = ok && yoneda_product(res, a0p, alpha[j]) == yoneda_product(res, alpha[0], alpha[j]);
      props[4].count(ok, at + ", trial " + std::to_string(trial));
    }
  }
  return properties_json(props);
}

json run_appendix_c(unsigned long seed) {
  std::vector<Property> props = {
      {"squares of odd derivations obey the divided-power chain rule"},
      {"boundaries: delta(D) = 0 implies delta(D^2) = 0"},
      {"operator identity [D^2, D'] = [D, [D, D']]"},
  };
  RingSpec a1;
  a1.field = make_field_qq();
  a1.vars = {"x", "y", "z"};
  a1.relations = {parse_poly("x^2 + y*z", a1.vars, a1.field)};
  Resolution res = build(a1, 4);
  std::vector<DerLift> alpha;
  for (int i = 0; i < 3; ++i) alpha.push_back(lift_dual(res, i));

  std::mt19937_64 rng(seed);
  auto rnd_poly = [&]() {
    long c = static_cast<long>(rng() % 5) - 2;
    Poly p = Poly::constant(Scalar::of_long(c, a1.field), 3);
    if (rng() % 2) {
      Monomial m(3);
      m.e[rng() % 3] = 1;
      p = p * Poly::monomial(m, Scalar::one(a1.field));
    }
    return p;
  };
  auto rnd_der = [&](int r) {
    DerLift E;
    E.r = r;
    E.dv.parity = std::abs(r) % 2;
    for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
      int h = res.ctx->gens[g].hdeg + r;
      PDElem v = PDElem::zero(res.cctx());
      for (const PBWMono& b : res.basis(h)) {
        long cv = static_cast<long>(rng() % 5) - 2;
        if (cv == 0) continue;
        v = v + PDElem::mono(res.cctx(), b, Poly::constant(Scalar::of_long(cv, a1.field), 3));
      }
      E.dv.vals[static_cast<int>(g)] = v;
    }
    return E;
  };
  // random odd degree -1 cocycle: ring combination of the lifts plus a boundary
  auto rnd_cocycle = [&]() {
    DerLift D = der_scale(res, rnd_poly(), alpha[0]);
    for (int i = 1; i < 3; ++i)
      D = der_add(res, D, der_scale(res, rnd_poly(), alpha[i]));
    return der_add(res, D, der_delta(res, rnd_der(0)));
  };

  auto ut_basis2 = res.basis(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::string at = "trial " + std::to_string(trial);
    DerLift D = rnd_cocycle();
    DerLift D2 = der_square(res, D);

    // chain rule on divided powers of a random even degree-2 element
    PDElem a = PDElem::zero(res.cctx());
    for (const PBWMono& b : ut_basis2) {
      long cv = static_cast<long>(rng() % 5) - 2;
      if (cv == 0) continue;
      a = a + PDElem::mono(res.cctx(), b, Poly::constant(Scalar::of_long(cv, a1.field), 3));
    }
    bool chain = true;
    for (int kk = 2; kk <= 3; ++kk)
      chain = chain && apply_derivation(D2.dv, divided_power(a, kk)) ==
                           star_mul(apply_derivation(D2.dv, a), divided_power(a, kk - 1));
    props[0].count(chain, at);

    props[1].count(cocycle_check(res, D) && cocycle_check(res, D2), at);

    DerLift Dp = rnd_cocycle();
    DerLift lhs = der_bracket(res, D2, Dp);
    DerLift rhs = der_bracket(res, D, der_bracket(res, D, Dp));
    bool eq = lhs.r == rhs.r;
    for (std::size_t g = 0; eq && g < res.ctx->gens.size(); ++g) {
      int gi = static_cast<int>(g);
      eq = lhs.dv.vals.at(gi) == rhs.dv.vals.at(gi);
    }
    props[2].count(eq, at);
  }
  return properties_json(props);
}

void render_verify(const json& rep) {
  const json& v = rep.at("verification");
  std::cout << "suite " << rep.at("inputs").at("suite").get<std::string>() << " (seed "
            << rep.at("inputs").at("seed").get<unsigned long>() << ")\n";
  for (const auto& p : v.at("properties")) {
    std::cout << "  " << (p.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
              << p.at("name").get<std::string>() << " (" << p.at("cases").get<int>()
              << " cases)\n";
    if (!p.at("pass").get<bool>())
      std::cout << "        counterexample: " << p.at("counterexample").get<std::string>()
                << "\n";
  }
  std::cout << (v.at("all_pass").get<bool>() ? "all properties pass" : "SUITE FAILED") << "\n";
}

void emit(const json& rep, bool as_json, void (*render)(const json&)) {
  if (as_json)
    std::cout << rep.dump(2) << "\n";
  else
    render(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pd resolutions, Ext algebras, and homotopy Lie data"};
  app.require_subcommand(1);

  std::string spec_path, lie_path, suite;
  int max_degree = -1;
  long internal_cap = -1;
  unsigned long seed = 0;
  bool as_json = false;

  CLI::App* c_resolve = app.add_subcommand("resolve", "build and certify a pd resolution");
  c_resolve->add_option("spec", spec_path, "ring spec file")->required();
  c_resolve->add_option("--max-degree", max_degree, "resolve through this homological degree");
  c_resolve->add_option("--internal-cap", internal_cap, "internal-degree cap (resource bound)");
  c_resolve->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* c_ext = app.add_subcommand("ext", "Ext-algebra presentation and tables");
  c_ext->add_option("spec", spec_path, "ring spec file")->required();
  c_ext->add_option("--max-degree", max_degree, "dimension table through this degree");
  c_ext->add_option("--internal-cap", internal_cap, "internal-degree cap (resource bound)");
  c_ext->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* c_rec = app.add_subcommand("reconstruct", "ring from restricted Lie data");
  c_rec->add_option("lie", lie_path, "Lie data file")->required();
  c_rec->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* c_ver = app.add_subcommand("verify", "randomized property suites");
  c_ver->add_option("--suite", suite, "pd-axioms | shuffle | lifts | appendix-c")
      ->required()
      ->check(CLI::IsMember({"pd-axioms", "shuffle", "lifts", "appendix-c"}));
  c_ver->add_option("--seed", seed, "random seed");
  c_ver->add_flag("--json", as_json, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_resolve)) {
      SpecFile sf = parse_spec_file(read_file(spec_path));
      int N = max_degree >= 0 ? max_degree : (sf.max_degree >= 0 ? sf.max_degree : 6);
      long cap = internal_cap >= 0 ? internal_cap : sf.internal_cap;
      json rep{{"schema", 1},
               {"command", "resolve"},
               {"inputs", json{{"path", spec_path}, {"spec", spec_json(sf.spec)},
                               {"max_degree", N}, {"internal_cap", cap}}},
               {"resolution", resolve_report(sf, N, cap)}};
      emit(rep, as_json, render_resolve);
      return 0;
    }
    if (app.got_subcommand(c_ext)) {
      SpecFile sf = parse_spec_file(read_file(spec_path));
      int M = max_degree >= 0 ? max_degree : (sf.max_degree >= 0 ? sf.max_degree : 6);
      json rep{{"schema", 1},
               {"command", "ext"},
               {"inputs", json{{"path", spec_path}, {"spec", spec_json(sf.spec)},
                               {"max_degree", M}}},
               {"ext", ext_report(sf, M)}};
      emit(rep, as_json, render_ext);
      return 0;
    }
    if (app.got_subcommand(c_rec)) {
      LieFile lf = parse_lie_file(read_file(lie_path));
      LieCheckReport chk = validate_lie(lf.lie);
      if (!chk.valid) {
        json rep{{"schema", 1},
                 {"command", "reconstruct"},
                 {"inputs", json{{"path", lie_path}, {"lie", lie_json(lf.lie)}}},
                 {"reconstruction", json{{"validation", validation_json(chk)}}}};
        emit(rep, as_json, render_reconstruct);
        std::cerr << "error: restricted Lie data invalid: " << chk.witness << "\n";
        return 3;
      }
      json rep{{"schema", 1},
               {"command", "reconstruct"},
               {"inputs", json{{"path", lie_path}, {"lie", lie_json(lf.lie)}}},
               {"reconstruction", reconstruct_report(lf)}};
      emit(rep, as_json, render_reconstruct);
      return 0;
    }
    if (app.got_subcommand(c_ver)) {
      json result;
      if (suite == "pd-axioms") result = run_pd_axioms(seed);
      else if (suite == "shuffle") result = run_shuffle(seed);
      else if (suite == "lifts") result = run_lifts(seed);
      else result = run_appendix_c(seed);
      json rep{{"schema", 1},
               {"command", "verify"},
               {"inputs", json{{"suite", suite}, {"seed", seed}}},
               {"verification", result}};
      emit(rep, as_json, render_verify);
      return result.at("all_pass").get<bool>() ? 0 : 3;
    }
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
