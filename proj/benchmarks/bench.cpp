// Microbenchmarks for the hot paths: Groebner bases, the pd star product,
// resolution construction, and lifting duals to chain maps.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "tatekit/yoneda.hpp"

using namespace kt;

namespace {

RingSpec spec_of(const std::vector<std::string>& vars, const std::vector<std::string>& rels,
                 const Field& f) {
  RingSpec s;
  s.field = f;
  s.vars = vars;
  for (const std::string& r : rels) s.relations.push_back(parse_poly(r, vars, f));
  return s;
}

const std::vector<std::string> XYZ = {"x", "y", "z"};

}  // namespace

static void BM_buchberger(benchmark::State& state) {
  Field f = state.range(0) ? make_field_fp(5) : make_field_qq();
  std::vector<Poly> gens = {
      parse_poly("x^2 + 2*x*y - z^2", XYZ, f),
      parse_poly("x*y*z + y^3", XYZ, f),
      parse_poly("y^2*z - x*z^2 + z^3", XYZ, f),
  };
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_buchberger)->Arg(0)->Arg(1);

static void BM_normal_form(benchmark::State& state) {
  Field f = make_field_qq();
  std::vector<Poly> gb = buchberger({parse_poly("x^4 + y^3 + z^2", XYZ, f)});
  Poly target = parse_poly("x + y + z", XYZ, f);
  for (int i = 0; i < 5; ++i) target = target * parse_poly("x + y + z", XYZ, f);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(target, gb));
}
BENCHMARK(BM_normal_form);

static void BM_star_mul(benchmark::State& state) {
  Field f = make_field_qq();
  auto ctx = std::make_shared<PDContext>(
      PDContext{QuotientRing(f, {"x", "y"}, {}),
                {{"T_1", 1, 1}, {"T_2", 1, 1}, {"S_1", 2, 2}, {"S_2", 2, 2}, {"U", 3, 3}}});
  Poly one = Poly::constant(Scalar::one(f), 2);
  PDElem a = PDElem::mono(ctx, PBWMono{{{0, 1}, {2, 2}}}, one) +
             PDElem::mono(ctx, PBWMono{{{3, 2}}}, one);
  PDElem b = PDElem::mono(ctx, PBWMono{{{1, 1}, {3, 1}}}, one) +
             PDElem::mono(ctx, PBWMono{{{2, 1}, {4, 1}}}, one);
  for (auto _ : state) benchmark::DoNotOptimize(star_mul(a, b));
}
BENCHMARK(BM_star_mul);

static void BM_divided_power(benchmark::State& state) {
  Field f = make_field_qq();
  auto ctx = std::make_shared<PDContext>(
      PDContext{QuotientRing(f, {"x", "y"}, {}),
                {{"T_1", 1, 1}, {"T_2", 1, 1}, {"S_1", 2, 2}, {"S_2", 2, 2}, {"U", 3, 3}}});
  Poly one = Poly::constant(Scalar::one(f), 2);
  PDElem a = PDElem::mono(ctx, PBWMono{{{2, 1}}}, one) +
             PDElem::mono(ctx, PBWMono{{{0, 1}, {1, 1}}}, one);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(divided_power(a, n));
}
BENCHMARK(BM_divided_power)->Arg(2)->Arg(4);

static void BM_build(benchmark::State& state) {
  RingSpec e6 = spec_of(XYZ, {"x^4 + y^3 + z^2"}, make_field_qq());
  int upto = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build(e6, upto));
}
BENCHMARK(BM_build)->Arg(4)->Arg(8);

static void BM_build_noncross(benchmark::State& state) {
  RingSpec s = spec_of({"x", "y"}, {"x^2", "x*y"}, make_field_qq());
  int upto = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build(s, upto));
}
BENCHMARK(BM_build_noncross)->Arg(4)->Arg(6);

static void BM_lift_dual(benchmark::State& state) {
  RingSpec a1 = spec_of(XYZ, {"x^2 + y*z"}, make_field_qq());
  Resolution res = build(a1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lift_dual(res, 0));
}
BENCHMARK(BM_lift_dual)->Arg(4)->Arg(6);

static void BM_yoneda_product(benchmark::State& state) {
  RingSpec a1 = spec_of(XYZ, {"x^2 + y*z"}, make_field_qq());
  Resolution res = build(a1, 4);
  DerLift a = lift_dual(res, 1), b = lift_dual(res, 2);
  for (auto _ : state) benchmark::DoNotOptimize(yoneda_product(res, a, b));
}
BENCHMARK(BM_yoneda_product);

static void BM_homotopy_lie(benchmark::State& state) {
  RingSpec e6 = spec_of(XYZ, {"x^4 + y^3 + z^2"}, make_field_qq());
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_lie(e6));
}
BENCHMARK(BM_homotopy_lie);

static void BM_verify_exactness(benchmark::State& state) {
  RingSpec e6 = spec_of(XYZ, {"x^4 + y^3 + z^2"}, make_field_qq());
  Resolution res = build(e6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(verify_exactness(res, 5));
}
BENCHMARK(BM_verify_exactness);

BENCHMARK_MAIN();
