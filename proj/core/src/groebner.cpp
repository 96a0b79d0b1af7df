#include "tatekit/groebner.hpp"

#include <algorithm>

#include "tatekit/errors.hpp"

namespace kt {

DivisionResult divide(const Poly& f, const std::vector<Poly>& G) {
  DivisionResult res;
  res.rem = Poly::zero(f.nvars(), f.field());
  res.quot.assign(G.size(), Poly::zero(f.nvars(), f.field()));
  Poly work = f;
  while (!work.is_zero()) {
    const Term& t = work.lt();
    bool reduced = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero()) continue;
      const Term& g = G[i].lt();
      if (g.m.divides(t.m)) {
        Monomial q = t.m / g.m;
        Scalar c = t.c / g.c;
        res.quot[i] += Poly::monomial(q, c);
        work -= G[i].mul_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      res.rem += Poly::monomial(t.m, t.c);
      work -= Poly::monomial(t.m, t.c);
    }
  }
  return res;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
  Poly rem = Poly::zero(f.nvars(), f.field());
  Poly work = f;
  while (!work.is_zero()) {
    const Term& t = work.lt();
    bool reduced = false;
    for (const Poly& g : G) {
      if (g.is_zero()) continue;
      if (g.lt().m.divides(t.m)) {
        work -= g.mul_term(t.m / g.lt().m, t.c / g.lt().c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem += Poly::monomial(t.m, t.c);
      work -= Poly::monomial(t.m, t.c);
    }
  }
  return rem;
}

static Poly spoly(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.lt().m, g.lt().m);
  return f.mul_term(l / f.lt().m, f.lt().c.inv()) - g.mul_term(l / g.lt().m, g.lt().c.inv());
}

std::vector<Poly> buchberger(std::vector<Poly> gens, unsigned degree_cap) {
  std::vector<Poly> G;
  for (const Poly& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (G[i].lt().m.coprime(G[j].lt().m)) continue;  // first Buchberger criterion
    Poly s = normal_form(spoly(G[i], G[j]), G);
    if (s.is_zero()) continue;
    if (degree_cap && s.deg() > degree_cap)
      throw CapError("Groebner computation exceeded degree cap " + std::to_string(degree_cap));
    s = s.monic();
    for (size_t t = 0; t < G.size(); ++t) pairs.push_back({t, G.size()});
    G.push_back(s);
  }
  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> min;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j)
      if (i != j && G[j].lt().m.divides(G[i].lt().m) &&
          !(G[i].lt().m == G[j].lt().m && i < j))
        redundant = true;
    if (!redundant) min.push_back(G[i]);
  }
  // Auto-reduce tails.
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    min[i] = normal_form(min[i], others).monic();
  }
  std::erase_if(min, [](const Poly& p) { return p.is_zero(); });
  std::sort(min.begin(), min.end(),
            [](const Poly& a, const Poly& b) { return grlex_less(a.lt().m, b.lt().m); });
  return min;
}

QuotientRing::QuotientRing(Field f, std::vector<std::string> v, std::vector<Poly> rels,
                           unsigned degree_cap)
    : field(f), vars(std::move(v)), relations(std::move(rels)) {
  check_var_names(vars);
  for (const Poly& r : relations) {
    if (r.is_zero()) throw SpecError("zero relation in ring presentation");
    if (!(r.field() == field)) throw SpecError("relation field mismatch");
    if (r.nvars() != vars.size()) throw SpecError("relation variable count mismatch");
  }
  gb = buchberger(relations, degree_cap);
}

bool QuotientRing::is_trivial() const {
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool QuotientRing::homogeneous_relations() const {
  for (const Poly& r : relations)
    if (!r.is_homogeneous()) return false;
  return true;
}

unsigned QuotientRing::max_relation_degree() const {
  unsigned d = 0;
  for (const Poly& r : relations) d = std::max(d, r.deg());
  return d;
}

std::vector<Monomial> QuotientRing::standard_monomials(unsigned d) const {
  std::vector<Monomial> out;
  Monomial m(nvars());
  // Enumerate all degree-d monomials, filter by leading-term divisibility.
  auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
    if (var + 1 == nvars()) {
      m.e[var] = rem;
      bool standard = true;
      for (const Poly& g : gb)
        if (g.lt().m.divides(m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (unsigned k = 0; k <= rem; ++k) {
      m.e[var] = k;
      self(self, var + 1, rem - k);
    }
    m.e[var] = 0;
  };
  if (nvars() == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grlex_less(b, a);  // descending
  });
  return out;
}

Scalar QuadForm::q(unsigned i, unsigned j) const {
  // index of (i,j), i <= j, in row-major upper-triangular order
  size_t idx = 0;
  for (unsigned r = 0; r < i; ++r) idx += n - r;
  idx += j - i;
  return upper[idx];
}

QuadForm quadratic_part(const Poly& c) {
  if (!c.in_power_of_max_ideal(2)) throw MathError("relation below quadratic order");
  QuadForm qf;
  qf.n = c.nvars();
  qf.field = c.field();
  qf.upper.assign(static_cast<size_t>(qf.n) * (qf.n + 1) / 2, Scalar::zero(c.field()));
  size_t idx = 0;
  for (unsigned i = 0; i < qf.n; ++i) {
    for (unsigned j = i; j < qf.n; ++j) {
      Monomial m(qf.n);
      m.e[i] += 1;
      m.e[j] += 1;
      qf.upper[idx++] = c.coeff(m);
    }
  }
  return qf;
}

}  // namespace kt
