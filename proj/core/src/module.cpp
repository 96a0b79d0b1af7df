#include "tatekit/module.hpp"

#include <algorithm>

#include "tatekit/errors.hpp"

namespace kt {

PVec pvec_zero(size_t t, unsigned nvars, const Field& f) {
  return PVec(t, Poly::zero(nvars, f));
}

bool pvec_is_zero(const PVec& v) {
  for (const Poly& p : v)
    if (!p.is_zero()) return false;
  return true;
}

PVec pvec_add(const PVec& a, const PVec& b) {
  PVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

PVec pvec_sub(const PVec& a, const PVec& b) {
  PVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

PVec pvec_mul_term(const PVec& v, const Monomial& m, const Scalar& c) {
  PVec r;
  r.reserve(v.size());
  for (const Poly& p : v) r.push_back(p.mul_term(m, c));
  return r;
}

PVec pvec_scale(const PVec& v, const Scalar& c) {
  PVec r;
  r.reserve(v.size());
  for (const Poly& p : v) r.push_back(p.scale(c));
  return r;
}

bool pvec_eq(const PVec& a, const PVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool pvec_canonical_less(const PVec& a, const PVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (!(a[i] == b[i])) return Poly::canonical_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

namespace {

struct ModTerm {
  size_t pos;
  Monomial m;
  Scalar c;
  bool valid = false;
};

// Larger term under the block order described in the header.
bool modterm_less(size_t lead_block, size_t pa, const Monomial& ma, size_t pb,
                  const Monomial& mb) {
  bool ba = pa < lead_block, bb = pb < lead_block;
  if (ba != bb) return !ba;  // primary block wins
  if (!(ma == mb)) return grlex_less(ma, mb);
  return pa > pb;  // smaller position is larger
}

ModTerm lead_term(const PVec& v, size_t lead_block) {
  ModTerm best;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Term& t = v[i].lt();
    if (!best.valid || modterm_less(lead_block, best.pos, best.m, i, t.m)) {
      best = {i, t.m, t.c, true};
    }
  }
  return best;
}

unsigned pvec_deg(const PVec& v) {
  unsigned d = 0;
  for (const Poly& p : v) d = std::max(d, p.deg());
  return d;
}

// Canonical representative of a line: first nonzero component made monic.
PVec pvec_first_monic(PVec v) {
  for (const Poly& p : v) {
    if (!p.is_zero()) {
      Scalar c = p.lt().c.inv();
      for (Poly& q : v) q = q.scale(c);
      break;
    }
  }
  return v;
}

}  // namespace

PVec module_normal_form(const PVec& v, const std::vector<PVec>& G, size_t lead_block) {
  if (v.empty()) return v;
  unsigned nv = v[0].nvars();
  Field f = v[0].field();
  PVec rem = pvec_zero(v.size(), nv, f);
  PVec work = v;
  for (;;) {
    ModTerm t = lead_term(work, lead_block);
    if (!t.valid) break;
    bool reduced = false;
    for (const PVec& g : G) {
      ModTerm gt = lead_term(g, lead_block);
      if (!gt.valid || gt.pos != t.pos || !gt.m.divides(t.m)) continue;
      work = pvec_sub(work, pvec_mul_term(g, t.m / gt.m, t.c / gt.c));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[t.pos] += Poly::monomial(t.m, t.c);
      work[t.pos] -= Poly::monomial(t.m, t.c);
    }
  }
  return rem;
}

std::vector<PVec> module_groebner(std::vector<PVec> gens, size_t lead_block,
                                  unsigned degree_cap) {
  std::vector<PVec> G;
  for (PVec& g : gens) {
    if (pvec_is_zero(g)) continue;
    ModTerm t = lead_term(g, lead_block);
    G.push_back(pvec_scale(g, t.c.inv()));
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    ModTerm ti = lead_term(G[i], lead_block), tj = lead_term(G[j], lead_block);
    if (ti.pos != tj.pos) continue;  // S-pairs need matching positions
    Monomial l = Monomial::lcm(ti.m, tj.m);
    PVec s = pvec_sub(pvec_mul_term(G[i], l / ti.m, Scalar::one(ti.c.field())),
                      pvec_mul_term(G[j], l / tj.m, Scalar::one(tj.c.field())));
    s = module_normal_form(s, G, lead_block);
    if (pvec_is_zero(s)) continue;
    if (degree_cap && pvec_deg(s) > degree_cap)
      throw CapError("module Groebner computation exceeded degree cap " +
                     std::to_string(degree_cap));
    ModTerm ts = lead_term(s, lead_block);
    s = pvec_scale(s, ts.c.inv());
    for (size_t t = 0; t < G.size(); ++t) pairs.push_back({t, G.size()});
    G.push_back(std::move(s));
  }
  return G;
}

std::vector<PVec> module_syzygies_poly(const std::vector<PVec>& cols, size_t t,
                                       unsigned degree_cap) {
  if (cols.empty()) return {};
  unsigned nv = cols[0][0].nvars();
  Field f = cols[0][0].field();
  size_t s = cols.size();
  std::vector<PVec> aug;
  for (size_t j = 0; j < s; ++j) {
    if (cols[j].size() != t) throw SpecError("syzygy column has wrong length");
    PVec v = cols[j];
    v.resize(t + s, Poly::zero(nv, f));
    v[t + j] = Poly::constant(Scalar::one(f), nv);
    aug.push_back(std::move(v));
  }
  std::vector<PVec> G = module_groebner(std::move(aug), t, degree_cap);
  std::vector<PVec> syz;
  for (const PVec& g : G) {
    bool head_zero = true;
    for (size_t i = 0; i < t; ++i)
      if (!g[i].is_zero()) {
        head_zero = false;
        break;
      }
    if (!head_zero) continue;
    PVec tail(g.begin() + static_cast<long>(t), g.end());
    if (!pvec_is_zero(tail)) syz.push_back(pvec_first_monic(std::move(tail)));
  }
  std::sort(syz.begin(), syz.end(), pvec_canonical_less);
  syz.erase(std::unique(syz.begin(), syz.end(), pvec_eq), syz.end());
  return syz;
}

std::vector<PVec> module_syzygies(const QuotientRing& R, const std::vector<PVec>& cols, size_t t,
                                  unsigned degree_cap) {
  unsigned nv = R.nvars();
  Field f = R.field;
  std::vector<PVec> lifted;
  for (const PVec& c : cols) {
    PVec v;
    v.reserve(t);
    for (const Poly& p : c) v.push_back(R.nf(p));
    lifted.push_back(std::move(v));
  }
  size_t s = lifted.size();
  // Adjoin rel * e_i columns so kernels over R project from kernels over Pol.
  for (const Poly& rel : R.relations) {
    for (size_t i = 0; i < t; ++i) {
      PVec v = pvec_zero(t, nv, f);
      v[i] = rel;
      lifted.push_back(std::move(v));
    }
  }
  std::vector<PVec> syzall = module_syzygies_poly(lifted, t, degree_cap);
  std::vector<PVec> out;
  for (const PVec& z : syzall) {
    PVec head(z.begin(), z.begin() + static_cast<long>(s));
    for (Poly& p : head) p = R.nf(p);
    if (!pvec_is_zero(head)) out.push_back(pvec_first_monic(std::move(head)));
  }
  std::sort(out.begin(), out.end(), pvec_canonical_less);
  out.erase(std::unique(out.begin(), out.end(), pvec_eq), out.end());
  return out;
}

ModuleMembership::ModuleMembership(const QuotientRing& R, std::vector<PVec> cols, size_t tt,
                                   unsigned degree_cap)
    : t(tt) {
  unsigned nv = R.nvars();
  for (const Poly& rel : R.relations) {
    for (size_t i = 0; i < t; ++i) {
      PVec v = pvec_zero(t, nv, R.field);
      v[i] = rel;
      cols.push_back(std::move(v));
    }
  }
  std::erase_if(cols, pvec_is_zero);
  gb = module_groebner(std::move(cols), t, degree_cap);
}

bool ModuleMembership::contains(const PVec& v) const {
  return pvec_is_zero(module_normal_form(v, gb, t));
}

bool module_member(const QuotientRing& R, const PVec& v, const std::vector<PVec>& cols, size_t t,
                   unsigned degree_cap) {
  return ModuleMembership(R, cols, t, degree_cap).contains(v);
}

std::optional<PVec> module_express(const QuotientRing& R, const PVec& v,
                                   const std::vector<PVec>& cols, size_t t,
                                   unsigned degree_cap) {
  unsigned nv = R.nvars();
  Field f = R.field;
  size_t s = cols.size();
  // Track coefficients through reduction: column j becomes (col_j | e_j);
  // relation columns carry no tracking (their coefficients are discarded
  // when projecting back to R).
  std::vector<PVec> aug;
  for (size_t j = 0; j < s; ++j) {
    PVec w = pvec_zero(t + s, nv, f);
    for (size_t i = 0; i < t; ++i) w[i] = R.nf(cols[j][i]);
    w[t + j] = Poly::constant(Scalar::one(f), nv);
    aug.push_back(std::move(w));
  }
  for (const Poly& rel : R.relations) {
    for (size_t i = 0; i < t; ++i) {
      PVec w = pvec_zero(t + s, nv, f);
      w[i] = rel;
      aug.push_back(std::move(w));
    }
  }
  std::vector<PVec> gb = module_groebner(std::move(aug), t, degree_cap);
  PVec target = pvec_zero(t + s, nv, f);
  for (size_t i = 0; i < t; ++i) target[i] = R.nf(v[i]);
  PVec red = module_normal_form(target, gb, t);
  for (size_t i = 0; i < t; ++i)
    if (!red[i].is_zero()) return std::nullopt;
  PVec u;
  u.reserve(s);
  for (size_t j = 0; j < s; ++j) u.push_back(R.nf(-red[t + j]));
  return u;
}

RegSeqReport is_regular_sequence(const std::vector<Poly>& gs, unsigned nvars, const Field& f,
                                 unsigned degree_cap, bool allow_shortcut) {
  RegSeqReport rep;
  for (size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].is_zero()) {
      rep.fail_index = static_cast<int>(i);
      rep.witness = Poly::constant(Scalar::one(f), nvars);
      return rep;
    }
  }
  // Shortcut: pairwise coprime leading monomials of nonunits form a regular
  // sequence (an optimization only; the colon test below is the real check).
  bool coprime = true;
  for (size_t i = 0; i < gs.size() && coprime; ++i) {
    if (gs[i].lt().m.is_one()) coprime = false;
    for (size_t j = i + 1; j < gs.size() && coprime; ++j)
      if (!gs[i].lt().m.coprime(gs[j].lt().m)) coprime = false;
  }
  if (allow_shortcut && coprime && !gs.empty()) {
    rep.regular = true;
    rep.used_coprime_shortcut = true;
    return rep;
  }

  std::vector<Poly> gb;  // of (g_0..g_{s-1})
  for (size_t s = 0; s < gs.size(); ++s) {
    // Colon ideal (I : g): first coordinates of syzygies of [g, gb...].
    std::vector<PVec> cols;
    cols.push_back({gs[s]});
    for (const Poly& g : gb) cols.push_back({g});
    std::vector<PVec> syz = module_syzygies_poly(cols, 1, degree_cap);
    for (const PVec& z : syz) {
      Poly h = normal_form(z[0], gb);
      if (!h.is_zero()) {
        rep.fail_index = static_cast<int>(s);
        rep.witness = h;
        return rep;
      }
    }
    std::vector<Poly> next = gb;
    next.push_back(gs[s]);
    gb = buchberger(next, degree_cap);
    if (gb.size() == 1 && gb[0].is_constant()) {
      // Unit ideal: the quotient collapsed, sequence not regular (properness).
      rep.fail_index = static_cast<int>(s);
      rep.witness = Poly::constant(Scalar::one(f), nvars);
      return rep;
    }
  }
  rep.regular = true;
  return rep;
}

}  // namespace kt
