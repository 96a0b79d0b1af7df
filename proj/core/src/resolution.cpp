#include "tatekit/resolution.hpp"

#include <algorithm>
#include <map>

#include "tatekit/linalg.hpp"

namespace kt {

void validate_ring_spec(const RingSpec& spec) {
  check_var_names(spec.vars);
  for (const Poly& c : spec.relations) {
    if (c.is_zero()) throw SpecError("zero relation");
    if (c.field() != spec.field) throw SpecError("relation field mismatch");
    if (c.nvars() != spec.vars.size()) throw SpecError("relation variable count mismatch");
    if (!c.in_power_of_max_ideal(2)) throw MathError("relation below quadratic order");
  }
}

std::vector<int> Resolution::gens_at(int hdeg) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < ctx->gens.size(); ++i)
    if (ctx->gens[i].hdeg == hdeg) out.push_back(static_cast<int>(i));
  return out;
}

namespace {
void enumerate_basis(const PDContext& c, std::size_t g, int remaining, PBWMono& cur,
                     std::vector<PBWMono>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    if (g == c.gens.size()) return;
  }
  if (g == c.gens.size()) return;
  int h = c.gens[g].hdeg;
  unsigned maxe = c.gens[g].odd() ? 1u : static_cast<unsigned>(remaining / h);
  for (unsigned e = 1; e <= maxe && static_cast<int>(e) * h <= remaining; ++e) {
    cur.e.push_back({static_cast<int>(g), e});
    enumerate_basis(c, g + 1, remaining - static_cast<int>(e) * h, cur, out);
    cur.e.pop_back();
  }
  if (remaining > 0) enumerate_basis(c, g + 1, remaining, cur, out);
}
}  // namespace

std::vector<PBWMono> Resolution::basis(int m) const {
  if (m < 0) return {};
  if (m == 0) return {PBWMono{}};
  std::vector<PBWMono> out;
  PBWMono cur;
  enumerate_basis(*ctx, 0, m, cur, out);
  // drop the spurious empty monomial the recursion would add at m == 0 only
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const PBWMono& b) { return b.is_one(); }),
            out.end());
  std::sort(out.begin(), out.end());
  return out;
}

PVec pd_coords(const PDElem& z, const std::vector<PBWMono>& basis, const QuotientRing& R) {
  PVec v(basis.size(), Poly(static_cast<unsigned>(R.nvars()), R.field));
  for (const auto& [m, c] : z.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) throw SpecError("element outside the stated basis");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

PDElem pd_from_coords(const std::shared_ptr<const PDContext>& ctx, const PVec& v,
                      const std::vector<PBWMono>& basis) {
  PDElem z = PDElem::zero(ctx);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!v[j].is_zero()) z = z + PDElem::mono(ctx, basis[j], v[j]);
  return z;
}

std::vector<PVec> differential_columns(const Resolution& res, int m) {
  std::vector<PBWMono> bm = res.basis(m), prev = res.basis(m - 1);
  std::vector<PVec> cols;
  cols.reserve(bm.size());
  for (const PBWMono& b : bm) {
    PDElem img = res.diff(PDElem::mono(res.cctx(), b, Poly::constant(Scalar::one(res.ring().field),
                                                                     static_cast<unsigned>(res.ring().nvars()))));
    cols.push_back(pd_coords(img, prev, res.ring()));
  }
  return cols;
}

Resolution koszul_init(const RingSpec& spec) {
  validate_ring_spec(spec);
  Resolution res;
  res.ctx = std::make_shared<PDContext>(PDContext{QuotientRing(spec.field, spec.vars, spec.relations), {}});
  res.relations = spec.relations;
  res.d.parity = 1;
  for (std::size_t i = 0; i < spec.vars.size(); ++i) {
    res.ctx->gens.push_back({"T_" + std::to_string(i + 1), 1, 1});
    res.d.vals[static_cast<int>(i)] =
        PDElem::scalar(res.cctx(), Poly::variable(static_cast<unsigned>(i),
                                                  static_cast<unsigned>(spec.vars.size()), spec.field));
  }
  res.truncation = 1;
  return res;
}

PVec pvec_mul_poly(const QuotientRing& R, const PVec& v, const Poly& u) {
  PVec out;
  out.reserve(v.size());
  for (const Poly& p : v) out.push_back(R.nf(p * u));
  return out;
}

// Internal degree of basis element j of P_m.
std::vector<int> basis_intdegs(const Resolution& res, const std::vector<PBWMono>& bm) {
  std::vector<int> w;
  w.reserve(bm.size());
  for (const PBWMono& b : bm) w.push_back(b.intdeg(*res.ctx));
  return w;
}

// Splits v into weighted-homogeneous components: weight of position j is
// w[j], so a term (mono, pos j) has weight deg(mono) + w[j].
std::map<int, PVec> weighted_components(const PVec& v, const std::vector<int>& w,
                                        const QuotientRing& R) {
  std::map<int, PVec> parts;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (const Term& t : v[j].terms()) {
      int deg = static_cast<int>(t.m.deg()) + w[j];
      auto it = parts.find(deg);
      if (it == parts.end())
        it = parts.emplace(deg, pvec_zero(v.size(), static_cast<unsigned>(R.nvars()), R.field)).first;
      it->second[j] += Poly::monomial(t.m, t.c);
    }
  return parts;
}

PieceIndex piece_index(const QuotientRing& R, const std::vector<int>& w, int t) {
  PieceIndex idx;
  for (std::size_t j = 0; j < w.size(); ++j) {
    int d = t - w[j];
    if (d < 0) continue;
    auto& sub = idx.lookup[j];
    for (const Monomial& u : R.standard_monomials(static_cast<unsigned>(d))) {
      sub.emplace(u, idx.cols.size());
      idx.cols.push_back({j, u});
    }
  }
  return idx;
}

Vec vectorize_piece(const PieceIndex& idx, const PVec& v, const Field& f) {
  Vec row(idx.size(), Scalar::zero(f));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    auto jt = idx.lookup.find(j);
    for (const Term& t : v[j].terms()) {
      if (jt == idx.lookup.end()) throw MathError("inhomogeneous element in graded piece");
      auto ut = jt->second.find(t.m);
      if (ut == jt->second.end()) throw MathError("inhomogeneous element in graded piece");
      row[ut->second] = row[ut->second] + t.c;
    }
  }
  return row;
}

PVec unvectorize_piece(const PieceIndex& idx, const Vec& row, const QuotientRing& R,
                       std::size_t width) {
  PVec v = pvec_zero(width, static_cast<unsigned>(R.nvars()), R.field);
  for (std::size_t c = 0; c < idx.size(); ++c)
    if (!row[c].is_zero()) v[idx.cols[c].first] += Poly::monomial(idx.cols[c].second, row[c]);
  return v;
}

CycleSet homology_generators(const Resolution& res, int n, unsigned degree_cap) {
  if (n < 1 || n > res.truncation) throw SpecError("resolution truncated below requested degree");
  const QuotientRing& R = res.ring();
  if (!R.homogeneous_relations())
    throw MathError("homology generators require homogeneous relations");

  std::vector<PBWMono> bn = res.basis(n);
  std::vector<int> w = basis_intdegs(res, bn);
  std::vector<PVec> cols = differential_columns(res, n);
  std::vector<PVec> syz = module_syzygies(R, cols, res.rank(n - 1), degree_cap);

  // homogeneous cycle components, keyed by internal degree
  std::map<int, std::vector<PVec>> cands;
  for (const PVec& z : syz)
    for (auto& [t, part] : weighted_components(z, w, R)) {
      auto& bucket = cands[t];
      bool dup = false;
      for (const PVec& existing : bucket)
        if (pvec_eq(existing, part)) {
          dup = true;
          break;
        }
      if (!dup) bucket.push_back(part);
    }
  for (auto& [t, bucket] : cands) std::sort(bucket.begin(), bucket.end(), pvec_canonical_less);

  std::vector<PBWMono> bn1 = res.basis(n + 1);
  std::vector<PVec> bcols = differential_columns(res, n + 1);
  std::vector<int> w1 = basis_intdegs(res, bn1);

  CycleSet cs;
  cs.degree = n;
  for (const auto& [t, bucket] : cands) {
    PieceIndex idx = piece_index(R, w, t);
    RowSpan span(idx.size(), R.field);
    // boundaries: monomial multiples of d(basis of P_{n+1}) in degree t
    for (std::size_t j = 0; j < bcols.size(); ++j) {
      int d = t - w1[j];
      if (d < 0) continue;
      for (const Monomial& u : R.standard_monomials(static_cast<unsigned>(d)))
        span.insert(vectorize_piece(
            idx, pvec_mul_poly(R, bcols[j], Poly::monomial(u, Scalar::one(R.field))), R.field));
    }
    // m * Z: positive-degree monomial multiples of lower-degree cycles
    for (const auto& [s, lower] : cands) {
      if (s >= t) break;
      for (const PVec& z : lower)
        for (const Monomial& u : R.standard_monomials(static_cast<unsigned>(t - s)))
          span.insert(vectorize_piece(
              idx, pvec_mul_poly(R, z, Poly::monomial(u, Scalar::one(R.field))), R.field));
    }
    for (const PVec& z : bucket) {
      Vec red = span.reduce(vectorize_piece(idx, z, R.field));
      std::size_t lead = idx.size();
      for (std::size_t c = 0; c < red.size(); ++c)
        if (!red[c].is_zero()) {
          lead = c;
          break;
        }
      if (lead == idx.size()) continue;  // already a boundary mod m*Z
      Scalar inv = red[lead].inv();
      for (auto& c : red) c = c * inv;
      PVec rep = unvectorize_piece(idx, red, R, bn.size());
      PDElem cyc = pd_from_coords(res.cctx(), rep, bn);
      if (!res.diff(cyc).is_zero()) throw MathError("homology representative is not a cycle");
      cs.cycles.push_back(cyc);
      span.insert(red);
    }
  }
  return cs;
}

Resolution& adjoin(Resolution& res, const CycleSet& cs) {
  if (cs.degree != res.truncation) throw SpecError("cycles must sit at the current frontier");
  int m = cs.degree + 1;
  for (const PDElem& z : cs.cycles) {
    if (z.is_zero()) throw MathError("adjoin requires nonzero cycles");
    if (!res.diff(z).is_zero()) throw MathError("adjoin requires cycles");
    if (!z.homogeneous_hdeg() || z.hdeg() != cs.degree)
      throw SpecError("cycle degree does not match the cycle set");
    int count = static_cast<int>(res.gens_at(m).size()) + 1;
    std::string name = m == 2 ? "S_" + std::to_string(count)
                              : "U" + std::to_string(m) + "_" + std::to_string(count);
    res.ctx->gens.push_back({name, m, z.max_intdeg()});
    res.d.vals[static_cast<int>(res.ctx->gens.size()) - 1] = z;
  }
  // re-verify: every adjoined class is now a boundary (d of its generator)
  for (std::size_t i = res.ctx->gens.size() - cs.cycles.size(); i < res.ctx->gens.size(); ++i) {
    PDElem g = PDElem::gen(res.cctx(), static_cast<int>(i));
    if (!(res.diff(g) == cs.cycles[i - (res.ctx->gens.size() - cs.cycles.size())]))
      throw MathError("adjoined differential mismatch");
  }
  res.truncation += 1;
  return res;
}

Resolution build(const RingSpec& spec, int N, unsigned degree_cap) {
  if (N < 1) throw SpecError("truncation must be at least 1");
  Resolution res = koszul_init(spec);
  RegSeqReport reg = is_regular_sequence(spec.relations, static_cast<unsigned>(spec.vars.size()),
                                         spec.field, degree_cap);
  if (reg.regular) {
    res.closed_form = true;
    if (N >= 2 && !spec.relations.empty()) {
      CycleSet cs;
      cs.degree = 1;
      for (const Poly& c : spec.relations) {
        // least-variable split: each monomial m contributes coeff * m / x_i
        // to c_i, where i is the first variable dividing m
        std::vector<Poly> ci(spec.vars.size(), Poly(static_cast<unsigned>(spec.vars.size()), spec.field));
        for (const Term& t : c.terms()) {
          std::size_t i = 0;
          while (i < spec.vars.size() && t.m.e[i] == 0) ++i;
          Monomial q = t.m;
          q.e[i] -= 1;
          ci[i] += Poly::monomial(q, t.c);
        }
        PDElem z = PDElem::zero(res.cctx());
        for (std::size_t i = 0; i < spec.vars.size(); ++i)
          if (!ci[i].is_zero()) z = z + PDElem::gen(res.cctx(), static_cast<int>(i)).scale(ci[i]);
        cs.cycles.push_back(z);
      }
      adjoin(res, cs);
    }
    res.truncation = N;  // no generators above degree 2 for a regular sequence
    return res;
  }
  if (!res.ring().homogeneous_relations())
    throw MathError("general construction requires homogeneous relations");
  while (res.truncation < N) {
    CycleSet cs = homology_generators(res, res.truncation, degree_cap);
    adjoin(res, cs);
  }
  return res;
}

bool is_minimal(const Resolution& res) {
  for (const auto& [g, v] : res.d.vals)
    for (const auto& [m, c] : v.terms())
      if (!c.constant_term().is_zero()) return false;
  return true;
}

unsigned long closed_form_rank(unsigned n, unsigned k, int m) {
  if (m < 0) return 0;
  mpz_class total = 0;
  for (int s = 0; s <= static_cast<int>(n) && s <= m; ++s) {
    int rest = m - s;
    if (rest % 2) continue;
    int half = rest / 2;
    mpz_class ways_b;
    if (k == 0)
      ways_b = (half == 0) ? 1 : 0;
    else
      ways_b = binomial(half + static_cast<int>(k) - 1, static_cast<int>(k) - 1);
    total += binomial(static_cast<int>(n), s) * ways_b;
  }
  return total.get_ui();
}

ExactnessReport verify_exactness(const Resolution& res, int upto, long internal_cap,
                                 bool use_module_certificate, unsigned degree_cap) {
  if (upto > res.truncation) throw SpecError("resolution truncated below requested degree");
  const QuotientRing& R = res.ring();
  ExactnessReport rep;

  rep.d_squared_zero = true;
  for (const auto& [g, v] : res.d.vals)
    if (!res.diff(v).is_zero()) rep.d_squared_zero = false;

  bool homogeneous = R.homogeneous_relations();
  long maxdeg = std::max(1u, R.max_relation_degree());
  long bound = internal_cap >= 0 ? internal_cap : (upto + 1) * maxdeg;

  rep.all_zero = true;
  for (int i = 1; i <= upto; ++i) {
    DegreeCertificate cert;
    cert.degree = i;
    std::vector<PBWMono> bi = res.basis(i);
    std::vector<PVec> cols = differential_columns(res, i);
    std::vector<PVec> bcols = differential_columns(res, i + 1);

    if (use_module_certificate) {
      std::vector<PVec> syz = module_syzygies(R, cols, res.rank(i - 1), degree_cap);
      ModuleMembership member(R, bcols, bi.size(), degree_cap);
      cert.zero = true;
      for (const PVec& z : syz)
        if (!member.contains(z)) {
          cert.zero = false;
          cert.witness = pd_from_coords(res.cctx(), z, bi).str();
          break;
        }
      cert.status = cert.zero ? "certified-exact"
                              : "nonzero class in degree " + std::to_string(i);
    }

    if (homogeneous) {
      cert.graded_checked = true;
      cert.graded_bound = static_cast<int>(bound);
      std::vector<int> w = basis_intdegs(res, bi);
      std::vector<int> wprev = basis_intdegs(res, res.basis(i - 1));
      std::vector<int> wnext = basis_intdegs(res, res.basis(i + 1));
      int tmin = w.empty() ? 0 : *std::min_element(w.begin(), w.end());
      bool any_checked = false, graded_zero = true;
      int bad_t = -1;
      for (int t = tmin; t <= bound && !w.empty(); ++t) {
        PieceIndex dom = piece_index(R, w, t);
        if (dom.size() == 0) continue;
        any_checked = true;
        PieceIndex tgt = piece_index(R, wprev, t);
        std::vector<Vec> dcols;
        for (std::size_t j = 0; j < bi.size(); ++j) {
          int d = t - w[j];
          if (d < 0) continue;
          for (const Monomial& u : R.standard_monomials(static_cast<unsigned>(d)))
            dcols.push_back(vectorize_piece(
                tgt, pvec_mul_poly(R, cols[j], Poly::monomial(u, Scalar::one(R.field))), R.field));
        }
        std::vector<Vec> upcols;
        for (std::size_t j = 0; j < bcols.size(); ++j) {
          int d = t - wnext[j];
          if (d < 0) continue;
          for (const Monomial& u : R.standard_monomials(static_cast<unsigned>(d)))
            upcols.push_back(vectorize_piece(
                dom, pvec_mul_poly(R, bcols[j], Poly::monomial(u, Scalar::one(R.field))), R.field));
        }
        std::size_t dimker = dom.size() - matrix_rank(dcols, R.field);
        std::size_t dimim = matrix_rank(upcols, R.field);
        if (dimker != dimim) {
          graded_zero = false;
          bad_t = t;
          break;
        }
      }
      if (!any_checked)
        cert.graded_status = "inconclusive beyond internal degree " + std::to_string(bound);
      else if (graded_zero)
        cert.graded_status = "certified-to-degree-" + std::to_string(bound);
      else
        cert.graded_status = "nonzero at internal degree " + std::to_string(bad_t);
      if (!use_module_certificate) {
        cert.zero = any_checked && graded_zero;
        cert.status = cert.graded_status;
      }
    } else if (!use_module_certificate) {
      cert.status = "inconclusive beyond internal degree 0";
      cert.zero = false;
    }

    rep.all_zero = rep.all_zero && cert.zero;
    rep.degrees.push_back(std::move(cert));
  }

  if (!rep.d_squared_zero)
    rep.overall = "differential does not square to zero";
  else if (!rep.all_zero) {
    rep.overall = "nonzero homology found";
    for (const auto& c : rep.degrees)
      if (!c.zero && !use_module_certificate && c.status.rfind("inconclusive", 0) == 0) {
        rep.overall = c.status;
        break;
      }
  } else
    rep.overall = use_module_certificate ? "certified-exact"
                                         : "certified-to-degree-" + std::to_string(bound);
  return rep;
}

}  // namespace kt
