#include "tatekit/yoneda.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tatekit/errors.hpp"

namespace kt {

// ---------------------------------------------------------------- ExtElem

Scalar ExtElem::value(const PBWMono& b) const {
  auto it = vals.find(b);
  return it == vals.end() ? Scalar::zero(field) : it->second;
}

ExtElem& ExtElem::add_term(const PBWMono& b, const Scalar& c) {
  auto it = vals.find(b);
  Scalar s = it == vals.end() ? c : it->second + c;
  if (s.is_zero()) {
    if (it != vals.end()) vals.erase(it);
  } else {
    vals[b] = s;
  }
  return *this;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  if (m != o.m) throw SpecError("ext classes of different degrees");
  ExtElem out = *this;
  for (const auto& [b, c] : o.vals) out.add_term(b, c);
  return out;
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
  if (m != o.m) throw SpecError("ext classes of different degrees");
  ExtElem out = *this;
  for (const auto& [b, c] : o.vals) out.add_term(b, -c);
  return out;
}

ExtElem ExtElem::scale(const Scalar& c) const {
  ExtElem out;
  out.m = m;
  out.field = field;
  if (c.is_zero()) return out;
  for (const auto& [b, v] : vals) out.vals[b] = v * c;
  return out;
}

std::string ExtElem::str(const PDContext& ctx) const {
  if (vals.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : vals) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mag != "1") os << mag << "*";
    os << "[" << pbw_str(b, ctx) << "]^";
  }
  return os.str();
}

// ----------------------------------------------------------- augmentation

Scalar augment(const QuotientRing& R, const Poly& p) { return R.nf(p).constant_term(); }

Scalar augment(const PDElem& z) {
  if (!z.ctx()) throw SpecError("element without context");
  const QuotientRing& R = z.ctx()->R;
  Scalar out = Scalar::zero(R.field);
  for (const auto& [mono, c] : z.terms()) {
    if (!mono.is_one()) throw MathError("augmentation applied to positive-degree element");
    out = out + augment(R, c);
  }
  return out;
}

// -------------------------------------------------------------- DerLift

namespace {

int lift_sign(int r) { return r % 2 != 0 ? -1 : 1; }  // (-1)^r

PDElem gen_value(const DerLift& L, int g) {
  auto it = L.dv.vals.find(g);
  if (it == L.dv.vals.end()) throw SpecError("lift missing a generator value");
  return it->second;
}

// d(Z) = w with Z in P_s.  Degree-1 targets integrate by polynomial
// division against the variables; higher targets by tracked module
// reduction against the differential columns.
PDElem solve_boundary(const Resolution& res, const PDElem& w, int s, int fail_deg) {
  const QuotientRing& R = res.ring();
  auto cx = res.cctx();
  std::string incomplete = "lift incomplete at degree " + std::to_string(fail_deg);
  if (w.is_zero()) return PDElem::zero(cx);
  if (s < 1) throw MathError(incomplete);
  if (s == 1) {
    Poly w0 = Poly::zero(R.nvars(), R.field);
    for (const auto& [mono, c] : w.terms()) {
      if (!mono.is_one()) throw MathError(incomplete);
      w0 = w0 + c;
    }
    w0 = R.nf(w0);
    if (!w0.constant_term().is_zero()) throw MathError(incomplete);
    std::vector<Poly> xs;
    for (unsigned j = 0; j < R.nvars(); ++j)
      xs.push_back(Poly::variable(j, R.nvars(), R.field));
    DivisionResult dr = divide(w0, xs);
    if (!dr.rem.is_zero()) throw MathError(incomplete);
    PDElem Z(cx);
    for (unsigned j = 0; j < R.nvars(); ++j)
      if (!dr.quot[j].is_zero()) Z.add(PBWMono{{{static_cast<int>(j), 1}}}, dr.quot[j]);
    return Z;
  }
  std::vector<PBWMono> dom = res.basis(s);
  std::vector<PBWMono> tgt = res.basis(s - 1);
  PVec wv = pd_coords(w, tgt, R);
  std::vector<PVec> cols = differential_columns(res, s);
  std::optional<PVec> u = module_express(R, wv, cols, tgt.size());
  if (!u) throw MathError(incomplete);
  PDElem Z(cx);
  for (std::size_t j = 0; j < dom.size(); ++j)
    if (!(*u)[j].is_zero()) Z.add(dom[j], (*u)[j]);
  return Z;
}

}  // namespace

PDElem apply_lift(const Resolution& res, const DerLift& L, const PDElem& z) {
  (void)res;
  return apply_derivation(L.dv, z);
}

DerLift lift_dual(const Resolution& res, int gen_idx) {
  const auto& gens = res.ctx->gens;
  if (gen_idx < 0 || gen_idx >= static_cast<int>(gens.size()))
    throw SpecError("no generator with that index");
  if (!is_minimal(res)) throw MathError("lift requires a minimal resolution");
  int m = gens[static_cast<std::size_t>(gen_idx)].hdeg;
  DerLift L;
  L.r = -m;
  L.dv.parity = m % 2;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int gi = static_cast<int>(g);
    int h = gens[g].hdeg;
    if (h < m) {
      L.dv.vals[gi] = PDElem::zero(res.cctx());
    } else if (h == m) {
      L.dv.vals[gi] =
          gi == gen_idx ? PDElem::unit(res.cctx()) : PDElem::zero(res.cctx());
    } else {
      // solve d(Z) = (-1)^m L(d(g)); the right-hand side only involves
      // generators of lower degree, whose values are already set
      PDElem w = apply_derivation(L.dv, res.d.vals.at(gi));
      if (m % 2 != 0) w = -w;
      L.dv.vals[gi] = solve_boundary(res, w, h - m, h);
    }
  }
  return L;
}

bool cocycle_check(const Resolution& res, const DerLift& L) {
  int sgn = lift_sign(L.r);
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    PDElem lhs = res.diff(gen_value(L, gi));
    PDElem rhs = apply_derivation(L.dv, res.d.vals.at(gi));
    if (sgn < 0) rhs = -rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

DerLift der_delta(const Resolution& res, const DerLift& L) {
  DerLift out;
  out.r = L.r - 1;
  out.dv.parity = std::abs(out.r) % 2;
  int sgn = lift_sign(L.r);
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    PDElem v = res.diff(gen_value(L, gi));
    PDElem w = apply_derivation(L.dv, res.d.vals.at(gi));
    out.dv.vals[gi] = sgn < 0 ? v + w : v - w;
  }
  return out;
}

DerLift der_add(const Resolution& res, const DerLift& a, const DerLift& b) {
  if (a.r != b.r) throw SpecError("derivations of different degrees");
  DerLift out;
  out.r = a.r;
  out.dv.parity = a.dv.parity;
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    out.dv.vals[gi] = gen_value(a, gi) + gen_value(b, gi);
  }
  return out;
}

DerLift der_scale(const Resolution& res, const Poly& c, const DerLift& a) {
  DerLift out;
  out.r = a.r;
  out.dv.parity = a.dv.parity;
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    out.dv.vals[gi] = gen_value(a, gi).scale(c);
  }
  return out;
}

DerLift der_bracket(const Resolution& res, const DerLift& a, const DerLift& b) {
  DerLift out;
  out.r = a.r + b.r;
  out.dv.parity = std::abs(out.r) % 2;
  bool both_odd = a.r % 2 != 0 && b.r % 2 != 0;
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    PDElem ab = apply_derivation(a.dv, gen_value(b, gi));
    PDElem ba = apply_derivation(b.dv, gen_value(a, gi));
    out.dv.vals[gi] = both_odd ? ab + ba : ab - ba;
  }
  return out;
}

DerLift der_square(const Resolution& res, const DerLift& a) {
  if (a.r % 2 == 0) throw MathError("derivation square requires odd degree");
  DerLift out;
  out.r = 2 * a.r;
  out.dv.parity = 0;
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    out.dv.vals[gi] = apply_derivation(a.dv, gen_value(a, gi));
  }
  return out;
}

// ------------------------------------------------------------- Ext values

ExtElem ext_value(const Resolution& res, const DerLift& L) {
  if (L.r > 0) throw SpecError("derivation of positive degree has no Ext class");
  int m = -L.r;
  ExtElem z;
  z.m = m;
  z.field = res.ring().field;
  Poly one = Poly::constant(Scalar::one(z.field), res.ring().nvars());
  for (const PBWMono& u : res.basis(m)) {
    Scalar c = augment(apply_derivation(L.dv, PDElem::mono(res.cctx(), u, one)));
    if (!c.is_zero()) z.vals[u] = c;
  }
  return z;
}

ExtElem pi_value(const Resolution& res, const DerLift& L) {
  ExtElem z = ext_value(res, L);
  int m = z.m;
  if ((m * (m - 1) / 2) % 2 != 0) z = z.scale(-Scalar::one(z.field));
  return z;
}

PDElem chain_apply(const Resolution& res, const DerLift& L, const PDElem& z) {
  PDElem out = PDElem::zero(res.cctx());
  for (const auto& [mono, c] : z.terms()) {
    int j = mono.hdeg(*res.ctx);
    PDElem part = apply_derivation(L.dv, PDElem::mono(res.cctx(), mono, c));
    if (((j + L.r) * L.r) % 2 != 0) part = -part;
    out = out + part;
  }
  return out;
}

ExtElem yoneda_product(const Resolution& res, const std::vector<const DerLift*>& factors) {
  const QuotientRing& R = res.ring();
  int m = 0;
  for (const DerLift* f : factors) {
    if (f->r >= 0) throw SpecError("product factors must be lifts of positive-degree classes");
    m += -f->r;
  }
  if (m > res.truncation && !res.closed_form)
    throw SpecError("resolution truncated below requested degree");
  ExtElem z;
  z.m = m;
  z.field = R.field;
  Poly one = Poly::constant(Scalar::one(R.field), R.nvars());
  for (const PBWMono& u : res.basis(m)) {
    PDElem cur = PDElem::mono(res.cctx(), u, one);
    for (auto it = factors.rbegin(); it != factors.rend() && !cur.is_zero(); ++it)
      cur = chain_apply(res, **it, cur);
    Scalar c = augment(cur);
    if (!c.is_zero()) z.vals[u] = c;
  }
  return z;
}

ExtElem yoneda_product(const Resolution& res, const DerLift& psi, const DerLift& phi) {
  return yoneda_product(res, std::vector<const DerLift*>{&psi, &phi});
}

// -------------------------------------------------- homotopy Lie structure

namespace {

std::string ci_failure(const RegSeqReport& rep, const RingSpec& spec) {
  std::ostringstream os;
  os << "presentation requires complete intersection";
  if (rep.fail_index >= 0)
    os << ": relation " << rep.fail_index + 1 << " is a zerodivisor, witness "
       << poly_str(rep.witness, spec.vars);
  return os.str();
}

RegSeqReport require_ci(const RingSpec& spec) {
  validate_ring_spec(spec);
  RegSeqReport rep = is_regular_sequence(spec.relations,
                                         static_cast<unsigned>(spec.vars.size()), spec.field);
  if (!rep.regular) throw MathError(ci_failure(rep, spec));
  return rep;
}

std::vector<QuadForm> quad_tables(const RingSpec& spec) {
  std::vector<QuadForm> qf;
  qf.reserve(spec.relations.size());
  for (const Poly& c : spec.relations) qf.push_back(quadratic_part(c));
  return qf;
}

}  // namespace

RestrictedLie homotopy_lie(const RingSpec& spec) {
  require_ci(spec);
  unsigned n = static_cast<unsigned>(spec.vars.size());
  unsigned k = static_cast<unsigned>(spec.relations.size());
  std::vector<QuadForm> qf = quad_tables(spec);

  RestrictedLie L = zero_lie(spec.field, n, k);
  for (unsigned p = 0; p < k; ++p) {
    for (unsigned i = 0; i < n; ++i) {
      L.q[p][i] = qf[p].q(i, i);
      for (unsigned j = i; j < n; ++j)
        L.bracket[p][ut_index(i, j, n)] =
            i == j ? qf[p].q(i, i) + qf[p].q(i, i) : qf[p].q(i, j);
    }
  }

  // independent path: Yoneda products of lifted duals on the resolution
  Resolution res = build(spec, 3);
  std::vector<DerLift> alpha;
  alpha.reserve(n);
  for (unsigned i = 0; i < n; ++i) alpha.push_back(lift_dual(res, static_cast<int>(i)));

  auto beta_coords = [&](const ExtElem& z, const std::string& what) {
    std::vector<Scalar> out(k, Scalar::zero(spec.field));
    for (const auto& [mono, c] : z.vals) {
      bool is_beta = mono.e.size() == 1 && mono.e[0].second == 1 &&
                     mono.e[0].first >= static_cast<int>(n);
      if (!is_beta)
        throw MathError("homotopy Lie computation paths disagree: " + what +
                        " has a component outside the beta duals");
      out[static_cast<std::size_t>(mono.e[0].first) - n] = c;
    }
    return out;
  };

  auto fail = [&](const std::string& what) {
    throw MathError("homotopy Lie computation paths disagree at " + what);
  };

  std::vector<ExtElem> squares;
  squares.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    squares.push_back(yoneda_product(res, alpha[i], alpha[i]));

  for (unsigned i = 0; i < n; ++i) {
    std::string qi = "q(alpha_" + std::to_string(i + 1) + ")";
    std::vector<Scalar> qc = beta_coords(squares[i], qi);
    for (unsigned p = 0; p < k; ++p)
      if (!(qc[p] == L.q[p][i])) fail(qi);
    for (unsigned j = i; j < n; ++j) {
      std::string br =
          "[alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(j + 1) + "]";
      ExtElem sym = i == j ? squares[i] + squares[i]
                           : yoneda_product(res, alpha[i], alpha[j]) +
                                 yoneda_product(res, alpha[j], alpha[i]);
      std::vector<Scalar> bc = beta_coords(sym, br);
      for (unsigned p = 0; p < k; ++p)
        if (!(bc[p] == L.bracket[p][ut_index(i, j, n)])) fail(br);
    }
  }
  return L;
}

ExtPresentation ext_presentation(const RingSpec& spec) {
  require_ci(spec);
  unsigned n = static_cast<unsigned>(spec.vars.size());
  unsigned k = static_cast<unsigned>(spec.relations.size());
  std::vector<QuadForm> qf = quad_tables(spec);

  ExtPresentation pres;
  pres.n = n;
  pres.k = k;
  pres.rhs.assign(n * (n + 1) / 2, std::vector<Scalar>(k, Scalar::zero(spec.field)));
  pres.strictly_graded_commutative = true;

  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j) {
      std::ostringstream rel;
      if (i == j)
        rel << "alpha_" << i + 1 << "^2";
      else
        rel << "alpha_" << i + 1 << "*alpha_" << j + 1 << " + alpha_" << j + 1 << "*alpha_"
            << i + 1;
      std::ostringstream rhs;
      bool any = false;
      for (unsigned p = 0; p < k; ++p) {
        Scalar c = qf[p].q(i, j);
        pres.rhs[ut_index(i, j, n)][p] = c;
        if (c.is_zero()) continue;
        pres.strictly_graded_commutative = false;
        rhs << (any ? " + " : "");
        if (!(c == Scalar::one(spec.field))) rhs << c.str() << "*";
        rhs << "beta_" << p + 1;
        any = true;
      }
      if (any) rel << " - (" << rhs.str() << ")";
      pres.relations.push_back(rel.str());
    }
  }
  pres.generators = generator_count(spec);
  return pres;
}

unsigned generator_count(const RingSpec& spec) {
  require_ci(spec);
  unsigned n = static_cast<unsigned>(spec.vars.size());
  unsigned k = static_cast<unsigned>(spec.relations.size());
  std::vector<QuadForm> qf = quad_tables(spec);
  std::vector<Vec> cols;
  cols.reserve(k);
  for (unsigned p = 0; p < k; ++p) {
    Vec col;
    col.reserve(n * (n + 1) / 2);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i; j < n; ++j) col.push_back(qf[p].q(i, j));
    cols.push_back(std::move(col));
  }
  std::size_t rank = matrix_rank(cols, spec.field);
  return n + k - static_cast<unsigned>(rank);
}

// ------------------------------------------------------------ primitivity

namespace {

// One row per pair (u, v) of positive-degree basis monomials with
// hdeg u + hdeg v = m: the mod-m coefficients of u * v over basis(m).
std::vector<Vec> comultiplication_rows(const Resolution& res, int m) {
  const QuotientRing& R = res.ring();
  std::vector<PBWMono> bm = res.basis(m);
  std::map<PBWMono, std::size_t> pos;
  for (std::size_t i = 0; i < bm.size(); ++i) pos[bm[i]] = i;
  Poly one = Poly::constant(Scalar::one(R.field), R.nvars());
  std::vector<Vec> rows;
  for (int a = 1; a <= m - 1; ++a) {
    for (const PBWMono& u : res.basis(a)) {
      PDElem ue = PDElem::mono(res.cctx(), u, one);
      for (const PBWMono& v : res.basis(m - a)) {
        PDElem prod = star_mul(ue, PDElem::mono(res.cctx(), v, one));
        Vec row(bm.size(), Scalar::zero(R.field));
        bool nonzero = false;
        for (const auto& [w, c] : prod.terms()) {
          Scalar s = augment(R, c);
          if (s.is_zero()) continue;
          row[pos.at(w)] = s;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

bool primitivity_check(const Resolution& res, const ExtElem& z) {
  if (z.m > res.truncation && !res.closed_form)
    throw SpecError("resolution truncated below requested degree");
  std::vector<PBWMono> bm = res.basis(z.m);
  std::map<PBWMono, std::size_t> pos;
  for (std::size_t i = 0; i < bm.size(); ++i) pos[bm[i]] = i;
  Vec zv(bm.size(), Scalar::zero(z.field));
  for (const auto& [b, c] : z.vals) {
    auto it = pos.find(b);
    if (it == pos.end()) throw SpecError("class supported outside the stated basis");
    zv[it->second] = c;
  }
  for (const Vec& row : comultiplication_rows(res, z.m)) {
    Scalar dot = Scalar::zero(z.field);
    for (std::size_t i = 0; i < row.size(); ++i) dot = dot + row[i] * zv[i];
    if (!dot.is_zero()) return false;
  }
  return true;
}

std::vector<Vec> primitive_subspace(const Resolution& res, int m) {
  if (m > res.truncation && !res.closed_form)
    throw SpecError("resolution truncated below requested degree");
  const Field& f = res.ring().field;
  std::vector<Vec> rows = comultiplication_rows(res, m);
  std::size_t width = res.rank(m);
  std::vector<Vec> cols(width, Vec(rows.size(), Scalar::zero(f)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) cols[j][i] = rows[i][j];
  return null_space(cols, f);
}

unsigned long ext_dimension(const RingSpec& spec, int m) {
  require_ci(spec);
  if (m < 0) return 0;
  return closed_form_rank(static_cast<unsigned>(spec.vars.size()),
                          static_cast<unsigned>(spec.relations.size()), m);
}

// ------------------------------------------- derivation-complex exactness

namespace {

// Coordinate space of pd-derivations of homological degree rho and
// internal shift s (the value on g drops internal degree by s), with one
// graded piece per generator.
struct DerSpace {
  std::vector<std::vector<PBWMono>> bases;  // basis(hdeg g + rho) per gen
  std::vector<PieceIndex> pieces;           // internal degree intdeg(g) - s
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
};

DerSpace der_space(const Resolution& res, int rho, int s) {
  const QuotientRing& R = res.ring();
  const auto& gens = res.ctx->gens;
  DerSpace sp;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int h = gens[g].hdeg + rho;
    std::vector<PBWMono> bh = h >= 0 ? res.basis(h) : std::vector<PBWMono>{};
    PieceIndex pi = piece_index(R, basis_intdegs(res, bh), gens[g].intdeg - s);
    sp.offsets.push_back(sp.dim);
    sp.dim += pi.size();
    sp.bases.push_back(std::move(bh));
    sp.pieces.push_back(std::move(pi));
  }
  return sp;
}

Vec der_vectorize(const Resolution& res, const DerSpace& sp, const DerivationValues& dv) {
  const QuotientRing& R = res.ring();
  Vec out(sp.dim, Scalar::zero(R.field));
  for (std::size_t g = 0; g < sp.bases.size(); ++g) {
    auto it = dv.vals.find(static_cast<int>(g));
    if (it == dv.vals.end() || it->second.is_zero()) continue;
    PVec coords = pd_coords(it->second, sp.bases[g], R);
    Vec piece = vectorize_piece(sp.pieces[g], coords, R.field);
    for (std::size_t c = 0; c < piece.size(); ++c) out[sp.offsets[g] + c] = piece[c];
  }
  return out;
}

DerivationValues delta_of(const Resolution& res, const DerivationValues& dv, int rho) {
  DerivationValues out;
  out.parity = std::abs(rho - 1) % 2;
  int sgn = rho % 2 != 0 ? -1 : 1;
  for (std::size_t g = 0; g < res.ctx->gens.size(); ++g) {
    int gi = static_cast<int>(g);
    PDElem v = res.diff(dv.vals.at(gi));
    PDElem w = apply_derivation(dv, res.d.vals.at(gi));
    out.vals[gi] = sgn < 0 ? v + w : v - w;
  }
  return out;
}

}  // namespace

NegDerReport negative_derivation_check(const Resolution& res, long bound) {
  NegDerReport rep;
  rep.bound = bound;
  const QuotientRing& R = res.ring();
  const auto& gens = res.ctx->gens;
  if (gens.empty()) {
    rep.certified = rep.conclusive = true;
    rep.status = "vacuous: no generators";
    return rep;
  }
  if (!res.closed_form) {
    rep.status = "inconclusive: truncated resolution (derivation complex incomplete)";
    return rep;
  }
  if (!R.homogeneous_relations()) {
    rep.status = "inconclusive: inhomogeneous relations (no graded decomposition)";
    return rep;
  }
  int max_int = 0;
  for (const Generator& g : gens) max_int = std::max(max_int, g.intdeg);
  rep.shift_max = max_int;
  rep.shift_min = static_cast<int>(max_int - bound);

  rep.certified = true;
  for (int r = 0; r <= 1 && rep.certified; ++r) {
    for (int s = rep.shift_min; s <= rep.shift_max && rep.certified; ++s) {
      DerSpace up = der_space(res, r + 1, s);
      DerSpace mid = der_space(res, r, s);
      DerSpace dn = der_space(res, r - 1, s);
      auto delta_cols = [&](const DerSpace& from, int rho, const DerSpace& to) {
        std::vector<Vec> cols;
        cols.reserve(from.dim);
        for (std::size_t g = 0; g < gens.size(); ++g) {
          for (const auto& [j, u] : from.pieces[g].cols) {
            DerivationValues dv;
            dv.parity = std::abs(rho) % 2;
            for (std::size_t h = 0; h < gens.size(); ++h)
              dv.vals[static_cast<int>(h)] = PDElem::zero(res.cctx());
            dv.vals[static_cast<int>(g)] = PDElem::mono(
                res.cctx(), from.bases[g][j], Poly::monomial(u, Scalar::one(R.field)));
            cols.push_back(der_vectorize(res, to, delta_of(res, dv, rho)));
          }
        }
        return cols;
      };
      std::size_t rank_up = matrix_rank(delta_cols(up, r + 1, mid), R.field);
      std::size_t rank_dn = matrix_rank(delta_cols(mid, r, dn), R.field);
      if (mid.dim - rank_dn != rank_up) {
        rep.certified = false;
        rep.witness = "nonzero derivation class at homological degree " + std::to_string(r) +
                      ", internal shift " + std::to_string(s);
      }
    }
  }
  rep.conclusive = true;
  rep.status = rep.certified
                   ? "certified: derivation cohomology vanishes in degrees 0 and 1 for "
                     "internal shifts " +
                         std::to_string(rep.shift_min) + ".." + std::to_string(rep.shift_max)
                   : "failed: " + rep.witness;
  return rep;
}

}  // namespace kt
