#include "tatekit/pdalg.hpp"

#include <algorithm>

#include "tatekit/errors.hpp"

namespace kt {

unsigned PBWMono::poldeg() const {
  unsigned d = 0;
  for (const auto& [g, ex] : e) d += ex;
  return d;
}

int PBWMono::hdeg(const PDContext& c) const {
  int d = 0;
  for (const auto& [g, ex] : e) d += static_cast<int>(ex) * c.gens[static_cast<size_t>(g)].hdeg;
  return d;
}

int PBWMono::intdeg(const PDContext& c) const {
  int d = 0;
  for (const auto& [g, ex] : e) d += static_cast<int>(ex) * c.gens[static_cast<size_t>(g)].intdeg;
  return d;
}

unsigned PBWMono::exp(int gen) const {
  for (const auto& [g, ex] : e)
    if (g == gen) return ex;
  return 0;
}

std::string pbw_str(const PBWMono& m, const PDContext& c) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [g, ex] : m.e) {
    if (!s.empty()) s += "*";
    s += c.gens[static_cast<size_t>(g)].name;
    if (ex > 1) s += "^(" + std::to_string(ex) + ")";
  }
  return s;
}

PDElem PDElem::unit(std::shared_ptr<const PDContext> c) {
  PDElem e(c);
  e.add(PBWMono{}, Poly::constant(Scalar::one(c->R.field), c->R.nvars()));
  return e;
}

PDElem PDElem::mono(std::shared_ptr<const PDContext> c, const PBWMono& m, const Poly& coeff) {
  PDElem e(c);
  e.add(m, coeff);
  return e;
}

PDElem PDElem::gen(std::shared_ptr<const PDContext> c, int gen_idx) {
  PBWMono m;
  m.e.push_back({gen_idx, 1});
  return mono(c, m, Poly::constant(Scalar::one(c->R.field), c->R.nvars()));
}

PDElem PDElem::scalar(std::shared_ptr<const PDContext> c, const Poly& coeff) {
  return mono(std::move(c), PBWMono{}, coeff);
}

void PDElem::add(const PBWMono& m, const Poly& coeff) {
  Poly c = ctx_->R.nf(coeff);
  if (c.is_zero()) return;
  auto it = ts_.find(m);
  if (it == ts_.end()) {
    ts_.emplace(m, c);
  } else {
    it->second = ctx_->R.nf(it->second + c);
    if (it->second.is_zero()) ts_.erase(it);
  }
}

PDElem PDElem::operator+(const PDElem& o) const {
  PDElem r = *this;
  if (!r.ctx_) r.ctx_ = o.ctx_;
  for (const auto& [m, c] : o.ts_) r.add(m, c);
  return r;
}

PDElem PDElem::operator-(const PDElem& o) const { return *this + (-o); }

PDElem PDElem::operator-() const {
  PDElem r = *this;
  for (auto& [m, c] : r.ts_) c = -c;
  return r;
}

PDElem PDElem::scale(const Poly& c) const {
  PDElem r(ctx_);
  for (const auto& [m, cc] : ts_) r.add(m, cc * c);
  return r;
}

PDElem PDElem::scale(const Scalar& c) const {
  PDElem r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : ts_) r.add(m, cc.scale(c));
  return r;
}

bool PDElem::homogeneous_hdeg() const {
  if (ts_.empty()) return true;
  int d = ts_.begin()->first.hdeg(*ctx_);
  for (const auto& [m, c] : ts_)
    if (m.hdeg(*ctx_) != d) return false;
  return true;
}

int PDElem::hdeg() const {
  if (ts_.empty()) return 0;
  return ts_.begin()->first.hdeg(*ctx_);
}

int PDElem::max_intdeg() const {
  int d = 0;
  for (const auto& [m, c] : ts_)
    d = std::max(d, m.intdeg(*ctx_) + static_cast<int>(c.deg()));
  return d;
}

std::string PDElem::str() const {
  if (ts_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : ts_) {
    if (!s.empty()) s += " + ";
    std::string cs = poly_str(c, ctx_->R.vars);
    bool simple = c.terms().size() == 1;
    if (m.is_one()) {
      s += simple ? cs : "(" + cs + ")";
    } else if (c.terms().size() == 1 && c.lt().m.is_one() && c.lt().c.is_one()) {
      s += pbw_str(m, *ctx_);
    } else {
      s += (simple ? cs : "(" + cs + ")") + "*" + pbw_str(m, *ctx_);
    }
  }
  return s;
}

namespace {

struct MonoProd {
  bool zero = false;
  int sign = 1;
  mpz_class coeff = 1;
  PBWMono m;
};

MonoProd pbw_mono_star(const PDContext& c, const PBWMono& a, const PBWMono& b) {
  MonoProd r;
  // Koszul sign: blocks of b passing blocks of a with larger generator index.
  long s = 0;
  for (const auto& [gu, eu] : a.e) {
    long du = static_cast<long>(eu) * c.gens[static_cast<size_t>(gu)].hdeg;
    for (const auto& [gv, ev] : b.e) {
      if (gv < gu) {
        long dv = static_cast<long>(ev) * c.gens[static_cast<size_t>(gv)].hdeg;
        s += du * dv;
      }
    }
  }
  r.sign = (s % 2) ? -1 : 1;
  // Merge exponents; equal even blocks contribute binomials, odd collide to 0.
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      r.m.e.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      r.m.e.push_back(b.e[j++]);
    } else {
      int g = a.e[i].first;
      unsigned ea = a.e[i].second, eb = b.e[j].second;
      if (c.gens[static_cast<size_t>(g)].odd()) {
        r.zero = true;
        return r;
      }
      r.coeff *= binomial(ea + eb, ea);
      r.m.e.push_back({g, ea + eb});
      ++i;
      ++j;
    }
  }
  return r;
}

void check_same_ctx(const PDElem& a, const PDElem& b) {
  if (a.ctx() && b.ctx() && a.ctx() != b.ctx())
    throw SpecError("pd elements from different contexts");
}

}  // namespace

PDElem star_mul(const PDElem& a, const PDElem& b) {
  check_same_ctx(a, b);
  auto ctx = a.ctx() ? a.ctx() : b.ctx();
  PDElem r(ctx);
  const Field& f = ctx->R.field;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      MonoProd p = pbw_mono_star(*ctx, ma, mb);
      if (p.zero) continue;
      Scalar k = Scalar::of_mpz(p.coeff, f);
      if (p.sign < 0) k = -k;
      if (k.is_zero()) continue;
      r.add(p.m, (ca * cb).scale(k));
    }
  }
  return r;
}

namespace {

// gamma_m of a single PBW monomial (coefficient handled by the caller).
PDElem gamma_of_pbw(const std::shared_ptr<const PDContext>& ctx, const PBWMono& mono, int m) {
  const Field& f = ctx->R.field;
  if (m == 0) return PDElem::unit(ctx);
  if (m == 1) return PDElem::mono(ctx, mono, Poly::constant(Scalar::one(f), ctx->R.nvars()));
  for (const auto& [g, ex] : mono.e)
    if (ctx->gens[static_cast<size_t>(g)].odd())
      return PDElem::zero(ctx);  // even products with odd factors have gamma_n = 0, n >= 2
  // Peel the largest block: gamma_m(u * b^(e)) = gamma_m(u) * (b^(e))^{star m},
  // and (b^(e))^{star m} = ((em)!/(e!)^m) b^(em).
  auto [g, e] = mono.e.back();
  PBWMono rest = mono;
  rest.e.pop_back();
  mpz_class coeff;
  if (rest.is_one()) {
    coeff = gamma_coeff(e, static_cast<unsigned long>(m));  // (em)!/(m!(e!)^m)
  } else {
    coeff = gamma_coeff(e, static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m));
  }
  PBWMono blk;
  blk.e.push_back({g, e * static_cast<unsigned>(m)});
  PDElem blkel = PDElem::mono(ctx, blk, Poly::constant(Scalar::of_mpz(coeff, f), ctx->R.nvars()));
  if (rest.is_one()) return blkel;
  return star_mul(gamma_of_pbw(ctx, rest, m), blkel);
}

}  // namespace

PDElem divided_power(const PDElem& a, int n) {
  if (n < 0) throw SpecError("negative divided power");
  auto ctx = a.ctx();
  if (!ctx) throw SpecError("divided power of uninitialized element");
  if (n == 0) return PDElem::unit(ctx);
  for (const auto& [m, c] : a.terms()) {
    if (m.hdeg(*ctx) % 2 != 0) throw MathError("divided power undefined on odd degree");
    if (m.is_one()) throw MathError("divided power requires augmentation-ideal element");
  }
  std::vector<std::pair<PBWMono, Poly>> ts(a.terms().begin(), a.terms().end());
  PDElem out = PDElem::zero(ctx);
  // gamma_n(t_1 + ... + t_r) = sum over compositions of n of prod gamma_{n_i}(t_i).
  std::vector<int> comp(ts.size(), 0);
  auto rec = [&](auto&& self, size_t i, int rem) -> void {
    if (i + 1 == ts.size()) {
      comp[i] = rem;
      PDElem prod = PDElem::unit(ctx);
      for (size_t j = 0; j < ts.size() && !prod.is_zero(); ++j) {
        if (comp[j] == 0) continue;
        PDElem g = gamma_of_pbw(ctx, ts[j].first, comp[j]);
        g = g.scale(ts[j].second.pow(static_cast<unsigned>(comp[j])));
        prod = star_mul(prod, g);
      }
      out = out + prod;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      comp[i] = k;
      self(self, i + 1, rem - k);
    }
  };
  if (ts.empty()) return PDElem::zero(ctx);
  rec(rec, 0, n);
  return out;
}

PDElem apply_derivation(const DerivationValues& dv, const PDElem& a) {
  auto ctx = a.ctx();
  PDElem out = PDElem::zero(ctx);
  for (const auto& [mono, coeff] : a.terms()) {
    int sgn = 1;
    for (size_t bi = 0; bi < mono.e.size(); ++bi) {
      auto [g, e] = mono.e[bi];
      auto it = dv.vals.find(g);
      if (it == dv.vals.end())
        throw MathError("lift incomplete at degree " + std::to_string(mono.hdeg(*ctx)));
      if (!it->second.is_zero()) {
        // prefix blocks + b^(e-1), value, suffix blocks
        PBWMono left;
        for (size_t k = 0; k < bi; ++k) left.e.push_back(mono.e[k]);
        if (e > 1) left.e.push_back({g, e - 1});
        PBWMono right;
        for (size_t k = bi + 1; k < mono.e.size(); ++k) right.e.push_back(mono.e[k]);
        const Poly one = Poly::constant(Scalar::one(ctx->R.field), ctx->R.nvars());
        PDElem term = star_mul(PDElem::mono(ctx, left, one), it->second);
        term = star_mul(term, PDElem::mono(ctx, right, one));
        term = term.scale(coeff);
        if (sgn < 0) term = -term;
        out = out + term;
      }
      if (dv.parity && (static_cast<long>(e) * ctx->gens[static_cast<size_t>(g)].hdeg) % 2 != 0)
        sgn = -sgn;
    }
  }
  return out;
}

PDElem differential(const PDElem& a, const DerivationValues& d) { return apply_derivation(d, a); }

PDMorphism extend_pd_morphism(const std::shared_ptr<const PDContext>& source,
                              std::shared_ptr<const PDContext> target,
                              std::map<int, PDElem> images) {
  for (const auto& [g, img] : images) {
    const Generator& gen = source->gens.at(static_cast<size_t>(g));
    for (const auto& [m, c] : img.terms()) {
      if (m.hdeg(*img.ctx()) != gen.hdeg)
        throw SpecError("morphism image degree mismatch on " + gen.name);
      if (!gen.odd() && m.is_one())
        throw SpecError("even generator image outside augmentation ideal: " + gen.name);
    }
  }
  return PDMorphism{std::move(target), std::move(images)};
}

PDElem apply_morphism(const PDMorphism& f, const PDElem& a) {
  PDElem out = PDElem::zero(f.target);
  for (const auto& [mono, coeff] : a.terms()) {
    PDElem prod = PDElem::unit(f.target);
    for (const auto& [g, e] : mono.e) {
      auto it = f.images.find(g);
      if (it == f.images.end()) throw SpecError("morphism missing image for generator");
      PDElem p = (e == 1) ? it->second : divided_power(it->second, static_cast<int>(e));
      prod = star_mul(prod, p);
      if (prod.is_zero()) break;
    }
    out = out + prod.scale(coeff);
  }
  return out;
}

TensorElem pd_to_tensor(const PDElem& a) {
  auto ctx = a.ctx();
  const Field& f = ctx->R.field;
  TensorElem out(f);
  for (const auto& [mono, coeff] : a.terms()) {
    if (!coeff.is_constant())
      throw SpecError("tensor oracle requires constant coefficients");
    TensorElem t = TensorElem::unit(f);
    for (const auto& [g, e] : mono.e) {
      Word w(e, Letter{g, ctx->gens[static_cast<size_t>(g)].hdeg});
      t = star(t, TensorElem::word(w, f));
    }
    out = out + t.scale(coeff.constant_term());
  }
  return out;
}

OracleReport oracle_compare(const PDElem& a, const PDElem& b) {
  unsigned len = 0;
  for (const auto& [m, c] : a.terms()) len = std::max(len, m.poldeg());
  unsigned lb = 0;
  for (const auto& [m, c] : b.terms()) lb = std::max(lb, m.poldeg());
  if (len + lb > 8) throw SpecError("tensor oracle capped at length 8");
  TensorElem lhs = star(pd_to_tensor(a), pd_to_tensor(b));
  TensorElem rhs = pd_to_tensor(star_mul(a, b));
  OracleReport rep;
  rep.ok = lhs == rhs;
  if (!rep.ok) rep.detail = "star product disagrees with shuffle model";
  return rep;
}

OracleReport oracle_compare_power(const PDElem& a, int n) {
  unsigned len = 0;
  for (const auto& [m, c] : a.terms()) len = std::max(len, m.poldeg());
  if (len * static_cast<unsigned>(n) > 8) throw SpecError("tensor oracle capped at length 8");
  TensorElem lhs = tensor_gamma(pd_to_tensor(a), n);
  TensorElem rhs = pd_to_tensor(divided_power(a, n));
  OracleReport rep;
  rep.ok = lhs == rhs;
  if (!rep.ok) rep.detail = "divided power disagrees with shuffle model";
  return rep;
}

}  // namespace kt
