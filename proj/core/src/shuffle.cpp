#include "tatekit/shuffle.hpp"

#include <algorithm>
#include <set>

#include "tatekit/errors.hpp"

namespace kt {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return q;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

std::vector<Perm> shuffles(int m, int n) {
  std::vector<Perm> out;
  int N = m + n;
  std::vector<int> subset(static_cast<size_t>(m));
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == m) {
      Perm p(static_cast<size_t>(N));
      std::vector<bool> used(static_cast<size_t>(N), false);
      for (int i = 0; i < m; ++i) {
        p[static_cast<size_t>(i)] = subset[static_cast<size_t>(i)];
        used[static_cast<size_t>(subset[static_cast<size_t>(i)])] = true;
      }
      int j = m;
      for (int v = 0; v < N; ++v)
        if (!used[static_cast<size_t>(v)]) p[static_cast<size_t>(j++)] = v;
      out.push_back(std::move(p));
      return;
    }
    for (int v = start; v <= N - (m - k); ++v) {
      subset[static_cast<size_t>(k)] = v;
      self(self, v + 1, k + 1);
    }
  };
  if (m == 0) {
    out.push_back(perm_identity(N));
    return out;
  }
  rec(rec, 0, 0);
  return out;
}

std::vector<Perm> kprime(int n, int p) {
  std::vector<Perm> out;
  if (n <= 0 || p < 0) throw SpecError("kprime requires n >= 1, p >= 0");
  int N = n * p;
  if (p == 0) {
    out.push_back(Perm{});
    return out;
  }
  // Blocks are assigned from the last (holding the global maximum) down;
  // each block takes the current maximum plus n-1 chosen companions.
  std::vector<std::vector<int>> blocks(static_cast<size_t>(p));
  std::vector<int> pool(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) pool[static_cast<size_t>(i)] = i;
  auto rec = [&](auto&& self, std::vector<int> remaining, int bi) -> void {
    if (bi < 0) {
      Perm perm(static_cast<size_t>(N));
      for (int b = 0; b < p; ++b)
        for (int r = 0; r < n; ++r)
          perm[static_cast<size_t>(b * n + r)] = blocks[static_cast<size_t>(b)][static_cast<size_t>(r)];
      out.push_back(std::move(perm));
      return;
    }
    int mx = remaining.back();
    std::vector<int> rest(remaining.begin(), remaining.end() - 1);
    // choose n-1 companions from rest
    std::vector<int> comp(static_cast<size_t>(n - 1));
    auto choose = [&](auto&& chooser, size_t start, int k) -> void {
      if (k == n - 1) {
        std::vector<int> blk(comp.begin(), comp.end());
        blk.push_back(mx);
        std::sort(blk.begin(), blk.end());
        blocks[static_cast<size_t>(bi)] = blk;
        std::vector<int> nxt;
        std::set<int> inblk(blk.begin(), blk.end());
        for (int v : remaining)
          if (!inblk.count(v)) nxt.push_back(v);
        self(self, nxt, bi - 1);
        return;
      }
      for (size_t v = start; v + static_cast<size_t>(n - 1 - k) <= rest.size(); ++v) {
        comp[static_cast<size_t>(k)] = rest[v];
        chooser(chooser, v + 1, k + 1);
      }
    };
    choose(choose, 0, 0);
  };
  rec(rec, pool, p - 1);
  std::sort(out.begin(), out.end());
  return out;
}

int koszul_sign(const Perm& sigma, const std::vector<int>& degs) {
  long s = 0;
  for (size_t a = 0; a < sigma.size(); ++a)
    for (size_t b = a + 1; b < sigma.size(); ++b)
      if (sigma[a] > sigma[b]) s += static_cast<long>(degs[a]) * degs[b];
  return (s % 2) ? -1 : 1;
}

TensorElem TensorElem::unit(const Field& f) {
  TensorElem e(f);
  e.terms[Word{}] = Scalar::one(f);
  return e;
}

TensorElem TensorElem::word(const Word& w, const Field& f) {
  TensorElem e(f);
  e.terms[w] = Scalar::one(f);
  return e;
}

void TensorElem::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
  TensorElem r = *this;
  for (const auto& [w, c] : o.terms) r.add(w, c);
  return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
  TensorElem r = *this;
  for (const auto& [w, c] : o.terms) r.add(w, -c);
  return r;
}

TensorElem TensorElem::scale(const Scalar& c) const {
  TensorElem r(f);
  for (const auto& [w, cc] : terms) r.add(w, cc * c);
  return r;
}

int word_deg(const Word& w) {
  int d = 0;
  for (const Letter& l : w) d += l.deg;
  return d;
}

TensorElem perm_act(const Perm& sigma, const Word& w, const Field& f) {
  std::vector<int> degs(w.size());
  for (size_t i = 0; i < w.size(); ++i) degs[i] = w[i].deg;
  int sg = koszul_sign(sigma, degs);
  Word nw(w.size(), Letter{});
  for (size_t i = 0; i < w.size(); ++i) nw[static_cast<size_t>(sigma[i])] = w[i];
  TensorElem r(f);
  r.add(nw, sg > 0 ? Scalar::one(f) : -Scalar::one(f));
  return r;
}

TensorElem star(const TensorElem& a, const TensorElem& b) {
  TensorElem r(a.f);
  for (const auto& [u, cu] : a.terms) {
    for (const auto& [v, cv] : b.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      Scalar c = cu * cv;
      for (const Perm& s : shuffles(static_cast<int>(u.size()), static_cast<int>(v.size()))) {
        TensorElem t = perm_act(s, w, a.f);
        for (const auto& [nw, nc] : t.terms) r.add(nw, nc * c);
      }
    }
  }
  return r;
}

TensorElem gamma_word(const Word& w, int n, const Field& f) {
  if (n < 0) throw SpecError("negative divided power");
  if (n == 0) return TensorElem::unit(f);
  if (w.empty()) throw SpecError("divided power of empty word");
  if (word_deg(w) % 2 != 0) throw MathError("divided power undefined on odd degree");
  if (n == 1) return TensorElem::word(w, f);
  Word wn;
  for (int i = 0; i < n; ++i) wn.insert(wn.end(), w.begin(), w.end());
  TensorElem r(f);
  for (const Perm& s : kprime(static_cast<int>(w.size()), n)) {
    TensorElem t = perm_act(s, wn, f);
    for (const auto& [nw, nc] : t.terms) r.add(nw, nc);
  }
  return r;
}

static TensorElem tensor_gamma_single_length(const TensorElem& z, int n);

TensorElem tensor_gamma(const TensorElem& z, int n) {
  if (n < 0) throw SpecError("negative divided power");
  if (n == 0) return TensorElem::unit(z.f);
  if (z.is_zero()) return TensorElem::zero(z.f);
  for (const auto& [w, c] : z.terms) {
    if (w.empty()) throw SpecError("divided power of empty word");
    if (word_deg(w) % 2 != 0) throw MathError("divided power undefined on odd degree");
  }
  // Mixed word lengths: expand by the addition axiom over the
  // length-homogeneous pieces, then use the coset sum per piece.
  std::map<size_t, TensorElem> by_len;
  for (const auto& [w, c] : z.terms) {
    auto [it, fresh] = by_len.try_emplace(w.size(), TensorElem::zero(z.f));
    it->second.add(w, c);
  }
  if (by_len.size() > 1) {
    std::vector<TensorElem> parts;
    for (auto& [len, e] : by_len) parts.push_back(std::move(e));
    std::vector<int> comp(parts.size(), 0);
    TensorElem out(z.f);
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
      if (i + 1 == parts.size()) {
        comp[i] = rem;
        TensorElem prod = TensorElem::unit(z.f);
        for (size_t j = 0; j < parts.size(); ++j) {
          if (comp[j] == 0) continue;
          prod = star(prod, tensor_gamma_single_length(parts[j], comp[j]));
          if (prod.is_zero()) break;
        }
        out = out + prod;
        return;
      }
      for (int k = 0; k <= rem; ++k) {
        comp[i] = k;
        self(self, i + 1, rem - k);
      }
    };
    rec(rec, 0, n);
    return out;
  }
  return tensor_gamma_single_length(z, n);
}

static TensorElem tensor_gamma_single_length(const TensorElem& z, int n) {
  if (n == 0) return TensorElem::unit(z.f);
  size_t L = z.terms.begin()->first.size();
  // z^(tensor n), multilinear, then the coset sum on each product word.
  std::vector<std::pair<Word, Scalar>> pow;
  pow.push_back({Word{}, Scalar::one(z.f)});
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<Word, Scalar>> nxt;
    for (const auto& [w, c] : pow) {
      for (const auto& [t, ct] : z.terms) {
        Word nw = w;
        nw.insert(nw.end(), t.begin(), t.end());
        nxt.push_back({std::move(nw), c * ct});
      }
    }
    pow = std::move(nxt);
  }
  TensorElem r(z.f);
  std::vector<Perm> cosets = kprime(static_cast<int>(L), n);
  for (const auto& [w, c] : pow) {
    for (const Perm& s : cosets) {
      TensorElem t = perm_act(s, w, z.f);
      for (const auto& [nw, nc] : t.terms) r.add(nw, nc * c);
    }
  }
  return r;
}

TensorElem tensor_differential(const TensorElem& z, const std::map<int, TensorElem>& d,
                               const Field& f) {
  TensorElem r(f);
  for (const auto& [w, c] : z.terms) {
    int presign = 1;
    for (size_t i = 0; i < w.size(); ++i) {
      auto it = d.find(w[i].sym);
      if (it != d.end()) {
        for (const auto& [dw, dc] : it->second.terms) {
          Word nw(w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), dw.begin(), dw.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          Scalar coeff = c * dc;
          if (presign < 0) coeff = -coeff;
          r.add(nw, coeff);
        }
      }
      if (w[i].deg % 2 != 0) presign = -presign;
    }
  }
  return r;
}

bool sh_partition_check(int n) {
  std::set<Perm> sh;
  for (const Perm& s : shuffles(n, n)) sh.insert(s);
  Perm c(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    c[static_cast<size_t>(i)] = i + n;
    c[static_cast<size_t>(i + n)] = i;
  }
  std::set<Perm> got;
  for (const Perm& s : kprime(n, 2)) {
    if (!got.insert(s).second) return false;
    if (!got.insert(perm_compose(s, c)).second) return false;
  }
  return got == sh;
}

}  // namespace kt
