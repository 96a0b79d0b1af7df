#include "tatekit/poly.hpp"

#include <algorithm>
#include <cctype>

namespace kt {

unsigned Monomial::deg() const {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& m) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] && m.e[i]) return false;
  return true;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  // Same degree: larger exponent on an earlier variable wins.
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Poly Poly::constant(const Scalar& c, unsigned nvars) {
  Poly p(nvars, c.field());
  if (!c.is_zero()) p.ts_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
  Poly p(m.nvars(), c.field());
  if (!c.is_zero()) p.ts_.push_back({m, c});
  return p;
}

Poly Poly::variable(unsigned i, unsigned nvars, const Field& f) {
  Monomial m(nvars);
  m.e[i] = 1;
  return monomial(m, Scalar::one(f));
}

const Term& Poly::lt() const {
  if (ts_.empty()) throw MathError("zero polynomial has no leading term");
  return ts_.front();
}

unsigned Poly::deg() const {
  unsigned d = 0;
  for (const Term& t : ts_) d = std::max(d, t.m.deg());
  return d;
}

bool Poly::is_homogeneous() const {
  if (ts_.empty()) return true;
  unsigned d = ts_[0].m.deg();
  for (const Term& t : ts_)
    if (t.m.deg() != d) return false;
  return true;
}

Scalar Poly::constant_term() const {
  for (const Term& t : ts_)
    if (t.m.is_one()) return t.c;
  return Scalar::zero(f_);
}

Scalar Poly::coeff(const Monomial& m) const {
  for (const Term& t : ts_)
    if (t.m == m) return t.c;
  return Scalar::zero(f_);
}

bool Poly::in_power_of_max_ideal(unsigned d) const {
  for (const Term& t : ts_)
    if (t.m.deg() < d) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& t : r.ts_) t.c = -t.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(std::max(nv_, o.nv_), ts_.empty() ? o.f_ : f_);
  // Merge two descending term lists.
  size_t i = 0, j = 0;
  while (i < ts_.size() || j < o.ts_.size()) {
    if (j == o.ts_.size() || (i < ts_.size() && grlex_less(o.ts_[j].m, ts_[i].m))) {
      r.ts_.push_back(ts_[i++]);
    } else if (i == ts_.size() || grlex_less(ts_[i].m, o.ts_[j].m)) {
      r.ts_.push_back(o.ts_[j++]);
    } else {
      Scalar c = ts_[i].c + o.ts_[j].c;
      if (!c.is_zero()) r.ts_.push_back({ts_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, const Scalar& c) const {
  Poly r(nv_, f_);
  if (c.is_zero()) return r;
  r.ts_.reserve(ts_.size());
  for (const Term& t : ts_) {
    Scalar cc = t.c * c;
    if (!cc.is_zero()) r.ts_.push_back({t.m * m, cc});
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nv_, f_);
  for (const Term& t : o.ts_) r += mul_term(t.m, t.c);
  return r;
}

Poly Poly::scale(const Scalar& c) const { return mul_term(Monomial(nv_), c); }

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(Scalar::one(f_), nv_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(lt().c.inv());
}

Poly Poly::homogeneous_part(unsigned d) const {
  Poly r(nv_, f_);
  for (const Term& t : ts_)
    if (t.m.deg() == d) r.ts_.push_back(t);
  return r;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (nv_ == 0 && m.nvars() > 0) nv_ = m.nvars();
  *this += Poly::monomial(m, c);
  f_ = c.field();
}

bool Poly::operator==(const Poly& o) const {
  if (ts_.size() != o.ts_.size()) return false;
  for (size_t i = 0; i < ts_.size(); ++i)
    if (!(ts_[i].m == o.ts_[i].m) || ts_[i].c != o.ts_[i].c) return false;
  return true;
}

bool Poly::canonical_less(const Poly& a, const Poly& b) {
  size_t i = 0;
  for (; i < a.ts_.size() && i < b.ts_.size(); ++i) {
    if (!(a.ts_[i].m == b.ts_[i].m)) return grlex_less(a.ts_[i].m, b.ts_[i].m);
    if (a.ts_[i].c != b.ts_[i].c) return a.ts_[i].c < b.ts_[i].c;
  }
  return a.ts_.size() < b.ts_.size();
}

void check_var_names(const std::vector<std::string>& vars) {
  auto ident = [](const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
  };
  for (size_t i = 0; i < vars.size(); ++i) {
    if (!ident(vars[i])) throw SpecError("invalid variable name '" + vars[i] + "'");
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw SpecError("duplicate variable name '" + vars[i] + "'");
  }
}

static std::string mono_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

std::string poly_str(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    Scalar c = t.c;
    bool neg = false;
    if (c.field().is_rational() && c.rep() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string ms = mono_str(t.m, vars);
    if (ms.empty()) {
      s += c.str();
    } else if (c.is_one()) {
      s += ms;
    } else {
      s += c.str() + "*" + ms;
    }
  }
  return s;
}

namespace {

struct PolyParser {
  const std::string& s;
  const std::vector<std::string>& vars;
  Field f;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SpecError("polynomial parse error at position " + std::to_string(pos + 1) + ": " + msg +
                    " in '" + s + "'");
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        return Poly::constant(Scalar::of_mpq(mpq_class(num, den), f),
                              static_cast<unsigned>(vars.size()));
      }
      return Poly::constant(Scalar::of_mpz(num, f), static_cast<unsigned>(vars.size()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
          return Poly::variable(static_cast<unsigned>(i), static_cast<unsigned>(vars.size()), f);
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      mpz_class e = integer();
      if (e < 0 || e > 4096) fail("exponent out of range");
      return b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Poly term() {
    Poly r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  Poly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly r = term();
    if (neg) r = -r;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r += term();
      } else if (c == '-') {
        ++pos;
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, const Field& f) {
  PolyParser p{text, vars, f};
  Poly r = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (r.is_zero()) return Poly::zero(static_cast<unsigned>(vars.size()), f);
  return r;
}

}  // namespace kt
