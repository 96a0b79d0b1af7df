#include "tatekit/specfile.hpp"

#include <cctype>
#include <sstream>

#include "tatekit/errors.hpp"

namespace kt {
namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw SpecError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                  msg);
}

struct Line {
  int no = 0;          // 1-based line number
  std::string text;    // comment-stripped
  int key_col = 0;     // 1-based column of the first key token
  std::string key;     // first whitespace token
  std::vector<std::pair<std::string, int>> args;  // key arguments with columns
  std::string value;   // trimmed text after '='
  int value_col = 0;   // 1-based column of the value (end of line when empty)
};

bool is_ident(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Split raw text into logical key/value lines, tracking columns.
std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    std::size_t eq = s.find('=');
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    Line L;
    L.no = no;
    L.text = s;
    if (eq == std::string::npos) fail(no, static_cast<int>(first) + 1, "expected 'key = value'");
    // tokenize the head
    std::size_t i = first;
    bool have_key = false;
    while (i < eq) {
      while (i < eq && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= eq) break;
      std::size_t j = i;
      while (j < eq && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      std::string tok = s.substr(i, j - i);
      if (!have_key) {
        L.key = tok;
        L.key_col = static_cast<int>(i) + 1;
        have_key = true;
      } else {
        L.args.emplace_back(tok, static_cast<int>(i) + 1);
      }
      i = j;
    }
    if (!have_key) fail(no, static_cast<int>(first) + 1, "missing key before '='");
    std::size_t v = s.find_first_not_of(" \t\r", eq + 1);
    if (v == std::string::npos) {
      L.value.clear();
      L.value_col = static_cast<int>(s.size()) + 1;
    } else {
      std::size_t e = s.find_last_not_of(" \t\r");
      L.value = s.substr(v, e - v + 1);
      L.value_col = static_cast<int>(v) + 1;
    }
    out.push_back(std::move(L));
  }
  return out;
}

long parse_integer(const Line& L, const std::string& tok, int col, const char* what) {
  if (tok.empty()) fail(L.no, col, std::string("missing ") + what);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    fail(L.no, col, std::string("malformed ") + what + " '" + tok + "'");
  }
  if (pos != tok.size()) fail(L.no, col, std::string("malformed ") + what + " '" + tok + "'");
  return v;
}

Field parse_field_value(const Line& L) {
  std::istringstream vs(L.value);
  std::string tag, rest;
  vs >> tag;
  if (tag == "QQ") {
    if (vs >> rest) fail(L.no, L.value_col, "unexpected text after 'QQ'");
    return make_field_qq();
  }
  if (tag == "Fp") {
    if (!(vs >> rest)) fail(L.no, L.value_col, "Fp needs a characteristic, e.g. 'Fp 5'");
    long p = parse_integer(L, rest, L.value_col, "characteristic");
    std::string extra;
    if (vs >> extra) fail(L.no, L.value_col, "unexpected text after the characteristic");
    if (p < 2) fail(L.no, L.value_col, "field characteristic must be prime, got " + rest);
    try {
      return make_field_fp(static_cast<unsigned long>(p));
    } catch (const SpecError& e) {
      fail(L.no, L.value_col, e.what());
    }
  }
  fail(L.no, L.value_col, "unknown field '" + L.value + "' (expected QQ or Fp p)");
}

std::vector<std::string> parse_vars_value(const Line& L) {
  std::vector<std::string> vars;
  if (L.value.empty()) return vars;
  std::size_t base = static_cast<std::size_t>(L.value_col) - 1;
  std::size_t i = 0;
  const std::string& v = L.value;
  while (true) {
    std::size_t j = v.find(',', i);
    std::string piece = v.substr(i, j == std::string::npos ? std::string::npos : j - i);
    std::size_t a = piece.find_first_not_of(" \t");
    int col = static_cast<int>(base + i + (a == std::string::npos ? 0 : a)) + 1;
    if (a == std::string::npos) fail(L.no, col, "empty variable name");
    std::size_t b = piece.find_last_not_of(" \t");
    std::string name = piece.substr(a, b - a + 1);
    if (!is_ident(name)) fail(L.no, col, "invalid variable name '" + name + "'");
    for (const std::string& seen : vars)
      if (seen == name) fail(L.no, col, "duplicate variable '" + name + "'");
    vars.push_back(name);
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return vars;
}

Scalar parse_scalar_value(const Line& L, const Field& f) {
  if (L.value.empty()) fail(L.no, L.value_col, "missing coefficient");
  mpq_class q;
  try {
    q = mpq_class(L.value);
  } catch (const std::exception&) {
    fail(L.no, L.value_col, "malformed coefficient '" + L.value + "'");
  }
  if (q.get_den() == 0) fail(L.no, L.value_col, "zero denominator in '" + L.value + "'");
  q.canonicalize();
  try {
    return Scalar::of_mpq(q, f);
  } catch (const SpecError& e) {
    fail(L.no, L.value_col, e.what());
  }
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
  SpecFile out;
  bool have_field = false, have_vars = false, have_max = false, have_cap = false;
  for (const Line& L : logical_lines(text)) {
    if (!L.args.empty())
      fail(L.no, L.args[0].second, "unexpected token '" + L.args[0].first + "'");
    if (L.key == "field") {
      if (have_field) fail(L.no, L.key_col, "duplicate 'field'");
      out.spec.field = parse_field_value(L);
      have_field = true;
    } else if (L.key == "vars") {
      if (have_vars) fail(L.no, L.key_col, "duplicate 'vars'");
      out.spec.vars = parse_vars_value(L);
      have_vars = true;
    } else if (L.key == "rel") {
      if (!have_field) fail(L.no, L.key_col, "'field' must come before relations");
      if (!have_vars) fail(L.no, L.key_col, "'vars' must come before relations");
      if (L.value.empty()) fail(L.no, L.value_col, "missing relation polynomial");
      try {
        out.spec.relations.push_back(parse_poly(L.value, out.spec.vars, out.spec.field));
      } catch (const SpecError& e) {
        fail(L.no, L.value_col, e.what());
      }
    } else if (L.key == "max_degree") {
      if (have_max) fail(L.no, L.key_col, "duplicate 'max_degree'");
      long v = parse_integer(L, L.value, L.value_col, "degree");
      if (v < 0) fail(L.no, L.value_col, "max_degree must be nonnegative");
      out.max_degree = static_cast<int>(v);
      have_max = true;
    } else if (L.key == "internal_cap") {
      if (have_cap) fail(L.no, L.key_col, "duplicate 'internal_cap'");
      long v = parse_integer(L, L.value, L.value_col, "cap");
      if (v < 0) fail(L.no, L.value_col, "internal_cap must be nonnegative");
      out.internal_cap = v;
      have_cap = true;
    } else {
      fail(L.no, L.key_col, "unknown key '" + L.key + "'");
    }
  }
  if (!have_field) throw SpecError("spec file does not set 'field'");
  if (!have_vars) throw SpecError("spec file does not set 'vars'");
  return out;
}

std::string print_spec_file(const SpecFile& s) {
  std::ostringstream os;
  os << "field = ";
  if (s.spec.field.p == 0)
    os << "QQ\n";
  else
    os << "Fp " << s.spec.field.p << "\n";
  os << "vars =";
  for (std::size_t i = 0; i < s.spec.vars.size(); ++i)
    os << (i ? ", " : " ") << s.spec.vars[i];
  os << "\n";
  for (const Poly& r : s.spec.relations) os << "rel = " << poly_str(r, s.spec.vars) << "\n";
  if (s.max_degree >= 0) os << "max_degree = " << s.max_degree << "\n";
  if (s.internal_cap > 0) os << "internal_cap = " << s.internal_cap << "\n";
  return os.str();
}

LieFile parse_lie_file(const std::string& text) {
  LieFile out;
  bool have_field = false, have_n = false, have_k = false, shaped = false;
  Field f = make_field_qq();
  long n = -1, k = -1;
  std::vector<std::vector<bool>> seen_b, seen_q;
  auto ensure_shaped = [&](const Line& L) {
    if (shaped) return;
    if (!have_field) fail(L.no, L.key_col, "'field' must come before table entries");
    if (!have_n || !have_k) fail(L.no, L.key_col, "'n' and 'k' must come before table entries");
    out.lie = zero_lie(f, static_cast<unsigned>(n), static_cast<unsigned>(k));
    seen_b.assign(static_cast<std::size_t>(k),
                  std::vector<bool>(static_cast<std::size_t>(n * (n + 1) / 2), false));
    seen_q.assign(static_cast<std::size_t>(k),
                  std::vector<bool>(static_cast<std::size_t>(n), false));
    shaped = true;
  };
  auto index_arg = [&](const Line& L, std::size_t a, long hi, const char* what) {
    if (L.args.size() <= a) fail(L.no, L.value_col, std::string("missing ") + what + " index");
    long v = parse_integer(L, L.args[a].first, L.args[a].second, what);
    if (v < 1 || v > hi)
      fail(L.no, L.args[a].second,
           std::string(what) + " index " + std::to_string(v) + " out of range 1.." +
               std::to_string(hi));
    return v - 1;  // to 0-based
  };

  for (const Line& L : logical_lines(text)) {
    if (L.key == "field") {
      if (have_field) fail(L.no, L.key_col, "duplicate 'field'");
      if (shaped) fail(L.no, L.key_col, "'field' after table entries");
      f = parse_field_value(L);
      have_field = true;
    } else if (L.key == "n" || L.key == "k") {
      bool& have = (L.key == "n") ? have_n : have_k;
      long& dst = (L.key == "n") ? n : k;
      if (have) fail(L.no, L.key_col, "duplicate '" + L.key + "'");
      if (shaped) fail(L.no, L.key_col, "'" + L.key + "' after table entries");
      long v = parse_integer(L, L.value, L.value_col, "dimension");
      if (v < 0) fail(L.no, L.value_col, "dimension must be nonnegative");
      dst = v;
      have = true;
    } else if (L.key == "bracket") {
      ensure_shaped(L);
      if (L.args.size() != 3)
        fail(L.no, L.key_col, "bracket entries read 'bracket p i j = c'");
      long p = index_arg(L, 0, k, "relation");
      long i = index_arg(L, 1, n, "generator");
      long j = index_arg(L, 2, n, "generator");
      if (i > j)
        fail(L.no, L.args[1].second, "bracket indices must satisfy i <= j (symmetric storage)");
      std::size_t pos = ut_index(static_cast<unsigned>(i), static_cast<unsigned>(j),
                                 static_cast<unsigned>(n));
      if (seen_b[static_cast<std::size_t>(p)][pos]) fail(L.no, L.key_col, "duplicate bracket entry");
      seen_b[static_cast<std::size_t>(p)][pos] = true;
      out.lie.bracket[static_cast<std::size_t>(p)][pos] = parse_scalar_value(L, f);
    } else if (L.key == "q") {
      ensure_shaped(L);
      if (L.args.size() != 2) fail(L.no, L.key_col, "q entries read 'q p i = c'");
      long p = index_arg(L, 0, k, "relation");
      long i = index_arg(L, 1, n, "generator");
      if (seen_q[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)])
        fail(L.no, L.key_col, "duplicate q entry");
      seen_q[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] = true;
      out.lie.q[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] =
          parse_scalar_value(L, f);
    } else {
      fail(L.no, L.key_col, "unknown key '" + L.key + "'");
    }
  }
  if (!have_field) throw SpecError("lie file does not set 'field'");
  if (!have_n || !have_k) throw SpecError("lie file does not set 'n' and 'k'");
  if (!shaped) out.lie = zero_lie(f, static_cast<unsigned>(n), static_cast<unsigned>(k));
  return out;
}

std::string print_lie_file(const LieFile& l) {
  const RestrictedLie& g = l.lie;
  std::ostringstream os;
  os << "field = ";
  if (g.field.p == 0)
    os << "QQ\n";
  else
    os << "Fp " << g.field.p << "\n";
  os << "n = " << g.n << "\n";
  os << "k = " << g.k << "\n";
  for (unsigned p = 0; p < g.k; ++p)
    for (unsigned i = 0; i < g.n; ++i)
      for (unsigned j = i; j < g.n; ++j) {
        const Scalar& c = g.bracket[p][ut_index(i, j, g.n)];
        if (!c.is_zero())
          os << "bracket " << p + 1 << " " << i + 1 << " " << j + 1 << " = " << c.str() << "\n";
      }
  for (unsigned p = 0; p < g.k; ++p)
    for (unsigned i = 0; i < g.n; ++i)
      if (!g.q[p][i].is_zero()) os << "q " << p + 1 << " " << i + 1 << " = " << g.q[p][i].str()
                                   << "\n";
  return os.str();
}

}  // namespace kt
