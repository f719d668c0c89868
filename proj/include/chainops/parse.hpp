#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "maclane.hpp"
#include "minimal.hpp"
#include "simplex.hpp"
#include "surjection.hpp"

namespace chainops {

struct SyntaxError : InvalidInput {
  int line, col;
  SyntaxError(const std::string& msg, int l, int c)
      : InvalidInput("syntax error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

// one generator as written: '(' groups ')' with groups split by ';' and items by ',' or blanks,
// or a minimal-resolution name like T^2y3
struct RawGen {
  std::vector<std::vector<int>> groups;
  bool semicolons = false;
  bool is_mgen = false;
  MGen m;
  int line = 1, col = 1;
};

struct RawTerm {
  Int coeff = 1;
  std::vector<RawGen> factors;  // more than one for tensors
  int line = 1, col = 1;
};

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip();
    if (eof()) throw err("empty expression");
    if (s_[i_] == '0' && only_zero()) return out;
    int sign = 1;
    if (peek('-')) {
      sign = -1;
      adv();
    } else if (peek('+')) {
      adv();
    }
    while (true) {
      RawTerm t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      skip();
      if (eof()) break;
      if (peek('+'))
        sign = 1;
      else if (peek('-'))
        sign = -1;
      else
        throw err(std::string("expected '+' or '-', found '") + s_[i_] + "'");
      adv();
    }
    return out;
  }

 private:
  std::string s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;

  bool eof() const { return i_ >= s_.size(); }
  bool peek(char c) const { return !eof() && s_[i_] == c; }
  void adv() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(s_[i_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[i_]))) adv();
  }
  SyntaxError err(const std::string& msg) const { return SyntaxError(msg, line_, col_); }

  bool only_zero() const {
    std::size_t j = i_ + 1;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    return j == s_.size();
  }

  Int number() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) throw err("expected a number");
    std::string d;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      d += s_[i_];
      adv();
    }
    return Int(d);
  }

  int small_int() {
    bool neg = false;
    if (peek('-')) {
      neg = true;
      adv();
    }
    Int v = number();
    if (v > 1000000) throw err("integer out of range");
    int r = static_cast<int>(v);
    return neg ? -r : r;
  }

  bool at_tensor() {
    static const std::string tens = "\xE2\x8A\x97";  // ⊗
    return s_.compare(i_, tens.size(), tens) == 0;
  }

  RawTerm term() {
    RawTerm t;
    t.line = line_;
    t.col = col_;
    skip();
    if (!eof() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      t.coeff = number();
      skip();
      if (!peek('*')) throw err("expected '*' after a coefficient");
      adv();
      skip();
    }
    t.factors.push_back(gen());
    while (true) {
      skip();
      if (at_tensor()) {
        for (int k = 0; k < 3; ++k) adv();
      } else if (peek('@')) {
        adv();
      } else {
        break;
      }
      skip();
      t.factors.push_back(gen());
    }
    return t;
  }

  RawGen gen() {
    RawGen g;
    g.line = line_;
    g.col = col_;
    if (peek('T') || peek('y')) {
      g.is_mgen = true;
      g.m.pow = 0;
      if (peek('T')) {
        adv();
        g.m.pow = 1;
        if (peek('^')) {
          adv();
          g.m.pow = small_int();
        }
      }
      if (!peek('y')) throw err("expected 'y' in a generator name");
      adv();
      g.m.deg = small_int();
      return g;
    }
    if (!peek('(')) throw err(eof() ? "unexpected end of input" : std::string("expected '(', found '") + s_[i_] + "'");
    adv();
    g.groups.emplace_back();
    while (true) {
      skip();
      if (eof()) throw err("missing ')'");
      if (peek(')')) {
        adv();
        break;
      }
      if (peek(';')) {
        adv();
        g.semicolons = true;
        g.groups.emplace_back();
        continue;
      }
      if (peek(',')) {
        adv();
        continue;
      }
      g.groups.back().push_back(small_int());
    }
    for (const auto& gr : g.groups)
      if (gr.empty()) throw SyntaxError("empty generator", g.line, g.col);
    return g;
  }
};

inline std::vector<RawTerm> parse_raw(const std::string& text) { return ExprParser(text).parse(); }

// warnings collect dropped degenerate generators
using Warnings = std::vector<std::string>;

namespace detail {
inline std::string where(const RawGen& g) {
  return "line " + std::to_string(g.line) + ", column " + std::to_string(g.col);
}
inline const RawGen& single(const RawTerm& t) {
  if (t.factors.size() != 1) throw InvalidInput("expected a single generator, found a tensor");
  return t.factors[0];
}
template <class G>
void add_checked(Element<G>& out, bool& have_deg, const G& g, int deg, const Int& c, const RawGen& at) {
  if (!have_deg) {
    out.degree = deg;
    have_deg = true;
  } else if (deg != out.degree) {
    throw InvalidInput("degree mismatch at " + where(at) + ": expected " + std::to_string(out.degree) + ", found " +
                       std::to_string(deg));
  }
  out.add(g, c);
}
}  // namespace detail

inline Surj parse_surj_gen(const RawGen& g, int n, bool& degenerate) {
  if (g.is_mgen || g.groups.size() != 1) throw InvalidInput("expected a surjection at " + detail::where(g));
  const Surj& x = g.groups[0];
  std::vector<char> seen(n + 1, 0);
  for (int a : x) {
    if (a < 1 || a > n)
      throw InvalidInput("entry " + std::to_string(a) + " outside 1.." + std::to_string(n) + " at " + detail::where(g));
    seen[a] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw InvalidInput("value " + std::to_string(v) + " missing, not a surjection, at " + detail::where(g));
  degenerate = false;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] == x[i - 1]) degenerate = true;
  return x;
}

inline Element<Surj> parse_surj(const std::string& text, int n, Ring ring, Warnings* warn = nullptr) {
  Element<Surj> out(ring, 0);
  bool have = false;
  for (const auto& t : parse_raw(text)) {
    const RawGen& g = detail::single(t);
    bool deg = false;
    Surj x = parse_surj_gen(g, n, deg);
    if (deg) {
      if (warn) warn->push_back("dropped degenerate generator " + tuple_str(x));
      if (!have) {
        out.degree = (int)x.size() - n;
        have = true;
      }
      continue;
    }
    detail::add_checked(out, have, x, (int)x.size() - n, t.coeff, g);
  }
  return out;
}

inline Perm parse_perm_items(const std::vector<int>& items, int n, const RawGen& at) {
  if ((int)items.size() != n || !is_perm(items))
    throw InvalidInput("expected a permutation of 1.." + std::to_string(n) + " at " + detail::where(at));
  return items;
}

inline Perm parse_perm(const std::string& text) {
  auto terms = parse_raw(text);
  if (terms.size() != 1 || terms[0].coeff != 1) throw InvalidInput("expected a single permutation");
  const RawGen& g = detail::single(terms[0]);
  if (g.is_mgen || g.groups.size() != 1) throw InvalidInput("expected a single permutation");
  return parse_perm_items(g.groups[0], (int)g.groups[0].size(), g);
}

// EG tuples: permutations split by ';', or for C_n a list of powers of T
inline Tuple parse_eg_gen(const RawGen& g, const Group& G) {
  if (g.is_mgen) throw InvalidInput("expected a group tuple at " + detail::where(g));
  Tuple t;
  if (!g.semicolons && G.kind == Group::Kind::Cyc) {
    for (int a : g.groups[0]) t.push_back(((a % G.n) + G.n) % G.n);
    return t;
  }
  for (const auto& items : g.groups) {
    Perm p = parse_perm_items(items, G.n, g);
    if (!G.contains(p)) throw InvalidInput(tuple_str(p) + " is not in " + G.name() + " at " + detail::where(g));
    t.push_back(G.code(p));
  }
  return t;
}

inline Element<Tuple> parse_eg(const std::string& text, const Group& G, Ring ring, Warnings* warn = nullptr) {
  Element<Tuple> out(ring, 0);
  bool have = false;
  for (const auto& t : parse_raw(text)) {
    const RawGen& g = detail::single(t);
    Tuple x = parse_eg_gen(g, G);
    if (seq_degenerate(x)) {
      if (warn) warn->push_back("dropped degenerate generator at " + detail::where(g));
      if (!have) {
        out.degree = (int)x.size() - 1;
        have = true;
      }
      continue;
    }
    detail::add_checked(out, have, x, (int)x.size() - 1, t.coeff, g);
  }
  return out;
}

// T^k y_d, also written (d,k)
inline MGen parse_mgen_gen(const RawGen& g, int n) {
  MGen m;
  if (g.is_mgen) {
    m = g.m;
  } else if (g.groups.size() == 1 && g.groups[0].size() == 2) {
    m = {g.groups[0][0], g.groups[0][1]};
  } else {
    throw InvalidInput("expected a generator like T^2y3 or (3,2) at " + detail::where(g));
  }
  if (m.deg < 0) throw InvalidInput("negative degree at " + detail::where(g));
  m.pow = ((m.pow % n) + n) % n;
  return m;
}

inline Element<MGen> parse_mgen(const std::string& text, int n, Ring ring) {
  Element<MGen> out(ring, 0);
  bool have = false;
  for (const auto& t : parse_raw(text)) {
    const RawGen& g = detail::single(t);
    MGen m = parse_mgen_gen(g, n);
    detail::add_checked(out, have, m, m.deg, t.coeff, g);
  }
  return out;
}

inline Face parse_face_gen(const RawGen& g, int m, bool& degenerate) {
  if (g.is_mgen || g.groups.size() != 1) throw InvalidInput("expected a face at " + detail::where(g));
  const Face& f = g.groups[0];
  degenerate = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] > m)
      throw InvalidInput("vertex " + std::to_string(f[i]) + " outside 0.." + std::to_string(m) + " at " + detail::where(g));
    if (i && f[i] == f[i - 1]) degenerate = true;
    if (i && f[i] < f[i - 1]) throw InvalidInput("vertices must be nondecreasing at " + detail::where(g));
  }
  return f;
}

inline Element<Face> parse_face(const std::string& text, int m, Ring ring, Warnings* warn = nullptr) {
  Element<Face> out(ring, 0);
  bool have = false;
  for (const auto& t : parse_raw(text)) {
    const RawGen& g = detail::single(t);
    bool deg = false;
    Face f = parse_face_gen(g, m, deg);
    if (deg) {
      if (warn) warn->push_back("dropped degenerate face " + tuple_str(f));
      continue;
    }
    detail::add_checked(out, have, f, (int)f.size() - 1, t.coeff, g);
  }
  return out;
}

// Barratt-Eccles generators: permutations of one size separated by ';'
inline Element<std::vector<Perm>> parse_be(const std::string& text, Ring ring, Warnings* warn = nullptr) {
  Element<std::vector<Perm>> out(ring, 0);
  bool have = false;
  int n = -1;
  for (const auto& t : parse_raw(text)) {
    const RawGen& g = detail::single(t);
    if (g.is_mgen) throw InvalidInput("expected permutations at " + detail::where(g));
    if (n < 0) n = (int)g.groups[0].size();
    std::vector<Perm> x;
    bool deg = false;
    for (const auto& items : g.groups) {
      x.push_back(parse_perm_items(items, n, g));
      if (x.size() > 1 && x.back() == x[x.size() - 2]) deg = true;
    }
    if (deg) {
      if (warn) warn->push_back("dropped degenerate generator at " + detail::where(g));
      continue;
    }
    detail::add_checked(out, have, x, (int)x.size() - 1, t.coeff, g);
  }
  return out;
}

inline int be_arity(const Element<std::vector<Perm>>& x) {
  return x.is_zero() ? 0 : (int)x.terms.begin()->first[0].size();
}

// simplices of a product of simplices: points separated by ';', coordinates by blanks or ','
inline Element<Points> parse_points(const std::string& text, Ring ring, Warnings* warn = nullptr) {
  Element<Points> out(ring, 0);
  bool have = false;
  int width = -1;
  for (const auto& t : parse_raw(text)) {
    const RawGen& g = detail::single(t);
    if (g.is_mgen) throw InvalidInput("expected points at " + detail::where(g));
    if (width < 0) width = (int)g.groups[0].size();
    const Points& p = g.groups;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if ((int)p[i].size() != width) throw InvalidInput("points of different widths at " + detail::where(g));
      for (int j = 0; j < width; ++j) {
        if (p[i][j] < 0) throw InvalidInput("negative coordinate at " + detail::where(g));
        if (i && p[i][j] < p[i - 1][j]) throw InvalidInput("coordinates must be nondecreasing at " + detail::where(g));
      }
    }
    if (points_degenerate(p)) {
      if (warn) warn->push_back("dropped degenerate simplex at " + detail::where(g));
      continue;
    }
    detail::add_checked(out, have, p, (int)p.size() - 1, t.coeff, g);
  }
  return out;
}

// tensors of faces of Delta^m, factors joined by the tensor sign or '@'
inline Element<TGen<Face>> parse_face_tensor(const std::string& text, int m, Ring ring, Warnings* warn = nullptr) {
  Element<TGen<Face>> out(ring, 0);
  bool have = false;
  std::size_t width = 0;
  for (const auto& t : parse_raw(text)) {
    if (!width) width = t.factors.size();
    if (t.factors.size() != width) throw InvalidInput("tensors with different numbers of factors");
    TGen<Face> x;
    bool deg = false;
    int d = 0;
    for (const auto& g : t.factors) {
      bool dg = false;
      x.push_back(parse_face_gen(g, m, dg));
      deg = deg || dg;
      d += (int)x.back().size() - 1;
    }
    if (deg) {
      if (warn) warn->push_back("dropped degenerate tensor at " + detail::where(t.factors[0]));
      continue;
    }
    detail::add_checked(out, have, x, d, t.coeff, t.factors[0]);
  }
  return out;
}

}  // namespace chainops
