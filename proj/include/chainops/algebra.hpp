#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainops {

using Int = boost::multiprecision::cpp_int;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardTripped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// max number of terms one element may hold before we give up
inline std::atomic<std::size_t>& term_guard_slot() {
  static std::atomic<std::size_t> g = [] {
    std::size_t v = 10000000;
    if (const char* s = std::getenv("CHAINOPS_TERM_GUARD")) {
      char* end = nullptr;
      unsigned long long p = std::strtoull(s, &end, 10);
      if (end != s && p > 0) v = static_cast<std::size_t>(p);
    }
    return v;
  }();
  return g;
}
inline std::size_t term_guard() { return term_guard_slot().load(std::memory_order_relaxed); }
inline void set_term_guard(std::size_t n) { term_guard_slot().store(n); }

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// p == 0 means the integers
struct Ring {
  int p = 0;

  static Ring integers() { return {}; }
  static Ring field(int p) {
    if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
    return Ring{p};
  }
  bool is_field() const { return p != 0; }
  void reduce(Int& c) const {
    if (p == 0) return;
    c %= p;
    if (c < 0) c += p;
  }
  Int norm(Int c) const {
    reduce(c);
    return c;
  }
  bool operator==(const Ring&) const = default;
  std::string name() const { return p ? "F" + std::to_string(p) : "Z"; }
};

inline int sgn_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// ---------------------------------------------------------------- permutations
// one-line notation, values 1..n; (f*g)(x) = f(g(x))

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline bool is_perm(const std::vector<int>& v) {
  std::vector<char> seen(v.size() + 1, 0);
  for (int a : v) {
    if (a < 1 || a > (int)v.size() || seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

inline Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw InvalidInput("compose: size mismatch");
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i] - 1];
  return r;
}

inline Perm inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i] - 1] = (int)i + 1;
  return r;
}

inline long long inversions(const std::vector<int>& v) {
  long long c = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++c;
  return c;
}

inline int parity(const Perm& g) { return sgn_pow(inversions(g)); }

// sign picked up when g moves the factor in slot i to slot g(i)
inline int koszul_sign(const Perm& g, const std::vector<int>& degrees) {
  if (degrees.size() != g.size()) throw InvalidInput("koszul_sign: size mismatch");
  long long c = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (degrees[i] % 2 == 0) continue;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (degrees[j] % 2 != 0 && g[i] > g[j]) ++c;
  }
  return sgn_pow(c);
}

// u_*(s_1..s_r): blocks B_{u(1)},...,B_{u(r)} written in order
inline Perm block_perm(const Perm& u, const std::vector<int>& sizes) {
  if (u.size() != sizes.size()) throw InvalidInput("block_perm: size mismatch");
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InvalidInput("block_perm: sizes must be positive");
    start[i + 1] = start[i] + sizes[i];
  }
  Perm r;
  for (int ui : u)
    for (int j = 1; j <= sizes[ui - 1]; ++j) r.push_back(start[ui - 1] + j);
  return r;
}

inline Perm direct_sum(const std::vector<Perm>& vs) {
  Perm r;
  int off = 0;
  for (const auto& v : vs) {
    for (int a : v) r.push_back(a + off);
    off += (int)v.size();
  }
  return r;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// the action of g on a tensor: slot i goes to slot g(i)
template <class T>
std::vector<T> permute_slots(const Perm& g, const std::vector<T>& v) {
  std::vector<T> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[g[i] - 1] = v[i];
  return r;
}

// ---------------------------------------------------------------- elements

template <class G>
class Element {
 public:
  using Gen = G;
  using Map = std::map<G, Int>;

  Ring ring;
  int degree = 0;
  Map terms;

  Element() = default;
  Element(Ring r, int deg) : ring(r), degree(deg) {}

  static Element single(Ring r, int deg, G g, Int c = 1) {
    Element e(r, deg);
    e.add(std::move(g), c);
    return e;
  }

  void add(const G& g, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(g);
    if (it == terms.end()) {
      Int v = ring.norm(c);
      if (v == 0) return;
      if (terms.size() >= term_guard())
        throw GuardTripped("term guard tripped at " + std::to_string(terms.size()) + " terms");
      terms.emplace(g, std::move(v));
      return;
    }
    it->second += c;
    ring.reduce(it->second);
    if (it->second == 0) terms.erase(it);
  }

  void add(const Element& o, const Int& c) {
    if (o.terms.empty() || c == 0) return;
    absorb_degree(o);
    for (const auto& [g, a] : o.terms) add(g, a * c);
  }

  Element& operator+=(const Element& o) {
    add(o, 1);
    return *this;
  }
  Element& operator-=(const Element& o) {
    add(o, -1);
    return *this;
  }
  Element operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
  }
  Element operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
  }
  Element operator-() const { return scaled(-1); }

  Element scaled(const Int& c) const {
    Element r(ring, degree);
    for (const auto& [g, a] : terms) r.add(g, a * c);
    return r;
  }

  Int coeff(const G& g) const {
    auto it = terms.find(g);
    return it == terms.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  bool operator==(const Element& o) const { return terms == o.terms; }

  Element reduced(Ring r) const {
    Element e(r, degree);
    for (const auto& [g, a] : terms) e.add(g, a);
    return e;
  }

 private:
  void absorb_degree(const Element& o) {
    if (o.degree == degree) return;
    if (terms.empty()) {
      degree = o.degree;
      return;
    }
    throw InvalidInput("adding elements of degrees " + std::to_string(degree) + " and " +
                       std::to_string(o.degree));
  }
};

// linear extension of f: G -> Element<H>
template <class H, class G, class F>
Element<H> linear(const Element<G>& x, Ring ring, int outdeg, F&& f) {
  Element<H> r(ring, outdeg);
  for (const auto& [g, c] : x.terms) r.add(f(g), c);
  r.degree = outdeg;
  return r;
}

// ---------------------------------------------------------------- text output

inline std::string tuple_str(const std::vector<int>& v, const char* sep = ",") {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string coeff_prefix(const Int& c, bool first) {
  std::string s;
  Int a = c;
  if (a < 0) {
    s = first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    s = " + ";
  }
  if (a != 1) s += a.str() + "*";
  return s;
}

template <class G, class F>
std::string format(const Element<G>& x, F&& gen_str) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : x.terms) {
    s += coeff_prefix(c, first) + gen_str(g);
    first = false;
  }
  return s;
}

inline std::string format(const Element<std::vector<int>>& x) {
  return format(x, [](const std::vector<int>& g) { return tuple_str(g); });
}

inline std::string format(const Element<std::vector<std::vector<int>>>& x) {
  return format(x, [](const std::vector<std::vector<int>>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "⊗" : "") + tuple_str(t[i]);
    return s;
  });
}

}  // namespace chainops
