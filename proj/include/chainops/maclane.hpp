#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "engine.hpp"
#include "group.hpp"
#include "simplex.hpp"

namespace chainops {

using Tuple = std::vector<int>;  // group element codes (g_0, ..., g_k)

// N_*(EG). With twisted = true the action carries the parity character.
struct EGComplex {
  using Gen = Tuple;
  const Group* G = nullptr;
  Ring rng;
  bool twisted = false;

  EGComplex() = default;
  explicit EGComplex(const Group& g, Ring r = {}, bool tw = false) : G(&g), rng(r), twisted(tw) {}

  Ring ring() const { return rng; }
  int deg(const Tuple& x) const { return (int)x.size() - 1; }

  // calls cb(face, sign) for each nondegenerate face
  template <class F>
  void d_terms(const Tuple& x, F&& cb) const {
    if (x.size() < 2) return;
    Tuple y(x.size() - 1);
    for (std::size_t j = 0; j < x.size(); ++j) {
      // deleting x_j degenerates only if its neighbours agree
      if (j > 0 && j + 1 < x.size() && x[j - 1] == x[j + 1]) continue;
      for (std::size_t i = 0, o = 0; i < x.size(); ++i)
        if (i != j) y[o++] = x[i];
      cb(y, sgn_pow(j));
    }
  }
  Element<Tuple> d(const Tuple& x) const {
    Element<Tuple> r(rng, deg(x) - 1);
    d_terms(x, [&](const Tuple& y, int s) { r.add(y, s); });
    return r;
  }
  std::optional<Tuple> h_term(const Tuple& x) const {
    if (x[0] == 0) return std::nullopt;
    Tuple y{0};
    y.insert(y.end(), x.begin(), x.end());
    return y;
  }
  Element<Tuple> h(const Tuple& x) const {
    Element<Tuple> r(rng, deg(x) + 1);
    if (auto y = h_term(x)) r.add(*y, 1);
    return r;
  }
  std::uint64_t pack(const Tuple& x) const {
    std::uint64_t v = x.size();
    for (int a : x) v = v * (std::uint64_t)G->order() + (std::uint64_t)a;
    return v;
  }
  Int eps(const Tuple& x) const { return x.size() == 1 ? 1 : 0; }
  Tuple base() const { return {0}; }

  bool is_basis(const Tuple& x) const { return x[0] == 0; }
  std::vector<int> actors() const {
    std::vector<int> a(G->order());
    for (int i = 0; i < G->order(); ++i) a[i] = i;
    return a;
  }
  Tuple left(int g, const Tuple& x) const {
    Tuple y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = G->mul(g, x[i]);
    return y;
  }
  Tuple right(const Tuple& x, int g) const {
    Tuple y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = G->mul(x[i], g);
    return y;
  }
  std::pair<Tuple, int> act_term(int g, const Tuple& x) const { return {left(g, x), twisted ? G->sign(g) : 1}; }
  Element<Tuple> act(int g, const Tuple& x) const {
    return Element<Tuple>::single(rng, deg(x), left(g, x), twisted ? G->sign(g) : 1);
  }
  Element<Tuple> act(int g, const Element<Tuple>& x) const {
    Element<Tuple> r(rng, x.degree);
    int s = twisted ? G->sign(g) : 1;
    for (const auto& [t, c] : x.terms) r.add(left(g, t), c * s);
    return r;
  }

  void for_each_gen(int k, const std::function<void(const Tuple&)>& cb) const {
    if (k < 0) return;
    Tuple x(k + 1, 0);
    int n = G->order();
    std::function<void(int)> rec = [&](int i) {
      if (i == k + 1) {
        cb(x);
        return;
      }
      for (int a = 0; a < n; ++a) {
        if (i > 0 && a == x[i - 1]) continue;
        x[i] = a;
        rec(i + 1);
      }
    };
    rec(0);
  }

  std::string show(const Tuple& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (G->kind == Group::Kind::Cyc) {
        if (i) s += ",";
        s += std::to_string(x[i]);
      } else {
        if (i) s += "; ";
        const Perm& p = G->perm(x[i]);
        for (std::size_t j = 0; j < p.size(); ++j) s += (j ? " " : "") + std::to_string(p[j]);
      }
    }
    return s + ")";
  }
  std::string show(const Element<Tuple>& x) const {
    return format(x, [&](const Tuple& t) { return show(t); });
  }
};

struct EGDecomp {
  Int coeff;
  Tuple basis;
  int op;
};

// x = g b with b_0 = e
inline EGDecomp eg_decompose(const EGComplex& C, const Tuple& x) {
  int g = x[0];
  return {C.twisted ? C.G->sign(g) : 1, C.left(C.G->inv(g), x), g};
}

inline Element<Tuple> eg_join(const Element<Tuple>& x, const Element<Tuple>& y) {
  Element<Tuple> r(x.ring, x.degree + y.degree + 1);
  for (const auto& [a, c] : x.terms)
    for (const auto& [b, e] : y.terms) {
      if (a.back() == b.front()) continue;
      Tuple t = a;
      t.insert(t.end(), b.begin(), b.end());
      r.add(t, c * e);
    }
  return r;
}

inline Element<Tuple> eg_apply_d(const EGComplex& C, const Element<Tuple>& x) { return apply_d(C, x); }

// N(f) for a set map f between groups given on codes, f(e) = e'
inline Element<Tuple> induced_map(const std::vector<int>& f, const Element<Tuple>& x) {
  if (f.empty() || f[0] != 0) throw InvalidInput("induced map must send identity to identity");
  Element<Tuple> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) {
    Tuple u(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = f.at(t[i]);
    if (!seq_degenerate(u)) r.add(u, c);
  }
  return r;
}

// code map for a group homomorphism-like function given on permutations
inline std::vector<int> code_map(const Group& from, const Group& to, const std::function<Perm(const Perm&)>& f) {
  std::vector<int> m(from.order());
  for (int a = 0; a < from.order(); ++a) m[a] = to.code(f(from.perm(a)));
  return m;
}

// J(x_0..x_n) = sum_j (-1)^j phi0(x_0..x_j) * phi1(x_j..x_n)
inline Element<Tuple> join_homotopy(const std::function<Element<Tuple>(const Tuple&)>& phi0,
                                    const std::function<Element<Tuple>(const Tuple&)>& phi1, const Tuple& x,
                                    Ring ring) {
  Element<Tuple> r(ring, (int)x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Tuple front(x.begin(), x.begin() + j + 1), back(x.begin() + j, x.end());
    auto a = phi0(front), b = phi1(back);
    if (a.is_zero() || b.is_zero()) continue;
    r.add(eg_join(a, b), sgn_pow(j));
  }
  r.degree = (int)x.size();
  return r;
}

// translate each tuple to g_0 = e; with the parity twist multiply by tau(g_0)
inline Element<Tuple> coinvariants(const Group& G, const Element<Tuple>& x, bool twist) {
  if (twist && G.kind != Group::Kind::Sym) throw InvalidInput("parity twist needs a symmetric group");
  Element<Tuple> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) {
    int gi = G.inv(t[0]);
    Tuple u(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = G.mul(gi, t[i]);
    r.add(u, twist ? c * G.sign(t[0]) : c);
  }
  return r;
}

// ---------------------------------------------------------------- products E(G x H)

// generators are point lists ((g_0,h_0),...,(g_k,h_k)); contraction prepends (e,e)
struct ProductEGComplex {
  using Gen = Points;
  std::vector<const Group*> groups;
  Ring rng;

  Ring ring() const { return rng; }
  int deg(const Points& p) const { return (int)p.size() - 1; }
  Element<Points> d(const Points& p) const { return points_boundary(p, rng); }
  Element<Points> h(const Points& p) const {
    Element<Points> r(rng, deg(p) + 1);
    std::vector<int> z(groups.size(), 0);
    if (p[0] == z) return r;
    Points q{z};
    q.insert(q.end(), p.begin(), p.end());
    r.add(q, 1);
    return r;
  }
  Int eps(const Points& p) const { return p.size() == 1 ? 1 : 0; }
  Points base() const { return {std::vector<int>(groups.size(), 0)}; }
};

inline Element<Points> ez_maclane(const std::vector<Tuple>& xs, Ring ring = {}) { return ez_points(xs, ring); }
inline Element<TGen<Tuple>> aw_maclane(const Points& p, Ring ring = {}) { return aw_points(p, ring); }

}  // namespace chainops
