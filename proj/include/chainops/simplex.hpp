#pragma once

#include <functional>
#include <vector>

#include "engine.hpp"

namespace chainops {

// Faces of the standard simplex are strictly increasing vertex lists, vertices 0..m.
using Face = std::vector<int>;
// A generator of a product of simplices (or of E(G x H)): a list of points.
using Points = std::vector<std::vector<int>>;

inline bool is_face(const Face& f, int m) {
  if (f.empty() || f[0] < 0 || f.back() > m) return false;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] <= f[i - 1]) return false;
  return true;
}

inline Element<Face> face_boundary(const Face& f, Ring ring = {}) {
  Element<Face> r(ring, (int)f.size() - 2);
  if (f.size() < 2) return Element<Face>(ring, -1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    Face g;
    g.reserve(f.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != j) g.push_back(f[i]);
    r.add(g, sgn_pow(j));
  }
  return r;
}

struct SimplexComplex {
  using Gen = Face;
  int m = 0;
  Ring rng;

  SimplexComplex() = default;
  explicit SimplexComplex(int m_, Ring r = {}) : m(m_), rng(r) {
    if (m < 0) throw InvalidInput("negative simplex dimension");
  }

  Ring ring() const { return rng; }
  int deg(const Face& f) const { return (int)f.size() - 1; }
  Element<Face> d(const Face& f) const { return face_boundary(f, rng); }
  // cone on vertex 0; does not depend on m
  Element<Face> h(const Face& f) const {
    Element<Face> r(rng, deg(f) + 1);
    if (f[0] == 0) return r;
    Face g{0};
    g.insert(g.end(), f.begin(), f.end());
    r.add(g, 1);
    return r;
  }
  Int eps(const Face& f) const { return f.size() == 1 ? 1 : 0; }
  Face base() const { return {0}; }

  void for_each_gen(int k, const std::function<void(const Face&)>& cb) const {
    if (k < 0 || k > m) return;
    Face f(k + 1);
    std::function<void(int, int)> rec = [&](int pos, int from) {
      if (pos == k + 1) {
        cb(f);
        return;
      }
      for (int v = from; v <= m - (k - pos); ++v) {
        f[pos] = v;
        rec(pos + 1, v + 1);
      }
    };
    rec(0, 0);
  }
};

inline Face full_simplex(int m) {
  Face f(m + 1);
  for (int i = 0; i <= m; ++i) f[i] = i;
  return f;
}

// j-th face inclusion Delta^{m-1} -> Delta^m
inline int face_inclusion(int j, int v) { return v < j ? v : v + 1; }

// image of a tensor of faces under a vertex map that is strictly increasing
inline Element<TGen<Face>> push_vertices(const Element<TGen<Face>>& x, const std::vector<int>& vmap) {
  Element<TGen<Face>> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) {
    TGen<Face> u = t;
    for (auto& f : u)
      for (auto& v : f) v = vmap[v];
    r.add(u, c);
  }
  return r;
}

// ---------------------------------------------------------------- multidiagonal

// all splittings 0 <= c_1 <= ... <= c_{n-1} <= dim of f into n overlapping blocks
inline Element<TGen<Face>> multidiagonal(int n, const Face& f, Ring ring = {}) {
  if (n < 1) throw InvalidInput("multidiagonal needs arity >= 1");
  int dim = (int)f.size() - 1;
  Element<TGen<Face>> r(ring, dim);
  std::vector<int> cut(n + 1, 0);
  cut[n] = dim;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      TGen<Face> t(n);
      for (int b = 0; b < n; ++b) t[b] = Face(f.begin() + cut[b], f.begin() + cut[b + 1] + 1);
      r.add(t, 1);
      return;
    }
    for (int c = cut[i - 1]; c <= dim; ++c) {
      cut[i] = c;
      rec(i + 1);
    }
  };
  if (n == 1) {
    r.add(TGen<Face>{f}, 1);
    return r;
  }
  rec(1);
  return r;
}

// ---------------------------------------------------------------- point sequences
// shared by products of simplices and products of groups

inline bool points_degenerate(const Points& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return true;
  return false;
}

inline bool seq_degenerate(const std::vector<int>& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return true;
  return false;
}

inline Element<Points> points_boundary(const Points& p, Ring ring = {}) {
  Element<Points> r(ring, (int)p.size() - 2);
  if (p.size() < 2) return Element<Points>(ring, -1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    Points q;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != j) q.push_back(p[i]);
    if (!points_degenerate(q)) r.add(q, sgn_pow(j));
  }
  return r;
}

// Eilenberg-Zilber: shuffles of the factor sequences, sign = inversion parity of the path word
inline Element<Points> ez_points(const std::vector<std::vector<int>>& factors, Ring ring = {}) {
  int r = (int)factors.size();
  std::vector<int> word;
  int deg = 0;
  for (int i = 0; i < r; ++i) {
    int di = (int)factors[i].size() - 1;
    if (di < 0) throw InvalidInput("ez: empty factor");
    deg += di;
    word.insert(word.end(), di, i);
  }
  Element<Points> out(ring, deg);
  do {
    Points p;
    std::vector<int> pos(r, 0);
    auto point = [&] {
      std::vector<int> v(r);
      for (int i = 0; i < r; ++i) v[i] = factors[i][pos[i]];
      return v;
    };
    p.push_back(point());
    for (int w : word) {
      ++pos[w];
      p.push_back(point());
    }
    if (!points_degenerate(p)) out.add(p, sgn_pow(inversions(word)));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Alexander-Whitney for r factors: (Id (x) AW) o AW, projecting onto coordinates
inline Element<TGen<std::vector<int>>> aw_points(const Points& p, Ring ring = {}) {
  if (p.empty()) throw InvalidInput("aw: empty simplex");
  int r = (int)p[0].size();
  int dim = (int)p.size() - 1;
  Element<TGen<std::vector<int>>> out(ring, dim);
  Face idx = full_simplex(dim);
  auto diag = multidiagonal(r, idx);
  for (const auto& [t, c] : diag.terms) {
    TGen<std::vector<int>> u(r);
    bool deg = false;
    for (int i = 0; i < r && !deg; ++i) {
      for (int a : t[i]) u[i].push_back(p[a][i]);
      deg = seq_degenerate(u[i]);
    }
    if (!deg) out.add(u, c);
  }
  return out;
}

// aw on a pair of equal-length sequences
inline Element<TGen<std::vector<int>>> aw_pair(const std::vector<int>& a, const std::vector<int>& b, Ring ring = {}) {
  if (a.size() != b.size()) throw InvalidInput("aw: factors must have equal length");
  Points p;
  for (std::size_t i = 0; i < a.size(); ++i) p.push_back({a[i], b[i]});
  return aw_points(p, ring);
}

// N(Delta^{m_1} x ... x Delta^{m_r}) with the cone contraction at (0,...,0)
struct ProductSimplexComplex {
  using Gen = Points;
  std::vector<int> dims;
  Ring rng;

  Ring ring() const { return rng; }
  int deg(const Points& p) const { return (int)p.size() - 1; }
  Element<Points> d(const Points& p) const { return points_boundary(p, rng); }
  Element<Points> h(const Points& p) const {
    Element<Points> r(rng, deg(p) + 1);
    std::vector<int> z(dims.size(), 0);
    if (p[0] == z) return r;
    Points q{z};
    q.insert(q.end(), p.begin(), p.end());
    r.add(q, 1);
    return r;
  }
  Int eps(const Points& p) const { return p.size() == 1 ? 1 : 0; }
  Points base() const { return {std::vector<int>(dims.size(), 0)}; }

  void for_each_gen(int k, const std::function<void(const Points&)>& cb) const {
    Points p;
    std::function<void()> rec = [&] {
      if ((int)p.size() == k + 1) {
        cb(p);
        return;
      }
      std::vector<int> v(dims.size(), 0);
      if (!p.empty()) v = p.back();
      std::vector<int> lo = v;
      std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == dims.size()) {
          if (!p.empty() && v == p.back()) return;
          p.push_back(v);
          rec();
          p.pop_back();
          return;
        }
        for (int a = lo[i]; a <= dims[i]; ++a) {
          v[i] = a;
          pick(i + 1);
        }
        v[i] = lo[i];
      };
      pick(0);
    };
    rec();
  }
};

}  // namespace chainops
