#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minimal.hpp"
#include "morphisms.hpp"
#include "simplex.hpp"
#include "surjection.hpp"

namespace chainops {

using SimplexTensor = TGen<Face>;

// one monomial term of Phi(x (x) Delta^m): cut points 0 = m_0 <= ... <= m_N = m
struct MonomialTerm {
  int sign = 0;  // 0 when the term is degenerate
  SimplexTensor tensor;
};

inline MonomialTerm bf_monomial(const Surj& x, const std::vector<int>& cuts) {
  int n = surj_arity(x);
  auto cm = caesura_mask(x);
  MonomialTerm out;
  out.tensor.assign(n, {});
  std::vector<int> labels;
  long long pos = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    int a = cuts[j], b = cuts[j + 1];
    Face& F = out.tensor[x[j] - 1];
    for (int v = a; v <= b; ++v) {
      if (!F.empty() && F.back() >= v) return out;
      F.push_back(v);
    }
    int emit = b - a + 1 - (cm[j] ? 0 : 1);
    labels.insert(labels.end(), emit, x[j]);
    if (cm[j]) pos += b;
  }
  out.sign = sgn_pow(inversions(labels) + pos);
  return out;
}

// closed formula: sum over the monomials of the (n+k)-fold multidiagonal
inline Element<SimplexTensor> bf_action(const Surj& x, int m, Ring ring = {}) {
  int n = surj_arity(x);
  int N = (int)x.size();
  Element<SimplexTensor> out(ring, (int)x.size() - n + m);
  std::vector<int> cuts(N + 1, 0);
  cuts[N] = m;
  std::function<void(int)> rec = [&](int j) {
    if (j == N) {
      auto t = bf_monomial(x, cuts);
      if (t.sign) out.add(t.tensor, t.sign);
      return;
    }
    for (int c = cuts[j - 1]; c <= m; ++c) {
      cuts[j] = c;
      rec(j + 1);
    }
  };
  if (N == 1) {
    out.add(SimplexTensor{full_simplex(m)}, 1);
    return out;
  }
  rec(1);
  return out;
}

inline Element<SimplexTensor> bf_action(const Element<Surj>& x, int m) {
  Element<SimplexTensor> r(x.ring, x.degree + m);
  for (const auto& [s, c] : x.terms) r.add(bf_action(s, m, x.ring), c);
  return r;
}

// every cut sequence whose monomial is the given tensor; a single one for nonzero terms
inline std::vector<std::vector<int>> recover_cuts(const Surj& x, const SimplexTensor& t, int m) {
  int n = surj_arity(x);
  int N = (int)x.size();
  std::vector<std::vector<int>> out;
  if ((int)t.size() != n) return out;
  auto cm = caesura_mask(x);
  std::vector<int> cuts(N + 1, 0), ptr(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == N) {
      if (cuts[N] == m) out.push_back(cuts);
      return;
    }
    const Face& F = t[x[j] - 1];
    int& p = ptr[x[j] - 1];
    int a = cuts[j];
    if (p >= (int)F.size() || F[p] != a) return;
    int p0 = p;
    for (int b = a; p0 + (b - a) < (int)F.size() && F[p0 + (b - a)] == b; ++b) {
      p = p0 + (b - a) + 1;
      if (!cm[j] && p != (int)F.size()) continue;
      cuts[j + 1] = b;
      rec(j + 1);
    }
    p = p0;
  };
  rec(0);
  return out;
}

// left action of a permutation on a tensor of faces, with the Koszul sign
inline Element<SimplexTensor> permute_faces(const Perm& g, const Element<SimplexTensor>& x) {
  return permute_tensor<Face>(g, x, [](const Face& f) { return (int)f.size() - 1; });
}

// ---------------------------------------------------------------- functorial recursion

// generator x (x) sigma with sigma a face of some simplex
using ActGen = std::pair<Surj, Face>;
using ActOp = std::pair<Perm, Face>;

class FunctorialAction {
 public:
  explicit FunctorialAction(int n, Ring ring = {}) : n_(n), ring_(ring), T_(SimplexComplex(0, ring), n) {
    using M = StandardMap<ActGen, SimplexTensor, ActOp>;
    map_.ring = ring;
    map_.dom_deg = [n](const ActGen& g) { return (int)g.first.size() - n + (int)g.second.size() - 1; };
    map_.dom_d = [n, ring](const ActGen& g) {
      int dx = (int)g.first.size() - n;
      Element<ActGen> r(ring, dx + (int)g.second.size() - 2);
      for (const auto& [y, c] : surj_boundary(Flavor::BF, g.first, ring).terms) r.add({y, g.second}, c);
      if (g.second.size() > 1)
        for (const auto& [f, c] : face_boundary(g.second, ring).terms) r.add({g.first, f}, c * sgn_pow(dx));
      return r;
    };
    map_.decompose = [](const ActGen& g) {
      auto dc = surj_decompose(Flavor::BF, g.first);
      return M::Decomp{dc.sign, {dc.basis, full_simplex((int)g.second.size() - 1)}, {dc.g, g.second}};
    };
    map_.apply = [](const ActOp& op, const Element<SimplexTensor>& v) {
      return permute_faces(op.first, push_vertices(v, op.second));
    };
    map_.rng_h = [T = T_](const SimplexTensor& t) { return T.h(t); };
    map_.degree0 = [n, ring](const ActGen&) {
      return Element<SimplexTensor>::single(ring, 0, SimplexTensor(n, Face{0}));
    };
  }

  Element<SimplexTensor> operator()(const Surj& x, int m) { return map_(ActGen{x, full_simplex(m)}); }
  Element<SimplexTensor> operator()(const ActGen& g) { return map_(g); }

 private:
  int n_;
  Ring ring_;
  TensorComplex<SimplexComplex> T_;
  StandardMap<ActGen, SimplexTensor, ActOp> map_;
};

// the domain differential d(x (x) Delta^m) pushed through Phi, for chain-map checks
inline Element<SimplexTensor> bf_action_of_boundary(const Surj& x, int m, Ring ring = {}) {
  int n = surj_arity(x);
  int dx = (int)x.size() - n;
  Element<SimplexTensor> r(ring, dx + m - 1);
  r.add(bf_action(surj_boundary(Flavor::BF, x, ring), m), 1);
  if (m > 0) {
    for (int j = 0; j <= m; ++j) {
      std::vector<int> vmap(m);
      for (int v = 0; v < m; ++v) vmap[v] = face_inclusion(j, v);
      r.add(push_vertices(bf_action(x, m - 1, ring), vmap), sgn_pow(dx + j));
    }
  }
  return r;
}

// ---------------------------------------------------------------- composites

inline Element<SimplexTensor> action_surj(Flavor f, const Element<Surj>& x, int m) {
  return bf_action(iso(f, Flavor::BF, x), m);
}

inline Element<SimplexTensor> action_ES(const Group& S, const Element<Tuple>& X, int m) {
  return bf_action(table_reduction(Flavor::BF, S, X), m);
}

// M_* -> N(EC_p) -> N(E Sigma_p) -> S^bf(p), reduced mod p, then Phi
inline Element<SimplexTensor> action_M(int p, const MGen& y, int m) {
  Ring Fp = Ring::field(p);
  const Group& C = cyc_group(p);
  const Group& S = sym_group(p);
  std::vector<int> incl(p);
  for (int i = 0; i < p; ++i) incl[i] = S.code(C.perm(i));
  auto x = induced_map(incl, phi_M(p, y, Fp));
  return bf_action(table_reduction(Flavor::BF, S, x), m);
}

inline Int steenrod_constant(int m, int p) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("p must be an odd prime");
  if (m < 0) throw InvalidInput("m must be >= 0");
  long long e = (long long)m * (m - 1) / 2 * ((long long)p * (p - 1) / 2);
  int q = (p - 1) / 2;
  Int f = 1;
  for (int i = 2; i <= q; ++i) f *= i;
  Int c = boost::multiprecision::pow(f, m) * sgn_pow(e);
  return Ring::field(p).norm(c);
}

// ---------------------------------------------------------------- cochains

// a finite simplicial set given by its nondegenerate simplices and ordered faces;
// a face missing from the table counts as degenerate
struct FaceTable {
  struct Simplex {
    int dim = 0;
    std::vector<std::string> faces;
  };
  std::map<std::string, Simplex> simplices;

  const Simplex* find(const std::string& id) const {
    auto it = simplices.find(id);
    return it == simplices.end() ? nullptr : &it->second;
  }

  // the face of c spanned by the vertex subset `keep` of Delta^{dim c}; empty if degenerate
  std::string face(const std::string& c, const Face& keep) const {
    const Simplex* s = find(c);
    if (!s) return {};
    std::vector<int> verts = full_simplex(s->dim);
    std::string cur = c;
    // delete vertices from the top so earlier indices stay valid
    for (int i = (int)verts.size() - 1; i >= 0; --i) {
      if (std::find(keep.begin(), keep.end(), verts[i]) != keep.end()) continue;
      const Simplex* cs = find(cur);
      if (!cs || cs->dim == 0 || i >= (int)cs->faces.size()) return {};
      cur = cs->faces[i];
      if (!find(cur)) return {};
    }
    return cur;
  }

  Element<std::string> boundary(const std::string& c, Ring ring = {}) const {
    const Simplex* s = find(c);
    Element<std::string> r(ring, s ? s->dim - 1 : -1);
    if (!s || s->dim == 0) return r;
    for (std::size_t i = 0; i < s->faces.size(); ++i)
      if (find(s->faces[i])) r.add(s->faces[i], sgn_pow(i));
    return r;
  }
};

// a cochain of degree -q, given by its values on q-simplices
struct Cochain {
  int q = 0;
  std::map<std::string, Int> values;

  Int operator()(const FaceTable& X, const std::string& c) const {
    const auto* s = X.find(c);
    if (!s || s->dim != q) return 0;
    auto it = values.find(c);
    return it == values.end() ? Int(0) : it->second;
  }
};

// (delta a)(c) = (-1)^{q+1} a(dc)
inline Cochain coboundary(const FaceTable& X, const Cochain& a) {
  Cochain r;
  r.q = a.q + 1;
  for (const auto& [id, s] : X.simplices) {
    if (s.dim != r.q) continue;
    Int v = 0;
    for (const auto& [f, c] : X.boundary(id).terms) v += c * a(X, f);
    v *= sgn_pow(a.q + 1);
    if (v != 0) r.values[id] = v;
  }
  return r;
}

// (-1)^{|x|(1+|c|)} < a_1 (x) ... (x) a_n, Phi(x (x) c) >, the pairing carrying
// (-1)^{l(l-1)/2} with l the number of odd-degree factors
inline Int cochain_evaluate(const Surj& x, const std::vector<Cochain>& alphas, const FaceTable& X,
                            const std::string& c, Ring ring = {}) {
  int n = surj_arity(x);
  if ((int)alphas.size() != n) throw InvalidInput("need one cochain per input");
  const auto* s = X.find(c);
  if (!s) throw InvalidInput("unknown simplex '" + c + "'");
  int deg_x = (int)x.size() - n;
  int total = 0;
  for (const auto& a : alphas) total += a.q;
  if (total != deg_x + s->dim) return 0;
  Int sum = 0;
  for (const auto& [t, coef] : bf_action(x, s->dim, ring).terms) {
    Int v = coef;
    int odd = 0;
    for (int j = 0; j < n && v != 0; ++j) {
      int dj = (int)t[j].size() - 1;
      if (dj != alphas[j].q) {
        v = 0;
        break;
      }
      std::string fj = X.face(c, t[j]);
      if (fj.empty()) {
        v = 0;
        break;
      }
      v *= alphas[j](X, fj);
      if (dj % 2) ++odd;
    }
    if (v == 0) continue;
    sum += v * sgn_pow((long long)odd * (odd - 1) / 2);
  }
  sum *= sgn_pow((long long)deg_x * (1 + s->dim));
  return ring.norm(sum);
}

inline Cochain cochain_operation(const Surj& x, const std::vector<Cochain>& alphas, const FaceTable& X,
                                 Ring ring = {}) {
  int n = surj_arity(x);
  int total = 0;
  for (const auto& a : alphas) total += a.q;
  Cochain r;
  r.q = total - ((int)x.size() - n);
  for (const auto& [id, s] : X.simplices) {
    if (s.dim != r.q) continue;
    Int v = cochain_evaluate(x, alphas, X, id, ring);
    if (v != 0) r.values[id] = v;
  }
  return r;
}

// the standard simplex Delta^d as a face table, ids are vertex strings like "013"
inline FaceTable simplex_face_table(int d) {
  FaceTable X;
  SimplexComplex D(d);
  auto name = [](const Face& f) {
    std::string s;
    for (int v : f) s += std::to_string(v) + (f.size() > 1 && v > 9 ? "." : "");
    return s;
  };
  for (int k = 0; k <= d; ++k)
    D.for_each_gen(k, [&](const Face& f) {
      FaceTable::Simplex s;
      s.dim = k;
      if (k > 0)
        for (std::size_t i = 0; i < f.size(); ++i) {
          Face g = f;
          g.erase(g.begin() + i);
          s.faces.push_back(name(g));
        }
      X.simplices[name(f)] = s;
    });
  return X;
}

}  // namespace chainops
