#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "maclane.hpp"
#include "surjection.hpp"

namespace chainops {

// sign carried by a surjection summand in each flavor, relative to BF
// (the BF -> AJ isomorphism is p(x)c(x), so that is what AJ summands carry)
inline int tr_sign(Flavor f, const Surj& x) {
  switch (f) {
    case Flavor::AJ: return sign_p(x) * sign_c(x);
    case Flavor::MS: return sign_c(x);
    default: return 1;
  }
}

// TR of a table of permutations (rows g_0..g_k), summed over partitions
inline Element<Surj> table_reduction(Flavor f, const std::vector<Perm>& rows, Ring ring = {}) {
  int k = (int)rows.size() - 1;
  int n = (int)rows[0].size();
  Element<Surj> out(ring, k);
  Surj seq;
  std::vector<char> removed(n + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int budget) {
    if (j == k) {
      std::size_t mark = seq.size();
      for (int v : rows[k])
        if (!removed[v]) seq.push_back(v);
      bool ok = true;
      for (std::size_t i = 1; i < seq.size() && ok; ++i) ok = seq[i] != seq[i - 1];
      if (ok) out.add(seq, tr_sign(f, seq));
      seq.resize(mark);
      return;
    }
    std::vector<int> avail;
    for (int v : rows[j])
      if (!removed[v]) avail.push_back(v);
    // a_j - 1 entries get used up; the remaining budget keeps a_k > 1
    for (int a = 1; a - 1 <= budget && a <= (int)avail.size(); ++a) {
      std::size_t mark = seq.size();
      for (int i = 0; i < a; ++i) seq.push_back(avail[i]);
      if (mark > 0 && seq[mark] == seq[mark - 1]) {
        seq.resize(mark);
        continue;
      }
      for (int i = 0; i < a - 1; ++i) removed[avail[i]] = 1;
      rec(j + 1, budget - (a - 1));
      for (int i = 0; i < a - 1; ++i) removed[avail[i]] = 0;
      seq.resize(mark);
    }
  };
  rec(0, n - 2);
  return out;
}

inline Element<Surj> table_reduction(Flavor f, const Group& S, const Tuple& X, Ring ring = {}) {
  std::vector<Perm> rows;
  for (int c : X) rows.push_back(S.perm(c));
  return table_reduction(f, rows, ring);
}

inline Element<Surj> table_reduction(Flavor f, const Group& S, const Element<Tuple>& X) {
  Element<Surj> r(X.ring, X.degree);
  for (const auto& [t, c] : X.terms) r.add(table_reduction(f, S, t, X.ring), c);
  return r;
}

// ---------------------------------------------------------------- prisms

// vertex v of Prism(x): v[l] indexes the occurrence of value l; gamma lists values by position
inline Perm prism_vertex(const Surj& x, const std::vector<int>& v) {
  int n = (int)v.size() - 1;
  std::vector<std::pair<int, int>> pos;
  for (int l = 1; l <= n; ++l) {
    int seen = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] == l && seen++ == v[l]) {
        pos.push_back({(int)j, l});
        break;
      }
  }
  std::sort(pos.begin(), pos.end());
  Perm g;
  for (auto& [p, l] : pos) g.push_back(l);
  return g;
}

// the simplex of Prism(x) named by an edge-path word of values
inline std::vector<Perm> prism_simplex(const Surj& x, const std::vector<int>& word) {
  int n = surj_arity(x);
  std::vector<int> v(n + 1, 0);
  std::vector<Perm> out{prism_vertex(x, v)};
  for (int l : word) {
    ++v[l];
    out.push_back(prism_vertex(x, v));
  }
  return out;
}

inline std::vector<int> caesura_word(const Surj& x) {
  std::vector<int> w;
  for (int j : caesuras(x)) w.push_back(x[j]);
  return w;
}

inline std::vector<Perm> fundamental_simplex(const Surj& x) { return prism_simplex(x, caesura_word(x)); }

inline std::vector<int> base_word(const Surj& x) {
  auto w = caesura_word(x);
  std::sort(w.begin(), w.end());
  return w;
}

// every maximal simplex of Prism(x) as (EZ sign, word)
inline std::vector<std::pair<int, std::vector<int>>> prism_words(const Surj& x) {
  auto w = base_word(x);
  std::vector<std::pair<int, std::vector<int>>> out;
  do out.push_back({sgn_pow(inversions(w)), w});
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int pr_sign(Flavor f, const Surj& x) {
  switch (f) {
    case Flavor::AJ: return sign_p(x);
    case Flavor::BF: return sign_c(x);
    default: return 1;
  }
}

inline Element<Tuple> prism_map(Flavor f, const Group& S, const Surj& x, Ring ring = {}) {
  int n = surj_arity(x);
  Element<Tuple> out(ring, (int)x.size() - n);
  int s = pr_sign(f, x);
  for (const auto& [e, w] : prism_words(x)) {
    Tuple t;
    for (const auto& g : prism_simplex(x, w)) t.push_back(S.code(g));
    if (!seq_degenerate(t)) out.add(t, s * e);
  }
  return out;
}

inline Element<Tuple> prism_map(Flavor f, const Group& S, const Element<Surj>& x) {
  Element<Tuple> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) r.add(prism_map(f, S, t, x.ring), c);
  return r;
}

// ---------------------------------------------------------------- recursive twins

inline StandardMap<Tuple, Surj, int> standard_TR(Flavor f, int n, Ring ring = {}) {
  const Group& S = sym_group(n);
  EGComplex E(S, ring);
  SurjComplex T(n, f, ring);
  StandardMap<Tuple, Surj, int> m;
  m.ring = ring;
  m.dom_deg = [](const Tuple& t) { return (int)t.size() - 1; };
  m.dom_d = [E](const Tuple& t) { return E.d(t); };
  m.decompose = [E](const Tuple& t) {
    auto dc = eg_decompose(E, t);
    return StandardMap<Tuple, Surj, int>::Decomp{dc.coeff, dc.basis, dc.op};
  };
  m.apply = [T, &S](const int& g, const Element<Surj>& x) { return T.act(S.perm(g), x); };
  m.rng_h = [T](const Surj& x) { return T.h(x); };
  m.degree0 = [T, ring](const Tuple&) { return Element<Surj>::single(ring, 0, T.base()); };
  return m;
}

inline StandardMap<Surj, Tuple, Perm> standard_PR(Flavor f, int n, Ring ring = {}) {
  const Group& S = sym_group(n);
  EGComplex E(S, ring);
  SurjComplex T(n, f, ring);
  StandardMap<Surj, Tuple, Perm> m;
  m.ring = ring;
  m.dom_deg = [n](const Surj& x) { return (int)x.size() - n; };
  m.dom_d = [T](const Surj& x) { return T.d(x); };
  m.decompose = [f](const Surj& x) {
    auto dc = surj_decompose(f, x);
    return StandardMap<Surj, Tuple, Perm>::Decomp{dc.sign, dc.basis, dc.g};
  };
  m.apply = [E, &S](const Perm& g, const Element<Tuple>& x) { return E.act(S.code(g), x); };
  m.rng_h = [E](const Tuple& t) { return E.h(t); };
  m.degree0 = [ring](const Surj&) { return Element<Tuple>::single(ring, 0, {0}); };
  return m;
}

}  // namespace chainops
