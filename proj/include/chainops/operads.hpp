#pragma once

#include <functional>
#include <vector>

#include "action.hpp"
#include "morphisms.hpp"
#include "simplex.hpp"
#include "surjection.hpp"

namespace chainops {

// ---------------------------------------------------------------- symmetric group operad

inline Perm sigma_compose(const Perm& u, const std::vector<Perm>& vs) {
  if (u.size() != vs.size()) throw InvalidInput("need one permutation per input of u");
  if (!is_perm(u)) throw InvalidInput("u is not a permutation");
  std::vector<int> sizes;
  for (const auto& v : vs) {
    if (v.empty() || !is_perm(v)) throw InvalidInput("inner entry is not a permutation");
    sizes.push_back((int)v.size());
  }
  return compose(direct_sum(vs), block_perm(u, sizes));
}

// ---------------------------------------------------------------- families

// Barratt-Eccles factors as raw permutation sequences, so no group table caps the arity
using PermSeq = std::vector<Perm>;

struct BEFamily {
  using F = PermSeq;
  Ring rng;

  int arity(const F& x) const { return (int)x[0].size(); }
  int deg(const F& x) const { return (int)x.size() - 1; }
  F identity(int n) const { return {identity_perm(n)}; }

  Element<F> d(const F& x) const {
    Element<F> r(rng, deg(x) - 1);
    if (x.size() < 2) return r;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j > 0 && j + 1 < x.size() && x[j - 1] == x[j + 1]) continue;
      F y;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (i != j) y.push_back(x[i]);
      r.add(y, sgn_pow(j));
    }
    return r;
  }
  Element<F> h(const F& x) const {
    Element<F> r(rng, deg(x) + 1);
    Perm e = identity_perm(arity(x));
    if (x[0] == e) return r;
    F y{e};
    y.insert(y.end(), x.begin(), x.end());
    r.add(y, 1);
    return r;
  }
  Element<F> act(const Perm& g, const Element<F>& x) const {
    Element<F> r(x.ring, x.degree);
    for (const auto& [t, c] : x.terms) {
      F y = t;
      for (auto& p : y) p = compose(g, p);
      r.add(y, c);
    }
    return r;
  }
  struct Dec {
    int sign;
    F basis;
    Perm g;
  };
  Dec decompose(const F& x) const {
    Perm gi = inverse(x[0]);
    F b = x;
    for (auto& p : b) p = compose(gi, p);
    return {1, b, x[0]};
  }
  bool is_basis(const F& x) const { return x[0] == identity_perm(arity(x)); }

  void for_each_gen(int n, int k, const std::function<void(const F&)>& cb) const {
    auto perms = all_perms(n);
    F x(k + 1);
    std::function<void(int)> rec = [&](int i) {
      if (i == k + 1) {
        cb(x);
        return;
      }
      for (const auto& p : perms) {
        if (i && p == x[i - 1]) continue;
        x[i] = p;
        rec(i + 1);
      }
    };
    rec(0);
  }
  std::string show(const F& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < x[i].size(); ++j) s += (j ? " " : "") + std::to_string(x[i][j]);
    }
    return s + ")";
  }
};

struct SurjFamily {
  using F = Surj;
  Flavor flavor = Flavor::BF;
  Ring rng;

  int arity(const F& x) const { return surj_arity(x); }
  int deg(const F& x) const { return (int)x.size() - surj_arity(x); }
  F identity(int n) const { return identity_perm(n); }
  Element<F> d(const F& x) const { return surj_boundary(flavor, x, rng); }
  Element<F> h(const F& x) const { return surj_contraction(flavor, x, rng); }
  Element<F> act(const Perm& g, const Element<F>& x) const {
    return SurjComplex((int)g.size(), flavor, rng).act(g, x);
  }
  using Dec = SurjDecomp;
  Dec decompose(const F& x) const { return surj_decompose(flavor, x); }
  bool is_basis(const F& x) const { return is_basis_surj(x); }
  void for_each_gen(int n, int k, const std::function<void(const F&)>& cb) const {
    SurjComplex(n, flavor, rng).for_each_gen(k, cb);
  }
  std::string show(const F& x) const { return tuple_str(x); }
};

// ---------------------------------------------------------------- twisted standard procedure

// O(b) = H_s O(db) on basis tensors, O(g^ b) = O_Sigma(g^) O(tau_g b) on products
template <class Fam>
class TwistedOperad {
 public:
  using F = typename Fam::F;
  using Gen = TGen<F>;  // (x_0; x_1, ..., x_r)

  explicit TwistedOperad(Fam fam) : fam_(std::move(fam)) {
    Fam& fm = fam_;
    map_.ring = fm.rng;
    map_.dom_deg = [&fm](const Gen& x) {
      int k = 0;
      for (const auto& f : x) k += fm.deg(f);
      return k;
    };
    map_.dom_d = [this](const Gen& x) { return domain_d(x); };
    map_.decompose = [&fm](const Gen& x) {
      int r = (int)x.size() - 1;
      Int coeff = 1;
      std::vector<F> b(x.size());
      std::vector<Perm> gs(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) {
        auto dc = fm.decompose(x[j]);
        coeff *= dc.sign;
        b[j] = dc.basis;
        gs[j] = dc.g;
      }
      const Perm& g0 = gs[0];
      if ((int)g0.size() != r) throw InvalidInput("outer arity does not match the number of inputs");
      // tau_g: slot i receives b_{g(i)}
      Gen tb(x.size());
      tb[0] = b[0];
      std::vector<int> degs(r);
      for (int i = 1; i <= r; ++i) {
        tb[i] = b[g0[i - 1]];
        degs[i - 1] = fm.deg(b[i]);
      }
      coeff *= koszul_sign(inverse(g0), degs);
      std::vector<Perm> hs(gs.begin() + 1, gs.end());
      return typename StandardMap<Gen, F, Perm>::Decomp{coeff, tb, sigma_compose(g0, hs)};
    };
    map_.apply = [&fm](const Perm& g, const Element<F>& v) { return fm.act(g, v); };
    map_.rng_h = [&fm](const F& y) { return fm.h(y); };
    map_.degree0 = [&fm](const Gen& x) {
      int s = 0;
      for (std::size_t j = 1; j < x.size(); ++j) s += fm.arity(x[j]);
      return Element<F>::single(fm.rng, 0, fm.identity(s));
    };
  }
  TwistedOperad(const TwistedOperad&) = delete;
  TwistedOperad& operator=(const TwistedOperad&) = delete;

  const Fam& family() const { return fam_; }

  Element<F> operator()(const Gen& x) { return map_(x); }
  Element<F> operator()(const Element<Gen>& x) { return map_(x); }

  // Koszul differential on the domain tensor
  Element<Gen> domain_d(const Gen& x) const {
    int total = 0;
    for (const auto& f : x) total += fam_.deg(f);
    Element<Gen> r(fam_.rng, total - 1);
    int before = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (const auto& [y, c] : fam_.d(x[j]).terms) {
        Gen z = x;
        z[j] = y;
        r.add(z, c * sgn_pow(before));
      }
      before += fam_.deg(x[j]);
    }
    return r;
  }

 private:
  Fam fam_;
  StandardMap<Gen, F, Perm> map_;
};

// ---------------------------------------------------------------- closed forms

inline bool seq_degenerate_perm(const PermSeq& z) {
  for (std::size_t i = 1; i < z.size(); ++i)
    if (z[i] == z[i - 1]) return true;
  return false;
}

// N(O_W) o EZ: shuffle the tuples, apply O_Sigma vertexwise
inline Element<PermSeq> be_compose(const PermSeq& x, const std::vector<PermSeq>& ys, Ring ring = {}) {
  if (x.empty() || x[0].size() != ys.size()) throw InvalidInput("outer arity does not match the number of inputs");
  std::vector<std::vector<int>> idx{full_simplex((int)x.size() - 1)};
  for (const auto& y : ys) {
    if (y.empty()) throw InvalidInput("empty tuple");
    idx.push_back(full_simplex((int)y.size() - 1));
  }
  auto ez = ez_points(idx, ring);
  Element<PermSeq> out(ring, ez.degree);
  for (const auto& [pts, c] : ez.terms) {
    PermSeq z;
    for (const auto& p : pts) {
      std::vector<Perm> vs;
      for (std::size_t i = 0; i < ys.size(); ++i) vs.push_back(ys[i][p[i + 1]]);
      z.push_back(sigma_compose(x[p[0]], vs));
    }
    if (!seq_degenerate_perm(z)) out.add(z, c);
  }
  return out;
}

// a k-division of y: cut positions 0 <= c_1 <= ... <= c_{k-1} <= |y|-1
inline void for_each_division(int len, int k, const std::function<void(const std::vector<int>&)>& cb) {
  std::vector<int> cuts(k > 0 ? k - 1 : 0);
  std::function<void(int, int)> rec = [&](int j, int lo) {
    if (j == (int)cuts.size()) {
      cb(cuts);
      return;
    }
    for (int c = lo; c < len; ++c) {
      cuts[j] = c;
      rec(j + 1, c);
    }
  };
  rec(0, 0);
}

// BF structure map as a signed sum over k_i-divisions of the y_i
inline Element<Surj> surj_compose_bf(const Surj& x, const std::vector<Surj>& ys, Ring ring = {}) {
  int r = surj_arity(x);
  if ((int)ys.size() != r) throw InvalidInput("outer arity does not match the number of inputs");
  auto k = multiplicities(x, r);
  std::vector<int> t(r + 1, 0);
  int deg = (int)x.size() - r;
  for (int i = 1; i <= r; ++i) {
    t[i] = t[i - 1] + surj_arity(ys[i - 1]);
    deg += (int)ys[i - 1].size() - surj_arity(ys[i - 1]);
  }
  Element<Surj> out(ring, deg);
  std::vector<std::vector<int>> cuts(r + 1);
  std::function<void(int)> rec = [&](int i) {
    if (i > r) {
      Surj z;
      std::vector<int> label;  // 0 for an x-caesura, i for an entry of y_i
      std::vector<int> seen(r + 1, 0);
      for (int a : x) {
        const Surj& y = ys[a - 1];
        int j = seen[a]++;
        int lo = j == 0 ? 0 : cuts[a][j - 1];
        int hi = j == k[a] - 1 ? (int)y.size() - 1 : cuts[a][j];
        for (int p = lo; p <= hi; ++p) {
          z.push_back(y[p] + t[a - 1]);
          label.push_back(p == hi && j < k[a] - 1 ? 0 : a);
        }
      }
      // shuffle of all caesuras against the order x, y_1, ..., y_r
      auto cm = caesura_mask(z);
      std::vector<int> word;
      for (std::size_t p = 0; p < z.size(); ++p)
        if (cm[p]) word.push_back(label[p]);
      long long sh = inversions(word);
      out.add(z, sgn_pow(sh));
      return;
    }
    for_each_division((int)ys[i - 1].size(), k[i], [&](const std::vector<int>& c) {
      cuts[i] = c;
      rec(i + 1);
    });
  };
  rec(1);
  return out;
}

// other flavors by conjugating with the flavor isomorphisms
inline Element<Surj> surj_compose(Flavor f, const Surj& x, const std::vector<Surj>& ys, Ring ring = {}) {
  if (f == Flavor::BF) return surj_compose_bf(x, ys, ring);
  Int c = iso_sign(f, Flavor::BF, x);
  for (const auto& y : ys) c *= iso_sign(f, Flavor::BF, y);
  Element<Surj> z = surj_compose_bf(x, ys, ring).scaled(c);
  return iso(Flavor::BF, f, z);
}

inline Element<Surj> partial_compose(Flavor f, int i, const Surj& x, const Surj& y, Ring ring = {}) {
  int r = surj_arity(x);
  if (i < 1 || i > r) throw InvalidInput("composition index out of range");
  std::vector<Surj> ys(r, Surj{1});
  ys[i - 1] = y;
  return surj_compose(f, x, ys, ring);
}

// multilinear extension over a tensor of elements
template <class F, class Fn>
Element<F> multilinear(const std::vector<Element<F>>& xs, Fn&& fn, Ring ring) {
  int deg = 0;
  for (const auto& x : xs) deg += x.degree;
  Element<F> out(ring, deg);
  for (const auto& [t, c] : tensor(xs).terms) {
    std::vector<F> parts(t.begin(), t.end());
    out.add(fn(parts), c);
  }
  return out;
}

// ---------------------------------------------------------------- verifiers

// the block permutation law runs up to lemma_rmax, the other axioms up to rmax
inline Report verify_sigma_operad(int rmax, int smax, int lemma_rmax = 0) {
  Report rep{"symmetric group operad"};
  auto sizes_all = [&](int r, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(r, 1);
    while (true) {
      out.push_back(s);
      int i = 0;
      while (i < r && ++s[i] > bound) s[i++] = 1;
      if (i == r) break;
    }
    return out;
  };
  for (int r = 1; r <= std::max(rmax, lemma_rmax); ++r) {
    auto Sr = all_perms(r);
    for (const auto& sz : sizes_all(r, smax)) {
      // (hg)_*(s) = h_*(s) g_*(s_h)
      for (const auto& h : Sr)
        for (const auto& g : Sr) {
          std::vector<int> sh(r);
          for (int i = 0; i < r; ++i) sh[i] = sz[h[i] - 1];
          ++rep.checked;
          if (block_perm(compose(h, g), sz) != compose(block_perm(h, sz), block_perm(g, sh)))
            rep.fail("block permutation law fails for h=" + tuple_str(h) + " g=" + tuple_str(g));
        }
      if (r > rmax) continue;
      // the second factorization and outer equivariance
      std::vector<std::vector<Perm>> vsets{{}};
      for (int i = 0; i < r; ++i) {
        std::vector<std::vector<Perm>> nx;
        for (const auto& v : vsets)
          for (const auto& p : all_perms(sz[i])) {
            auto w = v;
            w.push_back(p);
            nx.push_back(w);
          }
        vsets = std::move(nx);
      }
      for (const auto& u : Sr)
        for (const auto& vs : vsets) {
          Perm lhs = sigma_compose(u, vs);
          std::vector<Perm> vu(r);
          for (int i = 0; i < r; ++i) vu[i] = vs[u[i] - 1];
          ++rep.checked;
          if (lhs != compose(block_perm(u, sz), direct_sum(vu)))
            rep.fail("second factorization fails at u=" + tuple_str(u));
          for (const auto& g : Sr) {
            std::vector<Perm> vg(r);
            for (int i = 0; i < r; ++i) vg[i] = vs[g[i] - 1];
            std::vector<int> sg(r);
            for (int i = 0; i < r; ++i) sg[i] = sz[g[i] - 1];
            ++rep.checked;
            if (sigma_compose(compose(g, u), vs) != compose(block_perm(g, sz), sigma_compose(u, vg)))
              rep.fail("equivariance in the outer input fails at g=" + tuple_str(g));
          }
        }
    }
  }
  // associativity: u in S_r, v_i in S_{r_i}, w_ij in S_{s_ij <= 2}; r_i <= 2 once r = 3
  for (int r = 1; r <= std::min(rmax, 3); ++r)
    for (const auto& ri : sizes_all(r, r < 3 ? smax : 2)) {
      int nw = 0;
      for (int a : ri) nw += a;
      std::vector<int> sij(nw, 1);
      while (true) {
        std::function<void(int, std::vector<Perm>&)> rec = [&](int j, std::vector<Perm>& ps) {
          // ps = u, v_1..v_r, w_11..
          int total = 1 + r + nw;
          if (j == total) {
            const Perm& u = ps[0];
            std::vector<Perm> vs(ps.begin() + 1, ps.begin() + 1 + r), ws(ps.begin() + 1 + r, ps.end());
            std::vector<Perm> inner;
            int off = 0;
            for (int i = 0; i < r; ++i) {
              inner.push_back(sigma_compose(vs[i], std::vector<Perm>(ws.begin() + off, ws.begin() + off + ri[i])));
              off += ri[i];
            }
            ++rep.checked;
            if (sigma_compose(u, inner) != sigma_compose(sigma_compose(u, vs), ws))
              rep.fail("associativity fails at u=" + tuple_str(u));
            return;
          }
          int n = j == 0 ? r : j <= r ? ri[j - 1] : sij[j - 1 - r];
          for (const auto& p : all_perms(n)) {
            ps.push_back(p);
            rec(j + 1, ps);
            ps.pop_back();
          }
        };
        std::vector<Perm> ps;
        rec(0, ps);
        int i = 0;
        while (i < nw && ++sij[i] > 2) sij[i++] = 1;
        if (i == nw) break;
      }
    }
  return rep;
}

// enumerate tensors of generators with the given arities and total degree <= max_total
template <class Fam>
void for_each_tensor(const Fam& fam, const std::vector<int>& arities, int max_each, int max_total,
                     const std::function<void(const TGen<typename Fam::F>&)>& cb) {
  TGen<typename Fam::F> xs;
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int budget) {
    if (j == arities.size()) {
      cb(xs);
      return;
    }
    for (int k = 0; k <= std::min(max_each, budget); ++k)
      fam.for_each_gen(arities[j], k, [&](const typename Fam::F& f) {
        xs.push_back(f);
        rec(j + 1, budget - k);
        xs.pop_back();
      });
  };
  rec(0, max_total);
}

// composition of an element-level tensor through a generator-level map
template <class F>
Element<F> compose_elements(const std::function<Element<F>(const TGen<F>&)>& op, const std::vector<Element<F>>& xs,
                            Ring ring) {
  int deg = 0;
  for (const auto& x : xs) deg += x.degree;
  Element<F> out(ring, deg);
  for (const auto& [t, c] : tensor(xs).terms) out.add(op(t), c);
  return out;
}

// chain map, both equivariance formulas, Im(H) on basis tensors, and agreement with the engine
template <class Fam>
Report verify_structure_map(TwistedOperad<Fam>& engine, const std::function<Element<typename Fam::F>(const TGen<typename Fam::F>&)>& closed,
                            const std::vector<int>& arities, int max_each, int max_total, const std::string& name) {
  using F = typename Fam::F;
  const Fam& fam = engine.family();
  Report rep{name};
  int r = arities[0];
  std::vector<int> sizes(arities.begin() + 1, arities.end());
  auto show = [&](const TGen<F>& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " ; " : "") + fam.show(x[i]);
    return s;
  };
  for_each_tensor(fam, arities, max_each, max_total, [&](const TGen<F>& x) {
    auto v = closed(x);
    ++rep.checked;
    if (!(v == engine(x))) rep.fail("closed form differs from the recursive map at " + show(x));
    Element<F> dv(fam.rng, v.degree - 1);
    for (const auto& [t, c] : v.terms) dv.add(fam.d(t), c);
    Element<F> vd(fam.rng, v.degree - 1);
    for (const auto& [t, c] : engine.domain_d(x).terms) vd.add(closed(t), c);
    ++rep.checked;
    if (!(dv == vd)) rep.fail("not a chain map at " + show(x));
    bool basis = true;
    for (const auto& f : x) basis = basis && fam.is_basis(f);
    if (basis && v.degree > 0) {
      Element<F> hv(fam.rng, v.degree + 1);
      for (const auto& [t, c] : v.terms) hv.add(fam.h(t), c);
      ++rep.checked;
      if (!hv.is_zero()) rep.fail("basis tensor image not in Im(H) at " + show(x));
    }
    // O(g x_0; h_i y_i) = O_Sigma(g; h_i) O(tau_g(x_0; y_i))
    for (const auto& g : all_perms(r)) {
      std::vector<Perm> hs;
      for (int s : sizes) {
        auto ps = all_perms(s);
        hs.push_back(ps[(g[0] + s) % ps.size()]);
      }
      std::vector<Element<F>> parts{fam.act(g, Element<F>::single(fam.rng, fam.deg(x[0]), x[0]))};
      for (int i = 0; i < r; ++i) parts.push_back(fam.act(hs[i], Element<F>::single(fam.rng, fam.deg(x[i + 1]), x[i + 1])));
      auto lhs = compose_elements<F>(closed, parts, fam.rng);
      TGen<F> tx{x[0]};
      std::vector<int> degs(r);
      for (int i = 0; i < r; ++i) {
        tx.push_back(x[g[i]]);
        degs[i] = fam.deg(x[i + 1]);
      }
      auto rhs = fam.act(sigma_compose(g, hs), closed(tx).scaled(koszul_sign(inverse(g), degs)));
      ++rep.checked;
      if (!(lhs == rhs)) rep.fail("twisted equivariance fails at " + show(x) + " g=" + tuple_str(g));
    }
  });
  return rep;
}

// associativity with the Koszul sign of the reshuffle sigma;
// shape: r, then r_1..r_r, then the s_ij in order
template <class Fam>
Report verify_associativity(const Fam& fam, const std::function<Element<typename Fam::F>(const TGen<typename Fam::F>&)>& op,
                            int r, const std::vector<int>& ri, const std::vector<int>& sij, int max_each, int max_total,
                            const std::string& name) {
  using F = typename Fam::F;
  Report rep{name};
  std::vector<int> arities{r};
  arities.insert(arities.end(), ri.begin(), ri.end());
  arities.insert(arities.end(), sij.begin(), sij.end());
  for_each_tensor(fam, arities, max_each, max_total, [&](const TGen<F>& all) {
    const F& u = all[0];
    std::vector<F> vs(all.begin() + 1, all.begin() + 1 + r), ws(all.begin() + 1 + r, all.end());
    // top: O(u; O(v_i; w_i.))
    std::vector<Element<F>> inner{Element<F>::single(fam.rng, fam.deg(u), u)};
    int off = 0;
    for (int i = 0; i < r; ++i) {
      TGen<F> t{vs[i]};
      t.insert(t.end(), ws.begin() + off, ws.begin() + off + ri[i]);
      inner.push_back(op(t));
      off += ri[i];
    }
    auto top = compose_elements<F>(op, inner, fam.rng);
    // bottom: sign * O(O(u; v); w)
    long long e = 0, wdeg = 0;
    off = 0;
    for (int i = 0; i < r; ++i) {
      e += (long long)fam.deg(vs[i]) * wdeg;
      for (int j = 0; j < ri[i]; ++j) wdeg += fam.deg(ws[off + j]);
      off += ri[i];
    }
    TGen<F> uv{u};
    uv.insert(uv.end(), vs.begin(), vs.end());
    std::vector<Element<F>> outer{op(uv)};
    for (const auto& w : ws) outer.push_back(Element<F>::single(fam.rng, fam.deg(w), w));
    auto bottom = compose_elements<F>(op, outer, fam.rng).scaled(sgn_pow(e));
    ++rep.checked;
    if (!(top == bottom)) {
      std::string s;
      for (std::size_t i = 0; i < all.size(); ++i) s += (i ? " ; " : "") + fam.show(all[i]);
      rep.fail("associativity fails at " + s);
    }
  });
  return rep;
}

// iterated partial compositions front to back reproduce the full composite
inline Report verify_partials(Flavor f, const std::vector<int>& arities, int max_each, int max_total) {
  SurjFamily fam{f, {}};
  Report rep{"iterated partial compositions (" + flavor_name(f) + ")"};
  for_each_tensor(fam, arities, max_each, max_total, [&](const TGen<Surj>& x) {
    std::vector<Surj> ys(x.begin() + 1, x.end());
    auto full = surj_compose(f, x[0], ys);
    Element<Surj> cur = Element<Surj>::single(fam.rng, fam.deg(x[0]), x[0]);
    int pos = 1;
    for (const auto& y : ys) {
      Element<Surj> nx(fam.rng, cur.degree + fam.deg(y));
      for (const auto& [t, c] : cur.terms) nx.add(partial_compose(f, pos, t, y), c);
      cur = std::move(nx);
      pos += surj_arity(y);
    }
    ++rep.checked;
    if (!(cur == full)) rep.fail("partials differ from the full composite at x=" + tuple_str(x[0]));
  });
  return rep;
}

// TR o O_E = O_S o (TR (x) ... (x) TR)
inline Report verify_tr_square(Flavor f, const std::vector<int>& arities, int max_each, int max_total) {
  BEFamily fam;
  Report rep{"TR square (" + flavor_name(f) + ")"};
  for_each_tensor(fam, arities, max_each, max_total, [&](const TGen<PermSeq>& x) {
    std::vector<PermSeq> ys(x.begin() + 1, x.end());
    auto be = be_compose(x[0], ys);
    Element<Surj> lhs(fam.rng, be.degree);
    for (const auto& [t, c] : be.terms) lhs.add(table_reduction(f, t), c);
    std::vector<Element<Surj>> parts;
    for (const auto& t : x) parts.push_back(table_reduction(f, t));
    Element<Surj> rhs(fam.rng, be.degree);
    for (const auto& [t, c] : tensor(parts).terms)
      rhs.add(surj_compose(f, t[0], std::vector<Surj>(t.begin() + 1, t.end())), c);
    ++rep.checked;
    if (!(lhs == rhs)) rep.fail("TR square fails at " + fam.show(x[0]));
  });
  return rep;
}

// adjoint of the coendomorphism composite evaluated on Delta^m:
// (-1)^{|x| sum|y_i|} sum over a_1 (x) ... (x) a_r in Phi(x (x) Delta^m) of (x)_i Phi(y_i (x) a_i),
// with the evaluation sign (-1)^{sum_{i<j} |a_i||y_j|}
inline Element<SimplexTensor> coend_composite(const Surj& x, const std::vector<Surj>& ys, int m, Ring ring = {}) {
  int r = surj_arity(x);
  int dx = (int)x.size() - r;
  std::vector<int> dy(r);
  int sy = 0;
  for (int i = 0; i < r; ++i) {
    dy[i] = (int)ys[i].size() - surj_arity(ys[i]);
    sy += dy[i];
  }
  Element<SimplexTensor> out(ring, dx + sy + m);
  for (const auto& [a, c] : bf_action(x, m, ring).terms) {
    long long e = (long long)dx * sy;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) e += (long long)((int)a[i].size() - 1) * dy[j];
    std::vector<Element<SimplexTensor>> parts;
    for (int i = 0; i < r; ++i) parts.push_back(push_vertices(bf_action(ys[i], (int)a[i].size() - 1, ring), a[i]));
    for (const auto& [t, ct] : tensor(parts).terms) {
      SimplexTensor flat;
      for (const auto& blk : t) flat.insert(flat.end(), blk.begin(), blk.end());
      out.add(flat, c * ct * sgn_pow(e));
    }
  }
  return out;
}

inline Report verify_coend_square(const std::vector<int>& arities, int max_each, int max_total, int max_m) {
  SurjFamily fam{Flavor::BF, {}};
  Report rep{"surjection to coendomorphism square"};
  for_each_tensor(fam, arities, max_each, max_total, [&](const TGen<Surj>& x) {
    std::vector<Surj> ys(x.begin() + 1, x.end());
    auto comp = surj_compose_bf(x[0], ys);
    for (int m = 0; m <= max_m; ++m) {
      auto lhs = bf_action(comp, m);
      auto rhs = coend_composite(x[0], ys, m);
      ++rep.checked;
      if (!(lhs == rhs)) rep.fail("square fails at x=" + tuple_str(x[0]) + " m=" + std::to_string(m));
    }
  });
  return rep;
}

}  // namespace chainops
