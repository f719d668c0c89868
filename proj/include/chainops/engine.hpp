#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"

namespace chainops {

// A contracted complex C provides
//   Gen, ring(), deg(g), d(g), h(g), eps(g) (degree 0 only), base()
// and optionally for_each_gen(deg, cb), is_basis(g), actors(), act(a, g).

template <class C>
concept Contracted = requires(const C& c, const typename C::Gen& g) {
  { c.ring() } -> std::convertible_to<Ring>;
  { c.deg(g) } -> std::convertible_to<int>;
  { c.d(g) } -> std::convertible_to<Element<typename C::Gen>>;
  { c.h(g) } -> std::convertible_to<Element<typename C::Gen>>;
  { c.eps(g) } -> std::convertible_to<Int>;
  { c.base() } -> std::convertible_to<typename C::Gen>;
};

template <class C>
Element<typename C::Gen> apply_d(const C& c, const Element<typename C::Gen>& x) {
  return linear<typename C::Gen>(x, c.ring(), x.degree - 1, [&](const auto& g) { return c.d(g); });
}

template <class C>
Element<typename C::Gen> apply_h(const C& c, const Element<typename C::Gen>& x) {
  return linear<typename C::Gen>(x, c.ring(), x.degree + 1, [&](const auto& g) { return c.h(g); });
}

// rho = iota o eps
template <class C>
Element<typename C::Gen> apply_rho(const C& c, const Element<typename C::Gen>& x) {
  Element<typename C::Gen> r(c.ring(), 0);
  if (x.degree != 0) return r;
  Int s = 0;
  for (const auto& [g, a] : x.terms) s += a * c.eps(g);
  r.add(c.base(), s);
  return r;
}

// ---------------------------------------------------------------- tensor products

template <class G>
using TGen = std::vector<G>;

template <class G>
Element<TGen<G>> tensor(const std::vector<Element<G>>& xs) {
  Ring ring = xs.empty() ? Ring{} : xs[0].ring;
  int deg = 0;
  for (const auto& x : xs) deg += x.degree;
  Element<TGen<G>> r(ring, deg);
  if (xs.empty()) return r;
  std::vector<typename Element<G>::Map::const_iterator> it(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) return r;
    it[i] = xs[i].terms.begin();
  }
  TGen<G> t(xs.size());
  while (true) {
    Int c = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      t[i] = it[i]->first;
      c *= it[i]->second;
    }
    r.add(t, c);
    std::size_t i = xs.size();
    while (i > 0) {
      --i;
      if (++it[i] != xs[i].terms.end()) break;
      it[i] = xs[i].terms.begin();
      if (i == 0) return r;
    }
  }
}

// C_1 (x) ... (x) C_k, all factors share a generator type
template <Contracted C>
struct TensorComplex {
  using Gen = TGen<typename C::Gen>;
  std::vector<C> factors;

  explicit TensorComplex(std::vector<C> f) : factors(std::move(f)) {
    if (factors.empty()) throw InvalidInput("tensor of no factors");
  }
  TensorComplex(const C& c, int k) : factors(k, c) {
    if (k < 1) throw InvalidInput("tensor of no factors");
  }

  Ring ring() const { return factors[0].ring(); }
  int deg(const Gen& t) const {
    int s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) s += factors[i].deg(t[i]);
    return s;
  }
  std::vector<int> degrees(const Gen& t) const {
    std::vector<int> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = factors[i].deg(t[i]);
    return v;
  }

  Element<Gen> d(const Gen& t) const {
    Element<Gen> r(ring(), deg(t) - 1);
    int before = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto di = factors[i].d(t[i]);
      Gen u = t;
      for (const auto& [g, c] : di.terms) {
        u[i] = g;
        r.add(u, c * sgn_pow(before));
      }
      before += factors[i].deg(t[i]);
    }
    return r;
  }

  // h^(k) = h (x) Id + rho (x) h^(k-1)
  Element<Gen> h(const Gen& t) const {
    Element<Gen> r(ring(), deg(t) + 1);
    Gen u = t;
    Int c = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto hi = factors[i].h(t[i]);
      for (const auto& [g, a] : hi.terms) {
        u[i] = g;
        r.add(u, c * a);
      }
      // rho on slot i: only degree 0 survives
      if (factors[i].deg(t[i]) != 0) break;
      c *= factors[i].eps(t[i]);
      if (c == 0) break;
      u[i] = factors[i].base();
    }
    return r;
  }

  Int eps(const Gen& t) const {
    Int c = 1;
    for (std::size_t i = 0; i < t.size(); ++i) c *= factors[i].eps(t[i]);
    return c;
  }
  Gen base() const {
    Gen t;
    for (const auto& f : factors) t.push_back(f.base());
    return t;
  }
};

// left action of a permutation on a tensor power, with the Koszul sign
template <class G>
Element<TGen<G>> permute_tensor(const Perm& g, const Element<TGen<G>>& x,
                                const std::function<int(const G&)>& deg) {
  Element<TGen<G>> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) {
    std::vector<int> ds(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) ds[i] = deg(t[i]);
    r.add(permute_slots(g, t), c * koszul_sign(g, ds));
  }
  return r;
}

// ---------------------------------------------------------------- standard procedure

// Chain map built recursively: phi(b) = h(phi(db)) on basis generators, extended
// along decompose(x) = (coeff, basis, op) by phi(x) = coeff * apply(op, phi(basis)).
// Op is whatever the symmetry needs: a group element, a twisted product element,
// a group element plus a face inclusion.
template <class DG, class RG, class Op>
class StandardMap {
 public:
  struct Decomp {
    Int coeff;
    DG basis;
    Op op;
  };
  std::function<int(const DG&)> dom_deg;
  std::function<Element<DG>(const DG&)> dom_d;
  std::function<Decomp(const DG&)> decompose;
  std::function<Element<RG>(const Op&, const Element<RG>&)> apply;
  std::function<Element<RG>(const RG&)> rng_h;
  std::function<Element<RG>(const DG&)> degree0;
  Ring ring;

  Element<RG> operator()(const DG& x) {
    Decomp dc = decompose(x);
    if (dc.coeff == 0) return Element<RG>(ring, dom_deg(x));
    const Element<RG>& v = on_basis(dc.basis);
    Element<RG> r = apply(dc.op, v);
    if (dc.coeff != 1) r = r.scaled(dc.coeff);
    return r;
  }

  Element<RG> operator()(const Element<DG>& x) {
    Element<RG> r(ring, x.degree);
    for (const auto& [g, c] : x.terms) r.add((*this)(g), c);
    return r;
  }

  const Element<RG>& on_basis(const DG& b) {
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    Element<RG> v;
    if (dom_deg(b) == 0) {
      v = degree0(b);
    } else {
      Element<RG> img = (*this)(dom_d(b));
      v = Element<RG>(ring, dom_deg(b));
      for (const auto& [g, c] : img.terms) v.add(rng_h(g), c);
      v.degree = dom_deg(b);
    }
    return memo_.emplace(b, std::move(v)).first->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<DG, Element<RG>> memo_;
};

// H(b) = h(phi1(b) - phi0(b) - H(db)) on basis generators, extended the same way
template <class DG, class RG, class Op>
class StandardHomotopy {
 public:
  using Decomp = typename StandardMap<DG, RG, Op>::Decomp;
  std::function<int(const DG&)> dom_deg;
  std::function<Element<DG>(const DG&)> dom_d;
  std::function<Decomp(const DG&)> decompose;
  std::function<Element<RG>(const Op&, const Element<RG>&)> apply;
  std::function<Element<RG>(const RG&)> rng_h;
  std::function<Element<RG>(const DG&)> phi0, phi1;
  Ring ring;

  Element<RG> operator()(const DG& x) {
    Decomp dc = decompose(x);
    if (dc.coeff == 0) return Element<RG>(ring, dom_deg(x) + 1);
    Element<RG> r = apply(dc.op, on_basis(dc.basis));
    if (dc.coeff != 1) r = r.scaled(dc.coeff);
    return r;
  }
  Element<RG> operator()(const Element<DG>& x) {
    Element<RG> r(ring, x.degree + 1);
    for (const auto& [g, c] : x.terms) r.add((*this)(g), c);
    return r;
  }

  const Element<RG>& on_basis(const DG& b) {
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    Element<RG> w = phi1(b) - phi0(b);
    if (dom_deg(b) > 0) w -= (*this)(dom_d(b));
    Element<RG> v(ring, dom_deg(b) + 1);
    for (const auto& [g, c] : w.terms) v.add(rng_h(g), c);
    return memo_.emplace(b, std::move(v)).first->second;
  }

 private:
  std::map<DG, Element<RG>> memo_;
};

// ---------------------------------------------------------------- validation

struct Report {
  std::string name;
  bool ok = true;
  long long checked = 0;
  std::string failure;

  void fail(const std::string& what) {
    if (ok) failure = what;
    ok = false;
  }
  void merge(const Report& o) {
    checked += o.checked;
    if (!o.ok) fail(o.name.empty() ? o.failure : o.name + ": " + o.failure);
  }
};

template <class C>
concept Enumerable = Contracted<C> && requires(const C& c, std::function<void(const typename C::Gen&)> cb) {
  c.for_each_gen(0, cb);
};

template <class C>
concept WithAction = requires(const C& c, const typename C::Gen& g) {
  c.actors();
  c.act(c.actors()[0], g);
  { c.is_basis(g) } -> std::convertible_to<bool>;
};

// Complexes whose h is a single +1 term or zero and whose generators pack into a word
// get a flat-array check; the heavy MacLane sweeps need it.
template <class C>
concept PackedTerms = requires(const C& c, const typename C::Gen& g) {
  c.d_terms(g, [](const typename C::Gen&, int) {});
  { c.h_term(g) } -> std::convertible_to<std::optional<typename C::Gen>>;
  { c.pack(g) } -> std::convertible_to<std::uint64_t>;
  c.act_term(c.actors()[0], g);
};

namespace detail {
using Flat = std::vector<std::pair<std::uint64_t, long long>>;

// sort, merge and reduce in place
inline void flat_norm(Flat& v, int p) {
  std::sort(v.begin(), v.end());
  std::size_t o = 0;
  for (std::size_t i = 0; i < v.size();) {
    auto k = v[i].first;
    long long c = 0;
    for (; i < v.size() && v[i].first == k; ++i) c += v[i].second;
    if (p) c = ((c % p) + p) % p;
    if (c != 0) v[o++] = {k, c};
  }
  v.resize(o);
}

inline bool flat_equal(Flat& acc, Flat& want, int p) {
  flat_norm(acc, p);
  flat_norm(want, p);
  return acc == want;
}
}  // namespace detail

template <class C>
  requires PackedTerms<C>
Report verify_packed(const C& c, int max_degree, const std::string& name,
                     const std::function<std::string(const typename C::Gen&)>& show) {
  using G = typename C::Gen;
  Report rep;
  rep.name = name;
  int p = c.ring().p;
  if (c.h_term(c.base())) rep.fail("h(iota 1) != 0");
  detail::Flat acc, want;
  for (int k = 0; k <= max_degree; ++k) {
    c.for_each_gen(k, [&](const G& x) {
      ++rep.checked;
      // d^2
      if (k > 0) {
        acc.clear();
        c.d_terms(x, [&](const G& y, int s) {
          c.d_terms(y, [&](const G& z, int t) { acc.push_back({c.pack(z), (long long)s * t}); });
        });
        want.clear();
        if (!detail::flat_equal(acc, want, p)) rep.fail("d^2 != 0 on " + show(x));
      }
      // h^2 and dh + hd
      auto hx = c.h_term(x);
      if (hx && c.h_term(*hx)) rep.fail("h^2 != 0 on " + show(x));
      acc.clear();
      if (hx) c.d_terms(*hx, [&](const G& y, int s) { acc.push_back({c.pack(y), s}); });
      c.d_terms(x, [&](const G& y, int s) {
        if (auto hy = c.h_term(y)) acc.push_back({c.pack(*hy), s});
      });
      want.assign({{c.pack(x), 1}});
      if (k == 0 && c.eps(x) != 0) want.push_back({c.pack(c.base()), -(long long)c.eps(x)});
      if (!detail::flat_equal(acc, want, p)) rep.fail("dh + hd != 1 - rho on " + show(x));
      if constexpr (WithAction<C>) {
        if (k > 0 && c.is_basis(x)) {
          for (const auto& a : c.actors()) {
            // d(a x) against a(dx); the action is a signed permutation of generators
            acc.clear();
            want.clear();
            auto [gx, s0] = c.act_term(a, x);
            c.d_terms(gx, [&](const G& y, int s) { acc.push_back({c.pack(y), (long long)s * s0}); });
            c.d_terms(x, [&](const G& y, int s) {
              auto [gy, s1] = c.act_term(a, y);
              want.push_back({c.pack(gy), (long long)s * s1});
            });
            if (!detail::flat_equal(acc, want, p)) rep.fail("d not equivariant on " + show(x));
          }
        }
      }
    });
  }
  return rep;
}

// checks d^2 = 0, dh + hd = Id - rho, h^2 = 0, h iota = 0 and equivariance of d
template <Enumerable C>
Report verify_contracted(const C& c, int max_degree, const std::string& name,
                         const std::function<std::string(const typename C::Gen&)>& show) {
  if constexpr (PackedTerms<C>) return verify_packed(c, max_degree, name, show);
  using G = typename C::Gen;
  Report rep;
  rep.name = name;
  auto h0 = c.h(c.base());
  if (!h0.is_zero()) rep.fail("h(iota 1) != 0");
  for (int k = 0; k <= max_degree; ++k) {
    c.for_each_gen(k, [&](const G& x) {
      ++rep.checked;
      auto dx = c.d(x);
      if (k > 0 && !apply_d(c, dx).is_zero()) rep.fail("d^2 != 0 on " + show(x));
      auto hx = c.h(x);
      if (!apply_h(c, hx).is_zero()) rep.fail("h^2 != 0 on " + show(x));
      auto lhs = apply_d(c, hx);
      lhs.degree = k;
      if (k > 0) lhs += apply_h(c, dx);
      auto one = Element<G>::single(c.ring(), k, x);
      if (k == 0) one -= apply_rho(c, one);
      if (!(lhs == one)) rep.fail("dh + hd != 1 - rho on " + show(x));
      if constexpr (WithAction<C>) {
        if (k > 0 && c.is_basis(x)) {
          for (const auto& a : c.actors()) {
            auto gx = c.act(a, x);
            if (!(apply_d(c, gx) == linear<G>(dx, c.ring(), k - 1, [&](const G& y) { return c.act(a, y); })))
              rep.fail("d not equivariant on " + show(x));
          }
        }
      }
    });
  }
  return rep;
}

}  // namespace chainops
