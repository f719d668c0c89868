#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "maclane.hpp"

namespace chainops {

// T^pow y_deg
struct MGen {
  int deg = 0;
  int pow = 0;
  auto operator<=>(const MGen&) const = default;
};

inline std::string show_mgen(const MGen& g) {
  std::string s;
  if (g.pow == 1) s = "T";
  if (g.pow > 1) s = "T^" + std::to_string(g.pow);
  return s + "y" + std::to_string(g.deg);
}

inline std::string format(const Element<MGen>& x) { return format(x, show_mgen); }
inline std::string format(const Element<TGen<MGen>>& x) {
  return format(x, [](const TGen<MGen>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "⊗" : "") + show_mgen(t[i]);
    return s;
  });
}

// the minimal resolution of the trivial module over C_n
struct MinimalComplex {
  using Gen = MGen;
  int n = 2;
  Ring rng;

  MinimalComplex() = default;
  explicit MinimalComplex(int n_, Ring r = {}) : n(n_), rng(r) {
    if (n < 1) throw InvalidInput("cyclic order must be positive");
  }

  Ring ring() const { return rng; }
  int deg(const MGen& g) const { return g.deg; }
  int md(int a) const { return ((a % n) + n) % n; }

  Element<MGen> d(const MGen& g) const {
    Element<MGen> r(rng, g.deg - 1);
    if (g.deg == 0) return r;
    if (g.deg % 2 == 1) {
      r.add({g.deg - 1, md(g.pow + 1)}, 1);
      r.add({g.deg - 1, g.pow}, -1);
    } else {
      for (int j = 0; j < n; ++j) r.add({g.deg - 1, j}, 1);
    }
    return r;
  }
  Element<MGen> h(const MGen& g) const {
    Element<MGen> r(rng, g.deg + 1);
    if (g.deg % 2 == 0) {
      for (int j = 0; j < g.pow; ++j) r.add({g.deg + 1, j}, 1);
    } else if (g.pow == n - 1) {
      r.add({g.deg + 1, 0}, 1);
    }
    return r;
  }
  Int eps(const MGen& g) const { return g.deg == 0 ? 1 : 0; }
  MGen base() const { return {0, 0}; }

  bool is_basis(const MGen& g) const { return g.pow == 0; }
  std::vector<int> actors() const {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = i;
    return a;
  }
  Element<MGen> act(int a, const MGen& g) const { return Element<MGen>::single(rng, g.deg, {g.deg, md(g.pow + a)}); }
  Element<MGen> act(int a, const Element<MGen>& x) const {
    Element<MGen> r(rng, x.degree);
    for (const auto& [g, c] : x.terms) r.add(MGen{g.deg, md(g.pow + a)}, c);
    return r;
  }
  void for_each_gen(int k, const std::function<void(const MGen&)>& cb) const {
    if (k < 0) return;
    for (int i = 0; i < n; ++i) cb({k, i});
  }
};

// ---------------------------------------------------------------- phi: M -> N(EC_n)

inline Element<Tuple> phi_M(int n, const MGen& g, Ring ring = {}) {
  Element<Tuple> r(ring, g.deg);
  int k = g.deg / 2;
  bool odd = g.deg % 2 == 1;
  std::vector<int> js(k, 0);
  while (true) {
    Tuple t{0};
    if (odd) t.push_back(1 % n);
    for (int j : js) {
      t.push_back(j);
      t.push_back((j + 1) % n);
    }
    for (auto& a : t) a = (a + g.pow) % n;
    if (!seq_degenerate(t)) r.add(t, 1);
    int i = k - 1;
    while (i >= 0 && ++js[i] == n) js[i--] = 0;
    if (i < 0) break;
  }
  return r;
}

inline Element<Tuple> phi_M(int n, const Element<MGen>& x) {
  Element<Tuple> r(x.ring, x.degree);
  for (const auto& [g, c] : x.terms) r.add(phi_M(n, g, x.ring), c);
  return r;
}

// ---------------------------------------------------------------- pi: N(EC_n) -> M

// recursive form: pi(i) = T^i y_0, pi(i_0, rest) = T^{i_0} h pi(rest - i_0)
inline Element<MGen> pi_M_recursive(int n, const Tuple& t, Ring ring = {}) {
  MinimalComplex M(n, ring);
  int N = (int)t.size() - 1;
  if (N == 0) return Element<MGen>::single(ring, 0, {0, t[0] % n});
  Tuple rest(t.begin() + 1, t.end());
  for (auto& a : rest) a = M.md(a - t[0]);
  auto inner = pi_M_recursive(n, rest, ring);
  auto hv = apply_h(M, inner);
  hv.degree = N;
  return M.act(t[0], hv);
}

// closed form via cyclic interval conditions on every even tail
inline Element<MGen> pi_M(int n, const Tuple& t, Ring ring = {}) {
  int N = (int)t.size() - 1;
  Element<MGen> r(ring, N);
  if (seq_degenerate(t)) return r;
  auto md = [n](int a) { return ((a % n) + n) % n; };
  for (int s = N - 2; s >= 0; s -= 2)
    if (md(t[s] - 1 - t[s + 1]) >= md(t[s + 2] - t[s + 1])) return r;
  if (N % 2 == 0) {
    r.add({N, t[0]}, 1);
  } else {
    int c = md(t[1] - t[0]);
    for (int j = 0; j < c; ++j) r.add({N, md(t[0] + j)}, 1);
  }
  return r;
}

inline Element<MGen> pi_M(int n, const Element<Tuple>& x) {
  Element<MGen> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) r.add(pi_M(n, t, x.ring), c);
  return r;
}

// ---------------------------------------------------------------- lambda

inline Element<MGen> lambda_M(int n, int ell, const MGen& g, Ring ring = {}) {
  if (ell < 1) throw InvalidInput("lambda needs l >= 1");
  Element<MGen> r(ring, g.deg);
  Int lk = boost::multiprecision::pow(Int(ell), g.deg / 2);
  int base = (int)(((long long)g.pow * ell) % n);
  if (g.deg % 2 == 0) {
    r.add({g.deg, base}, lk);
  } else {
    for (int j = 0; j < ell; ++j) r.add({g.deg, (base + j) % n}, lk);
  }
  return r;
}

inline Element<MGen> lambda_M(int n, int ell, const Element<MGen>& x) {
  Element<MGen> r(x.ring, x.degree);
  for (const auto& [g, c] : x.terms) r.add(lambda_M(n, ell, g, x.ring), c);
  return r;
}

// ---------------------------------------------------------------- diagonals

inline Element<TGen<MGen>> delta_M(int n, const MGen& g, Ring ring = {}) {
  MinimalComplex M(n, ring);
  Element<TGen<MGen>> r(ring, g.deg);
  int D = g.deg;
  if (D % 2 == 1) {
    for (int a = 0; a <= D; ++a) r.add(TGen<MGen>{{a, 0}, {D - a, a % 2 == 1 ? 1 % n : 0}}, 1);
  } else {
    int k = D / 2;
    for (int i = 0; i <= k; ++i) r.add(TGen<MGen>{{2 * i, 0}, {2 * (k - i), 0}}, 1);
    for (int j = 0; j < k; ++j)
      for (int i = 1; i < n; ++i)
        for (const auto& [a, c] : M.h({2 * j, i}).terms) r.add(TGen<MGen>{a, {D - 1 - 2 * j, i}}, c);
  }
  // T^p acts diagonally
  Element<TGen<MGen>> out(ring, D);
  for (const auto& [t, c] : r.terms) {
    TGen<MGen> u = t;
    for (auto& a : u) a.pow = M.md(a.pow + g.pow);
    out.add(u, c);
  }
  return out;
}

// apply f to slot `slot` of every tensor (f has degree 0, so no sign)
inline Element<TGen<MGen>> apply_in_slot(const Element<TGen<MGen>>& x, std::size_t slot,
                                         const std::function<Element<TGen<MGen>>(const MGen&)>& f) {
  Element<TGen<MGen>> r(x.ring, x.degree);
  for (const auto& [t, c] : x.terms) {
    for (const auto& [u, e] : f(t[slot]).terms) {
      TGen<MGen> v(t.begin(), t.begin() + slot);
      v.insert(v.end(), u.begin(), u.end());
      v.insert(v.end(), t.begin() + slot + 1, t.end());
      r.add(v, c * e);
    }
  }
  return r;
}

// Delta^(k) = (Id (x) Delta^(k-1)) o Delta
inline Element<TGen<MGen>> multidiagonal_M(int n, int k, const MGen& g, Ring ring = {}) {
  if (k < 1) throw InvalidInput("multidiagonal needs arity >= 1");
  Element<TGen<MGen>> r(ring, g.deg);
  if (k == 1) {
    r.add(TGen<MGen>{g}, 1);
    return r;
  }
  r = delta_M(n, g, ring);
  for (int j = 2; j < k; ++j)
    r = apply_in_slot(r, j - 1, [&](const MGen& a) { return delta_M(n, a, ring); });
  return r;
}

// the standard procedure diagonal M -> M^{(x)k} for the contraction h^(k)
inline StandardMap<MGen, TGen<MGen>, int> standard_diagonal_M(int n, int k, Ring ring = {}) {
  MinimalComplex M(n, ring);
  auto T = std::make_shared<TensorComplex<MinimalComplex>>(M, k);
  StandardMap<MGen, TGen<MGen>, int> s;
  s.ring = ring;
  s.dom_deg = [](const MGen& g) { return g.deg; };
  s.dom_d = [M](const MGen& g) { return M.d(g); };
  s.decompose = [](const MGen& g) {
    return StandardMap<MGen, TGen<MGen>, int>::Decomp{1, {g.deg, 0}, g.pow};
  };
  s.apply = [M](const int& a, const Element<TGen<MGen>>& x) {
    Element<TGen<MGen>> r(x.ring, x.degree);
    for (const auto& [t, c] : x.terms) {
      TGen<MGen> u = t;
      for (auto& b : u) b.pow = M.md(b.pow + a);
      r.add(u, c);
    }
    return r;
  };
  s.rng_h = [T](const TGen<MGen>& t) { return T->h(t); };
  s.degree0 = [ring, k](const MGen&) {
    return Element<TGen<MGen>>::single(ring, 0, TGen<MGen>(k, MGen{0, 0}));
  };
  return s;
}

// standard procedure map M -> N(EC_n), the recursive twin of phi_M
inline StandardMap<MGen, Tuple, int> standard_phi_M(int n, Ring ring = {}) {
  MinimalComplex M(n, ring);
  EGComplex E(cyc_group(n), ring);
  StandardMap<MGen, Tuple, int> s;
  s.ring = ring;
  s.dom_deg = [](const MGen& g) { return g.deg; };
  s.dom_d = [M](const MGen& g) { return M.d(g); };
  s.decompose = [](const MGen& g) { return StandardMap<MGen, Tuple, int>::Decomp{1, {g.deg, 0}, g.pow}; };
  s.apply = [E](const int& a, const Element<Tuple>& x) { return E.act(a, x); };
  s.rng_h = [E](const Tuple& t) { return E.h(t); };
  s.degree0 = [ring](const MGen&) { return Element<Tuple>::single(ring, 0, {0}); };
  return s;
}

// ---------------------------------------------------------------- power-map homotopies

struct WitnessResult {
  Report report;
  // witness chains L(x_{2k}) by k, over the integers
  std::vector<Element<Tuple>> L;
};

// Builds J (between the l-th power map and phi lambda pi on N(EC_p)), the homotopy K
// for right multiplication by g on N(E Sigma_p), and L = iota J - K iota iota_l; checks
// every homotopy identity on all tuples of degree <= max_degree and the coinvariant
// identities over F_p.
inline WitnessResult power_boundary_witness(int p, int ell, int max_degree) {
  if (!is_prime(p) || p < 3) throw InvalidInput("p must be an odd prime");
  if (ell < 1 || ell >= p) throw InvalidInput("need 1 <= l < p");
  WitnessResult out;
  Report& rep = out.report;
  rep.name = "power-witness";
  Ring Z;
  const Group& C = cyc_group(p);
  const Group& S = sym_group(p);
  EGComplex EC(C, Z), ES(S, Z);

  std::vector<int> pow_l(p), incl(p);
  for (int i = 0; i < p; ++i) {
    pow_l[i] = (int)(((long long)i * ell) % p);
    incl[i] = S.code(C.perm(i));
  }
  Perm gp(p);
  for (int j = 1; j <= p; ++j) {
    int v = (int)(((long long)j * ell) % p);
    gp[j - 1] = v == 0 ? p : v;
  }
  int g = S.code(gp);
  Ring Fp = Ring::field(p);

  auto single = [&](const Tuple& t) { return Element<Tuple>::single(Z, (int)t.size() - 1, t); };
  auto phi0 = [&](const Tuple& t) { return induced_map(pow_l, single(t)); };
  auto phi1 = [&](const Tuple& t) {
    return phi_M(p, lambda_M(p, ell, pi_M(p, t, Z)));
  };
  auto J = [&](const Tuple& t) { return join_homotopy(phi0, phi1, t, Z); };
  auto J_el = [&](const Element<Tuple>& x) {
    Element<Tuple> r(Z, x.degree + 1);
    for (const auto& [t, c] : x.terms) r.add(J(t), c);
    return r;
  };
  auto idm = [&](const Tuple& t) { return single(t); };
  auto rmul = [&](const Tuple& t) { return single(ES.right(t, g)); };
  auto K = [&](const Tuple& t) { return join_homotopy(idm, rmul, t, Z); };
  auto K_el = [&](const Element<Tuple>& x) {
    Element<Tuple> r(Z, x.degree + 1);
    for (const auto& [t, c] : x.terms) r.add(K(t), c);
    return r;
  };
  auto iota = [&](const Element<Tuple>& x) { return induced_map(incl, x); };
  auto L_el = [&](const Element<Tuple>& x) {
    auto a = iota(J_el(x));
    auto b = K_el(iota(induced_map(pow_l, x)));
    a -= b;
    a.degree = x.degree + 1;
    return a;
  };
  auto homotopy_lhs = [&](const auto& H, const auto& C, const Element<Tuple>& x) {
    auto l = apply_d(C, H(x));
    l.degree = x.degree;
    if (x.degree > 0) l += H(apply_d(C, x));
    return l;
  };

  // dJ + Jd = phi1 - phi0 and dL + Ld = iota phi lambda pi - g iota on N(EC_p)
  for (int q = 0; q <= max_degree; ++q) {
    EC.for_each_gen(q, [&](const Tuple& t) {
      ++rep.checked;
      auto x = single(t);
      auto want = phi1(t) - phi0(t);
      want.degree = q;
      if (!(homotopy_lhs(J_el, EC, x) == want)) rep.fail("dJ + Jd != phi1 - phi0 on " + EC.show(t));
      auto wantL = iota(phi1(t)) - ES.act(g, iota(x));
      if (!(homotopy_lhs(L_el, ES, x) == wantL)) rep.fail("dL + Ld identity fails on " + EC.show(t));
    });
    // dK + Kd = (.g) - Id on N(E Sigma_p)
    ES.for_each_gen(q, [&](const Tuple& t) {
      ++rep.checked;
      auto want = rmul(t) - single(t);
      if (!(homotopy_lhs(K_el, ES, single(t)) == want)) rep.fail("dK + Kd != (.g) - Id on " + ES.show(t));
    });
  }

  // the witness identities on x_{2k}
  for (int k = 0; 2 * k <= max_degree; ++k) {
    auto x = phi_M(p, MGen{2 * k, 0}, Z);
    Int lk = boost::multiprecision::pow(Int(ell), k);
    auto JL = homotopy_lhs(J_el, EC, x);
    auto want = x.scaled(lk) - induced_map(pow_l, x);
    want.degree = 2 * k;
    if (!(JL == want)) rep.fail("(dJ+Jd) x_" + std::to_string(2 * k) + " != l^k x - iota_l x");
    auto Lx = L_el(x);
    out.L.push_back(Lx);
    auto ix = iota(x);
    auto wantL = ix.scaled(lk) - ES.act(g, ix);
    if (!(homotopy_lhs(L_el, ES, x) == wantL)) rep.fail("(dL+Ld) x_" + std::to_string(2 * k) + " != l^k ix - g ix");

    // coinvariants over F_p, plain and parity twisted
    EGComplex ESp(S, Fp), ECp(C, Fp);
    for (bool tw : {false, true}) {
      Int coef = lk - (tw ? S.sign(g) : 1);
      auto Lbar = coinvariants(S, Lx.reduced(Fp), tw);
      auto lhs = coinvariants(S, apply_d(ESp, Lbar), tw);
      auto rhs = coinvariants(S, ix.reduced(Fp), tw).scaled(coef);
      lhs.degree = rhs.degree;
      ++rep.checked;
      if (!(lhs == rhs))
        rep.fail(std::string(tw ? "twisted " : "") + "coinvariant identity fails for k = " + std::to_string(k));
    }
    // and in N(BC_p): l^k xbar - iota_l xbar = d(Jbar xbar)
    auto Jbar = coinvariants(C, J_el(x).reduced(Fp), false);
    auto lhs = coinvariants(C, apply_d(ECp, Jbar), false);
    auto rhs = coinvariants(C, want.reduced(Fp), false);
    lhs.degree = rhs.degree;
    ++rep.checked;
    if (!(lhs == rhs)) rep.fail("BC_p identity fails for k = " + std::to_string(k));
  }
  return out;
}

}  // namespace chainops
