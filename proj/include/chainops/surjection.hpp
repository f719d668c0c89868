#pragma once

#include <functional>
#include <string>
#include <vector>

#include "engine.hpp"

namespace chainops {

using Surj = std::vector<int>;

enum class Flavor { AJ, BF, MS };

inline std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::AJ: return "aj";
    case Flavor::BF: return "bf";
    default: return "ms";
  }
}

inline Flavor parse_flavor(const std::string& s) {
  if (s == "aj" || s == "AJ") return Flavor::AJ;
  if (s == "bf" || s == "BF") return Flavor::BF;
  if (s == "ms" || s == "MS") return Flavor::MS;
  throw InvalidInput("unknown flavor '" + s + "'");
}

inline int surj_arity(const Surj& x) {
  int n = 0;
  for (int a : x) n = std::max(n, a);
  return n;
}

// surjective onto 1..n and no two equal neighbours
inline bool surj_canonical(const Surj& x, int n) {
  if ((int)x.size() < n || n < 1) return false;
  std::vector<char> seen(n + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || x[i] > n) return false;
    if (i && x[i] == x[i - 1]) return false;
    seen[x[i]] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) return false;
  return true;
}

inline std::vector<int> multiplicities(const Surj& x, int n) {
  std::vector<int> k(n + 1, 0);
  for (int a : x) ++k[a];
  return k;
}

// 0-based positions that are not the final occurrence of their value
inline std::vector<bool> caesura_mask(const Surj& x) {
  std::vector<bool> m(x.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] == x[i]) {
        m[i] = true;
        break;
      }
  return m;
}

inline std::vector<int> caesuras(const Surj& x) {
  std::vector<int> out;
  auto m = caesura_mask(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (m[i]) out.push_back((int)i);
  return out;
}

// boundary sign of deleting position j (0 marks a deletion that is a priori zero)
inline std::vector<int> boundary_signs(Flavor f, const Surj& x) {
  int n = surj_arity(x);
  auto k = multiplicities(x, n);
  std::vector<int> s(x.size(), 0);
  if (f == Flavor::AJ) {
    for (std::size_t j = 0; j < x.size(); ++j) s[j] = sgn_pow(j);
  } else if (f == Flavor::BF) {
    auto cm = caesura_mask(x);
    std::vector<int> last(n + 1, 0);
    int next = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (cm[j]) {
        s[j] = next;
        last[x[j]] = next;
        next = -next;
      } else {
        s[j] = -last[x[j]];
      }
    }
  } else {
    int sign = 1;
    for (int v = 1; v <= n; ++v) {
      bool first = true;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != v) continue;
        if (!first) sign = -sign;
        first = false;
        s[j] = sign;
      }
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j)
    if (k[x[j]] == 1) s[j] = 0;
  return s;
}

inline Element<Surj> surj_boundary(Flavor f, const Surj& x, Ring ring = {}) {
  int n = surj_arity(x);
  Element<Surj> r(ring, (int)x.size() - n - 1);
  auto s = boundary_signs(f, x);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (s[j] == 0) continue;
    if (j > 0 && j + 1 < x.size() && x[j - 1] == x[j + 1]) continue;
    Surj y;
    y.reserve(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != j) y.push_back(x[i]);
    r.add(y, s[j]);
  }
  return r;
}

// ---------------------------------------------------------------- signs

inline int sign_c(const Surj& x) {
  std::vector<int> cv;
  for (int j : caesuras(x)) cv.push_back(x[j]);
  return sgn_pow(inversions(cv));
}

inline long long sh_CN(const Surj& x) {
  auto cm = caesura_mask(x);
  long long c = 0, noncaesura = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (cm[j])
      c += noncaesura;
    else
      ++noncaesura;
  }
  return c;
}

// the final-occurrence values in order
inline Perm f_x(const Surj& x) {
  auto cm = caesura_mask(x);
  Perm f;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!cm[j]) f.push_back(x[j]);
  return f;
}

inline int sign_p(const Surj& x) { return sgn_pow(sh_CN(x)) * sign_c(x) * parity(f_x(x)); }

// caesura positions grouped by value, then final positions in value order (1-based)
inline Perm prism_perm(const Surj& x) {
  int n = surj_arity(x);
  auto cm = caesura_mask(x);
  Perm p;
  for (int v = 1; v <= n; ++v)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] == v && cm[j]) p.push_back((int)j + 1);
  for (int v = 1; v <= n; ++v)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] == v && !cm[j]) p.push_back((int)j + 1);
  return p;
}

// parity of the number of caesuras where AJ and BF boundary signs differ
inline int sign_delta(const Surj& x) {
  auto a = boundary_signs(Flavor::AJ, x), b = boundary_signs(Flavor::BF, x);
  auto cm = caesura_mask(x);
  int c = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (cm[j] && a[j] != b[j]) ++c;
  return sgn_pow(c);
}

// sign relating a flavor to MS
inline int flavor_to_ms(Flavor f, const Surj& x) {
  switch (f) {
    case Flavor::AJ: return sign_p(x);
    case Flavor::BF: return sign_c(x);
    default: return 1;
  }
}

inline int iso_sign(Flavor from, Flavor to, const Surj& x) { return flavor_to_ms(from, x) * flavor_to_ms(to, x); }

inline Element<Surj> iso(Flavor from, Flavor to, const Element<Surj>& x) {
  Element<Surj> r(x.ring, x.degree);
  for (const auto& [s, c] : x.terms) r.add(s, c * iso_sign(from, to, s));
  return r;
}

// sign of g acting on x in the given flavor
inline int action_sign(Flavor f, const Perm& g, const Surj& x) {
  int n = (int)g.size();
  if (f == Flavor::AJ) return parity(g);
  if (f == Flavor::BF) return 1;
  auto k = multiplicities(x, n);
  std::vector<int> degs(n);
  for (int v = 1; v <= n; ++v) degs[v - 1] = k[v] - 1;
  return koszul_sign(g, degs);
}

inline Surj post_compose(const Perm& g, const Surj& x) {
  Surj y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = g[x[i] - 1];
  return y;
}

inline bool is_basis_surj(const Surj& x) {
  int next = 1;
  for (int a : x) {
    if (a == next) ++next;
    else if (a > next) return false;
  }
  return true;
}

// (1, 2, ..., l, ..., l, ...) with l the first caesura; the identity in degree 0
inline bool is_clean(const Surj& x) {
  int n = surj_arity(x);
  auto cm = caesura_mask(x);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != (int)j + 1) return false;
    if (cm[j]) return true;
    if ((int)j + 1 == n) return x.size() == (std::size_t)n;
  }
  return false;
}

// ---------------------------------------------------------------- contraction

// h = sum_q (+-1)^q i^q s r^q; AJ uses the signed r and alternates
inline Element<Surj> surj_contraction(Flavor f, const Surj& x, Ring ring = {}) {
  int n0 = surj_arity(x);
  Element<Surj> out(ring, (int)x.size() - n0 + 1);
  Surj cur = x;
  int sign = 1;
  for (int q = 0;; ++q) {
    // s prepends a 1; then i^q shifts up and prepends 1, 2, ..., q
    if (cur[0] != 1) {
      Surj t(q + 1 + cur.size());
      for (int a = 0; a < q; ++a) t[a] = a + 1;
      t[q] = 1 + q;
      for (std::size_t i = 0; i < cur.size(); ++i) t[q + 1 + i] = cur[i] + q;
      out.add(t, sign);
    }
    // r: remove a lone 1 and shift down
    int n = surj_arity(cur);
    if (n < 2) break;
    int where = -1, count = 0;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i] == 1) {
        ++count;
        where = (int)i;
      }
    if (count != 1) break;
    if (where > 0 && where + 1 < (int)cur.size() && cur[where - 1] == cur[where + 1]) break;
    Surj nx;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if ((int)i != where) nx.push_back(cur[i] - 1);
    if (f == Flavor::AJ) sign *= -sgn_pow(where);
    cur = std::move(nx);
  }
  return out;
}

struct SurjComplex {
  using Gen = Surj;
  int n = 1;
  Flavor flavor = Flavor::BF;
  Ring rng;

  SurjComplex() = default;
  SurjComplex(int n_, Flavor f, Ring r = {}) : n(n_), flavor(f), rng(r) {
    if (n < 1) throw InvalidInput("arity must be positive");
  }

  Ring ring() const { return rng; }
  int deg(const Surj& x) const { return (int)x.size() - n; }
  Element<Surj> d(const Surj& x) const { return surj_boundary(flavor, x, rng); }
  Element<Surj> h(const Surj& x) const { return surj_contraction(flavor, x, rng); }
  Int eps(const Surj& x) const {
    if ((int)x.size() != n) return 0;
    return flavor == Flavor::AJ ? parity(x) : 1;
  }
  Surj base() const { return identity_perm(n); }

  bool is_basis(const Surj& x) const { return is_basis_surj(x); }
  std::vector<Perm> actors() const { return all_perms(n); }
  Element<Surj> act(const Perm& g, const Surj& x) const {
    if ((int)g.size() != n) throw InvalidInput("permutation arity does not match");
    return Element<Surj>::single(rng, deg(x), post_compose(g, x), action_sign(flavor, g, x));
  }
  Element<Surj> act(const Perm& g, const Element<Surj>& x) const {
    Element<Surj> r(rng, x.degree);
    for (const auto& [s, c] : x.terms) r.add(act(g, s), c);
    return r;
  }

  void for_each_gen(int k, const std::function<void(const Surj&)>& cb) const {
    if (k < 0) return;
    int L = n + k;
    Surj x(L);
    std::vector<int> cnt(n + 1, 0);
    int missing = n;
    std::function<void(int)> rec = [&](int i) {
      if (missing > L - i) return;
      if (i == L) {
        cb(x);
        return;
      }
      for (int v = 1; v <= n; ++v) {
        if (i && x[i - 1] == v) continue;
        x[i] = v;
        if (cnt[v]++ == 0) --missing;
        rec(i + 1);
        if (--cnt[v] == 0) ++missing;
      }
    };
    rec(0);
  }

  std::string show(const Surj& x) const { return tuple_str(x); }
};

// x = sign * g b with b a basis generator; g sends the i-th first occurrence to i
struct SurjDecomp {
  int sign;
  Surj basis;
  Perm g;
};

inline SurjDecomp surj_decompose(Flavor f, const Surj& x) {
  int n = surj_arity(x);
  Perm g;  // g(i) = value of the i-th first occurrence
  std::vector<char> seen(n + 1, 0);
  for (int a : x)
    if (!seen[a]) {
      seen[a] = 1;
      g.push_back(a);
    }
  Surj b = post_compose(inverse(g), x);
  // g * b = action_sign(g, b) g b, and g b = x
  return {action_sign(f, g, b), b, g};
}

}  // namespace chainops
