#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace chainops {

// Finite groups realized inside Sigma_n. Elements are small integer codes:
// lexicographic rank for Sigma_n, the power of t = (2,3,...,n,1) for C_n.
// Code 0 is always the identity.
class Group {
 public:
  enum class Kind { Sym, Cyc };

  Kind kind;
  int n;
  std::vector<Perm> perms;

  int order() const { return (int)perms.size(); }
  int mul(int a, int b) const {
    if (kind == Kind::Cyc) return (a + b) % n;
    return table_[a * order() + b];
  }
  int inv(int a) const { return inv_[a]; }
  const Perm& perm(int a) const { return perms[a]; }
  int code(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InvalidInput("not an element of " + name() + ": " + tuple_str(p));
    return it->second;
  }
  bool contains(const Perm& p) const { return index_.count(p) > 0; }
  int sign(int a) const { return sign_[a]; }
  std::string name() const { return (kind == Kind::Sym ? "S" : "C") + std::to_string(n); }

  Group(Kind k, int n_) : kind(k), n(n_) {
    if (n < 1) throw InvalidInput("group of degree < 1");
    if (k == Kind::Sym) {
      if (n > 6) throw InvalidInput("symmetric groups limited to n <= 6");
      perms = all_perms(n);
    } else {
      Perm t(n);
      for (int i = 0; i < n; ++i) t[i] = (i + 1) % n + 1;
      Perm p = identity_perm(n);
      for (int i = 0; i < n; ++i) {
        perms.push_back(p);
        p = compose(t, p);
      }
    }
    for (int i = 0; i < order(); ++i) index_[perms[i]] = i;
    if (k == Kind::Sym) {
      table_.resize((std::size_t)order() * order());
      for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b) table_[a * order() + b] = index_.at(compose(perms[a], perms[b]));
    }
    inv_.resize(order());
    sign_.resize(order());
    for (int a = 0; a < order(); ++a) {
      inv_[a] = index_.at(inverse(perms[a]));
      sign_[a] = parity(perms[a]);
    }
  }

 private:
  std::vector<int> table_, inv_, sign_;
  std::map<Perm, int> index_;
};

inline const Group& group_registry(Group::Kind k, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Group>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = reg[{(int)k, n}];
  if (!slot) slot = std::make_unique<Group>(k, n);
  return *slot;
}

inline const Group& sym_group(int n) { return group_registry(Group::Kind::Sym, n); }
inline const Group& cyc_group(int n) { return group_registry(Group::Kind::Cyc, n); }

}  // namespace chainops
