// hand-checked values
#include <gtest/gtest.h>

#include <chainops/action.hpp>
#include <chainops/minimal.hpp>
#include <chainops/operads.hpp>
#include <set>

using namespace chainops;

namespace {
const Surj kLong{2, 1, 2, 3, 4, 2, 3, 1, 5, 4, 1, 2};

template <class G>
Element<G> el(int deg, std::initializer_list<std::pair<G, int>> ts) {
  Element<G> e({}, deg);
  for (const auto& [g, c] : ts) e.add(g, c);
  return e;
}
}  // namespace

// ---------------------------------------------------------------- kernel

TEST(Kernel, Parity) {
  EXPECT_EQ(parity(identity_perm(5)), 1);
  EXPECT_EQ(parity({2, 3, 1}), 1);
  EXPECT_EQ(parity({2, 3, 1, 5, 4}), -1);
}

TEST(Kernel, Koszul) {
  EXPECT_EQ(koszul_sign(identity_perm(3), {1, 3, 5}), 1);
  EXPECT_EQ(koszul_sign({2, 1}, {1, 1}), -1);
  EXPECT_EQ(koszul_sign({2, 3, 1}, {1, 2, 1}), -1);
}

TEST(Kernel, BlockPerm) {
  EXPECT_EQ(block_perm({2, 3, 1}, {2, 4, 3}), (Perm{3, 4, 5, 6, 7, 8, 9, 1, 2}));
  EXPECT_EQ(block_perm(identity_perm(3), {2, 1, 3}), identity_perm(6));
}

TEST(Kernel, BlockPermOfProduct) {
  std::vector<int> s{2, 1, 3};
  for (const auto& h : all_perms(3))
    for (const auto& g : all_perms(3)) {
      // sizes seen by g are s permuted by h
      std::vector<int> sh(3);
      for (int i = 0; i < 3; ++i) sh[i] = s[h[i] - 1];
      EXPECT_EQ(block_perm(compose(h, g), s), compose(block_perm(h, s), block_perm(g, sh)));
    }
}

TEST(Kernel, ElementArithmetic) {
  auto x = el<Face>(1, {{{0, 1}, 3}, {{1, 2}, -2}});
  EXPECT_TRUE((x + x.scaled(-1)).is_zero());
  Element<Face> y({}, 2);
  y.add(Face{0, 1, 2}, 1);
  EXPECT_THROW(x += y, InvalidInput);

  auto f5 = x.reduced(Ring::field(5));
  EXPECT_EQ(f5.coeff({1, 2}), Int(3));
  EXPECT_EQ(Ring::field(5).norm(-7), Int(3));
}

TEST(Kernel, TensorSwapSign) {
  auto a = Element<Face>::single({}, 1, {0, 1});
  auto b = Element<Face>::single({}, 1, {1, 2});
  auto ab = tensor(std::vector<Element<Face>>{a, b});
  std::function<int(const Face&)> dim = [](const Face& f) { return (int)f.size() - 1; };
  EXPECT_EQ(permute_tensor(identity_perm(2), ab, dim), ab);
  auto ba = tensor(std::vector<Element<Face>>{b, a});
  EXPECT_EQ(permute_tensor({2, 1}, ab, dim), ba.scaled(-1));
}

TEST(Kernel, Guard) {
  std::size_t old = term_guard();
  set_term_guard(3);
  EXPECT_THROW(bf_action(Surj{1, 2, 1}, 3), GuardTripped);
  set_term_guard(old);
  EXPECT_NO_THROW(bf_action(Surj{1, 2, 1}, 3));
}

// ---------------------------------------------------------------- simplices

TEST(Simplex, Diagonal) {
  auto d = aw_pair({0, 1}, {0, 1});
  auto want = el<TGen<std::vector<int>>>(1, {{{{0}, {0, 1}}, 1}, {{{0, 1}, {1}}, 1}});
  EXPECT_EQ(d, want);
}

TEST(Simplex, AWAfterEZIsIdentity) {
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    std::vector<int> a = full_simplex(p), b = full_simplex(q);
    Element<TGen<std::vector<int>>> back({}, p + q);
    for (const auto& [pts, c] : ez_points({a, b}).terms) back.add(aw_points(pts), c);
    EXPECT_EQ(back, (el<TGen<std::vector<int>>>(p + q, {{{a, b}, 1}})));
  }
}

TEST(Simplex, ConeContraction) {
  SimplexComplex D(3);
  EXPECT_TRUE(D.h({0, 2}).is_zero());
  EXPECT_EQ(D.h({1, 2}), el<Face>(2, {{{0, 1, 2}, 1}}));
  EXPECT_TRUE(D.h({0}).is_zero());
}

// ---------------------------------------------------------------- surjections

TEST(Surjection, CaesuraPositions) {
  EXPECT_TRUE(caesuras({2, 3, 1}).empty());
  EXPECT_EQ(caesuras({1, 2, 1}), std::vector<int>{0});
  std::vector<int> vals;
  for (int j : caesuras(kLong)) vals.push_back(kLong[j]);
  EXPECT_EQ(vals, (std::vector<int>{2, 1, 2, 3, 4, 2, 1}));
  EXPECT_EQ(caesuras(kLong), (std::vector<int>{0, 1, 2, 3, 4, 5, 7}));
}

TEST(Surjection, BFSignTable) {
  std::vector<int> want{1, -1, 1, -1, 1, -1, 1, 1, 0, -1, -1, 1};
  EXPECT_EQ(boundary_signs(Flavor::BF, kLong), want);
  // the first 1 leaves (2,2,...) and the 5 is a singleton
  auto d = surj_boundary(Flavor::BF, kLong);
  EXPECT_EQ(d.size(), 10u);
  EXPECT_EQ(d.coeff({2, 2, 3, 4, 2, 3, 1, 5, 4, 1, 2}), Int(0));
  EXPECT_EQ(d.coeff({2, 1, 2, 3, 4, 2, 3, 5, 4, 1, 2}), Int(1));
}

TEST(Surjection, MSSignTable) {
  Surj x{2, 1, 2, 4, 2, 3, 1, 4, 1, 2};
  std::vector<int> printed{1, 1, -1, -1, 1, -1, -1, 1, 1, -1};
  auto s = boundary_signs(Flavor::MS, x);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 3)
      EXPECT_EQ(s[j], 0);
    else
      EXPECT_EQ(s[j], printed[j]) << j;
  }
  EXPECT_EQ(surj_boundary(Flavor::MS, x).size(), 6u);
}

TEST(Surjection, MSActionSign) {
  Surj x{2, 4, 1, 3, 4, 2, 5, 1, 5, 2};
  EXPECT_EQ(action_sign(Flavor::MS, {3, 5, 2, 1, 4}, x), -1);
  EXPECT_EQ(action_sign(Flavor::MS, {5, 3, 1, 2, 4}, x), 1);
  for (Flavor f : {Flavor::AJ, Flavor::BF, Flavor::MS}) EXPECT_EQ(action_sign(f, identity_perm(5), x), 1);
}

TEST(Surjection, SignValues) {
  EXPECT_EQ(sign_c(kLong), 1);
  EXPECT_EQ(sh_CN(kLong), 1);
  EXPECT_EQ(parity(f_x(kLong)), -1);
  EXPECT_EQ(sign_delta(kLong), -1);
  EXPECT_EQ(sign_p(kLong), 1);
  EXPECT_EQ(parity(prism_perm(kLong)), sign_p(kLong));
  EXPECT_EQ(sign_p({3, 1, 2}), parity({3, 1, 2}));
  EXPECT_EQ(sign_c({3, 1, 2}), 1);
}

TEST(Surjection, PSignTwoWays) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      SurjComplex(n, Flavor::BF).for_each_gen(k, [&](const Surj& x) {
        ASSERT_EQ(sign_p(x), sign_c(x) * sign_delta(x) * parity(f_x(x))) << tuple_str(x);
      });
}

TEST(Surjection, ContractionOfLongWord) {
  auto h = surj_contraction(Flavor::BF, {1, 4, 3, 2, 4});
  EXPECT_EQ(h, el<Surj>(2, {{{1, 2, 4, 3, 2, 4}, 1}, {{1, 2, 3, 4, 3, 4}, 1}}));
  // both terms lie in Im(h), so h kills them
  for (const auto& [y, c] : h.terms) {
    EXPECT_TRUE(is_clean(y));
    EXPECT_TRUE(surj_contraction(Flavor::BF, y).is_zero());
  }
}

TEST(Surjection, CleanGenerators) {
  EXPECT_TRUE(is_clean({1, 2, 1, 3}));
  EXPECT_TRUE(is_basis_surj({1, 2, 1, 3}));
  for (Flavor f : {Flavor::AJ, Flavor::BF, Flavor::MS}) {
    EXPECT_TRUE(surj_contraction(f, {1, 2, 1, 3}).is_zero());
    EXPECT_TRUE(surj_contraction(f, {1, 2, 3}).is_zero());
  }
  // h lands in clean generators and kills them
  for (Flavor f : {Flavor::AJ, Flavor::BF, Flavor::MS})
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= 3; ++k)
        SurjComplex(n, f).for_each_gen(k, [&](const Surj& x) {
          for (const auto& [y, c] : surj_contraction(f, x).terms) ASSERT_TRUE(is_clean(y)) << tuple_str(y);
          if (is_clean(x)) ASSERT_TRUE(surj_contraction(f, x).is_zero()) << tuple_str(x);
        });
}

TEST(Surjection, IsoSigns) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 3; ++k)
      SurjComplex(n, Flavor::BF).for_each_gen(k, [&](const Surj& x) {
        auto one = Element<Surj>::single({}, k, x);
        EXPECT_EQ(iso(Flavor::BF, Flavor::MS, one), one.scaled(sign_c(x)));
        EXPECT_EQ(iso(Flavor::AJ, Flavor::MS, one), one.scaled(sign_p(x)));
        auto rt = iso(Flavor::MS, Flavor::AJ, iso(Flavor::BF, Flavor::MS, iso(Flavor::AJ, Flavor::BF, one)));
        EXPECT_EQ(rt, one);
      });
}

// ---------------------------------------------------------------- table reduction and prisms

TEST(Morphisms, TableReductionSmall) {
  EXPECT_EQ(table_reduction(Flavor::BF, std::vector<Perm>{{1, 2}, {2, 1}}), el<Surj>(1, {{{1, 2, 1}, 1}}));
  EXPECT_EQ(table_reduction(Flavor::BF, std::vector<Perm>{{2, 3, 1}}), el<Surj>(0, {{{2, 3, 1}, 1}}));
  EXPECT_EQ(table_reduction(Flavor::AJ, std::vector<Perm>{{2, 1, 3}}), el<Surj>(0, {{{2, 1, 3}, -1}}));
}

TEST(Morphisms, FundamentalSimplex) {
  std::vector<Perm> want{{2, 1, 3, 4, 5}, {1, 2, 3, 4, 5}, {2, 3, 4, 1, 5}, {3, 4, 2, 1, 5},
                         {4, 2, 3, 1, 5}, {2, 3, 1, 5, 4}, {3, 1, 5, 4, 2}, {3, 5, 4, 1, 2}};
  EXPECT_EQ(fundamental_simplex(kLong), want);
  EXPECT_EQ(table_reduction(Flavor::BF, want), el<Surj>(7, {{kLong, 1}}));
  auto base = prism_simplex(kLong, base_word(kLong));
  std::vector<Perm> base_want{{2, 1, 3, 4, 5}, {2, 3, 4, 1, 5}, {2, 3, 4, 5, 1}, {2, 3, 4, 5, 1},
                              {3, 4, 2, 5, 1}, {3, 4, 5, 1, 2}, {4, 3, 5, 1, 2}, {3, 5, 4, 1, 2}};
  EXPECT_EQ(base, base_want);
  EXPECT_TRUE(prism_map(Flavor::BF, sym_group(5), kLong).coeff(
                  [&] {
                    Tuple t;
                    for (const auto& g : base) t.push_back(sym_group(5).code(g));
                    return t;
                  }()) == 0);
  EXPECT_EQ(fundamental_simplex({2, 3, 1}), (std::vector<Perm>{{2, 3, 1}}));
}

TEST(Morphisms, FundamentalSimplexSmall) {
  EXPECT_EQ(fundamental_simplex({1, 2, 3, 1, 2}), (std::vector<Perm>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
}

// ---------------------------------------------------------------- minimal resolution

TEST(Minimal, PhiThenPi) {
  for (int n : {3, 5})
    for (int k = 0; k <= 6; ++k)
      for (int i = 0; i < n; ++i) {
        MGen g{k, i};
        EXPECT_EQ(pi_M(n, phi_M(n, g)), (el<MGen>(k, {{g, 1}}))) << n << " " << show_mgen(g);
      }
}

TEST(Minimal, PowerMapIsChainMap) {
  for (int n : {3, 5}) {
    MinimalComplex M(n);
    for (int ell = 1; ell < n; ++ell)
      for (int k = 1; k <= 6; ++k) {
        MGen g{k, 0};
        EXPECT_EQ(apply_d(M, lambda_M(n, ell, g)), lambda_M(n, ell, M.d(g))) << n << " " << ell << " " << k;
      }
  }
}

// ---------------------------------------------------------------- operads

TEST(Operads, SymmetricComposition) {
  EXPECT_EQ(sigma_compose({2, 3, 1}, {{2, 1}, {3, 1, 2, 4}, {3, 2, 1}}), (Perm{5, 3, 4, 6, 9, 8, 7, 2, 1}));
}

TEST(Operads, DivisionSign) {
  Surj x{1, 2, 1, 3, 2};
  std::vector<Surj> ys{{1, 2, 3, 1}, {1, 2, 1, 4, 3}, {1, 2, 1}};
  auto z = surj_compose(Flavor::BF, x, ys);
  EXPECT_EQ(z.coeff({1, 2, 4, 5, 4, 7, 2, 3, 1, 8, 9, 8, 7, 6}), Int(-1));
}

TEST(Operads, PartialComposition) {
  auto z = partial_compose(Flavor::BF, 2, {1, 2, 1, 3, 2}, {1, 2, 1});
  EXPECT_EQ(z, el<Surj>(3, {{{1, 2, 1, 4, 2, 3, 2}, 1}, {{1, 2, 3, 1, 4, 3, 2}, -1}, {{1, 2, 3, 2, 1, 4, 2}, -1}}));
}

TEST(Operads, UnitLaw) {
  for (Flavor f : {Flavor::AJ, Flavor::BF, Flavor::MS}) {
    Surj y{1, 3, 2, 1};
    EXPECT_EQ(surj_compose(f, {1}, {y}), el<Surj>(1, {{y, 1}}));
    EXPECT_EQ(surj_compose(f, y, {{1}, {1}, {1}}), el<Surj>(1, {{y, 1}}));
  }
}

// ---------------------------------------------------------------- action on simplices

TEST(Action, ThreeFoldMonomial) {
  Surj x{1, 2, 1, 3, 2, 1, 3};
  auto t = bf_monomial(x, {0, 0, 1, 2, 2, 4, 5, 5});
  SimplexTensor want{{0, 1, 2, 4, 5}, {0, 1, 2, 3, 4}, {2, 5}};
  EXPECT_EQ(t.tensor, want);
  EXPECT_EQ(t.sign, 1);
  auto phi = bf_action(x, 5);
  EXPECT_EQ(phi.coeff(want), Int(1));
  EXPECT_EQ(recover_cuts(x, want, 5), (std::vector<std::vector<int>>{{0, 0, 1, 2, 2, 4, 5, 5}}));
}

TEST(Action, VanishesAboveBound) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int k = m * (n - 1) + 1; k <= 4; ++k)
        SurjComplex(n, Flavor::BF).for_each_gen(k, [&](const Surj& x) {
          ASSERT_TRUE(bf_action(x, m).is_zero()) << tuple_str(x) << " m=" << m;
        });
}

TEST(Action, MonomialsDoNotCancel) {
  // distinct cut sequences give distinct tensors, so the nonzero monomials are the terms
  for (auto [x, m] : {std::pair<Surj, int>{{1, 2, 1}, 3}, {{1, 2, 1, 3, 2, 1, 3}, 4}, {{2, 1, 2, 1}, 3}}) {
    int N = (int)x.size();
    std::vector<int> cuts(N + 1, 0);
    cuts[N] = m;
    long long seqs = 0, nonzero = 0;
    std::set<SimplexTensor> seen;
    std::function<void(int)> rec = [&](int j) {
      if (j == N) {
        ++seqs;
        auto t = bf_monomial(x, cuts);
        if (t.sign) {
          ++nonzero;
          EXPECT_TRUE(seen.insert(t.tensor).second);
        }
        return;
      }
      for (int c = cuts[j - 1]; c <= m; ++c) {
        cuts[j] = c;
        rec(j + 1);
      }
    };
    rec(1);
    long long binom = 1;
    for (int i = 1; i <= N - 1; ++i) binom = binom * (m + i) / i;
    EXPECT_EQ(seqs, binom);
    EXPECT_EQ((long long)bf_action(x, m).size(), nonzero);
  }
}

TEST(Action, PowerOperationConstant) {
  auto y = action_M(5, {8, 0}, 2);
  SimplexTensor full(5, {0, 1, 2});
  EXPECT_EQ(y.size(), 1u);
  EXPECT_EQ(y.coeff(full), Int(4));
  EXPECT_EQ(steenrod_constant(2, 5), Int(4));
  auto z = action_M(3, {2, 0}, 1);
  EXPECT_EQ(z.size(), 1u);
  EXPECT_EQ(z.coeff(SimplexTensor(3, {0, 1})), steenrod_constant(1, 3));
  EXPECT_EQ(steenrod_constant(1, 3), Int(1));
}

TEST(Action, CupProductOnTriangle) {
  // the degree 0 operation is the cup product up to the evaluation sign
  auto X = simplex_face_table(2);
  Cochain a, b;
  a.q = b.q = 1;
  a.values["01"] = 1;
  b.values["12"] = 1;
  EXPECT_EQ(cochain_evaluate({1, 2}, {a, b}, X, "012"), Int(-1));
  EXPECT_EQ(cochain_evaluate({2, 1}, {a, b}, X, "012"), Int(0));
}
