#include <gtest/gtest.h>

#include <chainops/maclane.hpp>
#include <chainops/parse.hpp>
#include <random>

using namespace chainops;

TEST(Parse, SurjectionSum) {
  auto x = parse_surj("(1,2,1) - 3*(2,1,2)", 2, {});
  EXPECT_EQ(x.degree, 1);
  EXPECT_EQ(x.coeff({1, 2, 1}), Int(1));
  EXPECT_EQ(x.coeff({2, 1, 2}), Int(-3));
  EXPECT_EQ(parse_surj("(1 2 1)", 2, {}), parse_surj("(1,2,1)", 2, {}));
  EXPECT_TRUE(parse_surj("0", 2, {}).is_zero());
}

TEST(Parse, DegenerateWarning) {
  Warnings w;
  auto x = parse_surj("(1,1,2)", 2, {}, &w);
  EXPECT_TRUE(x.is_zero());
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("degenerate"), std::string::npos);
}

TEST(Parse, NotSurjective) {
  EXPECT_THROW(parse_surj("(1,3,1)", 3, {}), InvalidInput);
  EXPECT_THROW(parse_perm("(1,1,2)"), InvalidInput);
}

TEST(Parse, DegreeMismatch) {
  try {
    parse_surj("(1,2)\n + (1,2,1)", 2, {});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Parse, SyntaxPosition) {
  try {
    parse_surj("(1,2,1) +\n  (1,2,", 2, {});
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2);
    EXPECT_GE(e.col, 3);
  }
  EXPECT_THROW(parse_surj("(1,2,1) ? (2,1,2)", 2, {}), SyntaxError);
  EXPECT_THROW(parse_surj("3 *", 2, {}), SyntaxError);
}

TEST(Parse, MinimalNames) {
  auto x = parse_mgen("T^2y3 - y3 + 2*Ty3", 5, {});
  EXPECT_EQ(x.coeff({3, 2}), Int(1));
  EXPECT_EQ(x.coeff({3, 0}), Int(-1));
  EXPECT_EQ(x.coeff({3, 1}), Int(2));
  EXPECT_EQ(parse_mgen("(3,2)", 5, {}), parse_mgen("T^2y3", 5, {}));
}

TEST(Parse, FieldReduction) {
  auto x = parse_surj("7*(1,2,1)", 2, Ring::field(3));
  EXPECT_EQ(x.coeff({1, 2, 1}), Int(1));
  EXPECT_TRUE(parse_surj("3*(1,2,1)", 2, Ring::field(3)).is_zero());
}

TEST(Parse, FaceTensor) {
  auto t = parse_face_tensor("(0,1)@(1,2) - 2*(0,2)⊗(1,2)", 2, {});
  EXPECT_EQ(t.degree, 2);
  EXPECT_EQ(t.coeff({{0, 1}, {1, 2}}), Int(1));
  EXPECT_EQ(t.coeff({{0, 2}, {1, 2}}), Int(-2));
  EXPECT_THROW(parse_face_tensor("(0,1)@(1,2) - (0,2)⊗(2)", 2, {}), InvalidInput);
  EXPECT_THROW(parse_face("(0,3)", 2, {}), InvalidInput);
}

TEST(Parse, RoundTripRandom) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + (int)(rng() % 4);
    int k = (int)(rng() % 4);
    std::vector<Surj> pool;
    SurjComplex(n, Flavor::BF).for_each_gen(k, [&](const Surj& x) { pool.push_back(x); });
    if (pool.empty()) continue;
    Element<Surj> e({}, k);
    for (int t = 0; t < 4; ++t) e.add(pool[rng() % pool.size()], (int)(rng() % 7) - 3);
    auto back = parse_surj(format(e), n, {});
    ASSERT_EQ(back, e) << format(e);
  }
  for (int trial = 0; trial < 100; ++trial) {
    bool cyc = trial % 2;
    const Group& G = cyc ? cyc_group(4) : sym_group(3);
    EGComplex E(G);
    int k = (int)(rng() % 3);
    std::vector<Tuple> pool;
    E.for_each_gen(k, [&](const Tuple& x) { pool.push_back(x); });
    Element<Tuple> e({}, k);
    for (int t = 0; t < 3; ++t) e.add(pool[rng() % pool.size()], (int)(rng() % 5) - 2);
    ASSERT_EQ(parse_eg(E.show(e), G, {}), e) << E.show(e);
  }
}
