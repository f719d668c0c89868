// values frozen from tests/oracle/gen_frozen.py, which shares no code with the library
#include <gtest/gtest.h>

#include <chainops/action.hpp>
#include <chainops/minimal.hpp>
#include <chainops/operads.hpp>
#include <fstream>
#include <nlohmann/json.hpp>

using namespace chainops;
using nlohmann::json;

namespace {

const json& frozen() {
  static json j = [] {
    std::ifstream in(FROZEN_JSON);
    if (!in) throw std::runtime_error("cannot open " FROZEN_JSON);
    return json::parse(in);
  }();
  return j;
}

template <class G>
Element<G> expected(const json& terms, int deg) {
  Element<G> e({}, deg);
  for (const auto& t : terms) e.add(t[0].get<G>(), Int(t[1].get<long long>()));
  return e;
}

std::vector<int> iota(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST(Frozen, FaceBoundary) {
  for (const auto& c : frozen()["face_boundary"]) {
    Face f = c["face"];
    EXPECT_EQ(face_boundary(f), expected<Face>(c["terms"], (int)f.size() - 2)) << c["face"];
  }
}

TEST(Frozen, Multidiagonal) {
  for (const auto& c : frozen()["multidiagonal"]) {
    int n = c["n"], m = c["m"];
    auto got = multidiagonal(n, full_simplex(m));
    EXPECT_EQ(got, expected<TGen<Face>>(c["terms"], m)) << n << " " << m;
  }
}

TEST(Frozen, ShuffleMap) {
  for (const auto& c : frozen()["ez"]) {
    int p = c["p"], q = c["q"];
    auto got = ez_points({iota(0, p), iota(0, q)});
    EXPECT_EQ(got, expected<Points>(c["terms"], p + q)) << p << " " << q;
  }
}

TEST(Frozen, AlexanderWhitney) {
  for (const auto& c : frozen()["aw"]) {
    Points pts = c["points"];
    EXPECT_EQ(aw_points(pts), expected<TGen<std::vector<int>>>(c["terms"], (int)pts.size() - 1)) << c["points"];
  }
}

TEST(Frozen, BFBoundary) {
  int n = 0;
  for (const auto& c : frozen()["bf_boundary"]) {
    Surj x = c["x"];
    int deg = (int)x.size() - surj_arity(x);
    EXPECT_EQ(surj_boundary(Flavor::BF, x), expected<Surj>(c["terms"], deg - 1)) << tuple_str(x);
    ++n;
  }
  EXPECT_GE(n, 20);
}

TEST(Frozen, BFContraction) {
  for (const auto& c : frozen()["bf_contraction"]) {
    Surj x = c["x"];
    int deg = (int)x.size() - surj_arity(x);
    EXPECT_EQ(surj_contraction(Flavor::BF, x), expected<Surj>(c["terms"], deg + 1)) << tuple_str(x);
  }
}

TEST(Frozen, BFAction) {
  for (const auto& c : frozen()["bf_action"]) {
    Surj x = c["x"];
    int m = c["m"];
    auto got = bf_action(x, m);
    auto want = expected<SimplexTensor>(c["terms"], (int)x.size() - surj_arity(x) + m);
    EXPECT_EQ(got.size(), want.size()) << tuple_str(x) << " m=" << m;
    EXPECT_EQ(got, want) << tuple_str(x) << " m=" << m;
  }
}

TEST(Frozen, SigmaCompose) {
  for (const auto& c : frozen()["sigma_compose"]) {
    Perm u = c["u"];
    std::vector<Perm> vs = c["v"];
    EXPECT_EQ(sigma_compose(u, vs), c["result"].get<Perm>());
  }
}

TEST(Frozen, MinimalResolution) {
  for (const auto& c : frozen()["minimal"]) {
    MinimalComplex M(c["n"]);
    MGen g{c["deg"], c["pow"]};
    auto conv = [](const json& ts, int deg) {
      Element<MGen> e({}, deg);
      for (const auto& t : ts) e.add(MGen{t[0][0], t[0][1]}, Int(t[1].get<long long>()));
      return e;
    };
    EXPECT_EQ(M.d(g), conv(c["d"], g.deg - 1)) << show_mgen(g);
    EXPECT_EQ(M.h(g), conv(c["h"], g.deg + 1)) << show_mgen(g);
  }
}

TEST(Frozen, SteenrodConstant) {
  for (const auto& c : frozen()["steenrod_constant"])
    EXPECT_EQ(steenrod_constant(c["m"], c["p"]), Int(c["c"].get<int>())) << c;
}
