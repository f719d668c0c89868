// one PASS/FAIL line per acceptance criterion
#include <chainops/verify.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>

using namespace chainops;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void need(bool c, const std::string& what) {
    if (!c && ok) why = what;
    ok = ok && c;
  }
};

void suite(Check& c, const std::string& name) {
  for (const auto& r : run_tasks(find_suite(name).tasks({}), 1))
    c.need(r.ok, r.name + ": " + r.failure);
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Surj kLong{2, 1, 2, 3, 4, 2, 3, 1, 5, 4, 1, 2};

Check c1() {
  Check c;
  double t = timed([&] { suite(c, "contracted"); });
  c.need(t < 60, "contraction suite took " + std::to_string(t) + " s");
  return c;
}

Check c2() {
  Check c;
  c.need(boundary_signs(Flavor::BF, kLong) == std::vector<int>{1, -1, 1, -1, 1, -1, 1, 1, 0, -1, -1, 1},
         "BF sign table");
  c.need(surj_boundary(Flavor::BF, kLong).size() == 10, "BF boundary term count");
  Surj x{2, 1, 2, 4, 2, 3, 1, 4, 1, 2};
  c.need(boundary_signs(Flavor::MS, x) == std::vector<int>{1, 1, -1, -1, 1, 0, -1, 1, 1, -1}, "MS sign table");
  c.need(surj_boundary(Flavor::MS, x).size() == 6, "MS boundary does not have six terms");
  return c;
}

Check c3() {
  Check c;
  suite(c, "signs");
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      SurjComplex(n, Flavor::BF).for_each_gen(k, [&](const Surj& x) {
        c.need(sign_p(x) == sign_c(x) * sign_delta(x) * parity(f_x(x)), "p != c delta tau at " + tuple_str(x));
      });
  c.need(sign_c(kLong) == 1 && sign_delta(kLong) == -1 && parity(f_x(kLong)) == -1 && sign_p(kLong) == 1,
         "sign values of the long example");
  return c;
}

Check c4() {
  Check c;
  suite(c, "iso");
  return c;
}

Check c5() {
  Check c;
  suite(c, "tr-pr");
  std::vector<Perm> want{{2, 1, 3, 4, 5}, {1, 2, 3, 4, 5}, {2, 3, 4, 1, 5}, {3, 4, 2, 1, 5},
                         {4, 2, 3, 1, 5}, {2, 3, 1, 5, 4}, {3, 1, 5, 4, 2}, {3, 5, 4, 1, 2}};
  c.need(fundamental_simplex(kLong) == want, "fundamental simplex list");
  c.need(sign_c(kLong) == 1, "fundamental simplex sign");
  return c;
}

Check c6() {
  Check c;
  suite(c, "minimal");
  return c;
}

Check c7() {
  Check c;
  double t = timed([&] { suite(c, "joins"); });
  c.need(t < 120, "join suite took " + std::to_string(t) + " s");
  return c;
}

Check c8() {
  Check c;
  suite(c, "action");
  suite(c, "cochains");
  Surj x{1, 2, 1, 3, 2, 1, 3};
  SimplexTensor t{{0, 1, 2, 4, 5}, {0, 1, 2, 3, 4}, {2, 5}};
  c.need(bf_action(x, 5).coeff(t) == 1, "three-fold monomial coefficient");
  for (int m = 0; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k = m * (n - 1) + 1; k <= 4; ++k)
        SurjComplex(n, Flavor::BF).for_each_gen(k, [&](const Surj& y) {
          c.need(bf_action(y, m).is_zero(), "nonzero above the bound at " + tuple_str(y));
        });
  double s = timed([&] {
    auto y = action_M(5, {8, 0}, 2);
    c.need(y.size() == 1 && y.coeff(SimplexTensor(5, {0, 1, 2})) == 4, "y_8 on Delta^2 over F_5");
  });
  c.need(s < 300, "y_8 on Delta^2 took " + std::to_string(s) + " s");
  for (auto [m, p] : {std::pair{1, 3}, {2, 5}}) {
    auto y = action_M(p, {m * (p - 1), 0}, m);
    c.need(y.size() == 1 && y.coeff(SimplexTensor(p, full_simplex(m))) == steenrod_constant(m, p),
           "constant c_{" + std::to_string(m) + "," + std::to_string(p) + "}");
  }
  return c;
}

Check c9() {
  Check c;
  suite(c, "sigma");
  suite(c, "operads");
  c.need(block_perm({2, 3, 1}, {2, 4, 3}) == Perm{3, 4, 5, 6, 7, 8, 9, 1, 2}, "block permutation");
  c.need(sigma_compose({2, 3, 1}, {{2, 1}, {3, 1, 2, 4}, {3, 2, 1}}) == Perm{5, 3, 4, 6, 9, 8, 7, 2, 1},
         "symmetric composition");
  auto z = surj_compose(Flavor::BF, {1, 2, 1, 3, 2}, {{1, 2, 3, 1}, {1, 2, 1, 4, 3}, {1, 2, 1}});
  c.need(z.coeff({1, 2, 4, 5, 4, 7, 2, 3, 1, 8, 9, 8, 7, 6}) == -1, "division sign");
  auto w = partial_compose(Flavor::BF, 2, {1, 2, 1, 3, 2}, {1, 2, 1});
  c.need(w.size() == 3 && w.coeff({1, 2, 1, 4, 2, 3, 2}) == 1 && w.coeff({1, 2, 3, 1, 4, 3, 2}) == -1 &&
             w.coeff({1, 2, 3, 2, 1, 4, 2}) == -1,
         "partial composition terms");
  return c;
}

Check c10() {
  Check c;
  suite(c, "operad-morphisms");
  return c;
}

Check c11() {
  Check c;
  Element<Surj> want({}, 2);
  want.add({1, 2, 4, 3, 2, 4}, 1);
  want.add({1, 2, 3, 4, 3, 4}, 1);
  c.need(surj_contraction(Flavor::BF, {1, 4, 3, 2, 4}) == want, "H_4 of (1,4,3,2,4)");
  return c;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, Check (*)()>> cs{
      {"contraction suite", c1},   {"golden boundaries", c2},  {"sign identities", c3},
      {"isomorphisms", c4},        {"table reduction / prism", c5}, {"minimal resolution", c6},
      {"join homotopies", c7},     {"surjection action", c8},  {"operads", c9},
      {"operad morphisms", c10},   {"contraction text check", c11}};
  int failed = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Check c;
    double t = timed([&] {
      try {
        c = cs[i].second();
      } catch (const std::exception& e) {
        c.need(false, std::string("exception: ") + e.what());
      }
    });
    std::printf("%s criterion %zu: %s (%.1f s)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, cs[i].first, t,
                c.ok ? "" : " -- ", c.why.c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
