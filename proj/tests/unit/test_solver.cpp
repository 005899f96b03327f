#include <doctest.h>

#include "support/random.hpp"

#include "interflow/solver/solver.hpp"

#include <cstdlib>

using namespace interflow;

namespace {

constraint_system<interval_domain> loop_system() {
  // x1 >= [0,0], x1 >= x1 + 1 (bounded by nothing)
  constraint_system<interval_domain> sys(interval_domain{}, {"x1", "x2"});
  sys.add_constant(0, interval(0, 0), "[0,0]");
  sys.add(
      0, {0}, [](const assignment<interval> &a) { return interval_add(a[0], interval(1, 1)); },
      "x1 + 1");
  sys.add(1, {0}, [](const assignment<interval> &a) { return a[0]; }, "x1");
  return sys;
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("constraint ids and rendering") {
  auto sys = loop_system();
  REQUIRE(sys.constraints().size() == 3);
  CHECK(sys.constraints()[0].id == "x1");
  CHECK(sys.constraints()[2].id == "x3");
  CHECK(sys.render(sys.constraints()[1]) == "x[x1] >= x1 + 1");
  CHECK_THROWS_AS(sys.var("nope"), error);
  CHECK_THROWS_AS(sys.add_constant(7, interval(), "c"), error);
}

TEST_CASE("budget exhaustion reports divergence") {
  auto sys = loop_system();
  auto o = solve_workset(sys, strategy::fifo(), 20);
  CHECK(o.diverged);
  CHECK(o.steps == 20);
  CHECK_FALSE(o.trace.empty());
  CHECK(o.trace.front().line() == "step 1: pick x1, t=[0,0], update x[x1]: empty -> [0,0]");
}

TEST_CASE("widening makes the loop terminate") {
  auto sys = loop_system();
  auto o = solve_widening(sys, widen_fn<interval>(interval_widen));
  REQUIRE_FALSE(o.diverged);
  CHECK(o.values[0] == interval(bound::of(0), bound::plus_inf()));
  CHECK(o.values[1] == o.values[0]);
  CHECK(sys.is_solution(o.values));
}

TEST_CASE("environment overrides the default budget") {
  ::setenv("INTERFLOW_BUDGET", "7", 1);
  CHECK(default_budget() == 7);
  auto o = solve_workset(loop_system());
  CHECK(o.diverged);
  CHECK(o.steps == 7);
  ::setenv("INTERFLOW_BUDGET", "junk", 1);
  CHECK(default_budget() == builtin_budget);
  ::unsetenv("INTERFLOW_BUDGET");
}

TEST_CASE("scripted strategy follows the script and rejects unknown ids") {
  constraint_system<interval_domain> sys(interval_domain{}, {"x"}, "u");
  sys.add_constant(0, interval(0, 1), "[0,1]");
  sys.add_constant(0, interval(0, 2), "[0,2]");
  auto o = solve_workset(sys, strategy::scripted({"u2", "u1"}));
  REQUIRE(o.trace.size() == 2);
  CHECK(o.trace[0].cid == "u2");
  CHECK_FALSE(o.trace[1].updated);
  CHECK_THROWS_AS(solve_workset(sys, strategy::scripted({"u9"})), error);
  auto w = solve_widening(sys, widen_fn<interval>(interval_widen), strategy::scripted({"u2", "u1"}));
  CHECK(w.values[0] == interval(0, 2));
}

TEST_CASE("normalization preserves the least solution") {
  testing::rng_t rng(3);
  for (int i = 0; i < 30; ++i) {
    auto l = testing::random_lattice(rng, 5);
    auto fns = testing::random_fns(rng, l, 2, false);
    auto s = to_constraint_system(testing::random_fn_system(rng, l, fns));
    auto n = normalize(s);
    CHECK(n.constraints().size() == n.size());
    CHECK(kleene_lfp(s, 500).values == kleene_lfp(n, 500).values);
    CHECK(eval_F(s, kleene_lfp(s, 500).values) == kleene_lfp(s, 500).values);
  }
}

TEST_CASE("workset invariants hold along every run") {
  testing::rng_t rng(5);
  for (int i = 0; i < 30; ++i) {
    auto l = testing::random_lattice(rng, 6);
    auto fns = testing::random_fns(rng, l, 2, false);
    auto s = to_constraint_system(testing::random_fn_system(rng, l, fns));
    auto k = kleene_lfp(s, 500);
    for (auto st : {strategy::fifo(), strategy::lifo(), strategy::fair()})
      CHECK(solve_workset(s, st, 5000, &k.values).values == k.values);
  }
}

TEST_CASE("outcome enumeration finds every widened result") {
  constraint_system<interval_domain> sys(interval_domain{}, {"x"}, "u");
  sys.add_constant(0, interval(17, 17), "17");
  sys.add_constant(0, interval(42, 42), "42");
  auto outs = enumerate_outcomes(sys, std::optional(widen_fn<interval>(interval_widen)));
  REQUIRE(outs.outcomes.size() == 2);
  CHECK(outs.diverged_runs == 0);
}

} // TEST_SUITE
