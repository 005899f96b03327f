#include <doctest.h>

#include "support/random.hpp"

#include "interflow/core/text.hpp"
#include "interflow/widening/kits.hpp"

#include <filesystem>

using namespace interflow;

TEST_SUITE("widening") {

TEST_CASE("interval widening") {
  auto inf = bound::plus_inf();
  CHECK(interval_widen(interval(0, 0), interval(0, 1)) == interval(bound::of(0), inf));
  CHECK(interval_widen(interval(0, 2), interval(1, 1)) == interval(0, 2));
  CHECK(interval_widen(interval(), interval(3, 4)) == interval(3, 4));
  CHECK(interval_widen(interval(0, 0), interval(-1, 0)) ==
        interval(bound::minus_inf(), bound::of(0)));
  CHECK(validate_interval_widening(3, 200).ok());
}

TEST_CASE("the 5.13 table") {
  auto k = counterexample("5.13");
  auto rep = validate_widening(k.widen, 1, 300);
  CHECK(rep.ok());
  CHECK_FALSE(rep.monotone);
  CHECK_FALSE(rep.equals_join);
  auto w = idp_wrap(k.widen);
  const auto &l = *k.spec.lattice;
  for (element a : l.elements())
    for (element b : l.elements())
      if (l.leq(b, a))
        CHECK(w(a, b) == a);
}

TEST_CASE("join is a widening on a finite lattice") {
  testing::rng_t rng(9);
  for (int i = 0; i < 10; ++i) {
    auto l = testing::random_lattice(rng, 6);
    auto rep = validate_widening(widening_op::join(l), 2, 100);
    CHECK(rep.ok());
    CHECK(rep.equals_join);
  }
}

TEST_CASE("non-extrapolating tables are caught") {
  auto l = finite_lattice::build({"bot", "a", "top"}, {{"bot", "a"}, {"a", "top"}});
  auto bad = widening_op::from_entries(l, {{l->find("a"), l->find("top"), l->find("a")}});
  auto rep = validate_widening(bad, 1, 50);
  CHECK_FALSE(rep.extrapolation.ok);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("lifted widening is pointwise") {
  auto k = counterexample("5.13");
  auto lw = lift_widen(k.widen);
  auto f = k.fns.at("f"), g = k.fns.at("g");
  auto h = lw(f, g);
  for (element x : k.spec.lattice->elements())
    CHECK(h(x) == k.widen(f(x), g(x)));
}

TEST_CASE("scripts") {
  CHECK(parse_script("x1 x2 # tail\n\n  T3\n") == std::vector<std::string>{"x1", "x2", "T3"});
  CHECK(parse_script("").empty());
}

TEST_CASE("embedded corpus matches the counterexamples directory") {
  namespace fs = std::filesystem;
  std::size_t files = 0;
  for (auto &entry : fs::directory_iterator(INTERFLOW_CORPUS_DIR)) {
    auto name = entry.path().filename().string();
    REQUIRE(corpus().count(name) == 1);
    CHECK(text::read_file(entry.path().string()) == corpus_file(name));
    ++files;
  }
  CHECK(files == corpus().size());
}

TEST_CASE("widened runs on 5.13 and 5.14") {
  auto k = counterexample("5.13");
  const auto &l = *k.spec.lattice;
  auto fg = run_functional_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                   k.strategies.at("T_fg"), strategy::fifo());
  auto gf = run_functional_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                   k.strategies.at("T_gf"), strategy::fifo());
  CHECK(l.name(fg.R.at("r")) == "l7");
  CHECK(l.name(gf.R.at("r")) == "l7");
  auto cs = run_callstring_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                   k.strategies.at("A"));
  CHECK(l.name(cs.A.at("r")) == "l8");

  auto p = counterexample("5.14");
  auto sets = enumerate_solution_sets(p.prog, p.spec.lattice, p.fns, p.widen, p.init);
  REQUIRE_FALSE(sets.A.empty());
  for (auto &a : sets.A)
    CHECK(p.spec.lattice->name(a.at("r_p")) == "l5");
  for (auto &c : evaluate_claims(*p.spec.lattice, sets))
    CHECK_FALSE(c.holds);
}

} // TEST_SUITE
