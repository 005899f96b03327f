#include <doctest.h>

#include "support/random.hpp"

#include "interflow/interproc/generators.hpp"
#include "interflow/mop/paths.hpp"
#include "interflow/solver/solver.hpp"
#include "interflow/widening/kits.hpp"

using namespace interflow;

TEST_SUITE("interproc") {

TEST_CASE("constraint generation order") {
  auto k = counterexample("5.13");
  finite_summary_fw sf(k.spec.lattice, k.fns);
  finite_value_fw vf(k.spec.lattice, k.fns);
  auto t = gen_functional_T(k.prog, sf);
  REQUIRE(t.constraints().size() == 6);
  CHECK(t.render(t.constraints()[3]) == "T[s_p] >= id");
  CHECK(t.render(t.constraints()[4]) == "T[r_p] >= f o T[s_p]");
  auto cs = compute_callstrings(k.prog);
  auto a = gen_callstring_A(k.prog, vf, cs, k.init);
  REQUIRE(a.constraints().size() == 9);
  CHECK(a.render(a.constraints()[0]) == "A[s@ε] >= init");
  CHECK(a.render(a.constraints()[3]) == "A[s_p@e1] >= A[s@ε]");
  CHECK(a.render(a.constraints()[6]) == "A[s_p@e2] >= A[u@ε]");
}

TEST_CASE("least solutions on a small distributive program") {
  auto k = counterexample("5.14");
  auto sol = solve_finite(k.prog, k.spec.lattice, k.fns, k.init);
  const auto &l = *k.spec.lattice;
  CHECK(l.name(sol.R.at("r")) == "l4");
  CHECK(l.name(sol.A_merged.at("r_p")) == "l4");
  CHECK(l.name(sol.A.at("s_p@e1")) == "l1");
  CHECK(l.name(sol.A.at("s_p@e2")) == "l2");
  CHECK(l.name(sol.T.at("r_p")(l.find("l1"))) == "l4");
}

TEST_CASE("missing summaries are reported") {
  auto k = counterexample("5.13");
  finite_value_fw vf(k.spec.lattice, k.fns);
  std::map<std::string, tabulated_fn> none;
  CHECK_THROWS_AS(gen_functional_R(
                      k.prog, vf, none, [](const tabulated_fn &t, element x) { return t(x); },
                      k.init),
                  error);
}

TEST_CASE("interval call-string analysis of straight-line code") {
  auto p = parse_program("vars: x, y\nproc main\n start a\n final c\n"
                         " edge a b assign x := 3\n edge b c assign y := 2*x + 1\nend\n");
  interval_value_fw vf(p.vars());
  auto cs = compute_callstrings(p);
  auto sys = gen_callstring_A(p, vf, cs, vf.domain().top());
  auto o = solve_workset(sys);
  auto c = o.values[sys.var(callstring_var("c", {}))];
  CHECK(c.vals[0] == interval(3, 3));
  CHECK(c.vals[1] == interval(7, 7));
}

TEST_CASE("unreachable call sites stay at bottom") {
  auto spec = parse_lattice_spec("elements: bot, a, top\norder: bot < a < top\n"
                                 "fn k: bot -> top, a -> top, top -> top\n");
  auto p = parse_program("vars: x\nproc main\n start s\n final r\n edge s r call q\nend\n"
                         "proc dead\n start d0\n final d2\n edge d0 d1 apply k\n"
                         " edge d1 d2 call q\nend\nproc q\n start s_q\n final r_q\n"
                         " edge s_q r_q skip\nend\n");
  CHECK(reachable_nodes(p) == std::set<std::string>{"s", "r", "s_q", "r_q"});
  const auto &l = *spec.lattice;
  auto sol = solve_finite(p, spec.lattice, fn_table_of(spec), l.find("a"));
  CHECK(l.name(sol.R.at("d1")) == "bot");
  CHECK(l.name(sol.R.at("s_q")) == "a");
  CHECK(l.name(sol.A_merged.at("s_q")) == "a");
  auto rep = check_coincidence(p, spec.lattice, fn_table_of(spec), l.find("a"));
  CHECK(rep.matches_theory());
}

TEST_CASE("coincidence report") {
  testing::rng_t rng(17);
  for (int i = 0; i < 20; ++i) {
    auto l = testing::random_lattice(rng, 5);
    auto fns = testing::random_fns(rng, l, 2, true);
    auto p = testing::random_program(rng, fns);
    auto rep = check_coincidence(p, l, fns, testing::random_element(rng, *l));
    CHECK(rep.matches_theory());
    CHECK(rep.all_coincide);
  }
  auto loop = parse_program(corpus_file("ex4_20.prog"));
  auto spec = parse_lattice_spec(corpus_file("ex4_20.lat"));
  try {
    check_coincidence(loop, spec.lattice, fn_table_of(spec), *spec.init, 16);
    FAIL("loop accepted");
  } catch (const error &e) {
    CHECK(e.kind() == error_kind::incomplete_mop);
  }
}

} // TEST_SUITE
