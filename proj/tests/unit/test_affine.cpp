#include <doctest.h>

#include "interflow/affine/frameworks.hpp"
#include "interflow/core/errors.hpp"
#include "interflow/interproc/generators.hpp"
#include "interflow/solver/solver.hpp"

using namespace interflow;

TEST_SUITE("affine") {

TEST_CASE("assignment matrices") {
  auto inc = aff_matrix::assignment(1, {1, 1}, 1);
  CHECK(inc.str() == "[[1,0],[1,1]]");
  CHECK(mat_apply(inc, embed({5})) == embed({6}));
  auto zero = aff_matrix::assignment(1, {0, 0}, 1);
  CHECK(apply_matset({zero}, {embed({5}), embed({7})}) == state_set{embed({0})});
  CHECK(apply_matset({aff_matrix(1)}, {embed({5})}) == state_set{embed({5})});
  CHECK(zero * inc == zero);
  CHECK_THROWS_AS(aff_matrix(1, rvec{0, 0, 1, 1}), error);
}

TEST_CASE("relations mirror matrix sets") {
  auto m = aff_matrix::assignment(2, {1, 2, 0}, 2); // x2 := 1 + 2 x1
  auto r = phi(m);
  CHECK(r(rvec{3, 9}) == rvec{3, 7});
  mat_set a{m, aff_matrix(2)}, b{aff_matrix::assignment(1, {0, 0, 1}, 2)};
  CHECK(phi(matset_compose(a, b)) == relation_compose(phi(a), phi(b)));
  state_set s{embed({1, 1}), embed({0, 4})};
  CHECK(apply_relation(phi(a), s) == apply_matset(a, s));
  CHECK(relation_contains(phi(a), {1, 1}, {1, 3}));
}

TEST_CASE("polyhedra from generators") {
  auto seg = polyhedron::from_generators(1, {{0}, {1}});
  CHECK(seg.str() == "-1*x1 >= -1; 1*x1 >= 0");
  CHECK(seg.contains({rational(1, 2)}));
  CHECK_FALSE(seg.contains({2}));
  auto plane = polyhedron::from_generators(2, {{0, 0}}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(plane.is_universe());
  CHECK(plane.str() == "universe");
  CHECK(polyhedron::empty(2).str() == "empty");
  CHECK(poly_join(polyhedron::point({0}), polyhedron::point({1})) == seg);
  CHECK_THROWS_AS(polyhedron::universe(7), error);
}

TEST_CASE("constraints, inclusion and intersection") {
  auto box = polyhedron::from_constraints(
      2, {{{1, 0}, 0, false}, {{-1, 0}, -1, false}, {{0, 1}, 0, false}, {{0, -1}, -1, false}});
  CHECK(box.points().size() == 4);
  auto tri = polyhedron::from_generators(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(poly_include(tri, box));
  CHECK_FALSE(poly_include(box, tri));
  auto line = polyhedron::from_constraints(2, {{{1, -1}, 0, true}});
  CHECK(line.lines().size() == 1);
  auto cut = poly_intersect(box, line);
  CHECK(poly_equal(cut, polyhedron::from_generators(2, {{0, 0}, {1, 1}})));
  auto img = affine_image(box, {{1, 1}}, {1});
  CHECK(poly_equal(img, polyhedron::from_generators(1, {{1}, {3}})));
  CHECK(poly_equal(project(box, {1}), polyhedron::from_generators(1, {{0}, {1}})));
}

TEST_CASE("unreduced rationals are accepted") {
  rational half(2, 4), third(-2, 6);
  auto p = polyhedron::from_generators(2, {{half, third}});
  CHECK(p.contains({rational(1, 2), rational(-1, 3)}));
  CHECK(p.contains({half, third}));
  aff_matrix m(1, rvec{1, 0, rational(3, 3), 0});
  CHECK(mat_apply(m, embed({7})) == embed({1}));
}

TEST_CASE("hulled relation apply") {
  // graph of y = 0 joined with graph of y = x covers the plane
  auto g0 = polyhedron::from_constraints(2, {{{0, 1}, 0, true}});
  auto gid = polyhedron::from_constraints(2, {{{1, -1}, 0, true}});
  auto j = poly_join(g0, gid);
  CHECK(j.is_universe());
  CHECK(relation_apply(j, polyhedron::point({0})).is_universe());
  CHECK(relation_apply(gid, polyhedron::point({3})) == polyhedron::point({3}));
  CHECK(relation_compose(g0, gid) == g0);
}

TEST_CASE("hulled matrices") {
  hulled_matrix_fw fw({"x"});
  auto id = fw.identity();
  CHECK(id == polyhedron::point({0, 1}));
  auto seg = hull_of({aff_matrix(1), aff_matrix::assignment(1, {0, 0}, 1)}, 1);
  CHECK(hulled_matrix_apply(seg, polyhedron::point({0}), 1) == polyhedron::point({0}));
  CHECK(poly_equal(hulled_matrix_apply(seg, polyhedron::point({2}), 1),
                   polyhedron::from_generators(1, {{0}, {2}})));
  CHECK(fw.matrices(seg).size() == 2);
}

TEST_CASE("exact matrix analysis of a procedure") {
  auto p = parse_program("vars: x\nproc main\n start a\n final c\n edge a b assign x := 1\n"
                         " edge b c call q\nend\nproc q\n start s\n final t\n"
                         " edge s t assign x := 2*x\n edge s t skip\nend\n");
  exact_matrix_fw mf(p.vars());
  auto t = gen_functional_T(p, mf);
  auto ts = solve_workset(t);
  CHECK(ts.values[t.var("t")].size() == 2);
  stateset_value_fw vf(p.vars());
  auto r = gen_functional_R(
      p, vf, end_summaries(p, t, ts.values),
      [](const mat_set &m, const state_set &s) { return apply_matset(m, s); },
      state_set{embed({0})});
  auto rs = solve_workset(r);
  CHECK(rs.values[r.var("c")] == state_set{embed({1}), embed({2})});
}

TEST_CASE("apply labels are rejected by affine domains") {
  auto p = parse_program("vars: x\nproc main\n start a\n final b\n edge a b apply f\nend\n");
  stateset_value_fw vf(p.vars());
  CHECK_THROWS_AS(vf.transfer(p.main().edges[0].lab), error);
}

} // TEST_SUITE
