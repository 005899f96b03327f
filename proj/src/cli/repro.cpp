#include "interflow/cli/commands.hpp"

#include "interflow/abstraction/galois.hpp"
#include "interflow/affine/frameworks.hpp"
#include "interflow/core/errors.hpp"
#include "interflow/interproc/generators.hpp"
#include "interflow/solver/solver.hpp"
#include "interflow/widening/kits.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace interflow::cli {

void repro_report::expect(const std::string &what, const std::string &expected,
                          const std::string &got) {
  checks.push_back({what, expected, got, expected == got});
}

void repro_report::expect_true(const std::string &what, bool cond) {
  checks.push_back({what, "true", cond ? "true" : "false", cond});
}

bool repro_report::pass() const {
  for (auto &c : checks)
    if (!c.ok)
      return false;
  return true;
}

std::string repro_report::render() const {
  std::ostringstream out;
  out << "example: " << id << "\n";
  for (auto &c : checks) {
    out << (c.ok ? "ok   " : "FAIL ") << c.what << ": " << c.got;
    if (!c.ok)
      out << " (expected " << c.expected << ")";
    out << "\n";
  }
  for (auto &n : notes)
    out << "note: " << n << "\n";
  out << "result: " << (pass() ? "pass" : "mismatch") << "\n";
  return out.str();
}

const std::vector<std::string> &repro_ids() {
  static const std::vector<std::string> ids{"3.12", "4.20", "4.37", "4.42", "4.43",
                                            "5.6",  "5.11", "5.13", "5.14"};
  return ids;
}

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

repro_report repro_3_12() {
  repro_report r;
  r.id = "3.12";
  auto prog = parse_program(corpus_file("ex3_12.prog"));
  interval_value_fw vf(prog.vars());
  auto cs = compute_callstrings(prog);
  auto asys = gen_callstring_A(prog, vf, cs, vf.domain().top());
  auto o = solve_workset(asys, strategy::fifo(), 50);
  r.expect("status", "Diverged", o.diverged ? "Diverged" : "Solution");
  auto lbl = asys.var_label(asys.var(callstring_var("n2", {})));
  std::vector<std::string> ups;
  for (auto &t : o.trace)
    if (t.updated && t.var == lbl)
      ups.push_back(t.new_value);
  r.expect_true("at least 11 updates of " + lbl, ups.size() >= 11);
  for (std::size_t k = 0; k <= 10 && k < ups.size(); ++k)
    r.expect("update " + std::to_string(k) + " of " + lbl,
             "x=" + interval(0, static_cast<long>(k)).str(), ups[k]);
  r.notes.push_back(std::to_string(ups.size()) + " updates of " + lbl + " within 50 steps");
  return r;
}

repro_report repro_4_20() {
  repro_report r;
  r.id = "4.20";
  auto spec = parse_lattice_spec(corpus_file("ex4_20.lat"));
  auto abs = parse_lattice_spec(corpus_file("ex4_20_abs.lat"));
  auto conn = make_galois(spec, abs);
  auto fns = fn_table_of(spec);
  const auto &l = *spec.lattice;
  fn_system s{spec.lattice, {"x"}, fns, {}};
  s.cons.push_back({0, std::nullopt, "", l.find("a")});
  s.cons.push_back({0, 0, "f", {}});
  auto ai = canonical_interp(conn, fns);
  auto conc = solve_workset(to_constraint_system(s));
  auto asys = abstract_system(s, ai);
  auto absol = solve_workset(to_constraint_system(asys));
  element lfp = conc.values[0], alfp = absol.values[0];
  r.expect("concrete lfp", "b", l.name(lfp));
  r.expect("abstract lfp", conn.abstract->name(conn.abstract->top()), conn.abstract->name(alfp));
  r.expect("alpha(concrete lfp)", "e", conn.abstract->name(conn.a(lfp)));
  r.expect_true("alpha(lfp) below and not equal to abstract lfp",
                conn.abstract->leq(conn.a(lfp), alfp) && conn.a(lfp) != alfp);
  auto cls = classify_interp(ai, fns);
  r.expect("canonical interpretation", "correct", interp_class_name(cls.cls));
  if (!cls.witness.empty())
    r.notes.push_back("not precise at " + cls.witness);
  return r;
}

// v in {A_lam (x + mu (y - x)) : lam, mu in [0,1]}, A_lam = lam A + (1-lam) B, 2x2
bool in_product(const std::vector<rvec> &A, const std::vector<rvec> &B, const rvec &x,
                const rvec &y, const rvec &v) {
  auto mul = [](const std::vector<rvec> &M, const rvec &p) {
    return rvec{M[0][0] * p[0] + M[0][1] * p[1], M[1][0] * p[0] + M[1][1] * p[1]};
  };
  rvec d{y[0] - x[0], y[1] - x[1]};
  // u(lam) = u0 + lam u1, w(lam) = w0 + lam w1
  rvec u0 = mul(B, x), ua = mul(A, x), w0 = mul(B, d), wa = mul(A, d);
  rvec u1{ua[0] - u0[0], ua[1] - u0[1]}, w1{wa[0] - w0[0], wa[1] - w0[1]};
  auto member_at = [&](double lam) {
    double ux = u0[0].get_d() + lam * u1[0].get_d(), uy = u0[1].get_d() + lam * u1[1].get_d();
    double wx = w0[0].get_d() + lam * w1[0].get_d(), wy = w0[1].get_d() + lam * w1[1].get_d();
    double px = v[0].get_d() - ux, py = v[1].get_d() - uy;
    const double eps = 1e-9;
    if (std::abs(wx) < eps && std::abs(wy) < eps)
      return std::abs(px) < eps && std::abs(py) < eps;
    double mu = std::abs(wx) > std::abs(wy) ? px / wx : py / wy;
    return mu > -eps && mu < 1 + eps && std::abs(px - mu * wx) < eps && std::abs(py - mu * wy) < eps;
  };
  auto member_exact = [&](const rational &lam) {
    rvec u{u0[0] + lam * u1[0], u0[1] + lam * u1[1]}, w{w0[0] + lam * w1[0], w0[1] + lam * w1[1]};
    rvec p{v[0] - u[0], v[1] - u[1]};
    if (w[0] == 0 && w[1] == 0)
      return p[0] == 0 && p[1] == 0;
    rational mu = w[0] != 0 ? p[0] / w[0] : p[1] / w[1];
    return mu >= 0 && mu <= 1 && p[0] == mu * w[0] && p[1] == mu * w[1];
  };
  // det(v - u(lam), w(lam)) = c0 + c1 lam + c2 lam^2
  rvec p0{v[0] - u0[0], v[1] - u0[1]};
  rational c0 = p0[0] * w0[1] - p0[1] * w0[0];
  rational c1 = p0[0] * w1[1] - p0[1] * w1[0] - (u1[0] * w0[1] - u1[1] * w0[0]);
  rational c2 = -(u1[0] * w1[1] - u1[1] * w1[0]);
  if (c0 == 0 && c1 == 0 && c2 == 0) {
    for (int k = 0; k <= 1000; ++k)
      if (member_exact(rational(k, 1000)))
        return true;
    return false;
  }
  if (c2 == 0) {
    if (c1 == 0)
      return false;
    rational lam = -c0 / c1;
    return lam >= 0 && lam <= 1 && member_exact(lam);
  }
  rational disc = c1 * c1 - 4 * c2 * c0;
  if (disc < 0)
    return false;
  integer dn = disc.get_num(), dd = disc.get_den();
  if (mpz_perfect_square_p(dn.get_mpz_t()) && mpz_perfect_square_p(dd.get_mpz_t())) {
    rational s(integer(sqrt(dn)), integer(sqrt(dd)));
    for (rational lam : {rational((-c1 + s) / (2 * c2)), rational((-c1 - s) / (2 * c2))})
      if (lam >= 0 && lam <= 1 && member_exact(lam))
        return true;
    return false;
  }
  double sd = std::sqrt(disc.get_d());
  for (double lam : {(-c1.get_d() + sd) / (2 * c2.get_d()), (-c1.get_d() - sd) / (2 * c2.get_d())})
    if (lam > -1e-12 && lam < 1 + 1e-12 && member_at(lam))
      return true;
  return false;
}

repro_report repro_4_37() {
  repro_report r;
  r.id = "4.37";
  std::vector<rvec> A{{1, -1}, {1, 1}}, B{{-1, 1}, {-1, -1}};
  rvec x{1, 0}, y{0, 1}, v{1, 0};
  auto mat = [](const std::vector<rvec> &M) {
    return aff_matrix(2, rvec{1, 0, 0, 0, M[0][0], M[0][1], 0, M[1][0], M[1][1]});
  };
  mat_set ms{mat(A), mat(B)};
  auto prods = apply_matset(ms, {embed(x), embed(y)});
  state_set want{embed({1, 1}), embed({-1, 1}), embed({-1, -1}), embed({1, -1})};
  r.expect("raw products", render_states(want), render_states(prods));
  r.expect("(1,0) in raw products", "false", yes(prods.count(embed(v)) != 0));
  r.expect("(1,0) in product set X", "false", yes(in_product(A, B, x, y, v)));
  for (rvec p : {rvec{1, 1}, rvec{1, -1}, rvec{-1, -1}})
    r.expect(render_vec(p) + " in X", "true", yes(in_product(A, B, x, y, p)));
  auto seg = polyhedron::from_generators(2, {{1, 1}, {1, -1}});
  r.expect("(1,0) in hull{(1,1),(1,-1)}", "true", yes(seg.contains(v)));
  auto diag = polyhedron::from_generators(2, {{1, 1}, {-1, -1}});
  r.expect("(0,0) = midpoint of (1,1),(-1,-1) in X", "true",
           yes(diag.contains({0, 0}) && in_product(A, B, x, y, {0, 0})));
  auto sq = polyhedron::from_generators(2, {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  r.expect("(1,0) in hull of raw products", "true", yes(sq.contains(v)));
  auto hulled = hulled_matrix_apply(hull_of(ms, 2), polyhedron::from_generators(2, {x, y}), 2);
  r.expect("hulled pipeline", sq.str(), hulled.str());
  r.expect("(1,0) accepted by hulled pipeline", "true", yes(hulled.contains(v)));
  r.notes.push_back("the midpoint of (1,1) and (-1,-1) is (0,0); (1,0) is the midpoint of "
                    "(1,1) and (1,-1)");
  return r;
}

repro_report repro_4_42() {
  repro_report r;
  r.id = "4.42";
  auto prog = parse_program(corpus_file("ex4_42.prog"));
  poly_value_fw vf(prog.vars());
  auto init = polyhedron::universe(1);
  hulled_matrix_fw mf(prog.vars());
  auto mt = gen_functional_T(prog, mf);
  auto mtsol = solve_workset(mt);
  auto mr = gen_functional_R(
      prog, vf, end_summaries(prog, mt, mtsol.values),
      [](const polyhedron &t, const polyhedron &s) { return hulled_matrix_apply(t, s, 1); }, init);
  auto mrsol = solve_workset(mr);
  hulled_relation_fw rf(prog.vars());
  auto rt = gen_functional_T(prog, rf);
  auto rtsol = solve_workset(rt);
  auto rr = gen_functional_R(
      prog, vf, end_summaries(prog, rt, rtsol.values),
      [](const polyhedron &t, const polyhedron &s) { return relation_apply(t, s); }, init);
  auto rrsol = solve_workset(rr);
  auto pm = mrsol.values[mr.var("n2")], pr = rrsol.values[rr.var("n2")];
  r.expect("status", "Solution/Solution",
           std::string(mrsol.diverged ? "Diverged" : "Solution") + "/" +
               (rrsol.diverged ? "Diverged" : "Solution"));
  r.expect("hulled matrix T[n4]", hull_of({aff_matrix(1), aff_matrix::assignment(1, {0, 0}, 1)}, 1).str(),
           mtsol.values[mt.var("n4")].str());
  r.expect("hulled matrix R[n2]", polyhedron::point({0}).str({"x"}), vf.domain().render(pm));
  r.expect("hulled relation R[n2]", polyhedron::universe(1).str({"x"}), vf.domain().render(pr));
  r.expect("strict inclusion", "true", yes(poly_include(pm, pr) && !poly_include(pr, pm)));
  return r;
}

repro_report repro_4_43() {
  repro_report r;
  r.id = "4.43";
  auto prog = parse_program(corpus_file("ex4_43.prog"));
  hulled_matrix_fw mf(prog.vars());
  auto sys = gen_functional_T(prog, mf);
  const std::size_t budget = 40;
  auto o = solve_workset(sys, strategy::fifo(), budget);
  r.expect("status", "Diverged", o.diverged ? "Diverged" : "Solution");
  auto u = sys.var("u");
  auto lbl = sys.var_label(u);
  std::vector<std::size_t> at;
  for (auto &t : o.trace)
    if (t.updated && t.var == lbl)
      at.push_back(t.step);
  r.expect_true("at least 5 updates of " + lbl, at.size() >= 5);
  for (std::size_t n = 1; n <= 5 && n <= at.size(); ++n) {
    mat_set want;
    for (std::size_t t = 0; t < n; ++t)
      want.insert(aff_matrix::assignment(1, {static_cast<long>(t), 1}, 1));
    auto iter = solve_workset(sys, strategy::fifo(), at[n - 1], nullptr, false).values[u];
    r.expect("iterate " + std::to_string(n), hull_of(want, 1).generators_str(),
             iter.generators_str());
  }
  return r;
}

repro_report repro_5_6() {
  repro_report r;
  r.id = "5.6";
  constraint_system<interval_domain> sys(interval_domain{}, {"x"}, "u");
  sys.add_constant(0, interval(0, 1), "[0,1]");
  sys.add_constant(0, interval(0, 2), "[0,2]");
  auto w = solve_widening(sys, widen_fn<interval>(interval_widen));
  auto p = solve_workset(sys);
  r.expect("widening", interval(bound::of(0), bound::plus_inf()).str(), w.values[0].str());
  r.expect("workset", interval(0, 2).str(), p.values[0].str());
  r.expect("widened result is a solution", "true", yes(sys.is_solution(w.values)));
  return r;
}

repro_report repro_5_11() {
  repro_report r;
  r.id = "5.11";
  auto prog = parse_program(corpus_file("ex5_11.prog"));
  interval_value_fw vf(prog.vars());
  auto cs = compute_callstrings(prog);
  auto sys = gen_callstring_A(prog, vf, cs, vf.domain().top());
  auto run = [&](const std::string &file) {
    return solve_widening(sys, widen_fn<interval_env>(env_widen),
                          strategy::scripted(parse_script(corpus_file(file))));
  };
  auto a = run("ex5_11_a.script"), b = run("ex5_11_b.script");
  auto rv = sys.var(callstring_var("r", {}));
  auto ia = a.values[rv].vals[0], ib = b.values[rv].vals[0];
  r.expect("script a: I[r]", interval(bound::of(17), bound::plus_inf()).str(), ia.str());
  r.expect("script b: I[r]", interval(bound::minus_inf(), bound::of(42)).str(), ib.str());
  r.expect("both post-solutions", "true", yes(sys.is_solution(a.values) && sys.is_solution(b.values)));
  r.expect("incomparable", "true", yes(!interval_leq(ia, ib) && !interval_leq(ib, ia)));
  return r;
}

void add_claims(repro_report &r, const counterexample_kit &k, const solution_sets &sets) {
  for (auto &c : evaluate_claims(*k.spec.lattice, sets))
    r.notes.push_back(std::string("claim ") + c.letter + " (" + c.statement +
                      "): " + (c.holds ? "holds" : "refuted"));
}

repro_report repro_5_13() {
  repro_report r;
  r.id = "5.13";
  auto k = counterexample("5.13");
  const auto &l = *k.spec.lattice;
  auto a = run_callstring_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                  k.strategies.at("A"));
  r.expect("call-string A^[r]", k.expected.at("A[r]"), l.name(a.A.at("r")));
  for (auto name : {"T_fg", "T_gf"}) {
    auto f = run_functional_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                    k.strategies.at(name), strategy::fifo());
    r.expect(std::string("functional R[r] with ") + name, k.expected.at("R[r]"),
             l.name(f.R.at("r")));
  }
  r.expect("l7 and l8 incomparable", "true", yes(l.incomparable(l.find("l7"), l.find("l8"))));
  add_claims(r, k, enumerate_solution_sets(k.prog, k.spec.lattice, k.fns, k.widen, k.init));
  return r;
}

repro_report repro_5_14() {
  repro_report r;
  r.id = "5.14";
  auto k = counterexample("5.14");
  const auto &l = *k.spec.lattice;
  auto f = run_functional_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                  k.strategies.at("T"), k.strategies.at("R"));
  r.expect("functional R[r_p]", k.expected.at("R[r_p]"), l.name(f.R.at("r_p")));
  auto sets = enumerate_solution_sets(k.prog, k.spec.lattice, k.fns, k.widen, k.init);
  r.expect_true("call-string outcomes exist", !sets.A.empty());
  bool all = true;
  for (auto &s : sets.A)
    all = all && s.at("r_p") == l.find("l5");
  r.expect("every call-string outcome A^[r_p]", "l5", all ? "l5" : "differs");
  r.expect("l5 and l6 incomparable", "true", yes(l.incomparable(l.find("l5"), l.find("l6"))));
  r.notes.push_back(std::to_string(sets.A.size()) + " call-string outcomes, " +
                    std::to_string(sets.R.size()) + " functional outcomes");
  add_claims(r, k, sets);
  return r;
}

} // namespace

repro_report repro(const std::string &id) {
  static const std::map<std::string, repro_report (*)()> table{
      {"3.12", repro_3_12}, {"4.20", repro_4_20}, {"4.37", repro_4_37},
      {"4.42", repro_4_42}, {"4.43", repro_4_43}, {"5.6", repro_5_6},
      {"5.11", repro_5_11}, {"5.13", repro_5_13}, {"5.14", repro_5_14}};
  auto it = table.find(id);
  if (it == table.end())
    throw error(error_kind::usage, "unknown example id '" + id + "'");
  return it->second();
}

} // namespace interflow::cli
