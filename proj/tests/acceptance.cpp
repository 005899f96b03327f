// acceptance criteria 1-14, one line per criterion
#include "support/random.hpp"

#include "interflow/abstraction/galois.hpp"
#include "interflow/affine/frameworks.hpp"
#include "interflow/interproc/generators.hpp"
#include "interflow/mop/paths.hpp"
#include "interflow/solver/solver.hpp"
#include "interflow/widening/kits.hpp"
#include "interflow/widening/widening.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace interflow;
using namespace interflow::testing;

namespace {

struct verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// ---- 1..9: worked examples ----

verdict c1_divergence() {
  verdict v;
  auto prog = parse_program(corpus_file("ex3_12.prog"));
  interval_value_fw vf(prog.vars());
  auto cs = compute_callstrings(prog);
  auto sys = gen_callstring_A(prog, vf, cs, vf.domain().top());
  auto o = solve_workset(sys, strategy::fifo(), 50);
  v.require(o.diverged, "budget 50 did not diverge");
  auto lbl = sys.var_label(sys.var(callstring_var("n2", {})));
  std::vector<std::string> ups;
  for (auto &t : o.trace)
    if (t.updated && t.var == lbl)
      ups.push_back(t.new_value);
  v.require(ups.size() > 10, "fewer than 11 updates");
  // update 0 is the first assignment [0,0]
  for (long k = 1; k <= 10 && v.ok; ++k)
    v.require(ups[k] == "x=[0," + std::to_string(k) + "]",
              "update " + std::to_string(k) + " = " + ups[k]);
  if (v.ok)
    v.detail = "diverged; updates 1..10 of A[2] = [0,1]..[0,10]";
  return v;
}

verdict c2_canonical_imprecise() {
  verdict v;
  auto spec = parse_lattice_spec(corpus_file("ex4_20.lat"));
  auto conn = make_galois(spec, parse_lattice_spec(corpus_file("ex4_20_abs.lat")));
  auto fns = fn_table_of(spec);
  fn_system s{spec.lattice, {"x"}, fns, {}};
  s.cons.push_back({0, std::nullopt, "", spec.lattice->find("a")});
  s.cons.push_back({0, 0, "f", {}});
  auto ai = canonical_interp(conn, fns);
  auto conc = kleene_lfp(to_constraint_system(s), 100);
  auto abs = kleene_lfp(to_constraint_system(abstract_system(s, ai)), 100);
  auto conc_w = solve_workset(to_constraint_system(s));
  const auto &L = *spec.lattice, &A = *conn.abstract;
  v.require(L.name(conc.values[0]) == "b" && L.name(conc_w.values[0]) == "b", "concrete lfp != b");
  v.require(abs.values[0] == A.top(), "abstract lfp is " + A.name(abs.values[0]));
  v.require(A.name(conn.a(conc.values[0])) == "e", "alpha(b) != e");
  v.require(conn.a(conc.values[0]) != A.top(), "alpha(b) = top");
  auto cls = classify_interp(ai, fns);
  v.require(cls.cls == interp_class::correct, std::string("classified ") + interp_class_name(cls.cls));
  if (v.ok)
    v.detail = "lfp = b, lfp# = top, alpha(b) = e, canonical interp correct not precise";
  return v;
}

verdict c3_nonconvex() {
  verdict v;
  // A_lam = (2 lam - 1) A, segment x_mu = (mu, 1 - mu): X = {(a b, a) | a, b in [-1,1]}
  auto in_X = [](const rvec &p) {
    const rational &a = p[1];
    if (a < -1 || a > 1)
      return false;
    if (a == 0)
      return p[0] == 0;
    rational b = p[0] / a;
    return b >= -1 && b <= 1;
  };
  auto mat = [](long s) {
    return aff_matrix(2, rvec{1, 0, 0, 0, s, -s, 0, s, s});
  };
  mat_set ms{mat(1), mat(-1)};
  rvec x{1, 0}, y{0, 1}, v10{1, 0};
  auto prods = apply_matset(ms, {embed(x), embed(y)});
  v.require(prods.size() == 4, "expected 4 raw products");
  v.require(!prods.count(embed(v10)), "(1,0) is a raw product");
  v.require(!in_X(v10), "(1,0) in X");
  v.require(in_X({1, 1}) && in_X({-1, -1}) && in_X({1, -1}), "corner not in X");
  auto diag = polyhedron::from_generators(2, {{1, 1}, {-1, -1}});
  bool literal = diag.contains(v10);
  auto seg = polyhedron::from_generators(2, {{1, 1}, {1, -1}});
  v.require(seg.contains(v10), "(1,0) not in hull{(1,1),(1,-1)}");
  auto hulled = hulled_matrix_apply(hull_of(ms, 2), polyhedron::from_generators(2, {x, y}), 2);
  v.require(hulled.contains(v10), "hulled pipeline rejects (1,0)");
  v.require(diag.contains({0, 0}) && in_X({0, 0}), "midpoint (0,0) check");
  if (v.ok)
    v.detail = std::string("(1,0) not in X nor raw products, in hull{(1,1),(1,-1)}, hulled "
                           "pipeline accepts; literal hull{(1,1),(-1,-1)} contains (1,0): ") +
               (literal ? "yes" : "no (midpoint is (0,0))");
  return v;
}

verdict c4_matrix_vs_relation() {
  verdict v;
  auto prog = parse_program(corpus_file("ex4_42.prog"));
  poly_value_fw vf(prog.vars());
  auto init = polyhedron::universe(1);
  hulled_matrix_fw mf(prog.vars());
  auto mt = gen_functional_T(prog, mf);
  auto mts = solve_workset(mt);
  auto mr = gen_functional_R(
      prog, vf, end_summaries(prog, mt, mts.values),
      [](const polyhedron &t, const polyhedron &s) { return hulled_matrix_apply(t, s, 1); }, init);
  auto mrs = solve_workset(mr);
  hulled_relation_fw rf(prog.vars());
  auto rt = gen_functional_T(prog, rf);
  auto rts = solve_workset(rt);
  auto rr = gen_functional_R(
      prog, vf, end_summaries(prog, rt, rts.values),
      [](const polyhedron &t, const polyhedron &s) { return relation_apply(t, s); }, init);
  auto rrs = solve_workset(rr);
  v.require(!mts.diverged && !mrs.diverged && !rts.diverged && !rrs.diverged, "diverged");
  auto pm = mrs.values[mr.var("n2")], pr = rrs.values[rr.var("n2")];
  v.require(pm == polyhedron::point({0}), "matrix R#[2] = " + pm.str());
  v.require(pr.is_universe(), "relation R#[2] = " + pr.str());
  v.require(poly_include(pm, pr) && !poly_include(pr, pm), "inclusion not strict");
  if (v.ok)
    v.detail = "matrix R#[2] = {0} strictly inside relation R#[2] = R";
  return v;
}

verdict c5_hull_divergence() {
  verdict v;
  auto prog = parse_program(corpus_file("ex4_43.prog"));
  hulled_matrix_fw mf(prog.vars());
  auto sys = gen_functional_T(prog, mf);
  auto o = solve_workset(sys, strategy::fifo(), 60);
  v.require(o.diverged, "hulled matrix solve terminated");
  auto u = sys.var("u");
  std::vector<std::size_t> at;
  for (auto &t : o.trace)
    if (t.updated && t.var == sys.var_label(u))
      at.push_back(t.step);
  v.require(at.size() >= 5, "fewer than 5 iterates");
  for (std::size_t n = 1; n <= 5 && v.ok; ++n) {
    auto it = solve_workset(sys, strategy::fifo(), at[n - 1], nullptr, false).values[u];
    // generators: M_t = (x -> x + t) as (a10, a11) = (t, 1)
    std::set<rvec> gens(it.points().begin(), it.points().end());
    std::set<rvec> want{{0, 1}};
    want.insert({static_cast<long>(n - 1), 1});
    v.require(gens == want && it.rays().empty() && it.lines().empty(),
              "iterate " + std::to_string(n) + " = " + it.generators_str());
    for (long t = 0; t < static_cast<long>(n) && v.ok; ++t)
      v.require(it.contains({t, 1}), "iterate misses M_" + std::to_string(t));
    v.require(!it.contains({static_cast<long>(n), 1}), "iterate contains M_n");
  }
  if (v.ok)
    v.detail = "diverged; iterate n = hull{M_t | 0 <= t <= n-1} for n = 1..5";
  return v;
}

verdict c6_widening_nonminimal() {
  verdict v;
  constraint_system<interval_domain> sys(interval_domain{}, {"x"}, "u");
  sys.add_constant(0, interval(0, 1), "[0,1]");
  sys.add_constant(0, interval(0, 2), "[0,2]");
  auto w = solve_widening(sys, widen_fn<interval>(interval_widen));
  auto p = solve_workset(sys);
  v.require(w.values[0] == interval(bound::of(0), bound::plus_inf()), "widened " + w.values[0].str());
  v.require(p.values[0] == interval(0, 2), "workset " + p.values[0].str());
  if (v.ok)
    v.detail = "widening [0,inf], workset [0,2]";
  return v;
}

verdict c7_strategy_dependence() {
  verdict v;
  auto prog = parse_program(corpus_file("ex5_11.prog"));
  interval_value_fw vf(prog.vars());
  auto cs = compute_callstrings(prog);
  auto sys = gen_callstring_A(prog, vf, cs, vf.domain().top());
  auto run = [&](const std::string &f) {
    return solve_widening(sys, widen_fn<interval_env>(env_widen),
                          strategy::scripted(parse_script(corpus_file(f))));
  };
  auto a = run("ex5_11_a.script"), b = run("ex5_11_b.script");
  auto r = sys.var(callstring_var("r", {}));
  auto ia = a.values[r].vals[0], ib = b.values[r].vals[0];
  v.require(ia == interval(bound::of(17), bound::plus_inf()), "script a: " + ia.str());
  v.require(ib == interval(bound::minus_inf(), bound::of(42)), "script b: " + ib.str());
  v.require(sys.is_solution(a.values) && sys.is_solution(b.values), "not a post-solution");
  v.require(!interval_leq(ia, ib) && !interval_leq(ib, ia), "comparable");
  if (v.ok)
    v.detail = "[17,inf] and [-inf,42], both post-solutions, incomparable";
  return v;
}

verdict c8_cs_beats_functional() {
  verdict v;
  auto k = counterexample("5.13");
  const auto &l = *k.spec.lattice;
  auto a = run_callstring_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                  k.strategies.at("A"));
  v.require(l.name(a.A.at("r")) == "l8", "A^[r] = " + l.name(a.A.at("r")));
  for (auto name : {"T_fg", "T_gf"}) {
    auto f = run_functional_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                    k.strategies.at(name), strategy::fifo());
    v.require(l.name(f.R.at("r")) == "l7", std::string(name) + ": R[r] = " + l.name(f.R.at("r")));
  }
  v.require(l.incomparable(l.find("l7"), l.find("l8")), "l7, l8 comparable");
  if (v.ok)
    v.detail = "A^[r] = l8; R[r] = l7 for f widen* g and g widen* f; l7 || l8";
  return v;
}

verdict c9_functional_beats_cs() {
  verdict v;
  auto k = counterexample("5.14");
  const auto &l = *k.spec.lattice;
  auto f = run_functional_widened(k.prog, k.spec.lattice, k.fns, k.widen, k.init,
                                  strategy::fifo(), strategy::fifo());
  v.require(l.name(f.R.at("r_p")) == "l6", "R[r_p] = " + l.name(f.R.at("r_p")));
  // every workset choice sequence of the call-string system
  finite_value_fw vf(k.spec.lattice, k.fns);
  auto cs = compute_callstrings(k.prog);
  auto asys = gen_callstring_A(k.prog, vf, cs, k.init);
  widen_fn<element> w = [&](element a, element b) { return k.widen(a, b); };
  auto outs = enumerate_outcomes(asys, std::optional(w));
  v.require(!outs.outcomes.empty() && outs.diverged_runs == 0, "enumeration incomplete");
  for (auto &o : outs.outcomes) {
    auto m = merge_A(k.prog, cs, asys, o);
    v.require(l.name(m.at("r_p")) == "l5", "an outcome has A^[r_p] = " + l.name(m.at("r_p")));
  }
  v.require(l.incomparable(l.find("l5"), l.find("l6")), "l5, l6 comparable");
  if (v.ok)
    v.detail = "R[r_p] = l6; all " + std::to_string(outs.outcomes.size()) +
               " call-string outcomes A^[r_p] = l5; l5 || l6";
  return v;
}

// ---- 10: coincidence ----

// values of every valid path, by inlining; loop-free, non-recursive programs
struct path_oracle {
  const program &prog;
  const lattice_ptr &l;
  const fn_table &fns;
  std::map<std::string, std::set<element>> at; // node -> f_pi(init) over all paths

  // propagates inputs through proc, records node values, returns end values
  std::set<element> run(const procedure &p, const std::set<element> &in) {
    std::map<std::string, std::set<element>> val;
    val[p.start] = in;
    for (auto &n : p.nodes) { // node order is topological for the generator
      for (auto &x : val[n])
        at[n].insert(x);
      for (auto &e : p.edges) {
        if (e.from != n || val[n].empty())
          continue;
        std::set<element> out;
        if (e.is_call()) {
          out = run(prog.proc(e.callee()), val[n]);
        } else if (auto *a = std::get_if<apply_label>(&e.lab)) {
          for (auto x : val[n])
            out.insert(fns.at(a->fn)(x));
        } else {
          out = val[n];
        }
        val[e.to].insert(out.begin(), out.end());
      }
    }
    return val[p.end];
  }
};

verdict c10_coincidence() {
  verdict v;
  rng_t rng(1010);
  std::size_t uni = 0, mono = 0, strict = 0;
  for (int i = 0; i < 200 && v.ok; ++i) {
    bool universal = i % 2 == 0;
    auto l = random_lattice(rng, 6);
    auto fns = random_fns(rng, l, universal ? 2 : 4, universal);
    // monotone half: prefer a table that is not even positive
    for (int t = 0; !universal && t < 50; ++t) {
      bool broken = false;
      for (auto &[n, f] : fns) {
        auto d = check_distributivity(f);
        broken = broken || (d != distributivity::universal && d != distributivity::positive);
      }
      if (broken)
        break;
      if (t % 5 == 4)
        l = random_lattice(rng, 6);
      fns = random_fns(rng, l, 4, false);
    }
    auto prog = random_program(rng, fns);
    auto init = random_element(rng, *l);
    path_oracle po{prog, l, fns, {}};
    po.run(prog.main(), {init});
    auto sol = solve_finite(prog, l, fns, init);
    bool all_universal = true;
    for (auto &[n, f] : fns)
      all_universal = all_universal && check_distributivity(f) == distributivity::universal;
    universal ? ++uni : ++mono;
    for (auto &n : prog.all_nodes()) {
      auto it = po.at.find(n);
      if (it == po.at.end() || it->second.empty())
        continue; // unreachable
      element m = l->bottom();
      for (auto x : it->second)
        m = l->join(m, x);
      auto r = sol.R.at(n), a = sol.A_merged.at(n);
      std::string where = "program " + std::to_string(i) + " node " + n;
      v.require(l->leq(m, r) && l->leq(m, a), where + ": MOP not below R/A");
      if (universal)
        v.require(all_universal && m == r && m == a, where + ": no coincidence");
      else if (m != r || m != a)
        ++strict;
    }
    // the library's own enumeration agrees with the oracle
    auto rep = check_coincidence(prog, l, fns, init);
    for (auto &nv : rep.nodes) {
      auto it = po.at.find(nv.node);
      element m = l->bottom();
      if (it != po.at.end())
        for (auto x : it->second)
          m = l->join(m, x);
      v.require(nv.mop == m, "program " + std::to_string(i) + ": MOP enumeration differs");
    }
    if (!rep.matches_theory()) {
      lattice_spec sp;
      sp.lattice = l;
      for (auto &[n, f] : fns)
        sp.fns.emplace_back(n, f);
      std::cerr << print_lattice_spec(sp) << "\n" << print_program(prog) << "\ninit "
                << l->name(init) << "\n" << rep.render();
    }
    v.require(rep.matches_theory(), "program " + std::to_string(i) + ": verdicts off theory");
  }
  // fixed witness: constants a, b merged, then a non-distributive g
  {
    auto spec = parse_lattice_spec("elements: bot, a, b, top\n"
                                   "order: bot < a < top, bot < b < top\n"
                                   "fn fa: bot -> a, a -> a, b -> a, top -> a\n"
                                   "fn fb: bot -> b, a -> b, b -> b, top -> b\n"
                                   "fn g: bot -> bot, a -> bot, b -> bot, top -> top\n");
    auto prog = parse_program("vars: x\nproc main\n start s\n final r\n edge s u apply fa\n"
                              " edge s u apply fb\n edge u r apply g\nend\n");
    auto fns = fn_table_of(spec);
    auto sol = solve_finite(prog, spec.lattice, fns, spec.lattice->bottom());
    const auto &l = *spec.lattice;
    v.require(l.name(sol.R.at("r")) == "top" && l.name(sol.A_merged.at("r")) == "top",
              "witness: R/A at r not top");
    auto rep = check_coincidence(prog, spec.lattice, fns, l.bottom());
    for (auto &nv : rep.nodes)
      if (nv.node == "r")
        v.require(l.name(nv.mop) == "bot", "witness: MOP at r not bot");
  }
  if (v.ok)
    v.detail = std::to_string(uni) + " universal programs coincide, " + std::to_string(mono) +
               " monotone programs MOP below R and A (" + std::to_string(strict) +
               " strict nodes); fixed witness MOP bot < R = A = top";
  return v;
}

// ---- 11: exact affine domains ----

rational random_rational(rng_t &rng) {
  long num = static_cast<long>(uniform(rng, 0, 8)) - 4;
  long den = static_cast<long>(uniform(rng, 1, 4));
  rational q(num, den);
  q.canonicalize();
  return q;
}

program random_affine_program(rng_t &rng) {
  std::size_t n = uniform(rng, 1, 2);
  std::vector<std::string> vars{"x1", "x2"};
  vars.resize(n);
  std::size_t np = uniform(rng, 1, 3), ncall = 0;
  std::vector<procedure> procs;
  for (std::size_t p = 0; p < np; ++p) {
    procedure pr;
    pr.name = p == 0 ? "main" : "p" + std::to_string(p);
    std::size_t nn = uniform(rng, 2, 5);
    for (std::size_t k = 0; k < nn; ++k)
      pr.nodes.push_back("q" + std::to_string(p) + "n" + std::to_string(k));
    pr.start = pr.nodes.front();
    pr.end = pr.nodes.back();
    for (std::size_t k = 0; k + 1 < nn; ++k) {
      std::vector<std::size_t> to{k + 1};
      if (k + 2 < nn && coin(rng, 0.3))
        to.push_back(uniform(rng, k + 2, nn - 1));
      for (auto j : to) {
        std::size_t r = uniform(rng, 0, 9);
        label lab = skip_label{};
        if (p + 1 < np && r < 3) {
          lab = call_label{"p" + std::to_string(uniform(rng, p + 1, np - 1))};
        } else if (r >= 4) {
          affine_assign a;
          a.target = uniform(rng, 1, n);
          for (std::size_t c = 0; c <= n; ++c)
            a.coeffs.push_back(coin(rng, 0.6) ? random_rational(rng) : rational(0));
          lab = a;
        }
        edge e{pr.nodes[k], pr.nodes[j], lab, ""};
        if (e.is_call())
          e.call_id = "e" + std::to_string(++ncall);
        pr.edges.push_back(e);
      }
    }
    procs.push_back(pr);
  }
  return program(vars, procs);
}

// concrete reachable states by inlining
struct state_oracle {
  const program &prog;
  std::map<std::string, std::set<rvec>> at;

  std::set<rvec> run(const procedure &p, const std::set<rvec> &in) {
    std::map<std::string, std::set<rvec>> val;
    val[p.start] = in;
    for (auto &n : p.nodes) {
      at[n].insert(val[n].begin(), val[n].end());
      for (auto &e : p.edges) {
        if (e.from != n || val[n].empty())
          continue;
        std::set<rvec> out;
        if (e.is_call()) {
          out = run(prog.proc(e.callee()), val[n]);
        } else if (auto *a = std::get_if<affine_assign>(&e.lab)) {
          for (auto s : val[n]) {
            rational t = a->coeffs[0];
            for (std::size_t i = 1; i < a->coeffs.size(); ++i)
              t += a->coeffs[i] * s[i - 1];
            s[a->target - 1] = t;
            out.insert(s);
          }
        } else {
          out = val[n];
        }
        val[e.to].insert(out.begin(), out.end());
      }
    }
    return val[p.end];
  }
};

verdict c11_exact_affine() {
  verdict v;
  rng_t rng(1111);
  for (int i = 0; i < 100 && v.ok; ++i) {
    auto prog = random_affine_program(rng);
    std::size_t n = prog.vars().size();
    std::set<rvec> pts;
    std::size_t k = uniform(rng, 1, 3);
    while (pts.size() < k) {
      rvec p;
      for (std::size_t j = 0; j < n; ++j)
        p.push_back(random_rational(rng));
      pts.insert(p);
    }
    state_set init;
    for (auto &p : pts)
      init.insert(embed(p));
    stateset_value_fw vf(prog.vars());
    exact_matrix_fw mf(prog.vars());
    exact_relation_fw rf(prog.vars());
    auto tm = gen_functional_T(prog, mf);
    auto tms = solve_workset(tm);
    auto tr = gen_functional_T(prog, rf);
    auto trs = solve_workset(tr);
    auto rm = gen_functional_R(
        prog, vf, end_summaries(prog, tm, tms.values),
        [](const mat_set &t, const state_set &s) { return apply_matset(t, s); }, init);
    auto rr = gen_functional_R(
        prog, vf, end_summaries(prog, tr, trs.values),
        [](const aff_relation &t, const state_set &s) { return apply_relation(t, s); }, init);
    auto rms = solve_workset(rm), rrs = solve_workset(rr);
    v.require(!tms.diverged && !trs.diverged && !rms.diverged && !rrs.diverged, "diverged");
    state_oracle so{prog, {}};
    so.run(prog.main(), pts);
    std::string at = "program " + std::to_string(i);
    for (auto &node : prog.all_nodes()) {
      v.require(rms.values[rm.var(node)] == rrs.values[rr.var(node)], at + ": R_M != R_R at " + node);
      state_set want;
      for (auto &s : so.at[node])
        want.insert(embed(s));
      v.require(rms.values[rm.var(node)] == want, at + ": R_M differs from execution at " + node);
      v.require(trs.values[tr.var(node)] == phi(tms.values[tm.var(node)]),
                at + ": T_R != Phi(T_M) at " + node);
    }
  }
  if (v.ok)
    v.detail = "100 programs: R_M = R_R = executed states, T_R = Phi(T_M)";
  return v;
}

// ---- 12: abstraction transport ----

bool pointwise_leq(const finite_lattice &l, const std::vector<element> &a,
                   const std::vector<element> &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!l.leq(a[i], b[i]))
      return false;
  return true;
}

verdict c12_transport() {
  verdict v;
  rng_t rng(1212);
  std::size_t precise_sys = 0, precise_prog = 0, coroll = 0, alt = 0;
  for (int i = 0; i < 100 && v.ok; ++i) {
    auto l = random_lattice(rng, 6);
    auto conn = random_galois(rng, l);
    fn_table fns = random_fns(rng, l, 2, false);
    if (i % 3 == 0) // alpha-precise by construction: f = gamma . alpha . g . gamma . alpha
      for (auto &[n, f] : fns) {
        std::vector<element> t;
        for (auto x : l->elements())
          t.push_back(conn.g(conn.a(f(conn.g(conn.a(x))))));
        f = tabulated_fn(l, t);
      }
    alt += !alpha_gamma_is_id(conn);
    auto s = random_fn_system(rng, l, fns);
    auto ai = canonical_interp(conn, fns);
    auto lfp = kleene_lfp(to_constraint_system(s), 1000).values;
    auto alfp = kleene_lfp(to_constraint_system(abstract_system(s, ai)), 1000).values;
    std::vector<element> alpha_lfp;
    for (auto x : lfp)
      alpha_lfp.push_back(conn.a(x));
    const auto &A = *conn.abstract;
    std::string at = "system " + std::to_string(i);
    v.require(pointwise_leq(A, alpha_lfp, alfp), at + ": lfp# below alpha(lfp)");
    auto cls = classify_interp(ai, fns);
    v.require(cls.cls != interp_class::neither, at + ": canonical interp incorrect");
    if (cls.cls == interp_class::precise && alpha_gamma_is_id(conn)) {
      ++precise_sys;
      v.require(alfp == alpha_lfp, at + ": precise but lfp# != alpha(lfp)");
    }
    for (int k = 0; k < 20 && v.ok; ++k) {
      auto other = random_correct_interp(rng, ai);
      v.require(classify_interp(other, fns).cls != interp_class::neither, at + ": sample incorrect");
      for (auto &[n, f] : ai.fsharp)
        v.require(fn_leq(f, other.fsharp.at(n)), at + ": canonical not minimal");
      auto olfp = kleene_lfp(to_constraint_system(abstract_system(s, other)), 1000).values;
      v.require(pointwise_leq(A, alfp, olfp) && pointwise_leq(A, alpha_lfp, olfp),
                at + ": correct interp lfp below alpha(lfp)");
    }
  }
  for (int i = 0; i < 50 && v.ok; ++i) {
    auto l = random_lattice(rng, 5);
    bool universal = i % 2 == 0;
    auto fns = random_fns(rng, l, 2, universal);
    galois_conn conn;
    if (i % 5 == 0) {
      conn = closure_to_galois(tabulated_fn::identity(l));
    } else {
      conn = random_galois(rng, l);
    }
    auto prog = random_program(rng, fns, 3, 5);
    auto init = random_element(rng, *l);
    auto ai = canonical_interp(conn, fns);
    auto lifted = lift_interproc_interp(ai, init);
    auto conc = solve_finite(prog, l, fns, init);
    auto abs = solve_finite(prog, lifted.lattice, lifted.fns, lifted.init);
    const auto &A = *conn.abstract;
    std::string at = "program " + std::to_string(i);
    bool precise = classify_interp(ai, fns).cls == interp_class::precise && alpha_gamma_is_id(conn);
    bool dist = true;
    for (auto &[n, f] : fns)
      dist = dist && check_distributivity(f) == distributivity::universal;
    precise_prog += precise;
    coroll += precise && dist;
    for (auto &n : prog.all_nodes()) {
      auto ar = conn.a(conc.R.at(n)), aa = conn.a(conc.A_merged.at(n));
      v.require(A.leq(ar, abs.R.at(n)), at + ": R# below alpha(R) at " + n);
      v.require(A.leq(aa, abs.A_merged.at(n)), at + ": A# below alpha(A) at " + n);
      if (precise) {
        v.require(abs.R.at(n) == ar && abs.A_merged.at(n) == aa, at + ": precise transport at " + n);
        if (dist)
          v.require(abs.R.at(n) == abs.A_merged.at(n), at + ": R# != A# at " + n);
      }
    }
    for (auto &[n, t] : conc.T) {
      // lifted summaries: T#[u] above alpha . T[u] . gamma
      for (auto y : A.elements())
        v.require(A.leq(conn.a(t(conn.g(y))), abs.T.at(n)(y)), at + ": T# below alpha(T)");
    }
  }
  if (v.ok)
    v.detail = "150 instances; precise systems " + std::to_string(precise_sys) +
               ", precise programs " + std::to_string(precise_prog) + " (" +
               std::to_string(coroll) + " with R# = A#), non-surjective alpha " +
               std::to_string(alt);
  return v;
}

// ---- 13: law suites ----

verdict c13_laws() {
  verdict v;
  rng_t rng(1313);
  std::size_t lattices = 0, conns = 0, closures = 0, widenings = 0, hulls = 0;
  for (int i = 0; i < 100 && v.ok; ++i) {
    auto l = random_lattice(rng, 6);
    v.require(all_pass(lattice_laws(*l)), "lattice laws fail");
    ++lattices;
    auto h = random_closure(rng, l);
    v.require(all_pass(closure_laws(h)), "closure laws fail");
    ++closures;
    auto c = random_galois(rng, l);
    v.require(all_pass(galois_laws(c)), "galois laws fail");
    for (auto x : l->elements()) {
      v.require(c.a(c.g(c.a(x))) == c.a(x), "alpha gamma alpha != alpha");
      for (auto y : c.abstract->elements()) {
        v.require(c.abstract->leq(c.a(x), y) == l->leq(x, c.g(y)), "adjunction");
        v.require(c.g(c.a(c.g(y))) == c.g(y), "gamma alpha gamma != gamma");
      }
    }
    auto hc = closure_to_galois(h);
    for (auto x : l->elements())
      v.require(hc.g(hc.a(x)) == h(x), "closure round trip");
    ++conns;
    // random extrapolating tables
    std::vector<widen_entry> es;
    for (auto a : l->elements())
      for (auto b : l->elements())
        if (coin(rng, 0.3)) {
          std::vector<element> up;
          for (auto r : l->elements())
            if (l->leq(l->join(a, b), r))
              up.push_back(r);
          es.push_back({a, b, up[uniform(rng, 0, up.size() - 1)]});
        }
    auto w = widening_op::from_entries(l, es);
    auto rep = validate_widening(w, i, 200);
    v.require(rep.extrapolation.ok, "extrapolation fails");
    v.require(!(rep.monotone && rep.idempotent) || rep.equals_join, "monotone idempotent non-join");
    v.require(rep.join_consistent, "join-consistency diagnostic");
    ++widenings;
  }
  auto iw = validate_interval_widening();
  v.require(iw.ok() && !iw.monotone, "interval widening report");
  for (int i = 0; i < 60 && v.ok; ++i) {
    std::size_t d = uniform(rng, 1, 3);
    std::vector<rvec> pts;
    std::size_t k = uniform(rng, 1, 5);
    for (std::size_t j = 0; j < k; ++j) {
      rvec p;
      for (std::size_t t = 0; t < d; ++t)
        p.push_back(random_rational(rng));
      pts.push_back(p);
    }
    std::vector<rvec> rays;
    if (coin(rng, 0.3)) {
      rvec r;
      for (std::size_t t = 0; t < d; ++t)
        r.push_back(static_cast<long>(uniform(rng, 0, 2)) - 1);
      if (!is_zero(r))
        rays.push_back(r);
    }
    auto P = polyhedron::from_generators(d, pts, rays);
    for (auto &p : pts)
      v.require(P.contains(p), "hull misses a generator");
    auto again = polyhedron::from_generators(d, P.points(), P.rays(), P.lines());
    v.require(again == P, "hull not idempotent");
    v.require(poly_join(P, P) == P, "join not idempotent");
    auto H = polyhedron::from_constraints(d, P.constraints());
    v.require(H == P, "V/H round trip: " + P.str() + " vs " + H.str());
    auto Q = polyhedron::point(pts.front());
    v.require(poly_include(Q, P) && poly_include(P, poly_join(P, Q)), "hull monotone");
    ++hulls;
  }
  if (v.ok)
    v.detail = std::to_string(lattices) + " lattices, " + std::to_string(closures) +
               " closures, " + std::to_string(conns) + " connections, " +
               std::to_string(widenings) + " widenings + interval, " + std::to_string(hulls) +
               " hulls";
  return v;
}

// ---- 14: solver vs Kleene ----

verdict c14_solver_oracle() {
  verdict v;
  rng_t rng(1414);
  for (int i = 0; i < 300 && v.ok; ++i) {
    auto l = random_lattice(rng, 6);
    auto fns = random_fns(rng, l, 2, false);
    std::vector<tabulated_fn> fv;
    for (auto &[n, f] : fns)
      fv.push_back(f);
    std::size_t nv = uniform(rng, 1, 5);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < nv; ++j)
      names.push_back("v" + std::to_string(j));
    constraint_system<finite_domain> sys(finite_domain{l}, names);
    std::size_t nc = uniform(rng, 1, 3 * nv);
    for (std::size_t k = 0; k < nc; ++k) {
      var_id lhs = uniform(rng, 0, nv - 1), a = uniform(rng, 0, nv - 1), b = uniform(rng, 0, nv - 1);
      auto f = fv[uniform(rng, 0, fv.size() - 1)];
      switch (uniform(rng, 0, 3)) {
      case 0:
        sys.add_constant(lhs, random_element(rng, *l), "c");
        break;
      case 1:
        sys.add(lhs, {a}, [f, a](const assignment<element> &x) { return f(x[a]); }, "f");
        break;
      case 2:
        sys.add(lhs, {a, b}, [l, a, b](const assignment<element> &x) { return l->join(x[a], x[b]); }, "join");
        break;
      default:
        sys.add(lhs, {a, b}, [l, f, a, b](const assignment<element> &x) {
          return l->meet(f(x[a]), x[b]);
        }, "meet");
      }
    }
    auto k = kleene_lfp(sys, 1000);
    v.require(k.stable, "kleene did not stabilize");
    std::vector<std::string> ids;
    for (auto &c : sys.constraints())
      ids.push_back(c.id);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (auto st : {strategy::fifo(), strategy::lifo(), strategy::fair(), strategy::scripted(ids)}) {
      auto o = solve_workset(sys, st, 10000, &k.values, false);
      v.require(!o.diverged, "system " + std::to_string(i) + " diverged under " + st.name());
      v.require(o.values == k.values,
                "system " + std::to_string(i) + " differs from kleene under " + st.name());
    }
  }
  if (v.ok)
    v.detail = "300 systems equal kleene_lfp under fifo, lifo, fair, script";
  return v;
}

} // namespace

int main() {
  std::vector<std::pair<std::string, std::function<verdict()>>> criteria{
      {"divergence 3.12", c1_divergence},
      {"canonical imprecise 4.20", c2_canonical_imprecise},
      {"non-convexity 4.37", c3_nonconvex},
      {"matrix vs relation hulls 4.42", c4_matrix_vs_relation},
      {"hull divergence 4.43", c5_hull_divergence},
      {"widening non-minimality 5.6", c6_widening_nonminimal},
      {"strategy dependence 5.11", c7_strategy_dependence},
      {"non-coincidence 5.13", c8_cs_beats_functional},
      {"non-coincidence 5.14", c9_functional_beats_cs},
      {"coincidence suite", c10_coincidence},
      {"exact affine equivalence", c11_exact_affine},
      {"abstraction transport", c12_transport},
      {"law suites", c13_laws},
      {"solver vs kleene", c14_solver_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.ok;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first
              << "]: " << (v.ok ? "PASS" : "FAIL") << " - " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
