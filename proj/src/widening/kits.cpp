#include "interflow/widening/kits.hpp"

#include "interflow/core/errors.hpp"
#include "interflow/core/text.hpp"
#include "interflow/interproc/generators.hpp"

#include <set>
#include <sstream>

namespace interflow {

namespace {

const char *ex3_12_prog = R"(# loop without widening
vars: x
proc main
  start n1
  final n3
  edge n1 n2 assign x := 0
  edge n2 n2 assign x := x + 1
  edge n2 n3 assign x := 0
end
)";

const char *ex4_20_lat = R"(elements: bot, a, b, c, top
order: bot < a < b < c < top
fn f: bot -> bot, a -> b, b -> b, c -> top, top -> top
init: a
abstract: ex4_20_abs.lat
alpha: bot -> bot, a -> d, b -> e, c -> e, top -> top
gamma: bot -> bot, d -> a, e -> c, top -> top
)";

const char *ex4_20_abs_lat = R"(elements: bot, d, e, top
order: bot < d < e < top
)";

const char *ex4_20_prog = R"(# x >= init, x >= f(x)
vars: x
proc main
  start s
  final s
  edge s s apply f
end
)";

const char *ex4_42_prog = R"(vars: x
proc main
  start n0
  final n2
  edge n0 n1 assign x := 0
  edge n1 n2 call p
end
proc p
  start n3
  final n4
  edge n3 n4 skip
  edge n3 n4 assign x := 0
end
)";

const char *ex4_43_prog = R"(vars: x
proc main
  start s
  final r
  edge s r call p
end
proc p
  start u
  final u
  edge u u assign x := x + 1
end
)";

const char *ex5_11_prog = R"(vars: x
proc main
  start s
  final r
  edge s u assign x := 0
  edge u v1 assign x := 17
  edge u v2 assign x := 42
  edge v1 r skip
  edge v2 r skip
end
)";

const char *ex5_11_a = "A1 A2 A3 A4 A5 A6\n";
const char *ex5_11_b = "A1 A2 A3 A4 A6 A5\n";

const char *ex5_13_lat = R"(elements: bot, l1, l2, l3, l4, l5, l6, l7, l8, top
order: bot < l1 < l2 < l3 < l5 < l6 < l7 < top, l1 < l4 < l6 < l8 < top
fn f: bot -> bot, l1 -> l1, l2 -> l4, l3 -> l4, l4 -> top, l5 -> top, l6 -> top, l7 -> top, l8 -> top, top -> top
fn g: bot -> bot, l1 -> l2, l2 -> l3, l3 -> l5, l4 -> top, l5 -> top, l6 -> top, l7 -> top, l8 -> top, top -> top
widen: (l1,l2) -> l3, (l3,l4) -> l7, (l4,l5) -> l7, (l5,l4) -> l8; default join
init: l1
)";

const char *ex5_13_prog = R"(vars: x
proc main
  start s
  final r
  edge s u call p
  edge u r call p
end
proc p
  start s_p
  final r_p
  edge s_p r_p apply f
  edge s_p r_p apply g
end
)";

// copy e1 runs f before g, copy e2 runs g before f
const char *ex5_13_a = "A1 A4 A5 A6 A2 A7 A9 A8 A3\n";
const char *ex5_13_t_fg = "T4 T5 T6\n";
const char *ex5_13_t_gf = "T4 T6 T5\n";

const char *ex5_14_lat = R"(elements: bot, l1, l2, l3, l4, l5, l6, top
order: bot < l1 < l4, bot < l2 < l4, bot < l3 < l4, l4 < l5 < top, l4 < l6 < top
fn f1: bot -> bot, l1 -> l1, l2 -> l1, l3 -> l1, l4 -> l1, l5 -> l1, l6 -> l1, top -> l1
fn f2: bot -> bot, l1 -> l2, l2 -> l2, l3 -> l2, l4 -> l2, l5 -> l2, l6 -> l2, top -> l2
fn f3: bot -> bot, l1 -> l3, l2 -> l3, l3 -> l3, l4 -> l3, l5 -> l3, l6 -> l3, top -> l3
widen: (l1,l3) -> l5, (l3,l1) -> l5, (l2,l3) -> l5, (l3,l2) -> l5, (l1,l2) -> l6, (l2,l1) -> l6; default join
init: top
)";

const char *ex5_14_prog = R"(vars: x
proc main
  start s
  final r
  edge s u apply f1
  edge s v apply f2
  edge u r call p
  edge v r call p
end
proc p
  start s_p
  final r_p
  edge s_p r_p apply f3
  edge s_p r_p skip
end
)";

} // namespace

const std::map<std::string, std::string> &corpus() {
  static const std::map<std::string, std::string> files{
      {"ex3_12.prog", ex3_12_prog},     {"ex4_20.lat", ex4_20_lat},
      {"ex4_20_abs.lat", ex4_20_abs_lat}, {"ex4_20.prog", ex4_20_prog},
      {"ex4_42.prog", ex4_42_prog},     {"ex4_43.prog", ex4_43_prog},
      {"ex5_11.prog", ex5_11_prog},     {"ex5_11_a.script", ex5_11_a},
      {"ex5_11_b.script", ex5_11_b},    {"ex5_13.lat", ex5_13_lat},
      {"ex5_13.prog", ex5_13_prog},     {"ex5_13_A.script", ex5_13_a},
      {"ex5_13_T_fg.script", ex5_13_t_fg}, {"ex5_13_T_gf.script", ex5_13_t_gf},
      {"ex5_14.lat", ex5_14_lat},       {"ex5_14.prog", ex5_14_prog},
  };
  return files;
}

const std::string &corpus_file(const std::string &name) {
  auto it = corpus().find(name);
  if (it == corpus().end())
    throw error(error_kind::usage, "no corpus file '" + name + "'");
  return it->second;
}

std::vector<std::string> parse_script(const std::string &src) {
  std::vector<std::string> ids;
  std::istringstream in(src);
  std::string line;
  while (std::getline(in, line))
    for (auto &w : text::split_ws(text::strip_comment(line)))
      ids.push_back(w);
  return ids;
}

counterexample_kit counterexample(const std::string &which) {
  counterexample_kit k;
  if (which == "5.13" || which == "cs-beats-none-5.13") {
    k.id = "5.13";
    k.spec = parse_lattice_spec(corpus_file("ex5_13.lat"));
    k.prog = parse_program(corpus_file("ex5_13.prog"));
    k.strategies.emplace("A", strategy::scripted(parse_script(corpus_file("ex5_13_A.script"))));
    k.strategies.emplace("T_fg",
                         strategy::scripted(parse_script(corpus_file("ex5_13_T_fg.script"))));
    k.strategies.emplace("T_gf",
                         strategy::scripted(parse_script(corpus_file("ex5_13_T_gf.script"))));
    k.expected = {{"A[r]", "l8"}, {"R[r]", "l7"}};
  } else if (which == "5.14" || which == "func-5.14") {
    k.id = "5.14";
    k.spec = parse_lattice_spec(corpus_file("ex5_14.lat"));
    k.prog = parse_program(corpus_file("ex5_14.prog"));
    k.strategies.emplace("A", strategy::fifo());
    k.strategies.emplace("T", strategy::fifo());
    k.strategies.emplace("R", strategy::fifo());
    k.expected = {{"A[r_p]", "l5"}, {"R[r_p]", "l6"}, {"R[s_p]", "l6"}};
  } else {
    throw error(error_kind::usage, "unknown counterexample '" + which + "'");
  }
  k.widen = widening_op::of_spec(k.spec);
  k.init = *k.spec.init;
  k.fns = fn_table_of(k.spec);
  return k;
}

widened_functional run_functional_widened(const program &prog, const lattice_ptr &l,
                                          const fn_table &fns, const widening_op &w,
                                          element init, const strategy &t_strat,
                                          const strategy &r_strat) {
  widened_functional out;
  finite_summary_fw sf(l, fns);
  finite_value_fw vf(l, fns);
  auto tsys = gen_functional_T(prog, sf);
  auto tsol = solve_widening(tsys, lift_widen(w), t_strat, default_budget(), false);
  out.diverged = tsol.diverged;
  out.summaries = end_summaries(prog, tsys, tsol.values);
  auto rsys = gen_functional_R(
      prog, vf, out.summaries, [](const tabulated_fn &t, element x) { return t(x); }, init);
  widen_fn<element> wv = [w](element a, element b) { return w(a, b); };
  auto rsol = solve_widening(rsys, wv, r_strat, default_budget(), false);
  out.diverged = out.diverged || rsol.diverged;
  out.R = node_values(prog, rsys, rsol.values);
  return out;
}

widened_callstring run_callstring_widened(const program &prog, const lattice_ptr &l,
                                          const fn_table &fns, const widening_op &w,
                                          element init, const strategy &a_strat) {
  widened_callstring out;
  finite_value_fw vf(l, fns);
  auto cs = compute_callstrings(prog, std::nullopt);
  auto asys = gen_callstring_A(prog, vf, cs, init);
  widen_fn<element> wv = [w](element a, element b) { return w(a, b); };
  auto sol = solve_widening(asys, wv, a_strat, default_budget(), false);
  out.diverged = sol.diverged;
  out.A = merge_A(prog, cs, asys, sol.values);
  for (var_id i = 0; i < asys.size(); ++i)
    out.copies.emplace(asys.var_name(i), sol.values[i]);
  return out;
}

solution_sets enumerate_solution_sets(const program &prog, const lattice_ptr &l,
                                      const fn_table &fns, const widening_op &w, element init) {
  solution_sets out;
  finite_summary_fw sf(l, fns);
  finite_value_fw vf(l, fns);
  widen_fn<element> wv = [w](element a, element b) { return w(a, b); };

  auto cs = compute_callstrings(prog, std::nullopt);
  auto asys = gen_callstring_A(prog, vf, cs, init);
  std::set<node_solution> aset, rset;
  for (auto &a : enumerate_outcomes(asys, std::optional(wv)).outcomes)
    aset.insert(merge_A(prog, cs, asys, a));

  auto tsys = gen_functional_T(prog, sf);
  widen_fn<tabulated_fn> wt = lift_widen(w);
  std::set<std::map<std::string, tabulated_fn>> sums;
  for (auto &t : enumerate_outcomes(tsys, std::optional(wt)).outcomes)
    sums.insert(end_summaries(prog, tsys, t));
  for (auto &s : sums) {
    auto rsys = gen_functional_R(
        prog, vf, s, [](const tabulated_fn &t, element x) { return t(x); }, init);
    for (auto &r : enumerate_outcomes(rsys, std::optional(wv)).outcomes)
      rset.insert(node_values(prog, rsys, r));
  }
  out.A.assign(aset.begin(), aset.end());
  out.R.assign(rset.begin(), rset.end());
  out.summaries.assign(sums.begin(), sums.end());
  return out;
}

std::vector<claim_verdict> evaluate_claims(const finite_lattice &l, const solution_sets &s) {
  auto leq = [&](const node_solution &x, const node_solution &y) {
    for (auto &[n, v] : x)
      if (!l.leq(v, y.at(n)))
        return false;
    return true;
  };
  using sols = std::vector<node_solution>;
  auto contains = [](const sols &xs, const node_solution &x) {
    for (auto &y : xs)
      if (y == x)
        return true;
    return false;
  };
  auto superset = [&](const sols &big, const sols &small) {
    for (auto &x : small)
      if (!contains(big, x))
        return false;
    return true;
  };
  auto all_all = [&](const sols &xs, const sols &ys) {
    for (auto &x : xs)
      for (auto &y : ys)
        if (!leq(x, y))
          return false;
    return true;
  };
  // exists x in xs below every y in ys
  auto ex_all = [&](const sols &xs, const sols &ys) {
    for (auto &x : xs) {
      bool ok = true;
      for (auto &y : ys)
        ok = ok && leq(x, y);
      if (ok)
        return true;
    }
    return false;
  };
  // every y in ys has some x in xs below it
  auto all_ex_below = [&](const sols &ys, const sols &xs) {
    for (auto &y : ys) {
      bool found = false;
      for (auto &x : xs)
        found = found || leq(x, y);
      if (!found)
        return false;
    }
    return true;
  };
  // every x in xs has some y in ys above it
  auto all_ex_above = [&](const sols &xs, const sols &ys) {
    for (auto &x : xs) {
      bool found = false;
      for (auto &y : ys)
        found = found || leq(x, y);
      if (!found)
        return false;
    }
    return true;
  };
  const auto &A = s.A, &R = s.R;
  return {
      {'A', "L_A = L_R", superset(A, R) && superset(R, A)},
      {'B', "L_A contains L_R", superset(A, R)},
      {'C', "L_R contains L_A", superset(R, A)},
      {'D', "forall x in L_A, y in L_R: x <= y", all_all(A, R)},
      {'E', "forall x in L_R, y in L_A: x <= y", all_all(R, A)},
      {'F', "exists x in L_A forall y in L_R: x <= y", ex_all(A, R)},
      {'G', "exists x in L_R forall y in L_A: x <= y", ex_all(R, A)},
      {'H', "forall y in L_A exists x in L_R: x <= y", all_ex_below(A, R)},
      {'I', "forall y in L_R exists x in L_A: x <= y", all_ex_below(R, A)},
      {'J', "forall x in L_R exists y in L_A: x <= y", all_ex_above(R, A)},
      {'K', "forall x in L_A exists y in L_R: x <= y", all_ex_above(A, R)},
  };
}

} // namespace interflow
