#pragma once

#include "interflow/constraint/constraint_system.hpp"
#include "interflow/interproc/callstrings.hpp"
#include "interflow/program/program.hpp"

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace interflow {

// Value framework: domain(), transfer(label) -> unary map, text(label).
// Summary framework: domain(), identity(), base(label), compose(after, before),
// apply(summary, value), text(label).

template <class VF>
using vf_value = typename std::decay_t<decltype(std::declval<VF>().domain())>::value_type;

// T[s_p] >= id ; T[v] >= f o T[u] ; T[v] >= T[r_q] o T[u]
template <class SF>
auto gen_functional_T(const program &prog, const SF &sf) {
  using D = std::decay_t<decltype(sf.domain())>;
  using S = typename D::value_type;
  constraint_system<D> sys(sf.domain(), prog.all_nodes(), "T");
  for (auto &p : prog.procs()) {
    sys.add_constant(sys.var(p.start), sf.identity(), "id");
    for (auto &e : p.edges) {
      auto u = sys.var(e.from), v = sys.var(e.to);
      if (e.is_call()) {
        auto rq = sys.var(prog.proc(e.callee()).end);
        sys.add(
            v, {rq, u}, [sf, rq, u](const assignment<S> &a) { return sf.compose(a[rq], a[u]); },
            "T[" + prog.proc(e.callee()).end + "] o T[" + e.from + "]");
      } else if (std::holds_alternative<skip_label>(e.lab)) {
        sys.add(
            v, {u}, [u](const assignment<S> &a) { return a[u]; }, "T[" + e.from + "]");
      } else {
        auto b = sf.base(e.lab);
        sys.add(
            v, {u}, [sf, b, u](const assignment<S> &a) { return sf.compose(b, a[u]); },
            sf.text(e.lab) + " o T[" + e.from + "]");
      }
    }
  }
  return sys;
}

// end-node summaries T[r_q] read from a T solution
template <class D>
std::map<std::string, typename D::value_type>
end_summaries(const program &prog, const constraint_system<D> &tsys,
              const assignment<typename D::value_type> &tsol) {
  std::map<std::string, typename D::value_type> r;
  for (auto &p : prog.procs())
    r.emplace(p.name, tsol[tsys.var(p.end)]);
  return r;
}

// R[s_main] >= init ; R[s_q] >= R[u] ; R[v] >= f(R[u]) ; R[v] >= T[r_q](R[u])
template <class VF, class S, class Apply>
auto gen_functional_R(const program &prog, const VF &vf, const std::map<std::string, S> &summaries,
                      Apply apply, const vf_value<VF> &init) {
  using D = std::decay_t<decltype(vf.domain())>;
  using V = typename D::value_type;
  constraint_system<D> sys(vf.domain(), prog.all_nodes(), "R");
  for (auto *e : prog.call_edges())
    if (!summaries.count(e->callee()))
      throw error(error_kind::missing_summary, "no summary for procedure " + e->callee());
  // reachable sources only
  auto live = reachable_nodes(prog);
  for (auto &p : prog.procs()) {
    auto sp = sys.var(p.start);
    if (p.name == "main")
      sys.add_constant(sp, init, "init");
    for (auto *e : prog.call_edges())
      if (e->callee() == p.name && live.count(e->from)) {
        auto u = sys.var(e->from);
        sys.add(
            sp, {u}, [u](const assignment<V> &a) { return a[u]; }, "R[" + e->from + "]");
      }
    for (auto &e : p.edges) {
      if (!live.count(e.from))
        continue;
      auto u = sys.var(e.from), v = sys.var(e.to);
      if (e.is_call()) {
        S t = summaries.at(e.callee());
        sys.add(
            v, {u}, [apply, t, u](const assignment<V> &a) { return apply(t, a[u]); },
            "T[" + prog.proc(e.callee()).end + "](R[" + e.from + "])");
      } else if (std::holds_alternative<skip_label>(e.lab)) {
        sys.add(
            v, {u}, [u](const assignment<V> &a) { return a[u]; }, "R[" + e.from + "]");
      } else {
        auto f = vf.transfer(e.lab);
        sys.add(
            v, {u}, [f, u](const assignment<V> &a) { return f(a[u]); },
            vf.text(e.lab) + "(R[" + e.from + "])");
      }
    }
  }
  return sys;
}

// variables node@w for w in CS[proc(node)]
inline std::vector<std::string> callstring_vars(const program &prog, const callstring_sets &cs) {
  std::vector<std::string> vars;
  for (auto &p : prog.procs())
    for (auto &w : cs.of(p.name))
      for (auto &n : p.nodes)
        vars.push_back(callstring_var(n, w));
  return vars;
}

template <class VF>
auto gen_callstring_A(const program &prog, const VF &vf, const callstring_sets &cs,
                      const vf_value<VF> &init) {
  using D = std::decay_t<decltype(vf.domain())>;
  using V = typename D::value_type;
  constraint_system<D> sys(vf.domain(), callstring_vars(prog, cs), "A");
  auto var = [&](const std::string &n, const call_string &w) {
    return sys.var(callstring_var(n, w));
  };
  auto lbl = [&](const std::string &n, const call_string &w) {
    return "A[" + callstring_var(n, w) + "]";
  };
  auto live = reachable_nodes(prog);
  for (auto &p : prog.procs()) {
    for (auto &w : cs.of(p.name)) {
      auto sp = var(p.start, w);
      if (w.empty()) {
        if (p.name == "main")
          sys.add_constant(sp, init, "init");
      } else {
        const auto &ce = prog.call_edge(w.back());
        call_string outer(w.begin(), w.end() - 1);
        if (live.count(ce.from) && cs.contains(prog.proc_of(ce.from).name, outer)) {
          auto u = var(ce.from, outer);
          sys.add(
              sp, {u}, [u](const assignment<V> &a) { return a[u]; }, lbl(ce.from, outer));
        }
      }
      for (auto &e : p.edges) {
        if (!live.count(e.from))
          continue;
        auto u = var(e.from, w), v = var(e.to, w);
        if (e.is_call()) {
          auto inner = w;
          inner.push_back(e.call_id);
          const auto &q = prog.proc(e.callee());
          if (!cs.contains(q.name, inner))
            continue; // truncated away
          auto rq = var(q.end, inner);
          sys.add(
              v, {rq}, [rq](const assignment<V> &a) { return a[rq]; }, lbl(q.end, inner));
        } else if (std::holds_alternative<skip_label>(e.lab)) {
          sys.add(
              v, {u}, [u](const assignment<V> &a) { return a[u]; }, lbl(e.from, w));
        } else {
          auto f = vf.transfer(e.lab);
          sys.add(
              v, {u}, [f, u](const assignment<V> &a) { return f(a[u]); },
              vf.text(e.lab) + "(" + lbl(e.from, w) + ")");
        }
      }
    }
  }
  return sys;
}

// A^[u] = join over w in CS[proc(u)] of A[u@w]
template <class D>
std::map<std::string, typename D::value_type>
merge_A(const program &prog, const callstring_sets &cs, const constraint_system<D> &asys,
        const assignment<typename D::value_type> &a) {
  std::map<std::string, typename D::value_type> r;
  const auto &dom = asys.domain();
  for (auto &p : prog.procs())
    for (auto &n : p.nodes) {
      auto acc = dom.bottom();
      for (auto &w : cs.of(p.name))
        acc = dom.join(acc, a[asys.var(callstring_var(n, w))]);
      r.emplace(n, acc);
    }
  return r;
}

// node -> value for an R or T solution
template <class D>
std::map<std::string, typename D::value_type>
node_values(const program &prog, const constraint_system<D> &sys,
            const assignment<typename D::value_type> &a) {
  std::map<std::string, typename D::value_type> r;
  for (auto &n : prog.all_nodes())
    r.emplace(n, a[sys.var(n)]);
  return r;
}

} // namespace interflow
