#include "interflow/mop/paths.hpp"

#include "interflow/core/errors.hpp"
#include "interflow/interproc/generators.hpp"
#include "interflow/solver/solver.hpp"

#include <sstream>

namespace interflow {

namespace {

std::string key(expanded_edge::kind k, const std::string &ref) {
  return std::to_string(static_cast<int>(k)) + ":" + ref;
}

} // namespace

path_enumerator::path_enumerator(const program &prog, std::size_t max_len, std::size_t path_cap)
    : m_prog(&prog), m_max_len(max_len), m_alpha(expanded_alphabet(prog)) {
  std::map<std::string, std::uint32_t> idx;
  for (std::uint32_t i = 0; i < m_alpha.size(); ++i)
    idx[key(m_alpha[i].k, m_alpha[i].edge_ref)] = i;
  for (auto &n : prog.all_nodes()) {
    m_slp[n];
    m_gp[n];
  }
  std::size_t total = 0;
  auto add = [&](path_set &s, path p) {
    if (p.size() > m_max_len) {
      s.complete = false;
      m_complete = false;
      return false;
    }
    if (!s.paths.insert(std::move(p)).second)
      return false;
    if (++total > path_cap)
      throw error(error_kind::bound_exceeded, "path enumeration exceeds " + std::to_string(path_cap));
    return true;
  };
  auto concat = [](const path &a, std::initializer_list<const path *> rest) {
    path r = a;
    for (auto *p : rest)
      r.insert(r.end(), p->begin(), p->end());
    return r;
  };

  // same-level paths by rule closure
  for (auto &p : prog.procs())
    add(m_slp[p.start], {});
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto &p : prog.procs())
      for (std::size_t k = 0; k < p.edges.size(); ++k) {
        const auto &e = p.edges[k];
        auto src = m_slp[e.from].paths; // copy: target may alias
        if (!e.is_call()) {
          path step{idx[key(expanded_edge::kind::base, p.name + "#" + std::to_string(k))]};
          for (auto &pi : src)
            changed |= add(m_slp[e.to], concat(pi, {&step}));
        } else {
          const auto &q = prog.proc(e.callee());
          path c{idx[key(expanded_edge::kind::call, e.call_id)]};
          path r{idx[key(expanded_edge::kind::ret, e.call_id)]};
          auto inner = m_slp[q.end].paths;
          for (auto &pi : src)
            for (auto &body : inner)
              changed |= add(m_slp[e.to], concat(pi, {&c, &body, &r}));
        }
      }
  }

  // global paths
  add(m_gp[prog.main().start], {});
  changed = true;
  while (changed) {
    changed = false;
    for (auto &p : prog.procs()) {
      auto starts = m_gp[p.start].paths;
      for (auto &n : p.nodes) {
        for (auto &g : starts)
          for (auto &s : m_slp[n].paths)
            changed |= add(m_gp[n], concat(g, {&s}));
      }
      for (auto &e : p.edges) {
        if (!e.is_call())
          continue;
        path en{idx[key(expanded_edge::kind::enter, e.call_id)]};
        auto src = m_gp[e.from].paths;
        for (auto &g : src)
          changed |= add(m_gp[prog.proc(e.callee()).start], concat(g, {&en}));
      }
    }
  }
  for (auto &[n, s] : m_slp)
    if (!s.complete)
      m_complete = false;
  for (auto &[n, s] : m_gp)
    if (!s.complete)
      m_complete = false;
}

const path_set &path_enumerator::slp(const std::string &node) const {
  auto it = m_slp.find(node);
  if (it == m_slp.end())
    throw error(error_kind::index_out_of_range, "unknown node '" + node + "'");
  return it->second;
}

const path_set &path_enumerator::gp(const std::string &node) const {
  auto it = m_gp.find(node);
  if (it == m_gp.end())
    throw error(error_kind::index_out_of_range, "unknown node '" + node + "'");
  return it->second;
}

call_string path_enumerator::enter_sequence(const path &p) const {
  call_string w;
  for (auto i : p)
    if (m_alpha[i].k == expanded_edge::kind::enter)
      w.push_back(m_alpha[i].edge_ref);
  return w;
}

std::set<path> path_enumerator::per_callstring(const std::string &node, const call_string &w) const {
  std::set<path> r;
  for (auto &p : gp(node).paths)
    if (enter_sequence(p) == w)
      r.insert(p);
  return r;
}

bool path_enumerator::well_nested(const path &p) const {
  std::vector<std::string> open;
  for (auto i : p) {
    const auto &e = m_alpha[i];
    switch (e.k) {
    case expanded_edge::kind::call:
      open.push_back(e.edge_ref);
      break;
    case expanded_edge::kind::ret:
      if (open.empty() || open.back() != e.edge_ref)
        return false;
      open.pop_back();
      break;
    case expanded_edge::kind::enter:
      if (!open.empty())
        return false;
      break;
    default:
      break;
    }
  }
  return open.empty();
}

std::string path_enumerator::render(const path &p) const {
  if (p.empty())
    return "ε";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      s += " ";
    s += m_alpha[p[i]].str();
  }
  return s;
}

tabulated_fn path_transfer(const program &prog, const path_enumerator &pe, const path &p,
                           const lattice_ptr &l, const fn_table &fns) {
  finite_summary_fw sf(l, fns);
  auto f = tabulated_fn::identity(l);
  for (auto i : p) {
    const auto &e = pe.alphabet()[i];
    if (e.k != expanded_edge::kind::base)
      continue;
    auto hash = e.edge_ref.rfind('#');
    const auto &pr = prog.proc(e.edge_ref.substr(0, hash));
    const auto &edge = pr.edges.at(std::stoul(e.edge_ref.substr(hash + 1)));
    f = fn_compose(sf.base(edge.lab), f);
  }
  return f;
}

mop_value mop(const program &prog, const path_enumerator &pe, const lattice_ptr &l,
              const fn_table &fns, element init, const std::string &node) {
  const auto &ps = pe.gp(node);
  element acc = l->bottom();
  for (auto &p : ps.paths)
    acc = l->join(acc, path_transfer(prog, pe, p, l, fns)(init));
  return {acc, ps.complete};
}

finite_solutions solve_finite(const program &prog, const lattice_ptr &l, const fn_table &fns,
                              element init, std::optional<std::size_t> cs_bound) {
  finite_solutions out;
  finite_summary_fw sf(l, fns);
  finite_value_fw vf(l, fns);
  auto tsys = gen_functional_T(prog, sf);
  auto tsol = solve_workset(tsys, strategy::fifo(), default_budget(), nullptr, false);
  if (tsol.diverged)
    throw error(error_kind::bound_exceeded, "summary system did not stabilize");
  auto sums = end_summaries(prog, tsys, tsol.values);
  out.T = node_values(prog, tsys, tsol.values);
  auto rsys = gen_functional_R(
      prog, vf, sums, [](const tabulated_fn &t, element x) { return t(x); }, init);
  auto rsol = solve_workset(rsys, strategy::fifo(), default_budget(), nullptr, false);
  if (rsol.diverged)
    throw error(error_kind::bound_exceeded, "value system did not stabilize");
  out.R = node_values(prog, rsys, rsol.values);
  auto cs = compute_callstrings(prog, cs_bound);
  auto asys = gen_callstring_A(prog, vf, cs, init);
  auto asol = solve_workset(asys, strategy::fifo(), default_budget(), nullptr, false);
  if (asol.diverged)
    throw error(error_kind::bound_exceeded, "call-string system did not stabilize");
  out.A_merged = merge_A(prog, cs, asys, asol.values);
  for (var_id i = 0; i < asys.size(); ++i)
    out.A.emplace(asys.var_name(i), asol.values[i]);
  return out;
}

bool coincidence_report::matches_theory() const {
  if (violation)
    return false;
  if (weakest == distributivity::universal || weakest == distributivity::positive)
    return all_coincide;
  return true;
}

std::string coincidence_report::render() const {
  std::ostringstream out;
  out << "distributivity: " << distributivity_name(weakest) << "\n";
  out << "node\tMOP\tR\tA\tverdict\n";
  for (auto &n : nodes)
    out << n.node << "\t" << lattice->name(n.mop) << "\t" << lattice->name(n.functional) << "\t"
        << lattice->name(n.callstring) << "\t" << n.verdict << "\n";
  out << "all-coincide: " << (all_coincide ? "yes" : "no") << "\n";
  out << "matches-theory: " << (matches_theory() ? "yes" : "no") << "\n";
  return out.str();
}

coincidence_report check_coincidence(const program &prog, const lattice_ptr &l,
                                     const fn_table &fns, element init, std::size_t max_len) {
  path_enumerator pe(prog, max_len);
  if (!pe.complete())
    throw error(error_kind::incomplete_mop,
                "path enumeration did not saturate below length " + std::to_string(max_len));
  coincidence_report rep;
  rep.lattice = l;
  auto rank = [](distributivity d) { return static_cast<int>(d); };
  for (auto &p : prog.procs())
    for (auto &e : p.edges)
      if (auto *a = std::get_if<apply_label>(&e.lab)) {
        auto d = check_distributivity(fns.at(a->fn));
        if (rank(d) > rank(rep.weakest))
          rep.weakest = d;
      }
  auto sol = solve_finite(prog, l, fns, init);
  for (auto &n : prog.all_nodes()) {
    node_verdict v;
    v.node = n;
    v.reachable = !pe.gp(n).paths.empty();
    v.mop = mop(prog, pe, l, fns, init, n).value;
    v.functional = sol.R.at(n);
    v.callstring = sol.A_merged.at(n);
    if (!l->leq(v.mop, v.functional) || !l->leq(v.mop, v.callstring)) {
      v.verdict = "violation";
      rep.violation = true;
    } else if (!v.reachable) {
      v.verdict = "unreachable";
    } else if (v.mop == v.functional && v.mop == v.callstring) {
      v.verdict = "coincide";
    } else {
      v.verdict = "correct-but-strict";
      rep.all_coincide = false;
    }
    rep.nodes.push_back(v);
  }
  return rep;
}

} // namespace interflow
