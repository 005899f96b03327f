#pragma once

#include "interflow/constraint/constraint_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace interflow {

inline constexpr std::size_t builtin_budget = 10000;

// INTERFLOW_BUDGET overrides the built-in default
inline std::size_t default_budget() {
  if (const char *env = std::getenv("INTERFLOW_BUDGET")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env)
      return static_cast<std::size_t>(v);
  }
  return builtin_budget;
}

enum class strategy_kind { fifo, lifo, scripted, round_robin_fair };

struct strategy {
  strategy_kind kind = strategy_kind::fifo;
  std::vector<std::string> script;

  static strategy fifo() { return {strategy_kind::fifo, {}}; }
  static strategy lifo() { return {strategy_kind::lifo, {}}; }
  static strategy fair() { return {strategy_kind::round_robin_fair, {}}; }
  static strategy scripted(std::vector<std::string> ids) {
    return {strategy_kind::scripted, std::move(ids)};
  }
  std::string name() const {
    switch (kind) {
    case strategy_kind::fifo: return "fifo";
    case strategy_kind::lifo: return "lifo";
    case strategy_kind::round_robin_fair: return "fair";
    case strategy_kind::scripted: return "script";
    }
    return "?";
  }
};

struct trace_step {
  std::size_t step = 0;
  std::string cid;
  std::string t;
  bool updated = false;
  std::string var, old_value, new_value;

  std::string line() const {
    std::string s = "step " + std::to_string(step) + ": pick " + cid + ", t=" + t;
    if (updated)
      return s + ", update " + var + ": " + old_value + " -> " + new_value;
    return s + ", satisfied";
  }
};

template <class V>
struct solve_outcome {
  bool diverged = false;
  assignment<V> values; // solution, or last assignment when diverged
  std::size_t steps = 0;
  std::size_t budget = 0;
  std::vector<trace_step> trace;
  std::vector<std::size_t> update_counts;

  bool solved() const { return !diverged; }
  std::string render_trace() const {
    std::string s;
    for (auto &t : trace)
      s += t.line() + "\n";
    return s;
  }
};

template <class V>
using widen_fn = std::function<V(const V &, const V &)>;

class invariant_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace detail {

// deduplicating workset; selection per strategy
class workset {
public:
  workset(std::size_t n, const strategy &s, const std::vector<std::size_t> &script)
      : m_kind(s.kind), m_in(n, false), m_script(script) {
    for (std::size_t i = 0; i < n; ++i)
      push(i);
  }

  bool empty() const { return m_count == 0; }
  bool contains(std::size_t c) const { return m_in[c]; }

  void push(std::size_t c) {
    if (m_in[c])
      return;
    m_in[c] = true;
    ++m_count;
    if (m_kind != strategy_kind::round_robin_fair)
      m_order.push_back(c);
  }

  std::size_t pick() {
    std::size_t c = 0;
    switch (m_kind) {
    case strategy_kind::lifo:
      c = m_order.back();
      m_order.pop_back();
      break;
    case strategy_kind::round_robin_fair: {
      std::size_t n = m_in.size();
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = (m_cursor + k) % n;
        if (m_in[i]) {
          c = i;
          break;
        }
      }
      m_cursor = c + 1;
      break;
    }
    case strategy_kind::scripted: {
      bool found = false;
      while (m_pos < m_script.size() && !found) {
        std::size_t want = m_script[m_pos++];
        if (m_in[want]) {
          c = want;
          found = true;
          m_order.erase(std::find(m_order.begin(), m_order.end(), want));
        }
      }
      if (!found) {
        c = m_order.front();
        m_order.pop_front();
      }
      break;
    }
    case strategy_kind::fifo:
      c = m_order.front();
      m_order.pop_front();
      break;
    }
    m_in[c] = false;
    --m_count;
    return c;
  }

private:
  strategy_kind m_kind;
  std::vector<bool> m_in;
  std::deque<std::size_t> m_order;
  std::size_t m_count = 0, m_cursor = 0, m_pos = 0;
  std::vector<std::size_t> m_script;
};

template <value_domain D>
std::vector<std::vector<std::size_t>> dependents(const constraint_system<D> &sys) {
  std::vector<std::vector<std::size_t>> dep(sys.size());
  const auto &cs = sys.constraints();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (auto r : cs[i].reads)
      if (dep[r].empty() || dep[r].back() != i)
        dep[r].push_back(i);
  return dep;
}

template <value_domain D>
std::vector<std::size_t> resolve_script(const constraint_system<D> &sys, const strategy &s) {
  std::vector<std::size_t> out;
  for (auto &id : s.script) {
    bool found = false;
    for (std::size_t i = 0; i < sys.constraints().size(); ++i)
      if (sys.constraints()[i].id == id) {
        out.push_back(i);
        found = true;
        break;
      }
    if (!found)
      throw error(error_kind::usage, "script names unknown constraint '" + id + "'");
  }
  return out;
}

template <value_domain D>
solve_outcome<typename D::value_type>
run(const constraint_system<D> &sys, const strategy &strat, std::size_t budget,
    const std::optional<widen_fn<typename D::value_type>> &widen,
    const assignment<typename D::value_type> *invariant_lfp, bool record_trace) {
  const auto &dom = sys.domain();
  const auto &cs = sys.constraints();
  solve_outcome<typename D::value_type> out;
  out.budget = budget;
  out.values = sys.bottom_assignment();
  out.update_counts.assign(sys.size(), 0);
  auto dep = dependents(sys);
  workset w(cs.size(), strat, resolve_script(sys, strat));
  while (!w.empty()) {
    if (out.steps >= budget) {
      out.diverged = true;
      return out;
    }
    std::size_t ci = w.pick();
    const auto &c = cs[ci];
    ++out.steps;
    auto t = c.rhs(out.values);
    auto &x = out.values[c.lhs];
    trace_step st;
    if (record_trace) {
      st.step = out.steps;
      st.cid = c.id;
      st.t = dom.render(t);
    }
    if (!dom.leq(t, x)) {
      auto next = widen ? (*widen)(x, t) : dom.join(x, t);
      if (record_trace) {
        st.updated = true;
        st.var = sys.var_label(c.lhs);
        st.old_value = dom.render(x);
        st.new_value = dom.render(next);
      }
      x = std::move(next);
      ++out.update_counts[c.lhs];
      for (auto d : dep[c.lhs])
        w.push(d);
    }
    if (record_trace)
      out.trace.push_back(std::move(st));
    if (invariant_lfp) {
      if (!assignment_leq(dom, out.values, *invariant_lfp))
        throw invariant_violation("assignment exceeds the least fixpoint at step " +
                                  std::to_string(out.steps));
      for (std::size_t k = 0; k < cs.size(); ++k)
        if (!w.contains(k) && !sys.satisfied(cs[k], out.values))
          throw invariant_violation("constraint " + cs[k].id +
                                    " outside the workset is violated at step " +
                                    std::to_string(out.steps));
    }
  }
  return out;
}

} // namespace detail

template <value_domain D>
solve_outcome<typename D::value_type>
solve_workset(const constraint_system<D> &sys, const strategy &strat = strategy::fifo(),
              std::size_t budget = default_budget(),
              const assignment<typename D::value_type> *invariant_lfp = nullptr,
              bool record_trace = true) {
  return detail::run(sys, strat, budget, std::nullopt, invariant_lfp, record_trace);
}

// update rule: skip when t <= x_j, else x_j := x_j widen t
template <value_domain D>
solve_outcome<typename D::value_type>
solve_widening(const constraint_system<D> &sys, widen_fn<typename D::value_type> widen,
               const strategy &strat = strategy::fifo(), std::size_t budget = default_budget(),
               bool record_trace = true) {
  return detail::run(sys, strat, budget, std::optional(std::move(widen)), nullptr, record_trace);
}

template <class V>
struct outcome_set {
  std::vector<assignment<V>> outcomes; // distinct final assignments
  std::size_t states = 0;
  std::size_t diverged_runs = 0;
};

// every choice sequence over the workset (set semantics), memoized on
// (assignment, workset); per_run_budget cuts single runs
template <value_domain D>
outcome_set<typename D::value_type>
enumerate_outcomes(const constraint_system<D> &sys,
                   const std::optional<widen_fn<typename D::value_type>> &widen,
                   std::size_t per_run_budget = 200, std::size_t state_bound = 200000) {
  using V = typename D::value_type;
  const auto &dom = sys.domain();
  const auto &cs = sys.constraints();
  auto dep = detail::dependents(sys);
  outcome_set<V> result;
  std::set<std::string> seen, finals;

  auto key_of = [&](const assignment<V> &a) {
    std::string k;
    for (auto &v : a)
      k += dom.render(v) + "\x1f";
    return k;
  };

  std::function<void(assignment<V> &, std::vector<bool> &, std::size_t)> dfs =
      [&](assignment<V> &a, std::vector<bool> &w, std::size_t depth) {
        std::string key = key_of(a);
        for (bool b : w)
          key += b ? '1' : '0';
        if (!seen.insert(key).second)
          return;
        if (++result.states > state_bound)
          throw error(error_kind::bound_exceeded,
                      "more than " + std::to_string(state_bound) + " solver states");
        bool any = false;
        for (std::size_t ci = 0; ci < cs.size(); ++ci) {
          if (!w[ci])
            continue;
          any = true;
          if (depth >= per_run_budget) {
            ++result.diverged_runs;
            return;
          }
          const auto &c = cs[ci];
          auto t = c.rhs(a);
          auto nw = w;
          nw[ci] = false;
          if (dom.leq(t, a[c.lhs])) {
            dfs(a, nw, depth + 1);
            continue;
          }
          auto na = a;
          na[c.lhs] = widen ? (*widen)(a[c.lhs], t) : dom.join(a[c.lhs], t);
          for (auto d : dep[c.lhs])
            nw[d] = true;
          dfs(na, nw, depth + 1);
        }
        if (!any && finals.insert(key_of(a)).second)
          result.outcomes.push_back(a);
      };

  auto a0 = sys.bottom_assignment();
  std::vector<bool> w0(cs.size(), true);
  dfs(a0, w0, 0);
  std::sort(result.outcomes.begin(), result.outcomes.end(),
            [&](const assignment<V> &x, const assignment<V> &y) { return key_of(x) < key_of(y); });
  return result;
}

} // namespace interflow
