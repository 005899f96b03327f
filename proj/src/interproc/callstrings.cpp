#include "interflow/interproc/callstrings.hpp"

#include "interflow/core/errors.hpp"
#include "interflow/core/text.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace interflow {

std::string render_callstring(const call_string &w) {
  return w.empty() ? "ε" : text::join(w, ".");
}

std::string callstring_var(const std::string &node, const call_string &w) {
  return node + "@" + render_callstring(w);
}

const std::vector<call_string> &callstring_sets::of(const std::string &proc) const {
  static const std::vector<call_string> none;
  auto it = cs.find(proc);
  return it == cs.end() ? none : it->second;
}

bool callstring_sets::contains(const std::string &proc, const call_string &w) const {
  const auto &v = of(proc);
  return std::find(v.begin(), v.end(), w) != v.end();
}

bool call_graph_recursive(const program &p) {
  // cycle reachable from main
  std::map<std::string, int> color;
  std::function<bool(const std::string &)> visit = [&](const std::string &q) {
    color[q] = 1;
    for (auto &e : p.proc(q).edges) {
      if (!e.is_call())
        continue;
      int c = color[e.callee()];
      if (c == 1)
        return true;
      if (c == 0 && visit(e.callee()))
        return true;
    }
    color[q] = 2;
    return false;
  };
  return visit("main");
}

std::set<std::string> reachable_nodes(const program &p) {
  std::set<std::string> r{p.main().start};
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto &q : p.procs())
      for (auto &e : q.edges) {
        if (!r.count(e.from))
          continue;
        if (e.is_call()) {
          const auto &c = p.proc(e.callee());
          changed |= r.insert(c.start).second;
          if (r.count(c.end))
            changed |= r.insert(e.to).second;
        } else {
          changed |= r.insert(e.to).second;
        }
      }
  }
  return r;
}

callstring_sets compute_callstrings(const program &p, std::optional<std::size_t> bound) {
  callstring_sets r;
  r.recursive = call_graph_recursive(p);
  if (r.recursive && !bound)
    throw error(error_kind::unbounded_without_bound,
                "recursive program needs an explicit call-string bound");
  auto index = [](const std::string &id) { return std::stoul(id.substr(1)); };
  std::set<std::pair<std::string, call_string>> seen;
  std::deque<std::pair<std::string, call_string>> todo;
  seen.insert({"main", {}});
  todo.push_back({"main", {}});
  while (!todo.empty()) {
    auto [q, w] = todo.front();
    todo.pop_front();
    r.cs[q].push_back(w);
    for (auto &e : p.proc(q).edges) {
      if (!e.is_call())
        continue;
      auto w2 = w;
      w2.push_back(e.call_id);
      if (bound && w2.size() > *bound) {
        r.exact = false;
        continue;
      }
      if (seen.insert({e.callee(), w2}).second)
        todo.push_back({e.callee(), w2});
    }
  }
  for (auto &[q, ws] : r.cs)
    std::sort(ws.begin(), ws.end(), [&](const call_string &a, const call_string &b) {
      if (a.size() != b.size())
        return a.size() < b.size();
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
          return index(a[i]) < index(b[i]);
      return false;
    });
  return r;
}

} // namespace interflow
