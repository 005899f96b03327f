#pragma once

#include "interflow/core/errors.hpp"
#include "interflow/core/text.hpp"
#include "interflow/lattice/domains.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace interflow {

using var_id = std::size_t;

template <class V>
using assignment = std::vector<V>;

template <class V>
struct constraint {
  std::string id;
  var_id lhs = 0;
  std::vector<var_id> reads;
  std::function<V(const assignment<V> &)> rhs;
  std::string text; // rendered right-hand side
};

template <value_domain D>
class constraint_system {
public:
  using value_type = typename D::value_type;
  using constraint_type = constraint<value_type>;
  using rhs_fn = std::function<value_type(const assignment<value_type> &)>;

  constraint_system(D dom, std::vector<std::string> var_names, std::string sym = "x")
      : m_dom(std::move(dom)), m_vars(std::move(var_names)), m_sym(std::move(sym)) {
    for (var_id i = 0; i < m_vars.size(); ++i)
      if (!m_index.emplace(m_vars[i], i).second)
        throw error(error_kind::duplicate_node, "variable '" + m_vars[i] + "' declared twice");
  }

  const D &domain() const { return m_dom; }
  std::size_t size() const { return m_vars.size(); }
  const std::vector<std::string> &var_names() const { return m_vars; }
  const std::string &var_name(var_id v) const { return m_vars.at(v); }
  const std::string &symbol() const { return m_sym; }
  std::string var_label(var_id v) const { return m_sym + "[" + m_vars.at(v) + "]"; }

  var_id var(const std::string &name) const {
    auto it = m_index.find(name);
    if (it == m_index.end())
      throw error(error_kind::index_out_of_range, "undeclared variable '" + name + "'");
    return it->second;
  }
  bool has_var(const std::string &name) const { return m_index.count(name) != 0; }

  const std::vector<constraint_type> &constraints() const { return m_cons; }

  const constraint_type &add(var_id lhs, std::vector<var_id> reads, rhs_fn rhs, std::string text,
                             std::string id = "") {
    if (lhs >= m_vars.size())
      throw error(error_kind::index_out_of_range, "constraint lhs out of range");
    for (auto r : reads)
      if (r >= m_vars.size())
        throw error(error_kind::index_out_of_range, "constraint reads undeclared variable");
    if (id.empty())
      id = m_sym + std::to_string(m_cons.size() + 1);
    m_cons.push_back({std::move(id), lhs, std::move(reads), std::move(rhs), std::move(text)});
    return m_cons.back();
  }

  // x >= c
  const constraint_type &add_constant(var_id lhs, value_type c, std::string text,
                                      std::string id = "") {
    return add(lhs, {}, [c](const assignment<value_type> &) { return c; }, std::move(text),
               std::move(id));
  }

  std::string render(const constraint_type &c) const {
    return var_label(c.lhs) + " >= " + c.text;
  }
  std::vector<std::string> rendered() const {
    std::vector<std::string> r;
    for (auto &c : m_cons)
      r.push_back(render(c));
    return r;
  }

  assignment<value_type> bottom_assignment() const {
    return assignment<value_type>(m_vars.size(), m_dom.bottom());
  }

  bool satisfied(const constraint_type &c, const assignment<value_type> &a) const {
    return m_dom.leq(c.rhs(a), a[c.lhs]);
  }
  bool is_solution(const assignment<value_type> &a) const {
    for (auto &c : m_cons)
      if (!satisfied(c, a))
        return false;
    return true;
  }

  std::string render_assignment(const assignment<value_type> &a) const {
    std::string s;
    for (var_id i = 0; i < m_vars.size(); ++i)
      s += var_label(i) + " = " + m_dom.render(a[i]) + "\n";
    return s;
  }

private:
  D m_dom;
  std::vector<std::string> m_vars;
  std::string m_sym;
  std::map<std::string, var_id> m_index;
  std::vector<constraint_type> m_cons;
};

// one constraint per variable; unconstrained variables get x >= bottom
template <value_domain D>
constraint_system<D> normalize(const constraint_system<D> &sys) {
  using V = typename D::value_type;
  constraint_system<D> out(sys.domain(), sys.var_names(), sys.symbol());
  for (var_id j = 0; j < sys.size(); ++j) {
    std::vector<std::function<V(const assignment<V> &)>> parts;
    std::vector<var_id> reads;
    std::vector<std::string> texts;
    for (auto &c : sys.constraints()) {
      if (c.lhs != j)
        continue;
      parts.push_back(c.rhs);
      texts.push_back(c.text);
      for (auto r : c.reads) {
        bool dup = false;
        for (auto q : reads)
          dup = dup || q == r;
        if (!dup)
          reads.push_back(r);
      }
    }
    auto dom = sys.domain();
    if (parts.empty()) {
      out.add_constant(j, dom.bottom(), dom.render(dom.bottom()), "F" + std::to_string(j + 1));
      continue;
    }
    out.add(
        j, reads,
        [dom, parts](const assignment<V> &a) {
          V acc = parts.front()(a);
          for (std::size_t k = 1; k < parts.size(); ++k)
            acc = dom.join(acc, parts[k](a));
          return acc;
        },
        texts.size() == 1 ? texts.front() : "(" + text::join(texts, ") | (") + ")",
        "F" + std::to_string(j + 1));
  }
  return out;
}

// F(a)_j = join of all right-hand sides for x_j
template <value_domain D>
assignment<typename D::value_type> eval_F(const constraint_system<D> &sys,
                                          const assignment<typename D::value_type> &a) {
  auto out = sys.bottom_assignment();
  for (auto &c : sys.constraints())
    out[c.lhs] = sys.domain().join(out[c.lhs], c.rhs(a));
  return out;
}

template <class V>
struct kleene_result {
  bool stable = false;
  assignment<V> values;
  std::size_t iterations = 0;
};

template <value_domain D>
kleene_result<typename D::value_type> kleene_lfp(const constraint_system<D> &sys,
                                                 std::size_t budget) {
  kleene_result<typename D::value_type> r;
  r.values = sys.bottom_assignment();
  while (r.iterations < budget) {
    auto next = eval_F(sys, r.values);
    ++r.iterations;
    bool same = true;
    for (var_id i = 0; i < sys.size() && same; ++i)
      same = domain_equal(sys.domain(), next[i], r.values[i]);
    r.values = std::move(next);
    if (same) {
      r.stable = true;
      return r;
    }
  }
  return r;
}

template <value_domain D>
bool assignment_leq(const D &d, const assignment<typename D::value_type> &a,
                    const assignment<typename D::value_type> &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!d.leq(a[i], b[i]))
      return false;
  return true;
}

template <value_domain D>
bool assignment_equal(const D &d, const assignment<typename D::value_type> &a,
                      const assignment<typename D::value_type> &b) {
  return assignment_leq(d, a, b) && assignment_leq(d, b, a);
}

} // namespace interflow
