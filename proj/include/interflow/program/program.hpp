#pragma once

#include "interflow/core/rational.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace interflow {

struct skip_label {
  friend bool operator==(const skip_label &, const skip_label &) = default;
};

// x_target := coeffs[0] + sum coeffs[i] * x_i   (target is 1-based)
struct affine_assign {
  std::size_t target = 1;
  rvec coeffs;
  friend bool operator==(const affine_assign &, const affine_assign &) = default;
};

struct apply_label {
  std::string fn;
  friend bool operator==(const apply_label &, const apply_label &) = default;
};

struct call_label {
  std::string proc;
  friend bool operator==(const call_label &, const call_label &) = default;
};

using label = std::variant<skip_label, affine_assign, apply_label, call_label>;

struct edge {
  std::string from, to;
  label lab;
  std::string call_id; // e1, e2, ... for call edges, file order
  bool is_call() const { return std::holds_alternative<call_label>(lab); }
  const std::string &callee() const { return std::get<call_label>(lab).proc; }
  friend bool operator==(const edge &, const edge &) = default;
};

struct procedure {
  std::string name;
  std::string start, end;
  std::vector<std::string> nodes; // first appearance order, start first
  std::vector<edge> edges;
  friend bool operator==(const procedure &, const procedure &) = default;
};

class program {
public:
  program() = default;
  program(std::vector<std::string> vars, std::vector<procedure> procs);

  const std::vector<std::string> &vars() const { return m_vars; }
  const std::vector<procedure> &procs() const { return m_procs; }
  const procedure &proc(const std::string &name) const;
  const procedure &main() const { return proc("main"); }
  const procedure &proc_of(const std::string &node) const;
  bool has_proc(const std::string &name) const { return m_proc_index.count(name) != 0; }
  std::vector<std::string> all_nodes() const;
  // call edges across all procedures, file order
  std::vector<const edge *> call_edges() const;
  const edge &call_edge(const std::string &id) const;
  std::size_t edge_count() const;

  friend bool operator==(const program &a, const program &b) {
    return a.m_vars == b.m_vars && a.m_procs == b.m_procs;
  }

private:
  std::vector<std::string> m_vars;
  std::vector<procedure> m_procs;
  std::map<std::string, std::size_t> m_proc_index;
  std::map<std::string, std::size_t> m_node_proc;
};

program parse_program(const std::string &text);
program load_program(const std::string &path);
std::string print_program(const program &p);

std::string render_assign(const affine_assign &a, const std::vector<std::string> &vars);
std::string label_text(const label &l, const std::vector<std::string> &vars);

struct expanded_edge {
  enum class kind { base, call, ret, enter };
  kind k = kind::base;
  std::string from, to;
  std::string edge_ref; // base: index "proc#k"; others: call id
  std::string str() const;
  friend auto operator<=>(const expanded_edge &, const expanded_edge &) = default;
};

std::vector<expanded_edge> expanded_alphabet(const program &p);

} // namespace interflow
