#include "interflow/program/program.hpp"

#include "interflow/core/errors.hpp"
#include "interflow/core/text.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace interflow {

program::program(std::vector<std::string> vars, std::vector<procedure> procs)
    : m_vars(std::move(vars)), m_procs(std::move(procs)) {
  std::set<std::string> vs;
  for (auto &v : m_vars)
    if (!vs.insert(v).second)
      throw error(error_kind::duplicate_node, "variable '" + v + "' declared twice");
  for (auto &p : m_procs)
    for (auto &e : p.edges)
      if (auto *a = std::get_if<affine_assign>(&e.lab))
        canonicalize(a->coeffs);
  for (std::size_t i = 0; i < m_procs.size(); ++i) {
    if (!m_proc_index.emplace(m_procs[i].name, i).second)
      throw error(error_kind::duplicate_node, "procedure '" + m_procs[i].name + "' declared twice");
    for (auto &n : m_procs[i].nodes)
      if (!m_node_proc.emplace(n, i).second)
        throw error(error_kind::duplicate_node,
                    "node '" + n + "' appears in more than one procedure");
  }
  if (!m_proc_index.count("main"))
    throw error(error_kind::missing_main, "no procedure named main");
  std::size_t ncall = 0;
  for (auto &p : m_procs)
    for (auto &e : p.edges) {
      if (!e.is_call())
        continue;
      ++ncall;
      if (!m_proc_index.count(e.callee()))
        throw error(error_kind::unknown_procedure, "call to undeclared procedure '" + e.callee() + "'");
      if (e.call_id != "e" + std::to_string(ncall))
        throw error(error_kind::parse_error, "call edges must be numbered e1, e2, ... in order");
    }
}

const procedure &program::proc(const std::string &name) const {
  auto it = m_proc_index.find(name);
  if (it == m_proc_index.end())
    throw error(error_kind::unknown_procedure, "'" + name + "'");
  return m_procs[it->second];
}

const procedure &program::proc_of(const std::string &node) const {
  auto it = m_node_proc.find(node);
  if (it == m_node_proc.end())
    throw error(error_kind::index_out_of_range, "unknown node '" + node + "'");
  return m_procs[it->second];
}

std::vector<std::string> program::all_nodes() const {
  std::vector<std::string> r;
  for (auto &p : m_procs)
    r.insert(r.end(), p.nodes.begin(), p.nodes.end());
  return r;
}

std::vector<const edge *> program::call_edges() const {
  std::vector<const edge *> r;
  for (auto &p : m_procs)
    for (auto &e : p.edges)
      if (e.is_call())
        r.push_back(&e);
  return r;
}

const edge &program::call_edge(const std::string &id) const {
  for (auto *e : call_edges())
    if (e->call_id == id)
      return *e;
  throw error(error_kind::index_out_of_range, "unknown call edge '" + id + "'");
}

std::size_t program::edge_count() const {
  std::size_t n = 0;
  for (auto &p : m_procs)
    n += p.edges.size();
  return n;
}

namespace {

bool is_ident(const std::string &s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
      return false;
  return true;
}

affine_assign parse_assign(const std::string &body, const std::vector<std::string> &vars,
                           std::size_t no) {
  auto p = body.find(":=");
  if (p == std::string::npos)
    throw parse_error(no, "assign needs ':='");
  auto target = text::trim(body.substr(0, p));
  std::string rhs;
  for (char c : body.substr(p + 2))
    if (!std::isspace(static_cast<unsigned char>(c)))
      rhs += c;
  auto var_index = [&](const std::string &v) -> std::size_t {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v)
        return i + 1;
    throw parse_error(no, "undeclared variable '" + v + "'");
  };
  affine_assign a;
  a.target = var_index(target);
  a.coeffs.assign(vars.size() + 1, rational(0));
  if (rhs.empty())
    throw parse_error(no, "empty right-hand side");
  std::size_t i = 0;
  while (i < rhs.size()) {
    int sign = 1;
    bool any_sign = false;
    while (i < rhs.size() && (rhs[i] == '+' || rhs[i] == '-')) {
      if (rhs[i] == '-')
        sign = -sign;
      any_sign = true;
      ++i;
    }
    if (i > 0 && !any_sign)
      throw parse_error(no, "expected '+' or '-' between terms");
    std::size_t j = i;
    while (j < rhs.size() && rhs[j] != '+' && rhs[j] != '-')
      ++j;
    auto term = rhs.substr(i, j - i);
    if (term.empty())
      throw parse_error(no, "empty term");
    auto star = term.find('*');
    rational coef = 1;
    std::string var;
    if (star != std::string::npos) {
      try {
        coef = parse_rational(term.substr(0, star));
      } catch (const error &) {
        throw parse_error(no, "bad coefficient in '" + term + "'");
      }
      var = term.substr(star + 1);
      if (!is_ident(var))
        throw parse_error(no, "bad variable in '" + term + "'");
    } else if (is_ident(term)) {
      var = term;
    } else {
      try {
        coef = parse_rational(term);
      } catch (const error &) {
        throw parse_error(no, "bad term '" + term + "'");
      }
    }
    coef *= sign;
    if (var.empty())
      a.coeffs[0] += coef;
    else
      a.coeffs[var_index(var)] += coef;
    i = j;
  }
  return a;
}

} // namespace

program parse_program(const std::string &src) {
  std::istringstream in(src);
  std::string raw;
  std::size_t no = 0, ncall = 0;
  std::vector<std::string> vars;
  bool have_vars = false;
  std::vector<procedure> procs;
  procedure *cur = nullptr;
  auto touch = [&](const std::string &n, std::size_t line) {
    if (!is_ident(n))
      throw parse_error(line, "bad node name '" + n + "'");
  };
  while (std::getline(in, raw)) {
    ++no;
    auto l = text::strip_comment(raw);
    if (l.empty())
      continue;
    if (text::starts_with(l, "vars:")) {
      if (have_vars || !procs.empty())
        throw parse_error(no, "'vars:' must appear once, before procedures");
      have_vars = true;
      for (auto &v : text::split(l.substr(5), ','))
        if (!v.empty()) {
          if (!is_ident(v))
            throw parse_error(no, "bad variable name '" + v + "'");
          vars.push_back(v);
        }
      continue;
    }
    auto w = text::split_ws(l);
    if (w[0] == "proc") {
      if (cur)
        throw parse_error(no, "nested proc");
      if (w.size() != 2 || !is_ident(w[1]))
        throw parse_error(no, "expected 'proc <name>'");
      procs.push_back({w[1], "", "", {}, {}});
      cur = &procs.back();
      continue;
    }
    if (!cur)
      throw parse_error(no, "statement outside proc");
    if (w[0] == "end") {
      if (w.size() != 1)
        throw parse_error(no, "unexpected text after 'end'");
      if (cur->start.empty())
        throw parse_error(no, "proc " + cur->name + " has no start node");
      if (cur->end.empty())
        throw parse_error(no, "proc " + cur->name + " has no final node");
      // start, then first appearance along edges, then final
      std::set<std::string> seen;
      auto add = [&](const std::string &n) {
        if (seen.insert(n).second)
          cur->nodes.push_back(n);
      };
      add(cur->start);
      for (auto &e : cur->edges) {
        add(e.from);
        add(e.to);
      }
      add(cur->end);
      cur = nullptr;
    } else if (w[0] == "start" || w[0] == "final") {
      if (w.size() != 2)
        throw parse_error(no, "expected '" + w[0] + " <node>'");
      auto &slot = w[0] == "start" ? cur->start : cur->end;
      if (!slot.empty())
        throw parse_error(no, "second '" + w[0] + "' line");
      slot = w[1];
      touch(w[1], no);
    } else if (w[0] == "edge") {
      if (w.size() < 4)
        throw parse_error(no, "expected 'edge <from> <to> <label>'");
      edge e;
      e.from = w[1];
      e.to = w[2];
      touch(e.from, no);
      touch(e.to, no);
      const auto &kind = w[3];
      if (kind == "skip" && w.size() == 4) {
        e.lab = skip_label{};
      } else if (kind == "apply" && w.size() == 5) {
        e.lab = apply_label{w[4]};
      } else if (kind == "call" && w.size() == 5) {
        e.lab = call_label{w[4]};
        e.call_id = "e" + std::to_string(++ncall);
      } else if (kind == "assign") {
        auto pos = l.find("assign");
        e.lab = parse_assign(l.substr(pos + 6), vars, no);
      } else {
        throw parse_error(no, "unknown edge label '" + kind + "'");
      }
      cur->edges.push_back(std::move(e));
    } else {
      throw parse_error(no, "unknown statement '" + w[0] + "'");
    }
  }
  if (cur)
    throw parse_error(no, "missing 'end' for proc " + cur->name);
  return program(vars, procs);
}

program load_program(const std::string &path) { return parse_program(text::read_file(path)); }

std::string render_assign(const affine_assign &a, const std::vector<std::string> &vars) {
  auto vname = [&](std::size_t i) {
    return i - 1 < vars.size() ? vars[i - 1] : "x" + std::to_string(i);
  };
  std::string s;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    const auto &c = a.coeffs[i];
    if (sgn(c) == 0)
      continue;
    bool neg = sgn(c) < 0;
    rational m = abs(c);
    std::string term = (m == 1 ? "" : m.get_str() + "*") + vname(i);
    if (s.empty())
      s = (neg ? "-" : "") + term;
    else
      s += (neg ? "-" : "+") + term;
  }
  const auto &c0 = a.coeffs[0];
  if (s.empty())
    s = c0.get_str();
  else if (sgn(c0) != 0)
    s += (sgn(c0) < 0 ? "-" : "+") + rational(abs(c0)).get_str();
  return vname(a.target) + ":=" + s;
}

std::string label_text(const label &l, const std::vector<std::string> &vars) {
  if (std::holds_alternative<skip_label>(l))
    return "id";
  if (auto *a = std::get_if<affine_assign>(&l))
    return render_assign(*a, vars);
  if (auto *f = std::get_if<apply_label>(&l))
    return f->fn;
  return std::get<call_label>(l).proc + "()";
}

std::string print_program(const program &p) {
  std::ostringstream out;
  if (!p.vars().empty())
    out << "vars: " << text::join(p.vars(), ", ") << "\n";
  for (auto &pr : p.procs()) {
    out << "proc " << pr.name << "\n";
    out << "  start " << pr.start << "\n";
    out << "  final " << pr.end << "\n";
    for (auto &e : pr.edges) {
      out << "  edge " << e.from << " " << e.to << " ";
      if (std::holds_alternative<skip_label>(e.lab)) {
        out << "skip";
      } else if (auto *a = std::get_if<affine_assign>(&e.lab)) {
        out << "assign " << p.vars()[a->target - 1] << " := " << a->coeffs[0].get_str();
        for (std::size_t i = 1; i < a->coeffs.size(); ++i)
          if (sgn(a->coeffs[i]) != 0)
            out << " + " << a->coeffs[i].get_str() << "*" << p.vars()[i - 1];
      } else if (auto *f = std::get_if<apply_label>(&e.lab)) {
        out << "apply " << f->fn;
      } else {
        out << "call " << e.callee();
      }
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

std::string expanded_edge::str() const {
  switch (k) {
  case kind::base: return "(" + from + "," + to + ")";
  case kind::call: return "(" + from + ",call," + to + ")";
  case kind::ret: return "(" + from + ",ret," + to + ")";
  case kind::enter: return "(" + from + ",enter," + to + ")";
  }
  return "?";
}

std::vector<expanded_edge> expanded_alphabet(const program &p) {
  std::vector<expanded_edge> r;
  for (auto &pr : p.procs())
    for (std::size_t k = 0; k < pr.edges.size(); ++k) {
      const auto &e = pr.edges[k];
      if (!e.is_call()) {
        r.push_back({expanded_edge::kind::base, e.from, e.to, pr.name + "#" + std::to_string(k)});
        continue;
      }
      const auto &q = p.proc(e.callee());
      r.push_back({expanded_edge::kind::call, e.from, q.start, e.call_id});
      r.push_back({expanded_edge::kind::ret, q.end, e.to, e.call_id});
      r.push_back({expanded_edge::kind::enter, e.from, q.start, e.call_id});
    }
  return r;
}

} // namespace interflow
