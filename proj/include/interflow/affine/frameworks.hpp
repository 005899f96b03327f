#pragma once

#include "interflow/affine/matrix.hpp"
#include "interflow/affine/polyhedron.hpp"
#include "interflow/program/program.hpp"

#include <functional>
#include <string>
#include <vector>

namespace interflow {

// exact set domains

struct matset_domain {
  using value_type = mat_set;
  std::size_t n = 1;
  mat_set bottom() const { return {}; }
  bool leq(const mat_set &a, const mat_set &b) const;
  mat_set join(const mat_set &a, const mat_set &b) const;
  std::string render(const mat_set &a) const { return render_matset(a); }
};

struct relation_domain {
  using value_type = aff_relation;
  std::size_t n = 1;
  aff_relation bottom() const { return {}; }
  bool leq(const aff_relation &a, const aff_relation &b) const;
  aff_relation join(const aff_relation &a, const aff_relation &b) const;
  std::string render(const aff_relation &a) const { return render_relation(a); }
};

struct stateset_domain {
  using value_type = state_set;
  std::size_t n = 1;
  state_set bottom() const { return {}; }
  bool leq(const state_set &a, const state_set &b) const;
  state_set join(const state_set &a, const state_set &b) const;
  std::string render(const state_set &a) const { return render_states(a); }
};

struct poly_domain {
  using value_type = polyhedron;
  std::size_t dim = 1;
  std::vector<std::string> names;
  polyhedron bottom() const { return polyhedron::empty(dim); }
  bool leq(const polyhedron &a, const polyhedron &b) const { return poly_include(a, b); }
  polyhedron join(const polyhedron &a, const polyhedron &b) const { return poly_join(a, b); }
  std::string render(const polyhedron &a) const { return a.str(names); }
};

// throws unsupported_label for apply labels
const affine_assign *affine_label(const label &l);

class stateset_value_fw {
public:
  explicit stateset_value_fw(std::vector<std::string> vars)
      : m_dom{vars.size()}, m_vars(std::move(vars)) {}
  const stateset_domain &domain() const { return m_dom; }
  std::function<state_set(const state_set &)> transfer(const label &l) const;
  std::string text(const label &l) const { return label_text(l, m_vars); }

private:
  stateset_domain m_dom;
  std::vector<std::string> m_vars;
};

class exact_matrix_fw {
public:
  explicit exact_matrix_fw(std::vector<std::string> vars)
      : m_dom{vars.size()}, m_vars(std::move(vars)) {}
  const matset_domain &domain() const { return m_dom; }
  mat_set identity() const { return {aff_matrix::identity(m_dom.n)}; }
  mat_set base(const label &l) const;
  mat_set compose(const mat_set &g, const mat_set &f) const { return matset_compose(g, f); }
  state_set apply(const mat_set &t, const state_set &s) const { return apply_matset(t, s); }
  std::string text(const label &l) const { return label_text(l, m_vars); }

private:
  matset_domain m_dom;
  std::vector<std::string> m_vars;
};

class exact_relation_fw {
public:
  explicit exact_relation_fw(std::vector<std::string> vars)
      : m_dom{vars.size()}, m_vars(std::move(vars)) {}
  const relation_domain &domain() const { return m_dom; }
  aff_relation identity() const { return {affine_map::identity(m_dom.n)}; }
  aff_relation base(const label &l) const;
  aff_relation compose(const aff_relation &g, const aff_relation &f) const {
    return relation_compose(g, f);
  }
  state_set apply(const aff_relation &t, const state_set &s) const { return apply_relation(t, s); }
  std::string text(const label &l) const { return label_text(l, m_vars); }

private:
  relation_domain m_dom;
  std::vector<std::string> m_vars;
};

// hulled state sets as polyhedra in R^n
class poly_value_fw {
public:
  explicit poly_value_fw(std::vector<std::string> vars)
      : m_dom{vars.size(), vars}, m_vars(std::move(vars)) {}
  const poly_domain &domain() const { return m_dom; }
  std::function<polyhedron(const polyhedron &)> transfer(const label &l) const;
  std::string text(const label &l) const { return label_text(l, m_vars); }

private:
  poly_domain m_dom;
  std::vector<std::string> m_vars;
};

// hulled matrix sets: polytopes over the n(n+1) free matrix entries
class hulled_matrix_fw {
public:
  explicit hulled_matrix_fw(std::vector<std::string> vars);
  const poly_domain &domain() const { return m_dom; }
  polyhedron identity() const;
  polyhedron base(const label &l) const;
  polyhedron compose(const polyhedron &g, const polyhedron &f) const;
  polyhedron apply(const polyhedron &t, const polyhedron &s) const;
  std::string text(const label &l) const { return label_text(l, m_vars); }

  std::size_t n() const { return m_vars.size(); }
  std::vector<aff_matrix> matrices(const polyhedron &p) const; // generator points

private:
  poly_domain m_dom;
  std::vector<std::string> m_vars;
};

polyhedron hull_of(const mat_set &a, std::size_t n);
polyhedron hulled_matrix_apply(const polyhedron &t, const polyhedron &s, std::size_t n);

// hulled relations: polyhedra in R^{2n} over (x, y)
class hulled_relation_fw {
public:
  explicit hulled_relation_fw(std::vector<std::string> vars);
  const poly_domain &domain() const { return m_dom; }
  polyhedron identity() const { return graph(affine_map::identity(n())); }
  polyhedron base(const label &l) const;
  polyhedron compose(const polyhedron &g, const polyhedron &f) const {
    return relation_compose(g, f);
  }
  polyhedron apply(const polyhedron &t, const polyhedron &s) const { return relation_apply(t, s); }
  std::string text(const label &l) const { return label_text(l, m_vars); }

  std::size_t n() const { return m_vars.size(); }
  polyhedron graph(const affine_map &m) const;

private:
  poly_domain m_dom;
  std::vector<std::string> m_vars;
};

} // namespace interflow
