#include "interflow/affine/frameworks.hpp"

#include "interflow/core/errors.hpp"

#include <algorithm>

namespace interflow {

namespace {

template <class S> S set_union(const S &a, const S &b) {
  S r = a;
  r.insert(b.begin(), b.end());
  return r;
}

template <class S> bool set_leq(const S &a, const S &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// linear part of row i of a (rows 1..n)
rvec lin_apply(const aff_matrix &a, const rvec &x) {
  std::size_t n = a.n();
  rvec y(n, rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      y[i] += a.at(i + 1, j + 1) * x[j];
  return y;
}

void require_bounded(const polyhedron &p) {
  if (!p.rays().empty() || !p.lines().empty())
    throw error(error_kind::unsupported_carrier, "hulled matrix sets must be bounded");
}

} // namespace

bool matset_domain::leq(const mat_set &a, const mat_set &b) const { return set_leq(a, b); }
mat_set matset_domain::join(const mat_set &a, const mat_set &b) const { return set_union(a, b); }
bool relation_domain::leq(const aff_relation &a, const aff_relation &b) const {
  return set_leq(a, b);
}
aff_relation relation_domain::join(const aff_relation &a, const aff_relation &b) const {
  return set_union(a, b);
}
bool stateset_domain::leq(const state_set &a, const state_set &b) const { return set_leq(a, b); }
state_set stateset_domain::join(const state_set &a, const state_set &b) const {
  return set_union(a, b);
}

const affine_assign *affine_label(const label &l) {
  if (auto *a = std::get_if<affine_assign>(&l))
    return a;
  if (std::holds_alternative<skip_label>(l))
    return nullptr;
  throw error(error_kind::unsupported_label, "affine domains take skip and assign labels only");
}

std::function<state_set(const state_set &)> stateset_value_fw::transfer(const label &l) const {
  auto *a = affine_label(l);
  if (!a)
    return [](const state_set &s) { return s; };
  auto m = aff_matrix::of(*a, m_dom.n);
  return [m](const state_set &s) {
    state_set r;
    for (auto &x : s)
      r.insert(mat_apply(m, x));
    return r;
  };
}

mat_set exact_matrix_fw::base(const label &l) const {
  auto *a = affine_label(l);
  if (!a)
    return identity();
  return {aff_matrix::of(*a, m_dom.n)};
}

aff_relation exact_relation_fw::base(const label &l) const {
  auto *a = affine_label(l);
  if (!a)
    return identity();
  return {affine_map::assignment(a->target, a->coeffs, m_dom.n)};
}

std::function<polyhedron(const polyhedron &)> poly_value_fw::transfer(const label &l) const {
  auto *a = affine_label(l);
  if (!a)
    return [](const polyhedron &p) { return p; };
  auto m = affine_map::assignment(a->target, a->coeffs, m_dom.dim);
  return [m](const polyhedron &p) { return affine_image(p, m.lin, m.offset); };
}

hulled_matrix_fw::hulled_matrix_fw(std::vector<std::string> vars)
    : m_dom{vars.size() * (vars.size() + 1), {}}, m_vars(std::move(vars)) {
  for (std::size_t i = 1; i <= n(); ++i)
    for (std::size_t j = 0; j <= n(); ++j)
      m_dom.names.push_back("a" + std::to_string(i) + std::to_string(j));
}

polyhedron hulled_matrix_fw::identity() const {
  return polyhedron::point(aff_matrix::identity(n()).flatten());
}

polyhedron hulled_matrix_fw::base(const label &l) const {
  auto *a = affine_label(l);
  if (!a)
    return identity();
  return polyhedron::point(aff_matrix::of(*a, n()).flatten());
}

std::vector<aff_matrix> hulled_matrix_fw::matrices(const polyhedron &p) const {
  require_bounded(p);
  std::vector<aff_matrix> r;
  for (auto &x : p.points())
    r.push_back(aff_matrix::unflatten(n(), x));
  return r;
}

polyhedron hulled_matrix_fw::compose(const polyhedron &g, const polyhedron &f) const {
  if (g.is_empty() || f.is_empty())
    return m_dom.bottom();
  std::vector<rvec> pts;
  for (auto &a : matrices(g))
    for (auto &b : matrices(f))
      pts.push_back((a * b).flatten());
  return polyhedron::from_generators(m_dom.dim, pts);
}

polyhedron hulled_matrix_fw::apply(const polyhedron &t, const polyhedron &s) const {
  return hulled_matrix_apply(t, s, n());
}

polyhedron hull_of(const mat_set &a, std::size_t n) {
  std::vector<rvec> pts;
  for (auto &m : a)
    pts.push_back(m.flatten());
  return polyhedron::from_generators(n * (n + 1), pts);
}

polyhedron hulled_matrix_apply(const polyhedron &t, const polyhedron &s, std::size_t n) {
  if (s.dim() != n || t.dim() != n * (n + 1))
    throw error(error_kind::dimension_mismatch, "hulled matrix and state dimensions differ");
  if (t.is_empty() || s.is_empty())
    return polyhedron::empty(n);
  require_bounded(t);
  std::vector<rvec> pts, rays, lines;
  for (auto &x : t.points()) {
    auto a = aff_matrix::unflatten(n, x);
    for (auto &p : s.points())
      pts.push_back(project_state(mat_apply(a, embed(p))));
    for (auto &r : s.rays())
      rays.push_back(lin_apply(a, r));
    for (auto &l : s.lines())
      lines.push_back(lin_apply(a, l));
  }
  return polyhedron::from_generators(n, pts, rays, lines);
}

hulled_relation_fw::hulled_relation_fw(std::vector<std::string> vars)
    : m_dom{2 * vars.size(), {}}, m_vars(std::move(vars)) {
  for (auto &v : m_vars)
    m_dom.names.push_back(v);
  for (auto &v : m_vars)
    m_dom.names.push_back(v + "'");
}

polyhedron hulled_relation_fw::graph(const affine_map &m) const {
  std::size_t k = n();
  std::vector<lin_constraint> cs;
  for (std::size_t i = 0; i < k; ++i) {
    rvec a(2 * k, rational(0));
    a[k + i] = 1;
    for (std::size_t j = 0; j < k; ++j)
      a[j] -= m.lin[i][j];
    cs.push_back({a, m.offset[i], true});
  }
  return polyhedron::from_constraints(2 * k, cs);
}

polyhedron hulled_relation_fw::base(const label &l) const {
  auto *a = affine_label(l);
  if (!a)
    return identity();
  return graph(affine_map::assignment(a->target, a->coeffs, n()));
}

} // namespace interflow
