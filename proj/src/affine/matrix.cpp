#include "interflow/affine/matrix.hpp"

#include "interflow/core/errors.hpp"

namespace interflow {

aff_matrix::aff_matrix(std::size_t n) : m_n(n), m_a((n + 1) * (n + 1), rational(0)) {
  for (std::size_t i = 0; i <= n; ++i)
    m_a[i * (n + 1) + i] = 1;
}

aff_matrix::aff_matrix(std::size_t n, rvec entries) : m_n(n), m_a(std::move(entries)) {
  if (m_a.size() != (n + 1) * (n + 1))
    throw error(error_kind::dimension_mismatch, "matrix needs (n+1)^2 entries");
  canonicalize(m_a);
  if (m_a[0] != 1)
    throw error(error_kind::dimension_mismatch, "a00 must be 1");
  for (std::size_t j = 1; j <= n; ++j)
    if (sgn(m_a[j]) != 0)
      throw error(error_kind::dimension_mismatch, "row 0 must be (1,0,...,0)");
}

aff_matrix aff_matrix::assignment(std::size_t j, const rvec &coeffs, std::size_t n) {
  if (j < 1 || j > n)
    throw error(error_kind::index_out_of_range, "target variable index out of range");
  if (coeffs.size() != n + 1)
    throw error(error_kind::dimension_mismatch, "assignment needs n+1 coefficients");
  aff_matrix m(n);
  for (std::size_t i = 0; i <= n; ++i)
    m.m_a[j * (n + 1) + i] = coeffs[i];
  return m;
}

rvec aff_matrix::flatten() const { return rvec(m_a.begin() + (m_n + 1), m_a.end()); }

aff_matrix aff_matrix::unflatten(std::size_t n, const rvec &v) {
  if (v.size() != n * (n + 1))
    throw error(error_kind::dimension_mismatch, "flattened matrix needs n(n+1) entries");
  rvec e(n + 1, rational(0));
  e[0] = 1;
  e.insert(e.end(), v.begin(), v.end());
  return aff_matrix(n, e);
}

std::string aff_matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i <= m_n; ++i) {
    if (i)
      s += ",";
    s += "[";
    for (std::size_t j = 0; j <= m_n; ++j) {
      if (j)
        s += ",";
      s += at(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

aff_matrix operator*(const aff_matrix &a, const aff_matrix &b) {
  if (a.m_n != b.m_n)
    throw error(error_kind::dimension_mismatch, "matrix sizes differ");
  std::size_t n = a.m_n + 1;
  rvec e(n * n, rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto &x = a.m_a[i * n + k];
      if (sgn(x) == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        e[i * n + j] += x * b.m_a[k * n + j];
    }
  return aff_matrix(a.m_n, e);
}

state_vec embed(const rvec &x) {
  state_vec s{rational(1)};
  s.insert(s.end(), x.begin(), x.end());
  return s;
}

rvec project_state(const state_vec &s) { return rvec(s.begin() + 1, s.end()); }

state_vec mat_apply(const aff_matrix &a, const state_vec &s) {
  if (s.size() != a.n() + 1)
    throw error(error_kind::dimension_mismatch, "state and matrix sizes differ");
  state_vec r(s.size(), rational(0));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      r[i] += a.at(i, j) * s[j];
  return r;
}

mat_set matset_compose(const mat_set &a2, const mat_set &a1) {
  mat_set r;
  for (auto &x : a2)
    for (auto &y : a1)
      r.insert(x * y);
  return r;
}

state_set apply_matset(const mat_set &a, const state_set &s) {
  state_set r;
  for (auto &m : a)
    for (auto &x : s)
      r.insert(mat_apply(m, x));
  return r;
}

std::string render_matset(const mat_set &a) {
  std::string s = "{";
  bool first = true;
  for (auto &m : a) {
    if (!first)
      s += ", ";
    first = false;
    s += m.str();
  }
  return s + "}";
}

std::string render_states(const state_set &s) {
  std::string r = "{";
  bool first = true;
  for (auto &x : s) {
    if (!first)
      r += ", ";
    first = false;
    r += render_vec(x);
  }
  return r + "}";
}

rvec affine_map::operator()(const rvec &x) const {
  if (x.size() != n())
    throw error(error_kind::dimension_mismatch, "point and map sizes differ");
  rvec y = offset;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j)
      y[i] += lin[i][j] * x[j];
  return y;
}

affine_map affine_map::identity(std::size_t n) {
  affine_map m{std::vector<rvec>(n, rvec(n, rational(0))), rvec(n, rational(0))};
  for (std::size_t i = 0; i < n; ++i)
    m.lin[i][i] = 1;
  return m;
}

affine_map affine_map::assignment(std::size_t j, const rvec &coeffs, std::size_t n) {
  if (j < 1 || j > n)
    throw error(error_kind::index_out_of_range, "target variable index out of range");
  auto m = identity(n);
  m.offset[j - 1] = coeffs[0];
  for (std::size_t i = 1; i <= n; ++i)
    m.lin[j - 1][i - 1] = coeffs[i];
  return m;
}

std::string affine_map::str() const {
  std::string s = "x->(";
  for (std::size_t i = 0; i < n(); ++i) {
    if (i)
      s += ",";
    s += render_vec(lin[i]) + "x+" + offset[i].get_str();
  }
  return s + ")";
}

affine_map map_compose(const affine_map &g, const affine_map &f) {
  if (g.n() != f.n())
    throw error(error_kind::dimension_mismatch, "map sizes differ");
  std::size_t n = f.n();
  affine_map r{std::vector<rvec>(n, rvec(n, rational(0))), g(f.offset)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        r.lin[i][j] += g.lin[i][k] * f.lin[k][j];
  return r;
}

affine_map phi(const aff_matrix &a) {
  std::size_t n = a.n();
  affine_map m{std::vector<rvec>(n, rvec(n)), rvec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    m.offset[i] = a.at(i + 1, 0);
    for (std::size_t j = 0; j < n; ++j)
      m.lin[i][j] = a.at(i + 1, j + 1);
  }
  return m;
}

aff_relation phi(const mat_set &a) {
  aff_relation r;
  for (auto &m : a)
    r.insert(phi(m));
  return r;
}

aff_relation relation_compose(const aff_relation &r2, const aff_relation &r1) {
  aff_relation r;
  for (auto &g : r2)
    for (auto &f : r1)
      r.insert(map_compose(g, f));
  return r;
}

bool relation_contains(const aff_relation &r, const rvec &x, const rvec &y) {
  for (auto &m : r)
    if (m(x) == y)
      return true;
  return false;
}

state_set apply_relation(const aff_relation &r, const state_set &s) {
  state_set out;
  for (auto &x : s)
    for (auto &m : r)
      out.insert(embed(m(project_state(x))));
  return out;
}

std::string render_relation(const aff_relation &r) {
  std::string s = "{";
  bool first = true;
  for (auto &m : r) {
    if (!first)
      s += ", ";
    first = false;
    s += m.str();
  }
  return s + "}";
}

} // namespace interflow
