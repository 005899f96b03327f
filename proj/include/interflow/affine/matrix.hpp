#pragma once

#include "interflow/core/rational.hpp"
#include "interflow/program/program.hpp"

#include <set>
#include <string>
#include <vector>

namespace interflow {

// (n+1)x(n+1) matrix with row 0 = (1, 0, ..., 0)
class aff_matrix {
public:
  explicit aff_matrix(std::size_t n); // identity
  aff_matrix(std::size_t n, rvec entries);

  static aff_matrix identity(std::size_t n) { return aff_matrix(n); }
  // x_j := coeffs[0] + sum coeffs[i] x_i, 1 <= j <= n
  static aff_matrix assignment(std::size_t j, const rvec &coeffs, std::size_t n);
  static aff_matrix of(const affine_assign &a, std::size_t n) {
    return assignment(a.target, a.coeffs, n);
  }

  std::size_t n() const { return m_n; }
  const rational &at(std::size_t i, std::size_t j) const { return m_a[i * (m_n + 1) + j]; }
  const rvec &entries() const { return m_a; }
  // rows 1..n flattened, n(n+1) coordinates
  rvec flatten() const;
  static aff_matrix unflatten(std::size_t n, const rvec &v);
  std::string str() const;

  friend aff_matrix operator*(const aff_matrix &a, const aff_matrix &b);
  friend bool operator==(const aff_matrix &a, const aff_matrix &b) { return a.m_a == b.m_a; }
  friend bool operator<(const aff_matrix &a, const aff_matrix &b) { return a.m_a < b.m_a; }

private:
  std::size_t m_n;
  rvec m_a;
};

// state vectors (1, x1, ..., xn)
using state_vec = rvec;
using state_set = std::set<state_vec>;

state_vec embed(const rvec &x);   // iota
rvec project_state(const state_vec &s); // pi
state_vec mat_apply(const aff_matrix &a, const state_vec &s);

using mat_set = std::set<aff_matrix>;

mat_set matset_compose(const mat_set &a2, const mat_set &a1);
state_set apply_matset(const mat_set &a, const state_set &s);
std::string render_matset(const mat_set &a);
std::string render_states(const state_set &s);

// x -> lin x + offset on R^n
struct affine_map {
  std::vector<rvec> lin;
  rvec offset;

  std::size_t n() const { return offset.size(); }
  rvec operator()(const rvec &x) const;
  static affine_map identity(std::size_t n);
  static affine_map assignment(std::size_t j, const rvec &coeffs, std::size_t n);
  std::string str() const;
  friend bool operator==(const affine_map &, const affine_map &) = default;
  friend bool operator<(const affine_map &a, const affine_map &b) {
    if (a.offset != b.offset)
      return a.offset < b.offset;
    return a.lin < b.lin;
  }
};

affine_map map_compose(const affine_map &g, const affine_map &f); // g o f

// union of affine graphs
using aff_relation = std::set<affine_map>;

affine_map phi(const aff_matrix &a);
aff_relation phi(const mat_set &a);
aff_relation relation_compose(const aff_relation &r2, const aff_relation &r1);
bool relation_contains(const aff_relation &r, const rvec &x, const rvec &y);
state_set apply_relation(const aff_relation &r, const state_set &s);
std::string render_relation(const aff_relation &r);

} // namespace interflow
