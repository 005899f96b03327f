#include "interflow/lattice/finite_lattice.hpp"

#include "interflow/core/errors.hpp"

#include <map>

namespace interflow {

lattice_ptr finite_lattice::build(const std::vector<std::string> &names,
                                  const std::vector<std::pair<std::string, std::string>> &covers) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second)
      throw error(error_kind::duplicate_element, "element '" + names[i] + "' declared twice");
  std::size_t n = names.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    leq[i][i] = true;
  for (auto &[a, b] : covers) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end())
      throw error(error_kind::unknown_element, "'" + a + "' in order");
    if (ib == idx.end())
      throw error(error_kind::unknown_element, "'" + b + "' in order");
    leq[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j])
            leq[i][j] = true;
  return from_order(names, leq);
}

lattice_ptr finite_lattice::from_order(const std::vector<std::string> &names,
                                       const std::vector<std::vector<bool>> &leq) {
  std::size_t n = names.size();
  if (n == 0)
    throw error(error_kind::not_a_lattice, "empty carrier has no bottom");
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.emplace(names[i], i).second)
      throw error(error_kind::duplicate_element, "element '" + names[i] + "' declared twice");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i])
      throw error(error_kind::not_a_partial_order, "not reflexive at " + names[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw error(error_kind::not_a_partial_order,
                    "cycle between " + names[i] + " and " + names[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw error(error_kind::not_a_partial_order,
                      "not transitive at " + names[i] + ", " + names[j] + ", " + names[k]);
    }
  }
  auto l = std::shared_ptr<finite_lattice>(new finite_lattice());
  l->m_names = names;
  l->m_leq = leq;
  l->finish();
  return l;
}

void finite_lattice::finish() {
  std::size_t n = m_names.size();
  auto least_of = [&](const std::vector<std::size_t> &cands, bool upper) -> long {
    for (auto c : cands) {
      bool ok = true;
      for (auto d : cands)
        if (upper ? !m_leq[c][d] : !m_leq[d][c]) {
          ok = false;
          break;
        }
      if (ok)
        return static_cast<long>(c);
    }
    return -1;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i)
    all[i] = i;
  long b = least_of(all, true), t = least_of(all, false);
  if (b < 0)
    throw error(error_kind::not_a_lattice, "no least element (empty subset lacks a least upper bound)");
  if (t < 0)
    throw error(error_kind::not_a_lattice, "no greatest element");
  m_bottom = {static_cast<std::uint32_t>(b)};
  m_top = {static_cast<std::uint32_t>(t)};
  m_join.assign(n, std::vector<element>(n));
  m_meet.assign(n, std::vector<element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> ub, lb;
      for (std::size_t k = 0; k < n; ++k) {
        if (m_leq[i][k] && m_leq[j][k])
          ub.push_back(k);
        if (m_leq[k][i] && m_leq[k][j])
          lb.push_back(k);
      }
      long u = least_of(ub, true), m = least_of(lb, false);
      if (u < 0)
        throw error(error_kind::not_a_lattice,
                    "pair (" + m_names[i] + ", " + m_names[j] + ") lacks a least upper bound");
      if (m < 0)
        throw error(error_kind::not_a_lattice,
                    "pair (" + m_names[i] + ", " + m_names[j] + ") lacks a greatest lower bound");
      m_join[i][j] = {static_cast<std::uint32_t>(u)};
      m_meet[i][j] = {static_cast<std::uint32_t>(m)};
    }
}

element finite_lattice::find(const std::string &name) const {
  for (std::size_t i = 0; i < m_names.size(); ++i)
    if (m_names[i] == name)
      return {static_cast<std::uint32_t>(i)};
  throw error(error_kind::unknown_element, "'" + name + "'");
}

bool finite_lattice::contains(const std::string &name) const {
  for (auto &n : m_names)
    if (n == name)
      return true;
  return false;
}

element finite_lattice::join_all(const std::vector<element> &xs) const {
  element r = m_bottom;
  for (auto x : xs)
    r = join(r, x);
  return r;
}

std::vector<element> finite_lattice::elements() const {
  std::vector<element> r;
  for (std::size_t i = 0; i < m_names.size(); ++i)
    r.push_back({static_cast<std::uint32_t>(i)});
  return r;
}

std::vector<std::pair<element, element>> finite_lattice::covers() const {
  std::vector<std::pair<element, element>> r;
  auto es = elements();
  for (auto a : es)
    for (auto b : es) {
      if (a == b || !leq(a, b))
        continue;
      bool direct = true;
      for (auto c : es)
        if (c != a && c != b && leq(a, c) && leq(c, b)) {
          direct = false;
          break;
        }
      if (direct)
        r.emplace_back(a, b);
    }
  return r;
}

} // namespace interflow
