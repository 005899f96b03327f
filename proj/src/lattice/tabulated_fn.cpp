#include "interflow/lattice/tabulated_fn.hpp"

#include "interflow/core/errors.hpp"

namespace interflow {

bool is_monotone(const finite_lattice &l, const std::vector<element> &table) {
  for (auto a : l.elements())
    for (auto b : l.elements())
      if (l.leq(a, b) && !l.leq(table[a.index], table[b.index]))
        return false;
  return true;
}

tabulated_fn::tabulated_fn(lattice_ptr carrier, std::vector<element> table)
    : m_carrier(std::move(carrier)), m_table(std::move(table)) {
  if (m_table.size() != m_carrier->size())
    throw error(error_kind::parse_error, "function table is not total");
  for (auto a : m_carrier->elements())
    for (auto b : m_carrier->elements())
      if (m_carrier->leq(a, b) && !m_carrier->leq(m_table[a.index], m_table[b.index]))
        throw error(error_kind::not_monotone,
                    m_carrier->name(a) + " <= " + m_carrier->name(b) + " but f(" +
                        m_carrier->name(a) + ")=" + m_carrier->name(m_table[a.index]) +
                        " not <= f(" + m_carrier->name(b) + ")=" +
                        m_carrier->name(m_table[b.index]));
}

tabulated_fn tabulated_fn::unchecked(lattice_ptr l, std::vector<element> table) {
  if (table.size() != l->size())
    throw error(error_kind::parse_error, "function table is not total");
  tabulated_fn f;
  f.m_carrier = std::move(l);
  f.m_table = std::move(table);
  return f;
}

tabulated_fn tabulated_fn::identity(const lattice_ptr &l) { return {l, l->elements()}; }

tabulated_fn tabulated_fn::constant(const lattice_ptr &l, element c) {
  return {l, std::vector<element>(l->size(), c)};
}

std::string tabulated_fn::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < m_table.size(); ++i) {
    if (i)
      s += ", ";
    s += m_carrier->names()[i] + "->" + m_carrier->name(m_table[i]);
  }
  return s + "}";
}

static void same_carrier(const tabulated_fn &a, const tabulated_fn &b) {
  if (a.carrier() != b.carrier())
    throw error(error_kind::carrier_mismatch, "functions over different lattices");
}

tabulated_fn fn_compose(const tabulated_fn &g, const tabulated_fn &f) {
  same_carrier(g, f);
  std::vector<element> t;
  for (auto x : f.table())
    t.push_back(g(x));
  return tabulated_fn::unchecked(f.carrier(), t);
}

tabulated_fn fn_join(const tabulated_fn &f, const tabulated_fn &g) {
  same_carrier(f, g);
  std::vector<element> t;
  for (std::size_t i = 0; i < f.table().size(); ++i)
    t.push_back(f.carrier()->join(f.table()[i], g.table()[i]));
  return tabulated_fn::unchecked(f.carrier(), t);
}

bool fn_leq(const tabulated_fn &f, const tabulated_fn &g) {
  same_carrier(f, g);
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (!f.carrier()->leq(f.table()[i], g.table()[i]))
      return false;
  return true;
}

const char *distributivity_name(distributivity d) {
  switch (d) {
  case distributivity::universal: return "universal";
  case distributivity::positive: return "positive";
  case distributivity::distributive_only: return "distributive-only";
  case distributivity::monotone_only: return "monotone-only";
  }
  return "?";
}

distributivity check_distributivity(const tabulated_fn &f) {
  const auto &l = *f.carrier();
  std::size_t n = l.size();
  if (n > 16)
    throw error(error_kind::carrier_too_large, "exhaustive check needs |L| <= 16");
  bool pairs = true;
  for (auto a : l.elements())
    for (auto b : l.elements())
      if (f(l.join(a, b)) != l.join(f(a), f(b)))
        pairs = false;
  bool nonempty = true;
  for (std::uint32_t mask = 1; mask < (1u << n) && nonempty; ++mask) {
    element in = l.bottom(), out = l.bottom();
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        in = l.join(in, {i});
        out = l.join(out, f({i}));
      }
    if (f(in) != out)
      nonempty = false;
  }
  if (nonempty && f(l.bottom()) == l.bottom())
    return distributivity::universal;
  if (nonempty)
    return distributivity::positive;
  if (pairs)
    return distributivity::distributive_only;
  return distributivity::monotone_only;
}

} // namespace interflow
