#pragma once

#include "interflow/lattice/finite_lattice.hpp"

#include <string>
#include <vector>

namespace interflow {

// monotone self-map of a finite lattice, stored as a full table
class tabulated_fn {
public:
  tabulated_fn(lattice_ptr carrier, std::vector<element> table);

  static tabulated_fn identity(const lattice_ptr &l);
  static tabulated_fn constant(const lattice_ptr &l, element c);
  // skips the monotonicity check (widened summaries)
  static tabulated_fn unchecked(lattice_ptr l, std::vector<element> table);

  element operator()(element x) const { return m_table.at(x.index); }
  const lattice_ptr &carrier() const { return m_carrier; }
  const std::vector<element> &table() const { return m_table; }
  std::string str() const;

  friend bool operator==(const tabulated_fn &a, const tabulated_fn &b) {
    return a.m_carrier == b.m_carrier && a.m_table == b.m_table;
  }
  friend bool operator<(const tabulated_fn &a, const tabulated_fn &b) {
    return a.m_table < b.m_table;
  }

private:
  tabulated_fn() = default;
  lattice_ptr m_carrier;
  std::vector<element> m_table;
};

bool is_monotone(const finite_lattice &l, const std::vector<element> &table);
tabulated_fn fn_compose(const tabulated_fn &g, const tabulated_fn &f);
tabulated_fn fn_join(const tabulated_fn &f, const tabulated_fn &g);
bool fn_leq(const tabulated_fn &f, const tabulated_fn &g);

enum class distributivity { universal, positive, distributive_only, monotone_only };
const char *distributivity_name(distributivity d);
distributivity check_distributivity(const tabulated_fn &f);

} // namespace interflow
