#pragma once

#include "interflow/abstraction/galois.hpp"
#include "interflow/lattice/domains.hpp"
#include "interflow/lattice/lattice_spec.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace interflow {

// binary table over a finite lattice
class widening_op {
public:
  widening_op() = default;
  widening_op(lattice_ptr l, std::vector<element> table, std::string name);

  static widening_op join(const lattice_ptr &l);
  // unlisted pairs default to join
  static widening_op from_entries(const lattice_ptr &l, const std::vector<widen_entry> &entries,
                                  std::string name = "table");
  static widening_op of_spec(const lattice_spec &spec);

  element operator()(element a, element b) const;
  const lattice_ptr &carrier() const { return m_l; }
  const std::string &name() const { return m_name; }
  bool equals_join() const;
  friend bool operator==(const widening_op &a, const widening_op &b) {
    return a.m_table == b.m_table;
  }

private:
  lattice_ptr m_l;
  std::vector<element> m_table;
  std::string m_name;
};

// x if y <= x, else x widen y
widening_op idp_wrap(const widening_op &op);

template <class D, class W> auto idp_wrap(const D &dom, W w) {
  return [dom, w](const typename D::value_type &a, const typename D::value_type &b) {
    return dom.leq(b, a) ? a : w(a, b);
  };
}

// pointwise lift to the monotone function lattice
std::function<tabulated_fn(const tabulated_fn &, const tabulated_fn &)>
lift_widen(const widening_op &op);

// interval environments, componentwise
inline interval_env env_widen(const interval_env &a, const interval_env &b) {
  interval_env r = a;
  for (std::size_t i = 0; i < r.vals.size(); ++i)
    r.vals[i] = interval_widen(a.vals[i], b.vals[i]);
  return r;
}

struct widening_report {
  std::string op;
  law_result extrapolation{"extrapolation", true, ""};
  law_result stabilization{"stabilization", true, ""};
  bool monotone = true;
  std::string monotone_witness;
  bool idempotent = true;
  std::string idempotent_witness;
  bool equals_join = false;
  // monotone and idempotent force the join
  bool join_consistent = true;

  bool ok() const { return extrapolation.ok && stabilization.ok && join_consistent; }
  std::string render() const;
};

widening_report validate_widening(const widening_op &op, std::uint64_t seed = 1,
                                  std::size_t sequences = 1000);
widening_report validate_interval_widening(std::uint64_t seed = 1, std::size_t sequences = 1000);

} // namespace interflow
