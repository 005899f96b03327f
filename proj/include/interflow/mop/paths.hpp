#pragma once

#include "interflow/interproc/callstrings.hpp"
#include "interflow/interproc/frameworks.hpp"
#include "interflow/program/program.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace interflow {

// indices into the expanded alphabet
using path = std::vector<std::uint32_t>;

struct path_set {
  std::set<path> paths;
  bool complete = true;
};

class path_enumerator {
public:
  path_enumerator(const program &prog, std::size_t max_len, std::size_t path_cap = 500000);

  const std::vector<expanded_edge> &alphabet() const { return m_alpha; }
  const path_set &slp(const std::string &node) const;
  const path_set &gp(const std::string &node) const;
  // saturated for every node
  bool complete() const { return m_complete; }
  std::size_t max_len() const { return m_max_len; }

  // paths of GP[u] whose enter edges spell w
  std::set<path> per_callstring(const std::string &node, const call_string &w) const;
  call_string enter_sequence(const path &p) const;
  bool well_nested(const path &p) const;
  std::string render(const path &p) const;

private:
  const program *m_prog;
  std::size_t m_max_len;
  std::vector<expanded_edge> m_alpha;
  std::map<std::string, path_set> m_slp, m_gp;
  bool m_complete = true;
};

// f_pi = f_k o ... o f_1 ; call/ret/enter edges contribute id
tabulated_fn path_transfer(const program &prog, const path_enumerator &pe, const path &p,
                           const lattice_ptr &l, const fn_table &fns);

struct mop_value {
  element value;
  bool complete = true;
};

mop_value mop(const program &prog, const path_enumerator &pe, const lattice_ptr &l,
              const fn_table &fns, element init, const std::string &node);

struct node_verdict {
  std::string node;
  bool reachable = true;
  element mop, functional, callstring;
  std::string verdict; // coincide | correct-but-strict | violation | unreachable
};

struct coincidence_report {
  lattice_ptr lattice;
  std::vector<node_verdict> nodes;
  distributivity weakest = distributivity::universal;
  bool all_coincide = true;
  bool violation = false;
  // true iff verdicts agree with the coincidence theorem for this classification
  bool matches_theory() const;
  std::string render() const;
};

struct finite_solutions {
  std::map<std::string, tabulated_fn> T;
  std::map<std::string, element> R, A_merged;
  std::map<std::string, element> A; // node@w -> value
};

// least solutions of the functional and call-string systems (no widening)
finite_solutions solve_finite(const program &prog, const lattice_ptr &l, const fn_table &fns,
                              element init, std::optional<std::size_t> cs_bound = std::nullopt);

coincidence_report check_coincidence(const program &prog, const lattice_ptr &l,
                                     const fn_table &fns, element init,
                                     std::size_t max_len = 64);

} // namespace interflow
