#pragma once

#include "interflow/interproc/callstrings.hpp"
#include "interflow/interproc/frameworks.hpp"
#include "interflow/lattice/lattice_spec.hpp"
#include "interflow/program/program.hpp"
#include "interflow/solver/solver.hpp"
#include "interflow/widening/widening.hpp"

#include <map>
#include <string>
#include <vector>

namespace interflow {

// file name -> contents; mirrors the counterexamples/ directory
const std::map<std::string, std::string> &corpus();
const std::string &corpus_file(const std::string &name);

// whitespace separated constraint ids, '#' comments
std::vector<std::string> parse_script(const std::string &text);

struct counterexample_kit {
  std::string id;
  lattice_spec spec;
  widening_op widen;
  program prog;
  element init;
  fn_table fns;
  std::map<std::string, strategy> strategies; // named scripted strategies
  std::map<std::string, std::string> expected; // "R[r]" -> element name
};

// "5.13" / "cs-beats-none-5.13" or "5.14" / "func-5.14"
counterexample_kit counterexample(const std::string &which);

using node_solution = std::map<std::string, element>;

struct widened_functional {
  std::map<std::string, tabulated_fn> summaries; // T[r_q] per procedure
  node_solution R;
  bool diverged = false;
};

widened_functional run_functional_widened(const program &prog, const lattice_ptr &l,
                                          const fn_table &fns, const widening_op &w,
                                          element init, const strategy &t_strat,
                                          const strategy &r_strat);

struct widened_callstring {
  node_solution A;      // merged
  node_solution copies; // node@w
  bool diverged = false;
};

widened_callstring run_callstring_widened(const program &prog, const lattice_ptr &l,
                                          const fn_table &fns, const widening_op &w,
                                          element init, const strategy &a_strat);

// all outcomes over every workset choice sequence
struct solution_sets {
  std::vector<node_solution> A, R;
  std::vector<std::map<std::string, tabulated_fn>> summaries; // distinct T outcomes
};

solution_sets enumerate_solution_sets(const program &prog, const lattice_ptr &l,
                                      const fn_table &fns, const widening_op &w, element init);

struct claim_verdict {
  char letter;
  std::string statement;
  bool holds;
};

std::vector<claim_verdict> evaluate_claims(const finite_lattice &l, const solution_sets &s);

} // namespace interflow
