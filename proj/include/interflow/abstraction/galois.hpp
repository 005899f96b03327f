#pragma once

#include "interflow/constraint/constraint_system.hpp"
#include "interflow/interproc/frameworks.hpp"
#include "interflow/lattice/lattice_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace interflow {

struct galois_conn {
  lattice_ptr concrete, abstract;
  std::vector<element> alpha; // indexed by concrete element
  std::vector<element> gamma; // indexed by abstract element

  element a(element x) const { return alpha.at(x.index); }
  element g(element y) const { return gamma.at(y.index); }
};

struct law_result {
  std::string law;
  bool ok = true;
  std::string witness;
};

bool all_pass(const std::vector<law_result> &laws);
std::string render_laws(const std::vector<law_result> &laws);

// adjunction on all pairs; witness names the first failing pair
law_result check_galois(const galois_conn &c);
std::vector<law_result> galois_laws(const galois_conn &c);
bool alpha_gamma_is_id(const galois_conn &c);

std::vector<element> derive_gamma(const std::vector<element> &alpha, const lattice_ptr &l,
                                  const lattice_ptr &abs);
std::vector<law_result> closure_laws(const tabulated_fn &h);
galois_conn closure_to_galois(const tabulated_fn &h);
galois_conn load_galois(const lattice_spec &spec, const std::string &base_dir);
galois_conn make_galois(const lattice_spec &spec, const lattice_spec &abs);

// lattice laws checked exhaustively over all triples
std::vector<law_result> lattice_laws(const finite_lattice &l);

tabulated_fn canonical_abstraction(const tabulated_fn &f, const galois_conn &c);

struct abstract_interp {
  galois_conn conn;
  fn_table fsharp;
};

abstract_interp canonical_interp(const galois_conn &c, const fn_table &fns);

enum class interp_class { precise, correct, neither };
const char *interp_class_name(interp_class k);

struct classification {
  interp_class cls = interp_class::precise;
  std::string witness; // first non-precise point, or first incorrect one
};

classification classify_interp(const abstract_interp &ai, const fn_table &fns);

// x_lhs >= f(x_arg), x_lhs >= x_arg (fn empty) or x_lhs >= constant (no arg)
struct fn_constraint {
  var_id lhs = 0;
  std::optional<var_id> arg;
  std::string fn;
  element constant;
};

struct fn_system {
  lattice_ptr lattice;
  std::vector<std::string> vars;
  fn_table fns;
  std::vector<fn_constraint> cons;
};

constraint_system<finite_domain> to_constraint_system(const fn_system &s);
fn_system abstract_system(const fn_system &s, const abstract_interp &ai);

struct lifted_interp {
  lattice_ptr lattice;
  fn_table fns;
  element init;
};

// init is always alpha(init)
lifted_interp lift_interproc_interp(const abstract_interp &ai, element concrete_init);

} // namespace interflow
