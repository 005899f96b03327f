#include "interflow/interproc/frameworks.hpp"

#include "interflow/core/errors.hpp"

namespace interflow {

fn_table fn_table_of(const lattice_spec &spec) {
  fn_table t;
  for (auto &[n, f] : spec.fns)
    t.emplace(n, f);
  return t;
}

static const tabulated_fn &lookup(const fn_table &fns, const std::string &name) {
  auto it = fns.find(name);
  if (it == fns.end())
    throw error(error_kind::missing_abstraction, "no function named '" + name + "'");
  return it->second;
}

std::function<element(element)> finite_value_fw::transfer(const label &l) const {
  if (std::holds_alternative<skip_label>(l))
    return [](element x) { return x; };
  if (auto *a = std::get_if<apply_label>(&l)) {
    auto f = lookup(*m_fns, a->fn);
    return [f](element x) { return f(x); };
  }
  throw error(error_kind::unsupported_label, "finite lattices take skip and apply labels only");
}

std::string finite_value_fw::text(const label &l) const { return label_text(l, {}); }

tabulated_fn finite_summary_fw::base(const label &l) const {
  if (std::holds_alternative<skip_label>(l))
    return identity();
  if (auto *a = std::get_if<apply_label>(&l))
    return lookup(*m_fns, a->fn);
  throw error(error_kind::unsupported_label, "finite lattices take skip and apply labels only");
}

std::string finite_summary_fw::text(const label &l) const { return label_text(l, {}); }

interval_env apply_assign(const affine_assign &a, const interval_env &env) {
  bool all_empty = true;
  for (auto &v : env.vals)
    all_empty = all_empty && v.is_empty();
  if (all_empty)
    return env;
  interval acc = interval::point(a.coeffs[0].get_num());
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    if (sgn(a.coeffs[i]) != 0)
      acc = interval_add(acc, interval_scale(env.vals[i - 1], a.coeffs[i].get_num()));
  interval_env out = env;
  out.vals[a.target - 1] = acc;
  return out;
}

std::function<interval_env(const interval_env &)> interval_value_fw::transfer(const label &l) const {
  if (std::holds_alternative<skip_label>(l))
    return [](const interval_env &x) { return x; };
  if (auto *a = std::get_if<affine_assign>(&l)) {
    for (auto &c : a->coeffs)
      if (c.get_den() != 1)
        throw error(error_kind::unsupported_label, "interval analysis needs integer coefficients");
    auto asg = *a;
    return [asg](const interval_env &x) { return apply_assign(asg, x); };
  }
  throw error(error_kind::unsupported_label, "interval analysis takes skip and assign labels only");
}

} // namespace interflow
