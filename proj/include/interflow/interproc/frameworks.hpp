#pragma once

#include "interflow/lattice/domains.hpp"
#include "interflow/lattice/lattice_spec.hpp"
#include "interflow/program/program.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace interflow {

using fn_table = std::map<std::string, tabulated_fn>;

fn_table fn_table_of(const lattice_spec &spec);

// edge functions applied to lattice elements
class finite_value_fw {
public:
  finite_value_fw(lattice_ptr l, fn_table fns)
      : m_dom{std::move(l)}, m_fns(std::make_shared<const fn_table>(std::move(fns))) {}

  const finite_domain &domain() const { return m_dom; }
  const fn_table &fns() const { return *m_fns; }
  std::function<element(element)> transfer(const label &l) const;
  std::string text(const label &l) const;

private:
  finite_domain m_dom;
  std::shared_ptr<const fn_table> m_fns;
};

// summaries over the monotone function lattice
class finite_summary_fw {
public:
  finite_summary_fw(lattice_ptr l, fn_table fns)
      : m_dom{std::move(l)}, m_fns(std::make_shared<const fn_table>(std::move(fns))) {}

  const fn_domain &domain() const { return m_dom; }
  tabulated_fn identity() const { return tabulated_fn::identity(m_dom.lattice); }
  tabulated_fn base(const label &l) const;
  tabulated_fn compose(const tabulated_fn &g, const tabulated_fn &f) const {
    return fn_compose(g, f);
  }
  element apply(const tabulated_fn &t, element x) const { return t(x); }
  std::string text(const label &l) const;

private:
  fn_domain m_dom;
  std::shared_ptr<const fn_table> m_fns;
};

interval_env apply_assign(const affine_assign &a, const interval_env &env);

// interval environments over the program variables; strict on bottom
class interval_value_fw {
public:
  explicit interval_value_fw(std::vector<std::string> vars) : m_dom{std::move(vars)} {}

  const env_domain &domain() const { return m_dom; }
  std::function<interval_env(const interval_env &)> transfer(const label &l) const;
  std::string text(const label &l) const { return label_text(l, m_dom.vars); }

private:
  env_domain m_dom;
};

} // namespace interflow
