#pragma once

#include "interflow/lattice/interval.hpp"
#include "interflow/lattice/tabulated_fn.hpp"

#include <concepts>
#include <string>
#include <vector>

namespace interflow {

template <class D>
concept value_domain = requires(const D &d, const typename D::value_type &a) {
  { d.bottom() } -> std::convertible_to<typename D::value_type>;
  { d.leq(a, a) } -> std::convertible_to<bool>;
  { d.join(a, a) } -> std::convertible_to<typename D::value_type>;
  { d.render(a) } -> std::convertible_to<std::string>;
};

template <class D>
bool domain_equal(const D &d, const typename D::value_type &a, const typename D::value_type &b) {
  return d.leq(a, b) && d.leq(b, a);
}

struct finite_domain {
  using value_type = element;
  lattice_ptr lattice;

  element bottom() const { return lattice->bottom(); }
  bool leq(element a, element b) const { return lattice->leq(a, b); }
  element join(element a, element b) const { return lattice->join(a, b); }
  std::string render(element a) const { return lattice->name(a); }
};

struct fn_domain {
  using value_type = tabulated_fn;
  lattice_ptr lattice;

  tabulated_fn bottom() const { return tabulated_fn::constant(lattice, lattice->bottom()); }
  bool leq(const tabulated_fn &a, const tabulated_fn &b) const { return fn_leq(a, b); }
  tabulated_fn join(const tabulated_fn &a, const tabulated_fn &b) const { return fn_join(a, b); }
  std::string render(const tabulated_fn &a) const { return a.str(); }
};

struct interval_domain {
  using value_type = interval;

  interval bottom() const { return interval::empty(); }
  bool leq(const interval &a, const interval &b) const { return interval_leq(a, b); }
  interval join(const interval &a, const interval &b) const { return interval_join(a, b); }
  std::string render(const interval &a) const { return a.str(); }
};

struct env_domain {
  using value_type = interval_env;
  std::vector<std::string> vars;

  interval_env bottom() const { return {std::vector<interval>(vars.size())}; }
  interval_env top() const { return {std::vector<interval>(vars.size(), interval::top())}; }
  bool leq(const interval_env &a, const interval_env &b) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!interval_leq(a.vals[i], b.vals[i]))
        return false;
    return true;
  }
  interval_env join(const interval_env &a, const interval_env &b) const {
    interval_env r = a;
    for (std::size_t i = 0; i < vars.size(); ++i)
      r.vals[i] = interval_join(a.vals[i], b.vals[i]);
    return r;
  }
  interval_env widen(const interval_env &a, const interval_env &b) const {
    interval_env r = a;
    for (std::size_t i = 0; i < vars.size(); ++i)
      r.vals[i] = interval_widen(a.vals[i], b.vals[i]);
    return r;
  }
  std::string render(const interval_env &a) const {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i)
        s += ", ";
      s += vars[i] + "=" + a.vals[i].str();
    }
    return s;
  }
};

} // namespace interflow
