#pragma once

#include "interflow/core/rational.hpp"

#include <string>
#include <vector>

namespace interflow {

// integer or symbolic infinity
struct bound {
  enum class kind { neg_inf, finite, pos_inf };
  kind k = kind::finite;
  integer v = 0;

  static bound minus_inf() { return {kind::neg_inf, 0}; }
  static bound plus_inf() { return {kind::pos_inf, 0}; }
  static bound of(const integer &z) { return {kind::finite, z}; }

  bool is_finite() const { return k == kind::finite; }
  std::string str() const;
  friend bool operator==(const bound &a, const bound &b) {
    return a.k == b.k && (a.k != kind::finite || a.v == b.v);
  }
  friend bool operator<(const bound &a, const bound &b);
  friend bool operator<=(const bound &a, const bound &b) { return !(b < a); }
};

class interval {
public:
  interval() = default; // empty
  interval(bound lo, bound hi);
  interval(long lo, long hi) : interval(bound::of(lo), bound::of(hi)) {}

  static interval empty() { return {}; }
  static interval top() { return {bound::minus_inf(), bound::plus_inf()}; }
  static interval point(const integer &z) { return {bound::of(z), bound::of(z)}; }

  bool is_empty() const { return m_empty; }
  const bound &lo() const { return m_lo; }
  const bound &hi() const { return m_hi; }

  std::string str() const;
  friend bool operator==(const interval &a, const interval &b) {
    if (a.m_empty || b.m_empty)
      return a.m_empty == b.m_empty;
    return a.m_lo == b.m_lo && a.m_hi == b.m_hi;
  }

private:
  bool m_empty = true;
  bound m_lo = bound::of(0), m_hi = bound::of(0);
};

interval interval_join(const interval &a, const interval &b);
bool interval_leq(const interval &a, const interval &b);
interval interval_widen(const interval &a, const interval &b);
interval interval_add(const interval &a, const interval &b);
interval interval_scale(const interval &a, const integer &c);
interval parse_interval(const std::string &text);

// total map Var -> interval, stored positionally
struct interval_env {
  std::vector<interval> vals;
  friend bool operator==(const interval_env &, const interval_env &) = default;
};

} // namespace interflow
