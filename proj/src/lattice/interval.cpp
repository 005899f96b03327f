#include "interflow/lattice/interval.hpp"

#include "interflow/core/errors.hpp"

#include <cctype>

namespace interflow {

std::string bound::str() const {
  switch (k) {
  case kind::neg_inf: return "-inf";
  case kind::pos_inf: return "inf";
  default: return v.get_str();
  }
}

bool operator<(const bound &a, const bound &b) {
  if (a.k != b.k)
    return static_cast<int>(a.k) < static_cast<int>(b.k);
  return a.k == bound::kind::finite && a.v < b.v;
}

interval::interval(bound lo, bound hi) : m_empty(false), m_lo(lo), m_hi(hi) {
  if (hi < lo || lo.k == bound::kind::pos_inf || hi.k == bound::kind::neg_inf)
    m_empty = true;
}

std::string interval::str() const {
  if (m_empty)
    return "empty";
  return "[" + m_lo.str() + "," + m_hi.str() + "]";
}

interval interval_join(const interval &a, const interval &b) {
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  return {a.lo() <= b.lo() ? a.lo() : b.lo(), b.hi() <= a.hi() ? a.hi() : b.hi()};
}

bool interval_leq(const interval &a, const interval &b) {
  if (a.is_empty())
    return true;
  if (b.is_empty())
    return false;
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

interval interval_widen(const interval &a, const interval &b) {
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  bound l = a.lo() <= b.lo() ? a.lo() : bound::minus_inf();
  bound u = b.hi() <= a.hi() ? a.hi() : bound::plus_inf();
  return {l, u};
}

namespace {

bound add_bounds(const bound &x, const bound &y) {
  if (!x.is_finite())
    return x;
  if (!y.is_finite())
    return y;
  return bound::of(x.v + y.v);
}

bound scale_bound(const bound &x, const integer &c) {
  if (x.is_finite())
    return bound::of(x.v * c);
  bool neg = (x.k == bound::kind::neg_inf) != (c < 0);
  return neg ? bound::minus_inf() : bound::plus_inf();
}

} // namespace

// lower bounds never pair -inf with +inf here
interval interval_add(const interval &a, const interval &b) {
  if (a.is_empty() || b.is_empty())
    return interval::empty();
  return {add_bounds(a.lo(), b.lo()), add_bounds(a.hi(), b.hi())};
}

interval interval_scale(const interval &a, const integer &c) {
  if (a.is_empty())
    return a;
  if (c == 0)
    return interval::point(0);
  if (c > 0)
    return {scale_bound(a.lo(), c), scale_bound(a.hi(), c)};
  return {scale_bound(a.hi(), c), scale_bound(a.lo(), c)};
}

interval parse_interval(const std::string &text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  if (t == "empty")
    return interval::empty();
  if (t.size() < 5 || t.front() != '[' || t.back() != ']')
    throw error(error_kind::parse_error, "bad interval '" + text + "'");
  auto comma = t.find(',');
  if (comma == std::string::npos)
    throw error(error_kind::parse_error, "bad interval '" + text + "'");
  auto parse_b = [&](const std::string &s) {
    if (s == "-inf")
      return bound::minus_inf();
    if (s == "inf" || s == "+inf")
      return bound::plus_inf();
    rational q = parse_rational(s);
    if (q.get_den() != 1)
      throw error(error_kind::parse_error, "interval bounds must be integers");
    return bound::of(q.get_num());
  };
  return {parse_b(t.substr(1, comma - 1)), parse_b(t.substr(comma + 1, t.size() - comma - 2))};
}

} // namespace interflow
