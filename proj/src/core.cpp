#include "interflow/core/errors.hpp"
#include "interflow/core/rational.hpp"

#include <cctype>

namespace interflow {

const char *error_kind_name(error_kind k) {
  switch (k) {
  case error_kind::parse_error: return "ParseError";
  case error_kind::not_a_partial_order: return "NotAPartialOrder";
  case error_kind::not_a_lattice: return "NotALattice";
  case error_kind::duplicate_element: return "DuplicateElement";
  case error_kind::unknown_element: return "UnknownElement";
  case error_kind::carrier_mismatch: return "CarrierMismatch";
  case error_kind::carrier_too_large: return "CarrierTooLarge";
  case error_kind::not_monotone: return "NotMonotone";
  case error_kind::unknown_procedure: return "UnknownProcedure";
  case error_kind::duplicate_node: return "DuplicateNode";
  case error_kind::missing_main: return "MissingMain";
  case error_kind::unsupported_carrier: return "UnsupportedCarrier";
  case error_kind::missing_summary: return "MissingSummary";
  case error_kind::unbounded_without_bound: return "UnboundedWithoutBound";
  case error_kind::not_universally_distributive: return "NotUniversallyDistributive";
  case error_kind::not_a_closure: return "NotAClosure";
  case error_kind::missing_abstraction: return "MissingAbstraction";
  case error_kind::index_out_of_range: return "IndexOutOfRange";
  case error_kind::dimension_mismatch: return "DimensionMismatch";
  case error_kind::dimension_too_large: return "DimensionTooLarge";
  case error_kind::unsupported_label: return "UnsupportedLabel";
  case error_kind::bound_exceeded: return "BoundExceeded";
  case error_kind::incomplete_mop: return "IncompleteMOP";
  case error_kind::usage: return "UsageError";
  }
  return "Error";
}

rational parse_rational(const std::string &text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t += c;
  if (t.empty())
    throw error(error_kind::parse_error, "empty number");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  if (i == t.size())
    throw error(error_kind::parse_error, "bad number '" + text + "'");
  for (std::size_t k = i; k < t.size(); ++k) {
    if (t[k] == '/' && !slash && k > i && k + 1 < t.size()) {
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(t[k])))
      throw error(error_kind::parse_error, "bad number '" + text + "'");
  }
  if (t[0] == '+')
    t = t.substr(1);
  rational q;
  q.set_str(t, 10);
  if (q.get_den() == 0)
    throw error(error_kind::parse_error, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const rational &q) { return q.get_str(); }
std::string to_string(const integer &z) { return z.get_str(); }

std::string render_vec(const rvec &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

rational dot(const rvec &a, const rvec &b) {
  rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

void canonicalize(rvec &v) {
  for (auto &x : v)
    x.canonicalize();
}

void make_primitive(rvec &v) {
  integer l = 1;
  for (auto &x : v)
    if (sgn(x) != 0)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  integer g = 0;
  for (auto &x : v) {
    x *= l;
    x.canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto &x : v)
      x /= g;
}

bool is_zero(const rvec &v) {
  for (auto &x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

} // namespace interflow
