#pragma once

#include <stdexcept>
#include <string>

namespace interflow {

enum class error_kind {
  parse_error,
  not_a_partial_order,
  not_a_lattice,
  duplicate_element,
  unknown_element,
  carrier_mismatch,
  carrier_too_large,
  not_monotone,
  unknown_procedure,
  duplicate_node,
  missing_main,
  unsupported_carrier,
  missing_summary,
  unbounded_without_bound,
  not_universally_distributive,
  not_a_closure,
  missing_abstraction,
  index_out_of_range,
  dimension_mismatch,
  dimension_too_large,
  unsupported_label,
  bound_exceeded,
  incomplete_mop,
  usage,
};

const char *error_kind_name(error_kind k);

class error : public std::runtime_error {
public:
  error(error_kind kind, const std::string &msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        m_kind(kind) {}

  error_kind kind() const { return m_kind; }

private:
  error_kind m_kind;
};

class parse_error : public error {
public:
  parse_error(std::size_t line, const std::string &msg)
      : error(error_kind::parse_error,
              "line " + std::to_string(line) + ": " + msg),
        m_line(line) {}
  std::size_t line() const { return m_line; }

private:
  std::size_t m_line;
};

} // namespace interflow
