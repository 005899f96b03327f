#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace interflow {

struct element {
  std::uint32_t index = 0;
  auto operator<=>(const element &) const = default;
};

class finite_lattice;
using lattice_ptr = std::shared_ptr<const finite_lattice>;

class finite_lattice {
public:
  // covers are (lower, upper) pairs of the Hasse relation
  static lattice_ptr build(const std::vector<std::string> &names,
                           const std::vector<std::pair<std::string, std::string>> &covers);
  // leq[i][j] is a full order relation
  static lattice_ptr from_order(const std::vector<std::string> &names,
                                const std::vector<std::vector<bool>> &leq);

  std::size_t size() const { return m_names.size(); }
  const std::string &name(element e) const { return m_names.at(e.index); }
  const std::vector<std::string> &names() const { return m_names; }
  element find(const std::string &name) const;
  bool contains(const std::string &name) const;

  bool leq(element a, element b) const { return m_leq[a.index][b.index]; }
  bool incomparable(element a, element b) const { return !leq(a, b) && !leq(b, a); }
  element join(element a, element b) const { return m_join[a.index][b.index]; }
  element meet(element a, element b) const { return m_meet[a.index][b.index]; }
  element join_all(const std::vector<element> &xs) const;
  element bottom() const { return m_bottom; }
  element top() const { return m_top; }
  std::vector<element> elements() const;
  // Hasse covering pairs, derived from the order
  std::vector<std::pair<element, element>> covers() const;

private:
  finite_lattice() = default;
  void finish();

  std::vector<std::string> m_names;
  std::vector<std::vector<bool>> m_leq;
  std::vector<std::vector<element>> m_join, m_meet;
  element m_bottom, m_top;
};

} // namespace interflow
