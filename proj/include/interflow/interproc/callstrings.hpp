#pragma once

#include "interflow/program/program.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace interflow {

using call_string = std::vector<std::string>; // call edge ids, outermost first

std::string render_callstring(const call_string &w);
std::string callstring_var(const std::string &node, const call_string &w); // node@e1.e2

struct callstring_sets {
  std::map<std::string, std::vector<call_string>> cs; // sorted by length, then edge order
  bool exact = true;
  bool recursive = false;

  const std::vector<call_string> &of(const std::string &proc) const;
  bool contains(const std::string &proc, const call_string &w) const;
};

bool call_graph_recursive(const program &p);
// nodes on some valid path from main's start; a call's return node needs a returning callee
std::set<std::string> reachable_nodes(const program &p);
callstring_sets compute_callstrings(const program &p, std::optional<std::size_t> bound = std::nullopt);

} // namespace interflow
