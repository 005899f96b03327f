#pragma once

#include <string>
#include <vector>

namespace interflow::text {

std::string trim(const std::string &s);
std::vector<std::string> split(const std::string &s, char sep);
std::vector<std::string> split_ws(const std::string &s);
bool starts_with(const std::string &s, const std::string &prefix);
std::string join(const std::vector<std::string> &parts, const std::string &sep);
std::string strip_comment(const std::string &line);
std::string read_file(const std::string &path);

} // namespace interflow::text
