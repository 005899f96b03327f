#include "interflow/core/text.hpp"

#include "interflow/core/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace interflow::text {

std::string trim(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_ws(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w)
    out.push_back(w);
  return out;
}

bool starts_with(const std::string &s, const std::string &prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string r;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      r += sep;
    r += parts[i];
  }
  return r;
}

std::string strip_comment(const std::string &line) {
  auto p = line.find('#');
  return trim(p == std::string::npos ? line : line.substr(0, p));
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw error(error_kind::usage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace interflow::text
