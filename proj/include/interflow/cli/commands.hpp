#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace interflow::cli {

enum exit_code : int {
  exit_ok = 0,
  exit_fail = 1,
  exit_input = 2,
  exit_diverged = 3,
  exit_incomplete = 4,
};

// ordered key-value report; text or json rendering
struct report {
  using entries = std::vector<std::pair<std::string, std::string>>;
  entries fields;
  std::vector<std::pair<std::string, entries>> sections;
  std::vector<std::string> trace;

  void field(const std::string &k, const std::string &v) { fields.emplace_back(k, v); }
  entries &section(const std::string &name);
  std::string text() const;
  std::string json() const;
};

struct analyze_options {
  std::string program;
  std::string lattice;
  std::string domain; // interval | affine-matrix | affine-relation
  std::string approach = "functional";
  std::string widening;
  std::string strategy = "fifo";
  std::optional<std::size_t> callstring_bound;
  bool hull = false;
  std::optional<std::size_t> budget;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string init_states;
  bool trace = false;
};

int cmd_analyze(const analyze_options &o, std::ostream &out, std::ostream &err);

// what: lattice | widening | galois
int cmd_check(const std::string &what, const std::string &file, const std::string &format,
              std::ostream &out, std::ostream &err);

struct coincide_options {
  std::string program;
  std::string lattice;
  std::string abstract_spec;
  std::size_t max_len = 64;
  std::string format = "text";
};

int cmd_coincide(const coincide_options &o, std::ostream &out, std::ostream &err);

struct repro_check {
  std::string what, expected, got;
  bool ok = false;
};

struct repro_report {
  std::string id;
  std::vector<repro_check> checks;
  std::vector<std::string> notes;

  void expect(const std::string &what, const std::string &expected, const std::string &got);
  void expect_true(const std::string &what, bool cond);
  bool pass() const;
  std::string render() const;
};

const std::vector<std::string> &repro_ids();
// throws error(usage) for an unknown id
repro_report repro(const std::string &id);

int cmd_repro(const std::string &id, std::ostream &out, std::ostream &err);

// full command line, argv[0] included
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace interflow::cli
