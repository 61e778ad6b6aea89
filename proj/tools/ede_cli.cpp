// Command-line front end. Talks to the solver only through the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ede/ede.h"

namespace {

enum Exit : int { kOk = 0, kNo = 1, kBadInput = 2, kCapacity = 3 };

struct Failure {
  int code;
};

int exit_code_for(ede_status status) {
  switch (status) {
    case EDE_OK: return kOk;
    case EDE_ERR_CAPACITY: return kCapacity;
    default: return kBadInput;
  }
}

void check(ede_status status) {
  if (status == EDE_OK) return;
  std::cerr << "ede: " << ede_status_name(status) << ": " << ede_last_error();
  if (status == EDE_ERR_CAPACITY && ede_last_error_count() > 0) {
    std::cerr << " [" << ede_last_error_count() << " states]";
  }
  std::cerr << "\n";
  throw Failure{exit_code_for(status)};
}

// Owning wrappers over the opaque handles.
struct System {
  ede_system* h = nullptr;
  explicit System(const std::string& path) { check(ede_system_load(path.c_str(), &h)); }
  ~System() { ede_system_free(h); }
  System(const System&) = delete;
  System& operator=(const System&) = delete;
};

struct Fsa {
  ede_automaton* h = nullptr;
  Fsa() = default;
  ~Fsa() { ede_automaton_free(h); }
  Fsa(const Fsa&) = delete;
  Fsa& operator=(const Fsa&) = delete;
};

struct CString {
  char* s = nullptr;
  ~CString() { ede_string_free(s); }
};

std::size_t state_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EDE_STATE_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ede: EDE_STATE_CAP must be a positive integer, got '" << env << "'\n";
    throw Failure{kBadInput};
  }
  return 0;
}

void build(const System& sys, std::optional<std::size_t> cap, Fsa& out) {
  check(ede_build(sys.h, state_cap(cap), &out.h));
}

std::vector<std::uint64_t> parse_tuple(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto first = part.find_first_not_of(" \t");
    const auto last = part.find_last_not_of(" \t");
    if (first == std::string::npos) {
      std::cerr << "ede: empty component in tuple '" << text << "'\n";
      throw Failure{kBadInput};
    }
    part = part.substr(first, last - first + 1);
    std::size_t used = 0;
    try {
      if (part.front() == '-') throw std::invalid_argument("negative");
      out.push_back(std::stoull(part, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) {
      std::cerr << "ede: tuple components must be non-negative integers, got '" << part << "'\n";
      throw Failure{kBadInput};
    }
  }
  if (out.empty()) {
    std::cerr << "ede: empty tuple\n";
    throw Failure{kBadInput};
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "ede: cannot open '" << path << "'\n";
    throw Failure{kBadInput};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_build(const std::string& spec, const std::string& format, std::optional<std::size_t> cap) {
  System sys(spec);
  Fsa a;
  build(sys, cap, a);
  CString text;
  check(ede_automaton_export(a.h, format == "dot" ? EDE_FORMAT_DOT : EDE_FORMAT_JSON, &text.s));
  std::fputs(text.s, stdout);
  if (format == "json") std::fputc('\n', stdout);
  return kOk;
}

int cmd_check(const std::string& spec, const std::string& tuple_text,
              std::optional<std::size_t> cap) {
  System sys(spec);
  const auto tuple = parse_tuple(tuple_text);
  std::size_t t = 0;
  check(ede_system_info(sys.h, nullptr, nullptr, &t, nullptr));
  if (tuple.size() != t) {
    std::cerr << "ede: tuple has " << tuple.size() << " components but the equation has " << t
              << " unknowns\n";
    return kBadInput;
  }
  Fsa a;
  build(sys, cap, a);
  int accepted = 0;
  check(ede_accepts_tuple(a.h, tuple.data(), tuple.size(), &accepted));
  std::puts(accepted ? "solution" : "not a solution");
  return accepted ? kOk : kNo;
}

int cmd_enum(const std::string& spec, std::size_t max_len, std::optional<std::size_t> cap) {
  System sys(spec);
  Fsa a;
  build(sys, cap, a);
  std::uint64_t* rows = nullptr;
  std::size_t count = 0;
  check(ede_enumerate_solutions(a.h, max_len, &rows, &count));
  const auto width = ede_automaton_width(a.h);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < width; ++k) {
      if (k) std::fputc(',', stdout);
      std::printf("%llu", static_cast<unsigned long long>(rows[i * width + k]));
    }
    std::fputc('\n', stdout);
  }
  ede_tuples_free(rows);
  return kOk;
}

int cmd_verify(const std::string& spec, std::optional<std::size_t> max_len,
               const std::string& automaton_path, std::optional<std::size_t> cap) {
  System sys(spec);
  Fsa a;
  if (automaton_path.empty()) {
    build(sys, cap, a);
  } else {
    const auto text = read_file(automaton_path);
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool is_json = first != std::string::npos && text[first] == '{';
    check(ede_automaton_import(text.c_str(), is_json ? EDE_FORMAT_JSON : EDE_FORMAT_DOT, &a.h));
  }
  CString report;
  std::size_t mismatches = 0;
  check(ede_verify(sys.h, a.h, max_len ? *max_len : ede_system_default_max_len(sys.h), &report.s,
                   &mismatches));
  std::puts(report.s);
  return mismatches == 0 ? kOk : kNo;
}

int cmd_solvable(const std::string& spec, std::optional<std::size_t> cap) {
  System sys(spec);
  Fsa a;
  build(sys, cap, a);
  int empty = 0;
  check(ede_is_empty(a.h, &empty));
  std::puts(empty ? "no" : "yes");
  return empty ? kNo : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve exponential Diophantine equations over F_p[x] with digit automata"};
  app.require_subcommand(1);

  std::string spec;
  std::optional<std::size_t> cap;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", spec, "Equation file (JSON)")->required();
    sub->add_option("--state-cap", cap, "Maximum number of automaton states")
        ->check(CLI::PositiveNumber);
  };

  std::string format = "dot";
  auto* build_cmd = app.add_subcommand("build", "Build the solution automaton and print it");
  add_common(build_cmd);
  build_cmd->add_option("--out", format, "Export format")->check(CLI::IsMember({"dot", "json"}));

  std::string tuple;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a tuple is a solution");
  add_common(check_cmd);
  check_cmd->add_option("--tuple", tuple, "Comma-separated exponents, e.g. 3,5")->required();

  std::size_t enum_len = 4;
  auto* enum_cmd = app.add_subcommand("enum", "List solutions below p^max_len");
  add_common(enum_cmd);
  enum_cmd->add_option("--max-len", enum_len, "Maximum number of base-p digits");

  std::optional<std::size_t> verify_len;
  std::string automaton_path;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the automaton against direct substitution");
  add_common(verify_cmd);
  verify_cmd->add_option("--max-len", verify_len,
                         "Check all words up to this length (default 4, or 3 for companion rings)");
  verify_cmd->add_option("--automaton", automaton_path,
                         "Verify this exported automaton (DOT or JSON) instead of building one");

  auto* solvable_cmd = app.add_subcommand("solvable", "Decide whether any solution exists");
  add_common(solvable_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*build_cmd) return cmd_build(spec, format, cap);
    if (*check_cmd) return cmd_check(spec, tuple, cap);
    if (*enum_cmd) return cmd_enum(spec, enum_len, cap);
    if (*verify_cmd) return cmd_verify(spec, verify_len, automaton_path, cap);
    if (*solvable_cmd) return cmd_solvable(spec, cap);
  } catch (const Failure& f) {
    return f.code;
  }
  return kBadInput;
}
