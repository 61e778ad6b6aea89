#include "ede/ede.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ede/errors.hpp"
#include "ede/fsa.hpp"
#include "ede/oracle.hpp"
#include "ede/reduction.hpp"
#include "ede/spec_file.hpp"

struct ede_system {
  ede::SystemSpec spec;
};

struct ede_automaton {
  ede::Automaton automaton;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_count = 0;

ede_status fail(ede_status status, const std::string& message, std::size_t count = 0) {
  last_error = message;
  last_count = count;
  return status;
}

// Runs body, translating the library's exceptions into status codes.
template <class Body>
ede_status guarded(Body&& body) {
  last_error.clear();
  last_count = 0;
  try {
    body();
    return EDE_OK;
  } catch (const ede::ParseError& e) {
    return fail(EDE_ERR_PARSE, e.what());
  } catch (const ede::InputError& e) {
    return fail(EDE_ERR_INPUT, e.what());
  } catch (const ede::StructuralError& e) {
    return fail(EDE_ERR_STRUCTURE, e.what());
  } catch (const ede::RangeError& e) {
    return fail(EDE_ERR_RANGE, e.what());
  } catch (const ede::AlphabetError& e) {
    return fail(EDE_ERR_ALPHABET, e.what());
  } catch (const ede::CapacityError& e) {
    return fail(EDE_ERR_CAPACITY, e.what(), e.discovered());
  } catch (const std::bad_alloc&) {
    return fail(EDE_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(EDE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EDE_ERR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ede_last_error(void) { return last_error.c_str(); }

size_t ede_last_error_count(void) { return last_count; }

const char* ede_status_name(ede_status status) {
  switch (status) {
    case EDE_OK: return "ok";
    case EDE_ERR_PARSE: return "parse error";
    case EDE_ERR_INPUT: return "input error";
    case EDE_ERR_STRUCTURE: return "structural error";
    case EDE_ERR_RANGE: return "range error";
    case EDE_ERR_ALPHABET: return "alphabet error";
    case EDE_ERR_CAPACITY: return "capacity exceeded";
    case EDE_ERR_ARGUMENT: return "invalid argument";
    case EDE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ede_status ede_system_parse(const char* json_text, ede_system** out) {
  if (!json_text || !out) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new ede_system{ede::parse_spec(json_text)}; });
}

ede_status ede_system_load(const char* path, ede_system** out) {
  if (!path || !out) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new ede_system{ede::load_spec_file(path)}; });
}

void ede_system_free(ede_system* sys) { delete sys; }

ede_status ede_system_info(const ede_system* sys, uint32_t* p, size_t* r, size_t* t,
                           size_t* order) {
  if (!sys) return fail(EDE_ERR_ARGUMENT, "null system");
  if (p) *p = sys->spec.field.p();
  if (r) *r = sys->spec.r;
  if (t) *t = sys->spec.t;
  if (order) *order = sys->spec.companion ? sys->spec.companion->n : 0;
  return EDE_OK;
}

size_t ede_system_default_max_len(const ede_system* sys) {
  return sys && sys->spec.is_matrix() ? ede::oracle::kMatrixMaxLen : ede::oracle::kScalarMaxLen;
}

ede_status ede_build(const ede_system* sys, size_t state_cap, ede_automaton** out) {
  if (!sys || !out) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    ede::BuildOptions options;
    if (state_cap) options.state_cap = state_cap;
    *out = new ede_automaton{ede::solve_system(sys->spec, options)};
  });
}

void ede_automaton_free(ede_automaton* a) { delete a; }

size_t ede_automaton_num_states(const ede_automaton* a) { return a ? a->automaton.num_states() : 0; }

size_t ede_automaton_width(const ede_automaton* a) {
  return a ? a->automaton.alphabet().width() : 0;
}

ede_status ede_automaton_export(const ede_automaton* a, ede_format format, char** out) {
  if (!a || !out) return fail(EDE_ERR_ARGUMENT, "null argument");
  if (format != EDE_FORMAT_DOT && format != EDE_FORMAT_JSON) {
    return fail(EDE_ERR_ARGUMENT, "unknown export format");
  }
  return guarded([&] {
    *out = copy_string(format == EDE_FORMAT_DOT ? ede::to_dot(a->automaton)
                                                : ede::to_json(a->automaton));
  });
}

ede_status ede_automaton_import(const char* text, ede_format format, ede_automaton** out) {
  if (!text || !out) return fail(EDE_ERR_ARGUMENT, "null argument");
  if (format != EDE_FORMAT_DOT && format != EDE_FORMAT_JSON) {
    return fail(EDE_ERR_ARGUMENT, "unknown import format");
  }
  return guarded([&] {
    *out = new ede_automaton{format == EDE_FORMAT_DOT ? ede::from_dot(text) : ede::from_json(text)};
  });
}

ede_status ede_accepts_tuple(const ede_automaton* a, const uint64_t* tuple, size_t len,
                             int* accepted) {
  if (!a || (!tuple && len) || !accepted) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& sigma = a->automaton.alphabet();
    if (len != sigma.width()) {
      throw ede::RangeError("tuple has " + std::to_string(len) + " components, expected " +
                            std::to_string(sigma.width()));
    }
    const std::span<const std::uint64_t> values(tuple, len);
    const auto u = ede::encode(values, sigma.p(), ede::min_length(values, sigma.p()));
    *accepted = ede::accepts(a->automaton, u) ? 1 : 0;
  });
}

ede_status ede_is_empty(const ede_automaton* a, int* empty) {
  if (!a || !empty) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] { *empty = ede::is_empty(a->automaton) ? 1 : 0; });
}

ede_status ede_enumerate_solutions(const ede_automaton* a, size_t max_len, uint64_t** tuples,
                                   size_t* count) {
  if (!a || !tuples || !count) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& sigma = a->automaton.alphabet();
    std::set<std::vector<std::uint64_t>> found;
    for (const auto& u : ede::enumerate(a->automaton, max_len)) {
      found.insert(ede::decode(u, sigma.p(), sigma.width()));
    }
    const auto width = sigma.width();
    auto* buf = static_cast<uint64_t*>(std::malloc(std::max<std::size_t>(1, found.size() * width) *
                                                   sizeof(uint64_t)));
    if (!buf) throw std::bad_alloc();
    std::size_t row = 0;
    for (const auto& n : found) std::copy(n.begin(), n.end(), buf + width * row++);
    *tuples = buf;
    *count = found.size();
  });
}

ede_status ede_is_solution(const ede_system* sys, const uint64_t* tuple, size_t len,
                           int* solution) {
  if (!sys || (!tuple && len) || !solution) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *solution = ede::oracle::is_solution(sys->spec, std::span<const std::uint64_t>(tuple, len)) ? 1 : 0;
  });
}

ede_status ede_verify(const ede_system* sys, const ede_automaton* a, size_t max_len,
                      char** report_json, size_t* mismatches) {
  if (!sys || !a || !mismatches) return fail(EDE_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto report = ede::oracle::compare(sys->spec, a->automaton, max_len);
    if (report_json) *report_json = copy_string(report.to_json());
    *mismatches = report.mismatches.size();
  });
}

void ede_string_free(char* s) { std::free(s); }

void ede_tuples_free(uint64_t* tuples) { std::free(tuples); }

}  // extern "C"
