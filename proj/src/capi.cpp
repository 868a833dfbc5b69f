#include "swapalg/swapalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "swapalg/error.hpp"
#include "swapalg/families.hpp"
#include "swapalg/oracle.hpp"
#include "swapalg/reproduce.hpp"
#include "swapalg/rewrite.hpp"
#include "swapalg/serialize.hpp"

struct swapalg_element {
  swapalg::AlgebraElement value;
};

struct swapalg_trace {
  swapalg::RewriteTrace value;
};

namespace {

thread_local std::string last_error;

swapalg_status status_of(swapalg::Errc code) {
  using swapalg::Errc;
  switch (code) {
    case Errc::parse: return SWAPALG_ERR_PARSE;
    case Errc::degree_mismatch: return SWAPALG_ERR_DEGREE_MISMATCH;
    case Errc::out_of_range: return SWAPALG_ERR_OUT_OF_RANGE;
    case Errc::invalid_argument: return SWAPALG_ERR_INVALID_ARGUMENT;
    case Errc::degree_cap: return SWAPALG_ERR_DEGREE_CAP;
    case Errc::verification: return SWAPALG_ERR_VERIFICATION;
    case Errc::internal: return SWAPALG_ERR_INTERNAL;
  }
  return SWAPALG_ERR_INTERNAL;
}

swapalg_status failure(swapalg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
swapalg_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const swapalg::Error& e) {
    return failure(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return failure(SWAPALG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return failure(SWAPALG_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const swapalg::AlgebraElement& x, swapalg_format format) {
  return format == SWAPALG_FORMAT_JSON ? swapalg::to_json(x).dump(2) : swapalg::to_string(x);
}

swapalg_element* wrap(swapalg::AlgebraElement x) { return new swapalg_element{std::move(x)}; }

}  // namespace

#define SWAPALG_REQUIRE(cond)                                              \
  do {                                                                     \
    if (!(cond)) return failure(SWAPALG_ERR_NULL, "null argument: " #cond); \
  } while (0)

extern "C" {

const char* swapalg_last_error(void) { return last_error.c_str(); }

const char* swapalg_status_name(swapalg_status status) {
  switch (status) {
    case SWAPALG_OK: return "ok";
    case SWAPALG_ERR_PARSE: return "parse error";
    case SWAPALG_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case SWAPALG_ERR_OUT_OF_RANGE: return "out of range";
    case SWAPALG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SWAPALG_ERR_DEGREE_CAP: return "degree cap exceeded";
    case SWAPALG_ERR_VERIFICATION: return "verification failure";
    case SWAPALG_ERR_INTERNAL: return "internal error";
    case SWAPALG_ERR_NULL: return "null argument";
  }
  return "unknown status";
}

void swapalg_string_free(char* s) { std::free(s); }

int swapalg_degree_cap(void) { return swapalg::degree_cap(); }

swapalg_status swapalg_set_degree_cap(int cap) {
  return guarded([&] {
    swapalg::set_degree_cap(cap);
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_element_parse(const char* text, int degree, swapalg_element** out) {
  SWAPALG_REQUIRE(text && out);
  return guarded([&] {
    *out = wrap(swapalg::parse_element(text, degree));
    return SWAPALG_OK;
  });
}

void swapalg_element_free(swapalg_element* x) { delete x; }

int swapalg_element_degree(const swapalg_element* x) { return x ? x->value.degree() : 0; }

swapalg_status swapalg_element_format(const swapalg_element* x, swapalg_format format, char** out) {
  SWAPALG_REQUIRE(x && out);
  return guarded([&] {
    *out = copy_string(render(x->value, format));
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_specialize(const swapalg_element* x, int normalize_leftover, swapalg_element** out,
                                  swapalg_trace** trace) {
  SWAPALG_REQUIRE(x && out);
  return guarded([&] {
    swapalg::SpecializeOptions options;
    options.normalize_leftover = normalize_leftover != 0;
    options.record_trace = trace != nullptr;
    auto [y, t] = swapalg::specialize(x->value, options);
    *out = wrap(std::move(y));
    if (trace) *trace = new swapalg_trace{std::move(t)};
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_straighten(const swapalg_element* x, swapalg_element** out, swapalg_trace** trace) {
  SWAPALG_REQUIRE(x && out);
  return guarded([&] {
    auto [y, t] = swapalg::straighten_3good(x->value);
    *out = wrap(std::move(y));
    if (trace) *trace = new swapalg_trace{std::move(t)};
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_symmetric_to_involutions(const swapalg_element* x, swapalg_element** out) {
  SWAPALG_REQUIRE(x && out);
  return guarded([&] {
    *out = wrap(swapalg::symmetric_to_involutions(x->value));
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_partial_trace(const swapalg_element* x, int i, swapalg_element** out) {
  SWAPALG_REQUIRE(x && out);
  return guarded([&] {
    *out = wrap(swapalg::partial_trace_symbolic(x->value, i));
    return SWAPALG_OK;
  });
}

void swapalg_trace_free(swapalg_trace* t) { delete t; }

swapalg_status swapalg_trace_format(const swapalg_trace* t, swapalg_format format, char** out) {
  SWAPALG_REQUIRE(t && out);
  return guarded([&] {
    *out = copy_string(format == SWAPALG_FORMAT_JSON ? swapalg::to_json(t->value).dump(2) : swapalg::to_string(t->value));
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_trace_verify(const swapalg_trace* t, int64_t* failed_step, char** report) {
  SWAPALG_REQUIRE(t && failed_step);
  return guarded([&] {
    const auto& trace = t->value;
    *failed_step = -1;
    if (report) *report = nullptr;
    const std::size_t bad = trace.first_unsound_step();
    std::string message;
    if (bad < trace.steps.size()) {
      message = "step " + std::to_string(bad + 1) + " is not an identity in the swap algebra:\n" +
                swapalg::to_json(trace.steps[bad]).dump(2);
    } else if (!(trace.replay() == trace.output)) {
      message = "replaying the trace does not reproduce its output";
    } else if (!swapalg::equal_as_operators(trace.input, trace.output)) {
      message = "output differs from input as operators";
    } else {
      return SWAPALG_OK;
    }
    *failed_step = static_cast<int64_t>(bad);
    if (report) *report = copy_string(message);
    return failure(SWAPALG_ERR_VERIFICATION, message);
  });
}

swapalg_status swapalg_equal_in_sigma(const swapalg_element* x, const swapalg_element* y, int* equal) {
  SWAPALG_REQUIRE(x && y && equal);
  return guarded([&] {
    if (x->value.degree() != y->value.degree())
      swapalg::fail(swapalg::Errc::degree_mismatch, "elements have degrees " + std::to_string(x->value.degree()) +
                                                        " and " + std::to_string(y->value.degree()));
    *equal = swapalg::equal_as_operators(x->value, y->value) ? 1 : 0;
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_gram_rank_family(const char* family, int n, uint64_t* rank) {
  SWAPALG_REQUIRE(family && rank);
  return guarded([&] {
    *rank = swapalg::gram_rank(swapalg::family_members(swapalg::parse_family(family), n));
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_rsk(const char* permutation, int degree, int d, swapalg_format format, char** out) {
  SWAPALG_REQUIRE(permutation && out);
  return guarded([&] {
    if (d < 1) swapalg::fail(swapalg::Errc::invalid_argument, "d must be positive");
    const auto p = swapalg::parse_permutation(permutation, degree);
    *out = copy_string(format == SWAPALG_FORMAT_JSON ? swapalg::rsk_report_json(p, d).dump(2)
                                                     : swapalg::rsk_report_text(p, d));
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_basis_expand(const swapalg_element* x, const char* basis, swapalg_format format, char** out) {
  SWAPALG_REQUIRE(x && basis && out);
  return guarded([&] {
    const std::string name = basis;
    swapalg::Basis b;
    if (name == "pauli")
      b = swapalg::Basis::Pauli;
    else if (name == "units")
      b = swapalg::Basis::MatrixUnits;
    else
      swapalg::fail(swapalg::Errc::invalid_argument, "unknown basis '" + name + "'");
    const auto e = swapalg::basis_expand(x->value, b);
    *out = copy_string(format == SWAPALG_FORMAT_JSON ? swapalg::to_json(e).dump(2) : swapalg::to_string(e));
    return SWAPALG_OK;
  });
}

swapalg_status swapalg_reproduce(int big, swapalg_format format, swapalg_line_callback on_line, void* user,
                                 int* all_passed) {
  SWAPALG_REQUIRE(all_passed);
  return guarded([&] {
    swapalg::AcceptanceOptions options;
    options.big = big != 0;
    const auto results = swapalg::run_acceptance(options, [&](const swapalg::CriterionResult& r) {
      if (on_line && format == SWAPALG_FORMAT_TEXT) on_line(swapalg::format_result_line(r).c_str(), user);
    });
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    *all_passed = ok ? 1 : 0;
    if (on_line && format == SWAPALG_FORMAT_JSON) on_line(swapalg::results_json(results).c_str(), user);
    return SWAPALG_OK;
  });
}

}  // extern "C"
