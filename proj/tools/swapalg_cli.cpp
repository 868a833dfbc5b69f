// Command-line front end over the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "swapalg/swapalg.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerification = 2;

/// Thrown on any failed C API call; carries the exit status.
struct CliFailure {
  int exit_code;
  std::string message;
};

void check(swapalg_status status) {
  if (status == SWAPALG_OK) return;
  const int code = status == SWAPALG_ERR_VERIFICATION || status == SWAPALG_ERR_INTERNAL ? kExitVerification : kExitInvalid;
  throw CliFailure{code, std::string(swapalg_status_name(status)) + ": " + swapalg_last_error()};
}

struct ElementDeleter {
  void operator()(swapalg_element* x) const { swapalg_element_free(x); }
};
struct TraceDeleter {
  void operator()(swapalg_trace* t) const { swapalg_trace_free(t); }
};
using Element = std::unique_ptr<swapalg_element, ElementDeleter>;
using Trace = std::unique_ptr<swapalg_trace, TraceDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  swapalg_string_free(s);
  return out;
}

Element parse(const std::string& text, int degree) {
  swapalg_element* x = nullptr;
  check(swapalg_element_parse(text.c_str(), degree, &x));
  return Element(x);
}

std::string format(const swapalg_element* x, swapalg_format f) {
  char* s = nullptr;
  check(swapalg_element_format(x, f, &s));
  return take(s);
}

std::string format(const swapalg_trace* t, swapalg_format f) {
  char* s = nullptr;
  check(swapalg_trace_format(t, f, &s));
  return take(s);
}

Json json_of(const std::string& text) { return Json::parse(text); }

struct Options {
  std::string format = "text";
  int n = 0;
  bool trace = false;
  bool verify = false;
  bool normalize = false;
  bool big = false;
  int d = 2;
  std::string family;
  std::string basis = "pauli";
  int point = 0;
  std::string element;
  std::string other;

  bool json() const { return format == "json"; }
  swapalg_format fmt() const { return json() ? SWAPALG_FORMAT_JSON : SWAPALG_FORMAT_TEXT; }
};

/// Runs the oracle over a trace; exit 2 with the offending step on failure.
void verify_trace(const swapalg_trace* trace) {
  int64_t failed = -1;
  char* report = nullptr;
  const swapalg_status status = swapalg_trace_verify(trace, &failed, &report);
  const std::string text = take(report);
  if (status == SWAPALG_ERR_VERIFICATION) throw CliFailure{kExitVerification, "oracle: MISMATCH\n" + text};
  check(status);
}

int run_normal_form(const Options& o, bool straighten) {
  const Element x = parse(o.element, o.n);
  swapalg_element* raw = nullptr;
  swapalg_trace* raw_trace = nullptr;
  const bool want_trace = o.trace || o.verify;
  if (straighten)
    check(swapalg_straighten(x.get(), &raw, want_trace ? &raw_trace : nullptr));
  else
    check(swapalg_specialize(x.get(), o.normalize ? 1 : 0, &raw, want_trace ? &raw_trace : nullptr));
  const Element y(raw);
  const Trace trace(raw_trace);
  if (o.verify) verify_trace(trace.get());

  if (o.json()) {
    Json out{{"input", json_of(format(x.get(), o.fmt()))}, {"output", json_of(format(y.get(), o.fmt()))}};
    if (o.trace) out["trace"] = json_of(format(trace.get(), o.fmt()));
    if (o.verify) out["oracle"] = "equal";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format(y.get(), o.fmt()) << "\n";
    if (o.trace) std::cout << format(trace.get(), o.fmt());
    if (o.verify) std::cout << "oracle: equal\n";
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  Element x = parse(o.element, o.n);
  Element y = parse(o.other, o.n);
  const int n = std::max(swapalg_element_degree(x.get()), swapalg_element_degree(y.get()));
  if (swapalg_element_degree(x.get()) != n) x = parse(o.element, n);
  if (swapalg_element_degree(y.get()) != n) y = parse(o.other, n);
  int equal = 0;
  check(swapalg_equal_in_sigma(x.get(), y.get(), &equal));
  if (o.json())
    std::cout << Json{{"degree", n}, {"equal", equal == 1}}.dump(2) << "\n";
  else
    std::cout << (equal ? "equal" : "not equal") << "\n";
  return equal ? kExitOk : kExitVerification;
}

int run_rank(const Options& o) {
  uint64_t rank = 0;
  check(swapalg_gram_rank_family(o.family.c_str(), o.n, &rank));
  if (o.json())
    std::cout << Json{{"family", o.family}, {"n", o.n}, {"rank", rank}}.dump(2) << "\n";
  else
    std::cout << rank << "\n";
  return kExitOk;
}

int run_rsk(const Options& o) {
  char* s = nullptr;
  check(swapalg_rsk(o.element.c_str(), o.n, o.d, o.fmt(), &s));
  std::cout << take(s) << (o.json() ? "\n" : "");
  return kExitOk;
}

int run_trace(const Options& o) {
  const Element x = parse(o.element, o.n);
  swapalg_element* raw = nullptr;
  check(swapalg_partial_trace(x.get(), o.point, &raw));
  const Element y(raw);
  std::cout << format(y.get(), o.fmt()) << "\n";
  return kExitOk;
}

int run_pauli(const Options& o) {
  const Element x = parse(o.element, o.n);
  char* s = nullptr;
  check(swapalg_basis_expand(x.get(), o.basis.c_str(), o.fmt(), &s));
  std::cout << take(s) << (o.json() ? "\n" : "");
  return kExitOk;
}

int run_reproduce(const Options& o) {
  int all_passed = 0;
  auto print = [](const char* line, void*) { std::cout << line << std::endl; };
  check(swapalg_reproduce(o.big ? 1 : 0, o.fmt(), print, nullptr, &all_passed));
  if (!o.json()) std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
  return all_passed ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the swap algebra of S_n acting on (F^2)^n"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto degree = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Degree (embeds the input into S_n)")->check(CLI::Range(1, 32));
  };

  auto* rewrite = app.add_subcommand("rewrite", "Rewrite into special permutations");
  rewrite->add_option("element", o.element, "Element, e.g. \"(1,2,3,4)\" or \"1/2*(1,2) - (1,3)\"")->required();
  degree(rewrite);
  rewrite->add_flag("--trace", o.trace, "Print the rule applications");
  rewrite->add_flag("--verify", o.verify, "Check every step and the result with the operator oracle");
  rewrite->add_flag("--normalize", o.normalize, "Rewrite leftover 3-cycles into increasing form");

  auto* straighten = app.add_subcommand("straighten", "Rewrite into 3-good permutations");
  straighten->add_option("element", o.element, "Element")->required();
  degree(straighten);
  straighten->add_flag("--trace", o.trace, "Print the rule applications");
  straighten->add_flag("--verify", o.verify, "Check every step and the result with the operator oracle");

  auto* verify = app.add_subcommand("verify", "Decide whether two elements are equal as operators");
  verify->add_option("x", o.element, "First element")->required();
  verify->add_option("y", o.other, "Second element")->required();
  degree(verify);

  auto* rank = app.add_subcommand("rank", "Dimension of the span of a family of permutations");
  rank->add_option("--family", o.family, "Family")
      ->required()
      ->check(CLI::IsMember({"all", "involutions", "specials", "3good", "transpositions-plus-id"}));
  rank->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(1, 12));

  auto* rsk = app.add_subcommand("rsk", "Robinson-Schensted tableaux and goodness");
  rsk->add_option("permutation", o.element, "Permutation, cycle or one-line form")->required();
  degree(rsk);
  rsk->add_option("--d", o.d, "Goodness parameter")->check(CLI::PositiveNumber)->capture_default_str();

  auto* trace = app.add_subcommand("trace", "Partial trace over one tensor factor");
  trace->add_option("i", o.point, "Tensor factor")->required();
  trace->add_option("element", o.element, "Element")->required();
  degree(trace);

  auto* pauli = app.add_subcommand("pauli", "Expand the operator in a product basis");
  pauli->add_option("element", o.element, "Element")->required();
  degree(pauli);
  pauli->add_option("--basis", o.basis, "Basis")->check(CLI::IsMember({"pauli", "units"}))->capture_default_str();

  auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance checks");
  reproduce->add_flag("--big", o.big, "Include the degree 8 to 10 rank checks (several minutes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*rewrite) return run_normal_form(o, false);
    if (*straighten) return run_normal_form(o, true);
    if (*verify) return run_verify(o);
    if (*rank) return run_rank(o);
    if (*rsk) return run_rsk(o);
    if (*trace) return run_trace(o);
    if (*pauli) return run_pauli(o);
    if (*reproduce) return run_reproduce(o);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitInvalid;
}
