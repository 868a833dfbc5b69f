#pragma once

#include <stdexcept>
#include <string>

namespace swapalg {

enum class Errc {
  parse,
  degree_mismatch,
  out_of_range,
  invalid_argument,
  degree_cap,
  verification,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace swapalg
