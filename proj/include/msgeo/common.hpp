#pragma once

#include <stdexcept>
#include <string>

namespace msgeo {

// Absolute tolerance used by every equality decision. Defaults to 1e-9;
// the environment variable MSGEO_TOLERANCE overrides it (read once per
// process).
double default_tolerance();

// Domain error carrying a stable code string; the CLI surfaces it as
// {"error": code, "detail": ...} with exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

// Formats a double with 12 significant digits ("%.12g").
std::string format_double(double v);

}  // namespace msgeo
