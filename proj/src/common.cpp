#include "msgeo/common.hpp"

#include <cstdio>
#include <cstdlib>

namespace msgeo {

static double read_tolerance_env() {
  const char* s = std::getenv("MSGEO_TOLERANCE");
  if (s == nullptr || *s == '\0') return 1e-9;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || v < 0.0) return 1e-9;
  return v;
}

double default_tolerance() {
  static const double tol = read_tolerance_env();
  return tol;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace msgeo
