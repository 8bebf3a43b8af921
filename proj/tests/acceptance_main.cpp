// Runs the thirteen acceptance suites at full scale and prints one line per
// criterion. Exit status 0 only when every suite passes.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "msgeo/selftest.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }
  auto suites = msgeo::run_selftest(true, seed);
  bool all = true;
  for (size_t i = 0; i < suites.size(); ++i) {
    const auto& s = suites[i];
    all = all && s.pass;
    std::printf("criterion %02zu %-22s %s  checks=%ld  max_dev=%.3g  %.2fs%s%s\n", i + 1,
                s.name.c_str(), s.pass ? "PASS" : "FAIL", s.checks, s.max_dev, s.elapsed_s,
                s.detail.empty() ? "" : "  ", s.detail.c_str());
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
