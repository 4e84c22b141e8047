// Acceptance runner: executes one named suite (or all of them) and prints
// one line per check.  The exit status is zero exactly when every executed
// suite passes.  Timing goes to stderr so reports stay byte-identical.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "dendro/suites.hpp"

int main(int argc, char** argv) {
  using namespace dendro;
  std::vector<std::string> wanted;
  SuiteBounds bounds;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc) {
      bounds.time_budget_s = std::stod(argv[++i]);
    } else {
      wanted.push_back(argv[i]);
    }
  }
  if (wanted.empty()) wanted = suite_names();
  bool all_pass = true;
  for (const auto& name : wanted) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    try {
      rep = run_suite(name, bounds);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::fputs(rep.render_text().c_str(), stdout);
    std::fprintf(stderr, "%s: %.2fs\n", name.c_str(),
                 std::chrono::duration<double>(t1 - t0).count());
    if (!rep.pass()) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
