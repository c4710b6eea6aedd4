// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any selected criterion fails.
//
//   acceptance [--only N]... [--jobs J] [--corpus DIR]

#include <cstdio>    // for printf
#include <cstdlib>   // for stoul
#include <iostream>  // for cerr
#include <string>    // for string

#include "semivar/acceptance.hpp"

int main(int argc, char* argv[]) {
  semivar::AcceptanceOptions opts;
  try {
    for (int i = 1; i < argc; ++i) {
      std::string const arg = argv[i];
      if (i + 1 >= argc) {
        throw std::invalid_argument("missing value for " + arg);
      }
      std::string const value = argv[++i];
      if (arg == "--only") {
        opts.only.insert(std::stoul(value));
      } else if (arg == "--jobs") {
        opts.jobs = static_cast<unsigned>(std::stoul(value));
      } else if (arg == "--corpus") {
        opts.corpus_dir = value;
      } else {
        throw std::invalid_argument("unknown option " + arg);
      }
    }
    bool all_passed = true;
    for (auto const& r : semivar::run_acceptance(opts)) {
      std::printf("[%s] criterion %zu: %s (%.2fs)\n       %s\n",
                  r.passed ? "PASS" : "FAIL",
                  r.id,
                  r.name.c_str(),
                  r.seconds,
                  r.detail.c_str());
      all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
  } catch (std::exception const& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
}
