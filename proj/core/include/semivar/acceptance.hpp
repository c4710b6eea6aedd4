// The acceptance suite: ten end-to-end checks over the exhaustive corpus of
// semigroups of order at most 4 and the shipped table files.

#ifndef SEMIVAR_ACCEPTANCE_HPP_
#define SEMIVAR_ACCEPTANCE_HPP_

#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <set>         // for set
#include <string>      // for string
#include <vector>      // for vector

namespace semivar {

  struct CriterionResult {
    std::size_t id = 0;
    std::string name;
    bool        passed = false;
    std::string detail;
    double      seconds = 0;
  };

  struct AcceptanceOptions {
    // Directory holding the .sgp table files; defaults to the source tree.
    std::filesystem::path corpus_dir = default_corpus_dir();
    unsigned              jobs       = 1;
    // Criterion ids to run; empty means all of them.
    std::set<std::size_t> only;

    static std::filesystem::path default_corpus_dir();
  };

  constexpr std::size_t acceptance_criterion_count = 10;

  [[nodiscard]] std::string criterion_name(std::size_t id);

  // Runs the selected criteria in increasing order of id. Exceptions thrown
  // while checking a criterion are reported as failures of that criterion.
  [[nodiscard]] std::vector<CriterionResult>
  run_acceptance(AcceptanceOptions const& opts = {});

}  // namespace semivar

#endif  // SEMIVAR_ACCEPTANCE_HPP_
