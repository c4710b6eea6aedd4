// Index and pseudoinverse of elements in a finite semigroup.
//
// The index of a is the least n >= 1 such that a^n lies in a group H-class.
// With e the identity of that group, the pseudoinverse a' is the inverse of
// ae in the group. Every finite semigroup is an epigroup, so both always
// exist.

#ifndef SEMIVAR_EPIGROUP_HPP_
#define SEMIVAR_EPIGROUP_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"
#include "green.hpp"

namespace semivar {

  struct EpigroupData {
    std::vector<std::size_t>  index;
    std::vector<element_type> pseudoinverse;
    std::vector<element_type> unit_of;  // identity of the group H_{a^index}
  };

  [[nodiscard]] EpigroupData analyse_epigroup(CayleyTable const&    t,
                                              GreenStructure const& g);
  [[nodiscard]] EpigroupData analyse_epigroup(CayleyTable const& t);

  [[nodiscard]] std::size_t element_index(CayleyTable const& t,
                                          element_type       a);
  [[nodiscard]] element_type pseudoinverse(CayleyTable const& t,
                                           element_type       a);

  // The table paired with its pseudoinverse map, flagged canonical.
  [[nodiscard]] UnarySemigroup pseudoinverse_map(CayleyTable const& t);

  // Pairs t with unary, flagged canonical iff unary is the pseudoinverse map
  // of t. Throws InvalidArgument if t does not validate or unary has the
  // wrong size.
  [[nodiscard]] UnarySemigroup
  attach_unary(CayleyTable const& t, std::vector<element_type> unary);

  [[nodiscard]] bool is_completely_regular(CayleyTable const& t);

  struct IdentityOutcome {
    std::string                              name;  // e.g. "x'xx' = x'"
    bool                                     holds = true;
    // values of x (and y) in the first failing assignment
    std::optional<std::vector<element_type>> counterexample;
  };

  struct EpigroupIdentityReport {
    std::vector<IdentityOutcome> outcomes;

    [[nodiscard]] bool all_hold() const;
  };

  // Checks, by direct evaluation over all assignments,
  //   x'xx' = x',  xx' = x'x,  x''' = x',  xx'x = x'',  (xy)'x = x(yx)',
  // and (x^p)' = (x')^p for each p in primes.
  [[nodiscard]] EpigroupIdentityReport
  verify_epigroup_identities(UnarySemigroup const&        s,
                             std::span<std::size_t const> primes);
  [[nodiscard]] EpigroupIdentityReport
  verify_epigroup_identities(UnarySemigroup const& s);

}  // namespace semivar

#endif  // SEMIVAR_EPIGROUP_HPP_
