// Exhaustive enumeration of small semigroups up to isomorphism.
//
// Tables are filled cell by cell in row-major order. Whenever a cell is set,
// every associativity triple whose four products are now all defined is
// checked, so a dead branch is abandoned as soon as it is contradictory.
// Prime-free identities are checked on partial tables after each completed
// row. At a leaf the table is validated, rejected unless it equals its own
// canonical form, given its pseudoinverse (or, in free-unary mode, every
// unary map), and passed through the identities and named filters.

#ifndef SEMIVAR_SEARCH_HPP_
#define SEMIVAR_SEARCH_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <span>        // for span
#include <string>      // for string
#include <vector>      // for vector

#include "core.hpp"
#include "isomorphism.hpp"
#include "term.hpp"

namespace semivar {

  struct SearchSpec {
    std::size_t              order = 1;
    // Enumerate every order from 1 to order instead of order alone.
    bool                     all_orders = false;
    std::vector<Identity>    identities;
    // Names accepted by make_filter(), e.g. "V1" or "not:variant_of_CR".
    std::vector<std::string> filters;
    // Keep one model per class of the isomorphism-or-anti-isomorphism
    // relation (the representative with the smaller canonical form).
    bool                     merge_anti_isomorphic = false;
    // Search unary maps instead of deriving the pseudoinverse.
    bool                     free_unary = false;
    // Cap on order; 5 for plain searches.
    std::size_t              max_order = 5;
    unsigned                 jobs      = 1;
  };

  struct SearchResult {
    // Sorted by order, then canonical form. Each model equals its canonical
    // form.
    std::vector<UnarySemigroup>        models;
    std::map<std::size_t, std::size_t> counts_by_order;
    std::string                        spec_echo;
    double                             seconds = 0;
  };

  using ModelFilter = std::function<bool(UnarySemigroup const&)>;

  // Recognised names:
  //   canonical_unary        unary map is the pseudoinverse
  //   completely_regular     every element has index 1 (alias CR)
  //   W                      in_W (canonical unary required)
  //   W_structural           in_W_structural on the table
  //   E<n>, V<n>             in_E / in_V with n >= 1
  //   variant_of_CR          unary variant of a completely regular semigroup
  //   variant_of_CR_plain    the same, comparing multiplication only
  //   commutative, monoid
  //   not:<name>             negation
  // Throws InvalidArgument for anything else.
  [[nodiscard]] ModelFilter make_filter(std::string const& name);

  // Throws CapExceeded if spec.order > spec.max_order.
  [[nodiscard]] SearchResult enumerate(SearchSpec const& spec);

  // Number of semigroups of the given order up to isomorphism (or up to
  // isomorphism and anti-isomorphism). Throws CapExceeded above order 5.
  [[nodiscard]] std::size_t count_semigroups(std::size_t order,
                                             bool        merge_anti = false);

  struct PrintedMatch {
    std::size_t model;             // index into SearchResult::models
    Bijection   isomorphism;       // printed table -> model
    bool        unary_agrees;      // model's unary matches the printed one
    std::size_t matching_models;   // models isomorphic to the printed table
  };

  struct NonVariantReproduction {
    SearchResult              result;
    std::vector<PrintedMatch> matches;  // one per printed table
    bool                      perfect = false;
    std::string               diff;     // empty when perfect
  };

  // Enumerates unary semigroups of order <= order in V_1 (with pseudoinverse)
  // that are not unary variants of completely regular semigroups, and matches
  // them one-to-one against printed, which must carry their unary maps.
  [[nodiscard]] NonVariantReproduction
  reproduce_v1_nonvariants(std::span<UnarySemigroup const> printed,
                           std::size_t                     order = 4,
                           unsigned                        jobs  = 1);

}  // namespace semivar

#endif  // SEMIVAR_SEARCH_HPP_
