// Variants of semigroups and their pseudoinverse structure.
//
// For c in S the variant (S, .c) has a .c b = acb. For a unary semigroup
// (S, ., ') the unary variant at c is (S, .c, *) with x* = (xc)' x (cx)'.

#ifndef SEMIVAR_VARIANTS_HPP_
#define SEMIVAR_VARIANTS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "core.hpp"
#include "isomorphism.hpp"

namespace semivar {

  [[nodiscard]] CayleyTable variant(CayleyTable const& t, element_type c);

  // x -> (xc)' x (cx)', evaluated in s.
  [[nodiscard]] std::vector<element_type> star(UnarySemigroup const& s,
                                               element_type          c);

  // variant(s.base(), c) with star(s, c); flagged canonical iff star is the
  // pseudoinverse of the variant.
  [[nodiscard]] UnarySemigroup unary_variant(UnarySemigroup const& s,
                                             element_type          c);

  struct TransportReport {
    // (xc)' = x* c for all x
    bool                        right_transport = true;
    std::optional<element_type> right_failure;
    // c x** = (cx)'' for all x
    bool                        double_star = true;
    std::optional<element_type> double_star_failure;

    [[nodiscard]] bool holds() const noexcept {
      return right_transport && double_star;
    }
  };

  [[nodiscard]] TransportReport
  check_pseudoinverse_transport(UnarySemigroup const& s, element_type c);

  struct VariantIndexCheck {
    std::size_t base_index;     // index of ca in s
    std::size_t variant_index;  // index of a in the variant at c
    bool        ok;             // variant_index is base_index or one more
  };

  // The variant index is computed from the variant table's own Green
  // structure, not from star.
  [[nodiscard]] VariantIndexCheck
  check_variant_index(UnarySemigroup const& s, element_type c, element_type a);

  // All a at once, sharing the Green computations.
  [[nodiscard]] std::vector<VariantIndexCheck>
  check_variant_indices(UnarySemigroup const& s, element_type c);

  struct RhoReport {
    // (x .c y) c = xc . yc
    bool                                                homomorphism = true;
    std::optional<std::pair<element_type, element_type>> homomorphism_failure;
    // x* c equals (xc)' both in S and computed inside the subsemigroup Sc
    bool                        transports_star = true;
    std::optional<element_type> transport_failure;

    [[nodiscard]] bool holds() const noexcept {
      return homomorphism && transports_star;
    }
  };

  // x -> xc from the variant at c onto Sc.
  [[nodiscard]] RhoReport check_rho_homomorphism(CayleyTable const& t,
                                                 element_type       c);

  struct VariantWitness {
    CayleyTable  semigroup;  // completely regular
    element_type sandwich;
    Bijection    isomorphism;  // from the queried semigroup to the variant
  };

  struct VariantSearchOptions {
    // Compare as unary semigroups (operation and star). When false only the
    // multiplication is compared.
    bool        compare_unary = true;
    std::size_t max_order     = 4;
  };

  // Searches every completely regular semigroup T of the same order (up to
  // isomorphism, in canonical order) and every c in T, returning the first
  // (T, c) whose unary variant is isomorphic to s. Throws CapExceeded above
  // options.max_order.
  [[nodiscard]] std::optional<VariantWitness>
  is_unary_variant_of_completely_regular(UnarySemigroup const&       s,
                                         VariantSearchOptions const& options
                                         = {});

}  // namespace semivar

#endif  // SEMIVAR_VARIANTS_HPP_
