// Primary conjugacy: a ~ b iff a = xy and b = yx for some x, y in S^1.
//
// The relation is reflexive and symmetric but in general not transitive.

#ifndef SEMIVAR_CONJUGACY_HPP_
#define SEMIVAR_CONJUGACY_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <stdexcept> // for runtime_error
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"

namespace semivar {

  class RelationNotSymmetric : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class BinaryRelation {
   public:
    explicit BinaryRelation(std::size_t n) : _n(n), _bits(n * n, false) {}

    [[nodiscard]] std::size_t order() const noexcept {
      return _n;
    }

    [[nodiscard]] bool operator()(element_type a, element_type b) const {
      return _bits[a * _n + b];
    }

    void set(element_type a, element_type b) {
      _bits[a * _n + b] = true;
    }

    [[nodiscard]] bool is_reflexive() const;
    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] bool is_transitive() const;

    friend bool operator==(BinaryRelation const&,
                           BinaryRelation const&) = default;

   private:
    std::size_t       _n;
    std::vector<bool> _bits;
  };

  // Blocks sorted internally and by smallest member.
  using Partition = std::vector<std::vector<element_type>>;

  enum class Multipliers {
    adjoined_identity,  // x, y range over S^1 (the standard definition)
    semigroup_only      // x, y range over S; non-standard, for comparison
  };

  // S^1 follows the usual convention: no identity is adjoined to a monoid,
  // unless force_adjoin is set.
  [[nodiscard]] BinaryRelation
  primary_conjugacy(CayleyTable const& t,
                    Multipliers        mult         = Multipliers::adjoined_identity,
                    bool               force_adjoin = false);

  // Components of the relation graph. Throws RelationNotSymmetric.
  [[nodiscard]] Partition transitive_closure(BinaryRelation const& r);

  struct ConjugacyReport {
    BinaryRelation                             relation{0};
    bool                                       transitive = true;
    // lexicographically least (a, b, c) with a ~ b, b ~ c and not a ~ c
    std::optional<std::array<element_type, 3>> witness;
    Partition                                  classes;
  };

  [[nodiscard]] ConjugacyReport
  check_transitivity(CayleyTable const& t,
                     Multipliers        mult = Multipliers::adjoined_identity);

  // Classes of the transitive closure of primary conjugacy.
  [[nodiscard]] Partition conjugacy_classes(CayleyTable const& t);

}  // namespace semivar

#endif  // SEMIVAR_CONJUGACY_HPP_
