// Green's relations of a finite semigroup.

#ifndef SEMIVAR_GREEN_HPP_
#define SEMIVAR_GREEN_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "core.hpp"

namespace semivar {

  // Class ids are dense and numbered in order of each class's smallest
  // member, so element 0 is always in class 0.
  struct GreenStructure {
    std::vector<std::size_t>  r_class;
    std::vector<std::size_t>  l_class;
    std::vector<std::size_t>  h_class;
    std::vector<std::size_t>  d_class;
    std::vector<std::size_t>  j_class;
    std::vector<element_type> idempotents;      // increasing
    std::vector<std::size_t>  group_h_classes;  // increasing h-class ids

    [[nodiscard]] std::size_t number_of_h_classes() const;
    [[nodiscard]] std::vector<element_type> h_class_members(std::size_t) const;
    [[nodiscard]] bool is_group_h_class_id(std::size_t id) const;
  };

  // R and L are the strongly connected components of the right and left
  // Cayley graphs (so a R b iff aS^1 = bS^1), J those of the two-sided
  // graph. D is computed as R o L and checked against L o R and J; a
  // mismatch throws InternalError, as does a group H-class without exactly
  // one idempotent.
  [[nodiscard]] GreenStructure green(CayleyTable const& t);

  // Whether H_a is a group. Both criteria (H_a contains an idempotent, and
  // a^2 H a) are evaluated; a disagreement throws InternalError.
  [[nodiscard]] bool is_group_h_class(GreenStructure const& g,
                                      CayleyTable const&    t,
                                      element_type          a);

  [[nodiscard]] std::vector<element_type> idempotents(CayleyTable const& t);

  // One block per D-class: rows are R-classes, columns L-classes, each cell
  // lists its H-class, with a '*' marking group H-classes.
  [[nodiscard]] std::string eggbox(GreenStructure const& g);

}  // namespace semivar

#endif  // SEMIVAR_GREEN_HPP_
