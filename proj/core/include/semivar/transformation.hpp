// Transformations of {0, ..., m - 1} and the semigroups they generate.

#ifndef SEMIVAR_TRANSFORMATION_HPP_
#define SEMIVAR_TRANSFORMATION_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <string>   // for string
#include <vector>   // for vector

#include "core.hpp"

namespace semivar {

  class Transformation {
   public:
    // Throws InvalidArgument if images is empty or has an image >= its size.
    explicit Transformation(std::vector<element_type> images);

    static Transformation identity(std::size_t degree);
    static Transformation constant(std::size_t degree, element_type value);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] element_type operator[](element_type x) const {
      return _images[x];
    }

    [[nodiscard]] std::vector<element_type> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(Transformation const&,
                            Transformation const&) = default;

   private:
    std::vector<element_type> _images;
  };

  // Maps act on the right: (f * g)(x) = g(f(x)), i.e. apply f first.
  [[nodiscard]] Transformation operator*(Transformation const& f,
                                         Transformation const& g);

  struct GeneratedSemigroup {
    CayleyTable                 table;
    std::vector<Transformation> elements;  // elements[i] realises index i
  };

  // Closure of gens under composition. Element order is breadth first: the
  // distinct generators in the order given, then products w * g for each
  // element w in order and each generator g in order. Throws CapExceeded if
  // the closure has more than cap elements, InvalidArgument if gens is empty
  // or the degrees differ.
  [[nodiscard]] GeneratedSemigroup
  generate_from_transformations(std::span<Transformation const> gens,
                                std::size_t                     cap = 4096);

  // The full transformation monoid on m points, generated by a cyclic
  // permutation, a transposition and a rank m - 1 map.
  [[nodiscard]] GeneratedSemigroup full_transformation_monoid(std::size_t m);

}  // namespace semivar

#endif  // SEMIVAR_TRANSFORMATION_HPP_
