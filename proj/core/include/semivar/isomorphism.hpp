// Isomorphism testing and canonical forms for small (unary) semigroups.
//
// A relabelling is a bijection phi on {0, ..., n - 1}; relabel(t, phi) is
// the table u with u(phi(a), phi(b)) = phi(t(a, b)). The canonical form is
// the lexicographically least row-major serialisation over all n!
// relabellings (followed by the unary images, if any). Two inputs are
// isomorphic iff their canonical forms are equal. Anti-isomorphisms are not
// identified; compare with transpose() for that.

#ifndef SEMIVAR_ISOMORPHISM_HPP_
#define SEMIVAR_ISOMORPHISM_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"

namespace semivar {

  // Largest order accepted by canonical_form and is_canonical.
  constexpr std::size_t canonical_form_max_order = 9;

  using Bijection = std::vector<element_type>;

  // One byte per entry: the table row-major, then the unary map if present.
  class CanonicalForm {
   public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : _bytes(std::move(bytes)) {}

    [[nodiscard]] std::string const& bytes() const noexcept {
      return _bytes;
    }

    // Entries as decimal digits separated by nothing for orders <= 10, e.g.
    // "0" for the trivial semigroup; otherwise space separated.
    [[nodiscard]] std::string to_text() const;

    // 64-bit FNV-1a of the bytes, as 16 hex digits.
    [[nodiscard]] std::string hash() const;

    friend auto operator<=>(CanonicalForm const&,
                            CanonicalForm const&) = default;

   private:
    std::string _bytes;
  };

  [[nodiscard]] CayleyTable relabel(CayleyTable const& t, Bijection const& phi);
  [[nodiscard]] UnarySemigroup relabel(UnarySemigroup const& s,
                                       Bijection const&      phi);

  [[nodiscard]] bool is_isomorphism(CayleyTable const& s,
                                    CayleyTable const& t,
                                    Bijection const&   phi);
  [[nodiscard]] bool is_isomorphism(UnarySemigroup const& s,
                                    UnarySemigroup const& t,
                                    Bijection const&      phi);

  // A bijection phi with phi(ab) = phi(a)phi(b) (and phi(a') = phi(a)' for
  // unary semigroups), or nullopt. Backtracking over images, restricted to
  // elements with matching local invariants.
  [[nodiscard]] std::optional<Bijection>
  find_isomorphism(CayleyTable const& s, CayleyTable const& t);
  [[nodiscard]] std::optional<Bijection>
  find_isomorphism(UnarySemigroup const& s, UnarySemigroup const& t);

  // Throws CapExceeded above canonical_form_max_order.
  [[nodiscard]] CanonicalForm canonical_form(CayleyTable const& t);
  [[nodiscard]] CanonicalForm canonical_form(UnarySemigroup const& s);

  // A relabelling achieving the canonical form.
  [[nodiscard]] Bijection canonical_relabelling(CayleyTable const& t);
  [[nodiscard]] Bijection canonical_relabelling(UnarySemigroup const& s);

  // True iff the identity relabelling already yields the canonical form.
  // Cheaper than comparing with canonical_form since it stops at the first
  // smaller relabelling.
  [[nodiscard]] bool is_canonical(CayleyTable const& t);
  [[nodiscard]] bool is_canonical(UnarySemigroup const& s);

  // Serialisation of t (and s.unary()) under the identity relabelling.
  [[nodiscard]] CanonicalForm serialise(CayleyTable const& t);
  [[nodiscard]] CanonicalForm serialise(UnarySemigroup const& s);

}  // namespace semivar

#endif  // SEMIVAR_ISOMORPHISM_HPP_
