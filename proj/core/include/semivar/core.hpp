// Finite semigroups as Cayley tables.
//
// Elements are dense indices 0, ..., n - 1 and the table is stored row-major,
// so that the entry in row a and column b is the product a * b. Nothing here
// assumes associativity; call validate() before relying on it.

#ifndef SEMIVAR_CORE_HPP_
#define SEMIVAR_CORE_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <span>         // for span
#include <stdexcept>    // for runtime_error, logic_error
#include <string>       // for string
#include <variant>      // for variant
#include <vector>       // for vector

namespace semivar {

  using element_type = std::uint32_t;

  // Thrown when input data or arguments are unusable.
  class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Thrown when a computation would exceed a configured size bound.
  class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Thrown when two routes to the same mathematical object disagree. This
  // can only happen through a bug or a corrupted table, never through input.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  class CayleyTable {
   public:
    CayleyTable() = default;

    // Entries are taken as given; out-of-range values are caught by
    // validate(), not here. Throws InvalidArgument if entries.size() != n^2
    // or n == 0.
    CayleyTable(std::size_t n, std::vector<element_type> entries);

    // Throws InvalidArgument unless rows form a non-empty square.
    static CayleyTable
    from_rows(std::vector<std::vector<element_type>> const& rows);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] element_type operator()(element_type a,
                                          element_type b) const noexcept {
      return _entries[a * _order + b];
    }

    [[nodiscard]] std::span<element_type const> row(element_type a) const {
      return {_entries.data() + a * _order, _order};
    }

    [[nodiscard]] std::span<element_type const> entries() const noexcept {
      return _entries;
    }

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    std::size_t               _order = 0;
    std::vector<element_type> _entries;
  };

  // A Cayley table together with a unary operation x -> x'. The canonical
  // flag is set only by pseudoinverse_map() (directly or through
  // attach_unary()), and means the unary map is the pseudoinverse.
  class UnarySemigroup {
   public:
    UnarySemigroup() = default;

    // Throws InvalidArgument on a size mismatch or an out-of-range image.
    UnarySemigroup(CayleyTable base, std::vector<element_type> unary);

    [[nodiscard]] CayleyTable const& base() const noexcept {
      return _base;
    }

    [[nodiscard]] std::vector<element_type> const& unary() const noexcept {
      return _unary;
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _base.order();
    }

    [[nodiscard]] element_type operator()(element_type a,
                                          element_type b) const noexcept {
      return _base(a, b);
    }

    [[nodiscard]] element_type prime(element_type a) const noexcept {
      return _unary[a];
    }

    [[nodiscard]] bool is_canonical() const noexcept {
      return _canonical;
    }

    friend bool operator==(UnarySemigroup const& x, UnarySemigroup const& y) {
      return x._base == y._base && x._unary == y._unary;
    }

   private:
    struct canonical_tag {};
    UnarySemigroup(canonical_tag, CayleyTable base, std::vector<element_type>);

    friend UnarySemigroup pseudoinverse_map(CayleyTable const&);

    CayleyTable               _base;
    std::vector<element_type> _unary;
    bool                      _canonical = false;
  };

  struct EntryOutOfRange {
    element_type row;
    element_type col;
    element_type value;
  };

  // (a * b) * c != a * (b * c)
  struct NotAssociative {
    element_type a;
    element_type b;
    element_type c;
  };

  using ValidationError = std::variant<EntryOutOfRange, NotAssociative>;

  // Returns nullopt when every entry is in range and the table is
  // associative. Associativity failures report the lexicographically first
  // failing triple.
  [[nodiscard]] std::optional<ValidationError> validate(CayleyTable const& t);

  [[nodiscard]] std::string describe(ValidationError const& err);

  [[nodiscard]] inline element_type
  product(CayleyTable const& t, element_type a, element_type b) noexcept {
    return t(a, b);
  }

  // a^k for k >= 1 by repeated squaring. Throws InvalidArgument for k == 0,
  // since no identity is assumed.
  [[nodiscard]] element_type
  power(CayleyTable const& t, element_type a, std::size_t k);

  [[nodiscard]] std::optional<element_type>
  identity_element(CayleyTable const& t);

  // S^1: returns t itself when it already has an identity (unless force is
  // set), otherwise t with a new element n acting as a two-sided identity.
  [[nodiscard]] CayleyTable adjoin_identity(CayleyTable const& t,
                                            bool               force = false);

  // The opposite semigroup, with a * b replaced by b * a.
  [[nodiscard]] CayleyTable transpose(CayleyTable const& t);

  [[nodiscard]] bool is_commutative(CayleyTable const& t);

  // The table induced on a subset closed under the operation. The i-th
  // element of the result corresponds to members[i]. Throws InvalidArgument
  // if members is not closed.
  [[nodiscard]] CayleyTable
  subsemigroup_table(CayleyTable const&               t,
                     std::span<element_type const>    members);

  // Named small semigroups used as fixtures throughout.
  namespace tables {
    [[nodiscard]] CayleyTable cyclic_group(std::size_t n);
    [[nodiscard]] CayleyTable symmetric_group_3();
    // All products equal 0.
    [[nodiscard]] CayleyTable null_semigroup(std::size_t n);
    // x * y = x
    [[nodiscard]] CayleyTable left_zero(std::size_t n);
    // x * y = y
    [[nodiscard]] CayleyTable right_zero(std::size_t n);
    // {0, 1} under min, 0 is the zero.
    [[nodiscard]] CayleyTable semilattice_2();
  }  // namespace tables

}  // namespace semivar

#endif  // SEMIVAR_CORE_HPP_
