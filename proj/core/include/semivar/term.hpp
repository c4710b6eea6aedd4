// Terms and identities in the signature (*, ') and their evaluation.
//
// Syntax accepted by parse_term / parse_identity:
//
//   term    := factor (('*')? factor)*      juxtaposition or '*' multiplies
//   factor  := atom ("'" | '^' k)*          postfix prime, positive power
//   atom    := letter | '(' term ')'
//   identity:= term '=' term
//
// Variables are single ASCII letters. Powers expand at parse time, so x^3
// is the term x*x*x.

#ifndef SEMIVAR_TERM_HPP_
#define SEMIVAR_TERM_HPP_

#include <cstddef>      // for size_t
#include <map>          // for map
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <span>         // for span
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"

namespace semivar {

  class UnboundVariable : public std::runtime_error {
   public:
    explicit UnboundVariable(char v)
        : std::runtime_error(std::string("unbound variable '") + v + "'") {}
  };

  class TermSyntaxError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class Term {
   public:
    enum class Kind { variable, product, prime };

    static Term variable(char symbol);
    static Term product(Term left, Term right);
    static Term prime(Term child);
    // t * t * ... * t (k >= 1 factors), throws InvalidArgument for k == 0.
    static Term power(Term const& t, std::size_t k);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] char symbol() const;         // variable only
    [[nodiscard]] Term const& left() const;    // product only
    [[nodiscard]] Term const& right() const;   // product only
    [[nodiscard]] Term const& child() const;   // prime only

    [[nodiscard]] bool contains_prime() const noexcept;
    [[nodiscard]] std::vector<char> variables() const;  // sorted, distinct
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Term const& a, Term const& b);

    friend Term operator*(Term a, Term b) {
      return product(std::move(a), std::move(b));
    }

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
    std::shared_ptr<Node const> _node;
  };

  struct Identity {
    Term lhs;
    Term rhs;

    [[nodiscard]] std::vector<char> variables() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Identity const&, Identity const&) = default;
  };

  [[nodiscard]] Term     parse_term(std::string_view text);
  [[nodiscard]] Identity parse_identity(std::string_view text);

  // One identity per line; blank lines and lines starting with '#' are
  // skipped.
  [[nodiscard]] std::vector<Identity> parse_identity_list(std::string_view);

  using Assignment = std::map<char, element_type>;

  // Throws UnboundVariable if a variable of term is missing from env.
  [[nodiscard]] element_type eval(Term const&           term,
                                  UnarySemigroup const& s,
                                  Assignment const&     env);

  // Evaluation of a prime-free term in a partially filled table, where
  // undefined cells hold a value >= n. Returns nullopt if an undefined cell
  // is needed (or the term contains a prime).
  [[nodiscard]] std::optional<element_type>
  eval_partial(Term const&                   term,
               std::size_t                   n,
               std::span<element_type const> cells,
               Assignment const&             env);

  // The lexicographically first assignment (variables in increasing order,
  // first variable most significant) at which the sides differ.
  [[nodiscard]] std::optional<Assignment>
  find_counterexample(UnarySemigroup const& s, Identity const& id);

  [[nodiscard]] bool satisfies(UnarySemigroup const& s, Identity const& id);

  [[nodiscard]] std::string to_string(Assignment const& env);

}  // namespace semivar

#endif  // SEMIVAR_TERM_HPP_
