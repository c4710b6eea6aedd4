// Membership of unary semigroups in the epigroup varieties E_n, V_n and W.
//
//   E_n:  x'xx' = x',  xx' = x'x,  x^{n+1}x' = x^n
//   V_n:  x'xx' = x',  xx' = x'x,  xy^{n-1}y'' = xy^n,  x''x^{n-1}y = x^n y
//   W:    epigroups in E_2 with (xy)'' = xy
//
// Each tester evaluates every independent characterisation it knows of and
// throws InternalError if they disagree.

#ifndef SEMIVAR_VARIETIES_HPP_
#define SEMIVAR_VARIETIES_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"
#include "term.hpp"

namespace semivar {

  struct VarietyReport {
    std::string               name;
    bool                      holds = true;
    std::optional<Identity>   failing_identity;
    std::optional<Assignment> failing_assignment;

    [[nodiscard]] std::string to_string() const;
  };

  // Standard identities, built as terms.
  namespace laws {
    [[nodiscard]] Identity prime_absorbs();       // x'xx' = x'
    [[nodiscard]] Identity prime_commutes();      // xx' = x'x
    [[nodiscard]] Identity triple_prime();        // x''' = x'
    [[nodiscard]] Identity double_prime();        // xx'x = x''
    [[nodiscard]] Identity prime_shift();         // (xy)'x = x(yx)'
    [[nodiscard]] Identity prime_power(std::size_t p);  // (x^p)' = (x')^p
    [[nodiscard]] Identity bounded_index(std::size_t n);      // x^{n+1}x' = x^n
    [[nodiscard]] Identity bounded_index_alt(std::size_t n);  // x^{n-1}x'' = x^n
    [[nodiscard]] Identity right_v(std::size_t n);  // xy^{n-1}y'' = xy^n
    [[nodiscard]] Identity left_v(std::size_t n);   // x''x^{n-1}y = x^n y
    [[nodiscard]] Identity products_regular();      // (xy)'' = xy
  }  // namespace laws

  // The first failing identity in the order given, with its
  // lexicographically first counterexample.
  [[nodiscard]] VarietyReport check_identities(std::string                  name,
                                               UnarySemigroup const&        s,
                                               std::vector<Identity> const& ids);

  // Both axiomatisations of E_n are evaluated and must agree.
  [[nodiscard]] VarietyReport in_E(UnarySemigroup const& s, std::size_t n);

  // Also asserts E_n <= V_n <= E_{n+1} on s.
  [[nodiscard]] VarietyReport in_V(UnarySemigroup const& s, std::size_t n);

  // Requires s.is_canonical() (throws InvalidArgument otherwise). Compares
  // the E_2 + (xy)'' = xy axioms, the five-identity axioms without an index
  // bound, and the structural test on the table.
  [[nodiscard]] VarietyReport in_W(UnarySemigroup const& s);

  // xy completely regular for all x, y; every Sc a completely regular
  // subsemigroup; every cS a completely regular subsemigroup. All three are
  // computed and must agree.
  [[nodiscard]] bool in_W_structural(CayleyTable const& t);

}  // namespace semivar

#endif  // SEMIVAR_VARIETIES_HPP_
