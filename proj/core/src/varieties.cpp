#include "semivar/varieties.hpp"

#include <algorithm>  // for sort, unique

#include "semivar/epigroup.hpp"
#include "semivar/green.hpp"

namespace semivar {

  namespace {

    Term x() {
      return Term::variable('x');
    }

    Term y() {
      return Term::variable('y');
    }

    Term p(Term t) {
      return Term::prime(std::move(t));
    }

    // prefix * t * ... * t (k factors, left-nested), or just prefix when
    // k == 0 (prefix may be absent)
    std::optional<Term> times_power(std::optional<Term> prefix,
                                    Term const&         t,
                                    std::size_t         k) {
      for (std::size_t i = 0; i < k; ++i) {
        prefix = prefix ? *prefix * t : t;
      }
      return prefix;
    }

    void require_positive(std::size_t n) {
      if (n == 0) {
        throw InvalidArgument("variety index must be positive");
      }
    }

  }  // namespace

  std::string VarietyReport::to_string() const {
    std::string out = name + (holds ? ": holds" : ": fails");
    if (failing_identity) {
      out += " (" + failing_identity->to_string() + " at "
             + semivar::to_string(*failing_assignment) + ")";
    }
    return out;
  }

  namespace laws {
    Identity prime_absorbs() {
      return {p(x()) * x() * p(x()), p(x())};
    }

    Identity prime_commutes() {
      return {x() * p(x()), p(x()) * x()};
    }

    Identity triple_prime() {
      return {p(p(p(x()))), p(x())};
    }

    Identity double_prime() {
      return {x() * p(x()) * x(), p(p(x()))};
    }

    Identity prime_shift() {
      return {p(x() * y()) * x(), x() * p(y() * x())};
    }

    Identity prime_power(std::size_t q) {
      require_positive(q);
      return {p(Term::power(x(), q)), Term::power(p(x()), q)};
    }

    Identity bounded_index(std::size_t n) {
      require_positive(n);
      return {Term::power(x(), n + 1) * p(x()), Term::power(x(), n)};
    }

    Identity bounded_index_alt(std::size_t n) {
      require_positive(n);
      auto lhs = times_power(std::nullopt, x(), n - 1);
      return {lhs ? *lhs * p(p(x())) : p(p(x())), Term::power(x(), n)};
    }

    Identity right_v(std::size_t n) {
      require_positive(n);
      Term lhs = *times_power(x(), y(), n - 1) * p(p(y()));
      return {lhs, *times_power(x(), y(), n)};
    }

    Identity left_v(std::size_t n) {
      require_positive(n);
      Term lhs = *times_power(p(p(x())), x(), n - 1) * y();
      return {lhs, Term::power(x(), n) * y()};
    }

    Identity products_regular() {
      return {p(p(x() * y())), x() * y()};
    }
  }  // namespace laws

  VarietyReport check_identities(std::string                  name,
                                 UnarySemigroup const&        s,
                                 std::vector<Identity> const& ids) {
    VarietyReport report;
    report.name = std::move(name);
    for (auto const& id : ids) {
      if (auto env = find_counterexample(s, id)) {
        report.holds              = false;
        report.failing_identity   = id;
        report.failing_assignment = std::move(env);
        break;
      }
    }
    return report;
  }

  VarietyReport in_E(UnarySemigroup const& s, std::size_t n) {
    require_positive(n);
    std::string const name = "E" + std::to_string(n);
    auto              main = check_identities(
        name,
        s,
        {laws::prime_absorbs(), laws::prime_commutes(), laws::bounded_index(n)});
    auto const alt = check_identities(name,
                                      s,
                                      {laws::prime_absorbs(),
                                       laws::prime_commutes(),
                                       laws::bounded_index_alt(n)});
    if (main.holds != alt.holds) {
      throw InternalError("in_E: the two axiomatisations of " + name
                          + " disagree");
    }
    return main;
  }

  VarietyReport in_V(UnarySemigroup const& s, std::size_t n) {
    require_positive(n);
    auto report = check_identities("V" + std::to_string(n),
                                   s,
                                   {laws::prime_absorbs(),
                                    laws::prime_commutes(),
                                    laws::right_v(n),
                                    laws::left_v(n)});
    bool const below = in_E(s, n).holds;
    bool const above = in_E(s, n + 1).holds;
    if ((below && !report.holds) || (report.holds && !above)) {
      throw InternalError("in_V: E" + std::to_string(n) + " <= V"
                          + std::to_string(n) + " <= E"
                          + std::to_string(n + 1) + " violated");
    }
    return report;
  }

  VarietyReport in_W(UnarySemigroup const& s) {
    if (!s.is_canonical()) {
      throw InvalidArgument(
          "in_W needs the pseudoinverse as unary operation (structural test)");
    }
    auto report = check_identities("W",
                                   s,
                                   {laws::prime_absorbs(),
                                    laws::prime_commutes(),
                                    laws::bounded_index(2),
                                    laws::products_regular()});
    auto const short_axioms = check_identities("W",
                                               s,
                                               {laws::prime_absorbs(),
                                                laws::prime_commutes(),
                                                laws::double_prime(),
                                                laws::prime_power(2),
                                                laws::products_regular()});
    bool const structural = in_W_structural(s.base());
    if (report.holds != short_axioms.holds || report.holds != structural) {
      throw InternalError("in_W: characterisations of W disagree");
    }
    return report;
  }

  namespace {

    bool principal_ideal_completely_regular(CayleyTable const& t,
                                            element_type       c,
                                            bool               left) {
      std::vector<element_type> members;
      for (element_type s = 0; s < t.order(); ++s) {
        members.push_back(left ? t(s, c) : t(c, s));
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      return is_completely_regular(subsemigroup_table(t, members));
    }

  }  // namespace

  bool in_W_structural(CayleyTable const& t) {
    std::size_t const n     = t.order();
    auto const        data  = analyse_epigroup(t);
    bool              pairs = true;
    for (element_type a = 0; a < n && pairs; ++a) {
      for (element_type b = 0; b < n && pairs; ++b) {
        pairs = data.index[t(a, b)] == 1;
      }
    }
    bool lefts = true, rights = true;
    for (element_type c = 0; c < n; ++c) {
      lefts  = lefts && principal_ideal_completely_regular(t, c, true);
      rights = rights && principal_ideal_completely_regular(t, c, false);
    }
    if (pairs != lefts || pairs != rights) {
      throw InternalError("in_W_structural: ideal criteria disagree");
    }
    return pairs;
  }

}  // namespace semivar
