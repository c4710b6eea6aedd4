#include "semivar/epigroup.hpp"

#include <algorithm>  // for all_of
#include <array>      // for array
#include <utility>    // for move

namespace semivar {

  EpigroupData analyse_epigroup(CayleyTable const& t, GreenStructure const& g) {
    std::size_t const n = t.order();
    EpigroupData      data;
    data.index.resize(n);
    data.pseudoinverse.resize(n);
    data.unit_of.resize(n);

    for (element_type a = 0; a < n; ++a) {
      // a^k lands in a group H-class for some k <= n, since the powers of a
      // repeat within n steps and the cycle is a group.
      std::size_t  k = 1;
      element_type p = a;
      while (!g.is_group_h_class_id(g.h_class[p])) {
        if (k == n) {
          throw InternalError("epigroup: no power of " + std::to_string(a)
                              + " lies in a group H-class");
        }
        p = t(p, a);
        ++k;
      }
      data.index[a] = k;

      std::size_t const hp = g.h_class[p];
      element_type      e  = static_cast<element_type>(n);
      for (auto x : g.idempotents) {
        if (g.h_class[x] == hp) {
          e = x;
        }
      }
      data.unit_of[a]       = e;
      element_type const ae = t(a, e);
      if (g.h_class[ae] != hp) {
        throw InternalError("epigroup: ae is not in H_{a^n} for a = "
                            + std::to_string(a));
      }
      bool found = false;
      for (element_type h = 0; h < n && !found; ++h) {
        if (g.h_class[h] == hp && t(ae, h) == e && t(h, ae) == e) {
          data.pseudoinverse[a] = h;
          found                 = true;
        }
      }
      if (!found) {
        throw InternalError("epigroup: ae has no inverse in its H-class for a = "
                            + std::to_string(a));
      }
    }
    return data;
  }

  EpigroupData analyse_epigroup(CayleyTable const& t) {
    return analyse_epigroup(t, green(t));
  }

  std::size_t element_index(CayleyTable const& t, element_type a) {
    return analyse_epigroup(t).index[a];
  }

  element_type pseudoinverse(CayleyTable const& t, element_type a) {
    return analyse_epigroup(t).pseudoinverse[a];
  }

  UnarySemigroup pseudoinverse_map(CayleyTable const& t) {
    return UnarySemigroup(UnarySemigroup::canonical_tag{},
                          t,
                          analyse_epigroup(t).pseudoinverse);
  }

  UnarySemigroup attach_unary(CayleyTable const&        t,
                              std::vector<element_type> unary) {
    if (auto err = validate(t)) {
      throw InvalidArgument("not a semigroup: " + describe(*err));
    }
    UnarySemigroup canonical = pseudoinverse_map(t);
    if (canonical.unary() == unary) {
      return canonical;
    }
    return UnarySemigroup(t, std::move(unary));
  }

  bool is_completely_regular(CayleyTable const& t) {
    auto const data = analyse_epigroup(t);
    return std::all_of(data.index.begin(),
                       data.index.end(),
                       [](std::size_t k) { return k == 1; });
  }

  bool EpigroupIdentityReport::all_hold() const {
    return std::all_of(outcomes.begin(),
                       outcomes.end(),
                       [](IdentityOutcome const& o) { return o.holds; });
  }

  namespace {

    template <typename Lhs, typename Rhs>
    IdentityOutcome check_unary_law(std::string          name,
                                    UnarySemigroup const& s,
                                    Lhs&&                lhs,
                                    Rhs&&                rhs) {
      IdentityOutcome out;
      out.name = std::move(name);
      for (element_type x = 0; x < s.order(); ++x) {
        if (lhs(x) != rhs(x)) {
          out.holds          = false;
          out.counterexample = std::vector<element_type>{x};
          break;
        }
      }
      return out;
    }

  }  // namespace

  EpigroupIdentityReport
  verify_epigroup_identities(UnarySemigroup const&        s,
                             std::span<std::size_t const> primes) {
    auto const& t = s.base();
    auto        p = [&s](element_type x) { return s.prime(x); };
    auto        m = [&s](element_type x, element_type y) { return s(x, y); };

    EpigroupIdentityReport report;
    auto&                  out = report.outcomes;
    out.push_back(check_unary_law(
        "x'xx' = x'", s, [&](auto x) { return m(m(p(x), x), p(x)); }, p));
    out.push_back(check_unary_law(
        "xx' = x'x",
        s,
        [&](auto x) { return m(x, p(x)); },
        [&](auto x) { return m(p(x), x); }));
    out.push_back(check_unary_law(
        "x''' = x'", s, [&](auto x) { return p(p(p(x))); }, p));
    out.push_back(check_unary_law(
        "xx'x = x''",
        s,
        [&](auto x) { return m(m(x, p(x)), x); },
        [&](auto x) { return p(p(x)); }));

    IdentityOutcome two_var;
    two_var.name = "(xy)'x = x(yx)'";
    for (element_type x = 0; x < s.order() && two_var.holds; ++x) {
      for (element_type y = 0; y < s.order(); ++y) {
        if (m(p(m(x, y)), x) != m(x, p(m(y, x)))) {
          two_var.holds          = false;
          two_var.counterexample = std::vector<element_type>{x, y};
          break;
        }
      }
    }
    out.push_back(std::move(two_var));

    for (auto q : primes) {
      out.push_back(check_unary_law(
          "(x^" + std::to_string(q) + ")' = (x')^" + std::to_string(q),
          s,
          [&](auto x) { return p(power(t, x, q)); },
          [&](auto x) { return power(t, p(x), q); }));
    }
    return report;
  }

  EpigroupIdentityReport
  verify_epigroup_identities(UnarySemigroup const& s) {
    static constexpr std::array<std::size_t, 2> default_primes{2, 3};
    return verify_epigroup_identities(s, default_primes);
  }

}  // namespace semivar
