#include "semivar/variants.hpp"

#include <algorithm>  // for sort, unique, lower_bound
#include <map>        // for map
#include <mutex>      // for mutex, lock_guard

#include "semivar/epigroup.hpp"
#include "semivar/search.hpp"

namespace semivar {

  CayleyTable variant(CayleyTable const& t, element_type c) {
    std::size_t const n = t.order();
    if (c >= n) {
      throw InvalidArgument("sandwich element out of range");
    }
    std::vector<element_type> entries(n * n);
    for (element_type a = 0; a < n; ++a) {
      element_type const ac = t(a, c);
      for (element_type b = 0; b < n; ++b) {
        entries[a * n + b] = t(ac, b);
      }
    }
    return CayleyTable(n, std::move(entries));
  }

  std::vector<element_type> star(UnarySemigroup const& s, element_type c) {
    if (c >= s.order()) {
      throw InvalidArgument("sandwich element out of range");
    }
    std::vector<element_type> out(s.order());
    for (element_type x = 0; x < s.order(); ++x) {
      out[x] = s(s(s.prime(s(x, c)), x), s.prime(s(c, x)));
    }
    return out;
  }

  UnarySemigroup unary_variant(UnarySemigroup const& s, element_type c) {
    return attach_unary(variant(s.base(), c), star(s, c));
  }

  TransportReport check_pseudoinverse_transport(UnarySemigroup const& s,
                                                element_type          c) {
    TransportReport report;
    auto const      st = star(s, c);
    for (element_type x = 0; x < s.order(); ++x) {
      if (report.right_transport && s.prime(s(x, c)) != s(st[x], c)) {
        report.right_transport = false;
        report.right_failure   = x;
      }
      element_type const cx = s(c, x);
      if (report.double_star && s(c, st[st[x]]) != s.prime(s.prime(cx))) {
        report.double_star         = false;
        report.double_star_failure = x;
      }
    }
    return report;
  }

  std::vector<VariantIndexCheck> check_variant_indices(UnarySemigroup const& s,
                                                       element_type c) {
    auto const base = analyse_epigroup(s.base());
    auto const var  = analyse_epigroup(variant(s.base(), c));
    std::vector<VariantIndexCheck> out;
    for (element_type a = 0; a < s.order(); ++a) {
      std::size_t const n = base.index[s(c, a)];
      std::size_t const k = var.index[a];
      out.push_back({n, k, k == n || k == n + 1});
    }
    return out;
  }

  VariantIndexCheck check_variant_index(UnarySemigroup const& s,
                                        element_type          c,
                                        element_type          a) {
    return check_variant_indices(s, c).at(a);
  }

  RhoReport check_rho_homomorphism(CayleyTable const& t, element_type c) {
    std::size_t const n = t.order();
    RhoReport         report;
    auto const        v = variant(t, c);
    for (element_type x = 0; x < n && report.homomorphism; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (t(v(x, y), c) != t(t(x, c), t(y, c))) {
          report.homomorphism         = false;
          report.homomorphism_failure = std::pair{x, y};
          break;
        }
      }
    }

    std::vector<element_type> members;
    for (element_type x = 0; x < n; ++x) {
      members.push_back(t(x, c));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto const sub     = pseudoinverse_map(subsemigroup_table(t, members));
    auto const s       = pseudoinverse_map(t);
    auto const st      = star(s, c);
    auto       sub_pos = [&members](element_type x) {
      return static_cast<element_type>(
          std::lower_bound(members.begin(), members.end(), x)
          - members.begin());
    };
    for (element_type x = 0; x < n; ++x) {
      element_type const xc     = t(x, c);
      element_type const in_sub = members[sub.prime(sub_pos(xc))];
      if (t(st[x], c) != s.prime(xc) || in_sub != s.prime(xc)) {
        report.transports_star   = false;
        report.transport_failure = x;
        break;
      }
    }
    return report;
  }

  namespace {

    struct VariantCatalogue {
      std::vector<CayleyTable> semigroups;
      // canonical form of a (unary) variant -> (semigroup index, sandwich),
      // first occurrence in canonical order
      std::map<CanonicalForm, std::pair<std::size_t, element_type>> variants;
    };

    VariantCatalogue const& catalogue(std::size_t order, bool unary) {
      static std::mutex                                            mtx;
      static std::map<std::pair<std::size_t, bool>, VariantCatalogue> cache;
      std::lock_guard<std::mutex> lock(mtx);
      auto [it, inserted] = cache.try_emplace({order, unary});
      if (!inserted) {
        return it->second;
      }
      SearchSpec spec;
      spec.order     = order;
      spec.filters   = {"completely_regular"};
      spec.max_order = order;
      auto& cat      = it->second;
      for (auto const& m : enumerate(spec).models) {
        cat.semigroups.push_back(m.base());
      }
      for (std::size_t i = 0; i < cat.semigroups.size(); ++i) {
        auto const s = pseudoinverse_map(cat.semigroups[i]);
        for (element_type c = 0; c < order; ++c) {
          auto const key = unary ? canonical_form(unary_variant(s, c))
                                 : canonical_form(variant(s.base(), c));
          cat.variants.try_emplace(key, i, c);
        }
      }
      return cat;
    }

  }  // namespace

  std::optional<VariantWitness>
  is_unary_variant_of_completely_regular(UnarySemigroup const&       s,
                                         VariantSearchOptions const& options) {
    std::size_t const n = s.order();
    if (n > options.max_order) {
      throw CapExceeded("variant search is limited to order "
                        + std::to_string(options.max_order));
    }
    auto const& cat = catalogue(n, options.compare_unary);
    auto const  key = options.compare_unary ? canonical_form(s)
                                            : canonical_form(s.base());
    auto        it  = cat.variants.find(key);
    if (it == cat.variants.end()) {
      return std::nullopt;
    }
    auto const [i, c] = it->second;
    auto const& t     = cat.semigroups[i];
    std::optional<Bijection> iso;
    if (options.compare_unary) {
      iso = find_isomorphism(s, unary_variant(pseudoinverse_map(t), c));
    } else {
      iso = find_isomorphism(s.base(), variant(t, c));
    }
    if (!iso) {
      throw InternalError("variant search: canonical forms agree but no "
                          "isomorphism was found");
    }
    return VariantWitness{t, c, std::move(*iso)};
  }

}  // namespace semivar
