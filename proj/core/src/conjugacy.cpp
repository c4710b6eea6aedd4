#include "semivar/conjugacy.hpp"

#include <algorithm>  // for sort
#include <numeric>    // for iota

namespace semivar {

  bool BinaryRelation::is_reflexive() const {
    for (element_type a = 0; a < _n; ++a) {
      if (!(*this)(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool BinaryRelation::is_symmetric() const {
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = a + 1; b < _n; ++b) {
        if ((*this)(a, b) != (*this)(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool BinaryRelation::is_transitive() const {
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = 0; b < _n; ++b) {
        if (!(*this)(a, b)) {
          continue;
        }
        for (element_type c = 0; c < _n; ++c) {
          if ((*this)(b, c) && !(*this)(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  BinaryRelation primary_conjugacy(CayleyTable const& t,
                                   Multipliers        mult,
                                   bool               force_adjoin) {
    std::size_t const n = t.order();
    CayleyTable const u = mult == Multipliers::adjoined_identity
                              ? adjoin_identity(t, force_adjoin)
                              : t;
    std::size_t const m = u.order();
    BinaryRelation    rel(n);
    for (element_type x = 0; x < m; ++x) {
      for (element_type y = 0; y < m; ++y) {
        element_type const a = u(x, y);
        element_type const b = u(y, x);
        // only the adjoined identity lies outside S
        if (a < n && b < n) {
          rel.set(a, b);
        }
      }
    }
    if (mult == Multipliers::adjoined_identity
        && (!rel.is_reflexive() || !rel.is_symmetric())) {
      throw InternalError(
          "primary conjugacy over S^1 is not reflexive and symmetric");
    }
    return rel;
  }

  Partition transitive_closure(BinaryRelation const& r) {
    if (!r.is_symmetric()) {
      throw RelationNotSymmetric("transitive_closure needs a symmetric relation");
    }
    std::size_t const         n = r.order();
    std::vector<element_type> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](element_type x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        if (r(a, b)) {
          auto ra = find(a), rb = find(b);
          if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
          }
        }
      }
    }
    Partition                 blocks;
    std::vector<std::size_t>  block_of(n, n);
    for (element_type a = 0; a < n; ++a) {
      auto const root = find(a);
      if (block_of[root] == n) {
        block_of[root] = blocks.size();
        blocks.emplace_back();
      }
      blocks[block_of[root]].push_back(a);
    }
    return blocks;
  }

  ConjugacyReport check_transitivity(CayleyTable const& t, Multipliers mult) {
    ConjugacyReport report;
    report.relation   = primary_conjugacy(t, mult);
    auto const&     r = report.relation;
    std::size_t const n = t.order();
    for (element_type a = 0; a < n && !report.witness; ++a) {
      for (element_type b = 0; b < n && !report.witness; ++b) {
        if (!r(a, b)) {
          continue;
        }
        for (element_type c = 0; c < n; ++c) {
          if (r(b, c) && !r(a, c)) {
            report.witness = std::array<element_type, 3>{a, b, c};
            break;
          }
        }
      }
    }
    report.transitive = !report.witness.has_value();
    if (r.is_symmetric()) {
      report.classes = transitive_closure(r);
    }
    return report;
  }

  Partition conjugacy_classes(CayleyTable const& t) {
    return transitive_closure(primary_conjugacy(t));
  }

}  // namespace semivar
