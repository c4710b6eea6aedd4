#include "semivar/core.hpp"

#include <algorithm>  // for find, is_permutation
#include <array>      // for array
#include <sstream>    // for ostringstream
#include <utility>    // for move

namespace semivar {

  CayleyTable::CayleyTable(std::size_t n, std::vector<element_type> entries)
      : _order(n), _entries(std::move(entries)) {
    if (n == 0) {
      throw InvalidArgument("a Cayley table must have at least one element");
    }
    if (_entries.size() != n * n) {
      throw InvalidArgument("expected " + std::to_string(n * n)
                            + " entries, found "
                            + std::to_string(_entries.size()));
    }
  }

  CayleyTable
  CayleyTable::from_rows(std::vector<std::vector<element_type>> const& rows) {
    std::size_t const         n = rows.size();
    std::vector<element_type> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw InvalidArgument("row " + std::to_string(i) + " has "
                              + std::to_string(rows[i].size())
                              + " entries, expected " + std::to_string(n));
      }
      entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return CayleyTable(n, std::move(entries));
  }

  UnarySemigroup::UnarySemigroup(CayleyTable               base,
                                 std::vector<element_type> unary)
      : _base(std::move(base)), _unary(std::move(unary)) {
    if (_unary.size() != _base.order()) {
      throw InvalidArgument("unary map has " + std::to_string(_unary.size())
                            + " entries, expected "
                            + std::to_string(_base.order()));
    }
    for (auto x : _unary) {
      if (x >= _base.order()) {
        throw InvalidArgument("unary map image " + std::to_string(x)
                              + " out of range");
      }
    }
  }

  UnarySemigroup::UnarySemigroup(canonical_tag,
                                 CayleyTable               base,
                                 std::vector<element_type> unary)
      : UnarySemigroup(std::move(base), std::move(unary)) {
    _canonical = true;
  }

  std::optional<ValidationError> validate(CayleyTable const& t) {
    std::size_t const n = t.order();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (t(a, b) >= n) {
          return EntryOutOfRange{a, b, t(a, b)};
        }
      }
    }
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        element_type const ab = t(a, b);
        for (element_type c = 0; c < n; ++c) {
          if (t(ab, c) != t(a, t(b, c))) {
            return NotAssociative{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::string describe(ValidationError const& err) {
    std::ostringstream os;
    if (auto const* e = std::get_if<EntryOutOfRange>(&err)) {
      os << "entry (" << e->row << ", " << e->col << ") = " << e->value
         << " is out of range";
    } else {
      auto const& w = std::get<NotAssociative>(err);
      os << "not associative: (" << w.a << " * " << w.b << ") * " << w.c
         << " != " << w.a << " * (" << w.b << " * " << w.c << ")";
    }
    return os.str();
  }

  element_type power(CayleyTable const& t, element_type a, std::size_t k) {
    if (k == 0) {
      throw InvalidArgument("power: exponent must be positive");
    }
    element_type result = a;
    element_type base   = a;
    --k;
    while (k > 0) {
      if (k & 1) {
        result = t(result, base);
      }
      base = t(base, base);
      k >>= 1;
    }
    return result;
  }

  std::optional<element_type> identity_element(CayleyTable const& t) {
    std::size_t const n = t.order();
    for (element_type e = 0; e < n; ++e) {
      bool ok = true;
      for (element_type x = 0; x < n && ok; ++x) {
        ok = t(e, x) == x && t(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  CayleyTable adjoin_identity(CayleyTable const& t, bool force) {
    if (!force && identity_element(t)) {
      return t;
    }
    std::size_t const         n = t.order();
    std::vector<element_type> entries((n + 1) * (n + 1));
    for (element_type a = 0; a <= n; ++a) {
      for (element_type b = 0; b <= n; ++b) {
        element_type v;
        if (a == n) {
          v = b;
        } else if (b == n) {
          v = a;
        } else {
          v = t(a, b);
        }
        entries[a * (n + 1) + b] = v;
      }
    }
    return CayleyTable(n + 1, std::move(entries));
  }

  CayleyTable transpose(CayleyTable const& t) {
    std::size_t const         n = t.order();
    std::vector<element_type> entries(n * n);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        entries[a * n + b] = t(b, a);
      }
    }
    return CayleyTable(n, std::move(entries));
  }

  bool is_commutative(CayleyTable const& t) {
    std::size_t const n = t.order();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        if (t(a, b) != t(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  CayleyTable subsemigroup_table(CayleyTable const&            t,
                                 std::span<element_type const> members) {
    std::size_t const         m = members.size();
    std::vector<element_type> index(t.order(), static_cast<element_type>(m));
    for (std::size_t i = 0; i < m; ++i) {
      index[members[i]] = static_cast<element_type>(i);
    }
    std::vector<element_type> entries(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        element_type const p = index[t(members[i], members[j])];
        if (p == m) {
          throw InvalidArgument("subset is not closed under multiplication");
        }
        entries[i * m + j] = p;
      }
    }
    return CayleyTable(m, std::move(entries));
  }

  namespace tables {
    CayleyTable cyclic_group(std::size_t n) {
      std::vector<element_type> entries(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          entries[a * n + b] = static_cast<element_type>((a + b) % n);
        }
      }
      return CayleyTable(n, std::move(entries));
    }

    CayleyTable symmetric_group_3() {
      // Permutations of {0,1,2} in lexicographic order; the identity is 0.
      // Composition acts left to right: (f * g)(x) = g(f(x)).
      std::array<std::array<element_type, 3>, 6> const perms{{{0, 1, 2},
                                                             {0, 2, 1},
                                                             {1, 0, 2},
                                                             {1, 2, 0},
                                                             {2, 0, 1},
                                                             {2, 1, 0}}};
      std::vector<element_type> entries(36);
      for (element_type a = 0; a < 6; ++a) {
        for (element_type b = 0; b < 6; ++b) {
          std::array<element_type, 3> composed{};
          for (std::size_t x = 0; x < 3; ++x) {
            composed[x] = perms[b][perms[a][x]];
          }
          auto it = std::find(perms.begin(), perms.end(), composed);
          entries[a * 6 + b] = static_cast<element_type>(it - perms.begin());
        }
      }
      return CayleyTable(6, std::move(entries));
    }

    CayleyTable null_semigroup(std::size_t n) {
      return CayleyTable(n, std::vector<element_type>(n * n, 0));
    }

    CayleyTable left_zero(std::size_t n) {
      std::vector<element_type> entries(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          entries[a * n + b] = static_cast<element_type>(a);
        }
      }
      return CayleyTable(n, std::move(entries));
    }

    CayleyTable right_zero(std::size_t n) {
      return transpose(left_zero(n));
    }

    CayleyTable semilattice_2() {
      return CayleyTable(2, {0, 0, 0, 1});
    }
  }  // namespace tables

}  // namespace semivar
