#include "semivar/isomorphism.hpp"

#include <algorithm>  // for sort, fill
#include <cstdint>    // for uint64_t
#include <cstdio>     // for snprintf
#include <utility>    // for move

namespace semivar {

  namespace {

    constexpr element_type unset = static_cast<element_type>(-1);

    // Relabelling search. psi[i] is the old element given new label i and
    // phi is its inverse. The best serialisation starts as the identity
    // relabelling, so the row-zero prefix bound applies from the outset.
    class CanonicalSearch {
     public:
      CanonicalSearch(CayleyTable const& t, element_type const* unary)
          : _t(t),
            _unary(unary),
            _n(t.order()),
            _psi(_n, unset),
            _phi(_n, unset),
            _buffer(cells(), '\0') {
        if (_n > canonical_form_max_order) {
          throw CapExceeded("canonical form is limited to order "
                            + std::to_string(canonical_form_max_order));
        }
        _best = _buffer;
        for (element_type a = 0; a < _n; ++a) {
          for (element_type b = 0; b < _n; ++b) {
            _best[a * _n + b] = static_cast<char>(t(a, b));
          }
          if (_unary != nullptr) {
            _best[_n * _n + a] = static_cast<char>(_unary[a]);
          }
        }
        _best_psi.resize(_n);
        for (element_type a = 0; a < _n; ++a) {
          _best_psi[a] = a;
        }
      }

      // Minimises over all relabellings.
      void run_minimise() {
        _stop_at_smaller = false;
        dfs(0);
      }

      // Returns true iff some relabelling is strictly smaller than the
      // identity one.
      bool run_find_smaller() {
        _stop_at_smaller = true;
        dfs(0);
        return _found_smaller;
      }

      std::string const& best() const noexcept {
        return _best;
      }

      // phi = psi^-1 for the best relabelling.
      Bijection best_relabelling() const {
        Bijection phi(_n);
        for (element_type i = 0; i < _n; ++i) {
          phi[_best_psi[i]] = i;
        }
        return phi;
      }

     private:
      std::size_t cells() const noexcept {
        return _n * _n + (_unary != nullptr ? _n : 0);
      }

      // False if every completion of psi[0..k] serialises to something
      // larger than _best. Only row zero is determined by a prefix of psi.
      bool promising(element_type k) const {
        element_type const r = _psi[0];
        for (element_type j = 0; j <= k; ++j) {
          element_type const v = _phi[_t(r, _psi[j])];
          auto const best = static_cast<element_type>(
              static_cast<unsigned char>(_best[j]));
          if (v == unset) {
            // v will be at least k + 1
            return best > k;
          } else if (v < best) {
            return true;
          } else if (v > best) {
            return false;
          }
        }
        return true;
      }

      void leaf() {
        for (element_type i = 0; i < _n; ++i) {
          for (element_type j = 0; j < _n; ++j) {
            _buffer[i * _n + j]
                = static_cast<char>(_phi[_t(_psi[i], _psi[j])]);
          }
          if (_unary != nullptr) {
            _buffer[_n * _n + i] = static_cast<char>(_phi[_unary[_psi[i]]]);
          }
        }
        if (_buffer < _best) {
          _best     = _buffer;
          _best_psi = _psi;
          if (_stop_at_smaller) {
            _found_smaller = true;
          }
        }
      }

      void dfs(element_type k) {
        if (k == _n) {
          leaf();
          return;
        }
        for (element_type x = 0; x < _n && !_found_smaller; ++x) {
          if (_phi[x] != unset) {
            continue;
          }
          _psi[k] = x;
          _phi[x] = k;
          if (promising(k)) {
            dfs(k + 1);
          }
          _phi[x] = unset;
          _psi[k] = unset;
        }
      }

      CayleyTable const&        _t;
      element_type const*       _unary;
      std::size_t               _n;
      std::vector<element_type> _psi;
      std::vector<element_type> _phi;
      std::string               _buffer;
      std::string               _best;
      std::vector<element_type> _best_psi;
      bool                      _stop_at_smaller = false;
      bool                      _found_smaller   = false;
    };

    using Invariant = std::vector<std::uint64_t>;

    // Per-element data preserved by every isomorphism.
    std::vector<Invariant> invariants(CayleyTable const&  t,
                                      element_type const* unary) {
      std::size_t const      n = t.order();
      std::vector<Invariant> result(n);
      std::vector<std::uint64_t> occurrences(n, 0);
      for (auto x : t.entries()) {
        ++occurrences[x];
      }
      for (element_type a = 0; a < n; ++a) {
        std::uint64_t left_fix = 0, right_fix = 0;
        std::vector<bool> row_image(n, false), col_image(n, false);
        for (element_type x = 0; x < n; ++x) {
          left_fix += t(x, a) == a;
          right_fix += t(a, x) == a;
          row_image[t(a, x)] = true;
          col_image[t(x, a)] = true;
        }
        auto count = [](std::vector<bool> const& v) {
          return static_cast<std::uint64_t>(std::count(v.begin(), v.end(), true));
        };
        // size of the monogenic subsemigroup generated by a
        std::vector<bool> seen(n, false);
        std::uint64_t     cyclic = 0;
        for (element_type p = a; !seen[p]; p = t(p, a)) {
          seen[p] = true;
          ++cyclic;
        }
        Invariant& inv = result[a];
        inv            = {t(a, a) == a,
                          left_fix,
                          right_fix,
                          count(row_image),
                          count(col_image),
                          occurrences[a],
                          cyclic};
        if (unary != nullptr) {
          inv.push_back(unary[a] == a);
          inv.push_back(unary[unary[a]] == a);
        }
      }
      return result;
    }

    class IsomorphismSearch {
     public:
      IsomorphismSearch(CayleyTable const&  s,
                        element_type const* su,
                        CayleyTable const&  t,
                        element_type const* tu)
          : _s(s),
            _su(su),
            _t(t),
            _tu(tu),
            _n(s.order()),
            _phi(_n, unset),
            _used(_n, false),
            _sinv(invariants(s, su)),
            _tinv(invariants(t, tu)) {}

      std::optional<Bijection> run() {
        auto a = _sinv, b = _tinv;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (dfs(0)) {
          return _phi;
        }
        return std::nullopt;
      }

     private:
      bool consistent(element_type a) const {
        for (element_type x = 0; x <= a; ++x) {
          for (auto [p, q] : {std::pair{x, a}, std::pair{a, x}}) {
            element_type const image = _phi[_s(p, q)];
            if (image != unset && image != _t(_phi[p], _phi[q])) {
              return false;
            }
          }
          if (_su != nullptr) {
            element_type const image = _phi[_su[x]];
            if (image != unset && image != _tu[_phi[x]]) {
              return false;
            }
          }
        }
        return true;
      }

      bool dfs(element_type a) {
        if (a == _n) {
          return true;
        }
        for (element_type b = 0; b < _n; ++b) {
          if (_used[b] || _sinv[a] != _tinv[b]) {
            continue;
          }
          _phi[a]  = b;
          _used[b] = true;
          if (consistent(a) && dfs(a + 1)) {
            return true;
          }
          _used[b] = false;
          _phi[a]  = unset;
        }
        return false;
      }

      CayleyTable const&     _s;
      element_type const*    _su;
      CayleyTable const&     _t;
      element_type const*    _tu;
      std::size_t            _n;
      Bijection              _phi;
      std::vector<bool>      _used;
      std::vector<Invariant> _sinv;
      std::vector<Invariant> _tinv;
    };

  }  // namespace

  std::string CanonicalForm::to_text() const {
    std::string out;
    bool const  wide = std::any_of(_bytes.begin(), _bytes.end(), [](char c) {
      return static_cast<unsigned char>(c) > 9;
    });
    for (std::size_t i = 0; i < _bytes.size(); ++i) {
      if (wide && i != 0) {
        out += ' ';
      }
      out += std::to_string(static_cast<unsigned char>(_bytes[i]));
    }
    return out;
  }

  std::string CanonicalForm::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : _bytes) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  CayleyTable relabel(CayleyTable const& t, Bijection const& phi) {
    std::size_t const n = t.order();
    if (phi.size() != n) {
      throw InvalidArgument("relabelling has the wrong size");
    }
    std::vector<element_type> entries(n * n);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        entries[phi[a] * n + phi[b]] = phi[t(a, b)];
      }
    }
    return CayleyTable(n, std::move(entries));
  }

  UnarySemigroup relabel(UnarySemigroup const& s, Bijection const& phi) {
    std::vector<element_type> unary(s.order());
    for (element_type a = 0; a < s.order(); ++a) {
      unary[phi[a]] = phi[s.prime(a)];
    }
    return UnarySemigroup(relabel(s.base(), phi), std::move(unary));
  }

  bool is_isomorphism(CayleyTable const& s,
                      CayleyTable const& t,
                      Bijection const&   phi) {
    std::size_t const n = s.order();
    if (t.order() != n || phi.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto x : phi) {
      if (x >= n || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (phi[s(a, b)] != t(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_isomorphism(UnarySemigroup const& s,
                      UnarySemigroup const& t,
                      Bijection const&      phi) {
    if (!is_isomorphism(s.base(), t.base(), phi)) {
      return false;
    }
    for (element_type a = 0; a < s.order(); ++a) {
      if (phi[s.prime(a)] != t.prime(phi[a])) {
        return false;
      }
    }
    return true;
  }

  std::optional<Bijection> find_isomorphism(CayleyTable const& s,
                                            CayleyTable const& t) {
    if (s.order() != t.order()) {
      return std::nullopt;
    }
    return IsomorphismSearch(s, nullptr, t, nullptr).run();
  }

  std::optional<Bijection> find_isomorphism(UnarySemigroup const& s,
                                            UnarySemigroup const& t) {
    if (s.order() != t.order()) {
      return std::nullopt;
    }
    return IsomorphismSearch(
               s.base(), s.unary().data(), t.base(), t.unary().data())
        .run();
  }

  CanonicalForm canonical_form(CayleyTable const& t) {
    CanonicalSearch search(t, nullptr);
    search.run_minimise();
    return CanonicalForm(search.best());
  }

  CanonicalForm canonical_form(UnarySemigroup const& s) {
    CanonicalSearch search(s.base(), s.unary().data());
    search.run_minimise();
    return CanonicalForm(search.best());
  }

  Bijection canonical_relabelling(CayleyTable const& t) {
    CanonicalSearch search(t, nullptr);
    search.run_minimise();
    return search.best_relabelling();
  }

  Bijection canonical_relabelling(UnarySemigroup const& s) {
    CanonicalSearch search(s.base(), s.unary().data());
    search.run_minimise();
    return search.best_relabelling();
  }

  bool is_canonical(CayleyTable const& t) {
    return !CanonicalSearch(t, nullptr).run_find_smaller();
  }

  bool is_canonical(UnarySemigroup const& s) {
    return !CanonicalSearch(s.base(), s.unary().data()).run_find_smaller();
  }

  CanonicalForm serialise(CayleyTable const& t) {
    std::string bytes;
    bytes.reserve(t.entries().size());
    for (auto x : t.entries()) {
      bytes += static_cast<char>(x);
    }
    return CanonicalForm(std::move(bytes));
  }

  CanonicalForm serialise(UnarySemigroup const& s) {
    std::string bytes = serialise(s.base()).bytes();
    for (auto x : s.unary()) {
      bytes += static_cast<char>(x);
    }
    return CanonicalForm(std::move(bytes));
  }

}  // namespace semivar
