#include "semivar/search.hpp"

#include <algorithm>  // for sort, all_of
#include <atomic>     // for atomic
#include <chrono>     // for steady_clock
#include <exception>  // for exception_ptr
#include <map>        // for map
#include <mutex>      // for mutex
#include <sstream>    // for ostringstream
#include <thread>     // for thread

#include "semivar/epigroup.hpp"
#include "semivar/varieties.hpp"
#include "semivar/variants.hpp"

namespace semivar {

  namespace {

    std::size_t parse_index(std::string const& name, std::size_t from) {
      std::size_t value = 0;
      if (from >= name.size()) {
        throw InvalidArgument("unknown filter '" + name + "'");
      }
      for (std::size_t i = from; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') {
          throw InvalidArgument("unknown filter '" + name + "'");
        }
        value = 10 * value + static_cast<std::size_t>(name[i] - '0');
      }
      if (value == 0) {
        throw InvalidArgument("filter '" + name + "' needs a positive index");
      }
      return value;
    }

    struct LeafContext {
      SearchSpec const&               spec;
      std::vector<ModelFilter> const& filters;
    };

    bool accept(UnarySemigroup const& s, LeafContext const& ctx) {
      for (auto const& id : ctx.spec.identities) {
        if (!satisfies(s, id)) {
          return false;
        }
      }
      return std::all_of(ctx.filters.begin(),
                         ctx.filters.end(),
                         [&s](ModelFilter const& f) { return f(s); });
    }

    // Depth-first fill of one table. Undefined cells hold n.
    class TableSearch {
     public:
      TableSearch(std::size_t n, LeafContext const& ctx)
          : _n(n),
            _cells(n * n, static_cast<element_type>(n)),
            _ctx(ctx) {
        for (auto const& id : ctx.spec.identities) {
          if (!id.lhs.contains_prime() && !id.rhs.contains_prime()) {
            _prime_free.push_back(id);
          }
        }
      }

      // Tries to set the first k cells to the given values; false if that
      // prefix is already contradictory.
      bool seed(std::span<element_type const> values) {
        for (std::size_t pos = 0; pos < values.size(); ++pos) {
          if (!assign(pos, values[pos])) {
            return false;
          }
        }
        return true;
      }

      void run(std::size_t from) {
        dfs(from);
      }

      std::vector<UnarySemigroup>& models() noexcept {
        return _models;
      }

     private:
      element_type at(element_type a, element_type b) const {
        return _cells[a * _n + b];
      }

      bool defined(element_type v) const {
        return v < _n;
      }

      // Sets cell pos and checks every associativity triple that uses it
      // and is now fully defined. Leaves the cell set even on failure.
      bool assign(std::size_t pos, element_type v) {
        _cells[pos]           = v;
        auto const         a  = static_cast<element_type>(pos / _n);
        auto const         b  = static_cast<element_type>(pos % _n);
        element_type const n  = static_cast<element_type>(_n);
        for (element_type z = 0; z < n; ++z) {
          // (ab)z = a(bz)
          element_type const left = at(v, z), bz = at(b, z);
          if (defined(left) && defined(bz)) {
            element_type const right = at(a, bz);
            if (defined(right) && left != right) {
              return false;
            }
          }
          // (za)b = z(ab)
          element_type const za = at(z, a), zv = at(z, v);
          if (defined(za) && defined(zv)) {
            element_type const zab = at(za, b);
            if (defined(zab) && zab != zv) {
              return false;
            }
          }
        }
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = 0; y < n; ++y) {
            element_type const xy = at(x, y);
            // (xy)b with xy = a equals x(yb)
            if (xy == a) {
              element_type const yb = at(y, b);
              if (defined(yb)) {
                element_type const r = at(x, yb);
                if (defined(r) && r != v) {
                  return false;
                }
              }
            }
            // a(xy) with xy = b equals (ax)y
            if (xy == b) {
              element_type const ax = at(a, x);
              if (defined(ax)) {
                element_type const l = at(ax, y);
                if (defined(l) && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      bool prime_free_identities_hold() const {
        for (auto const& id : _prime_free) {
          auto const        vars = id.variables();
          std::size_t const k    = vars.size();
          std::vector<element_type> values(k, 0);
          Assignment                env;
          while (true) {
            for (std::size_t i = 0; i < k; ++i) {
              env[vars[i]] = values[i];
            }
            auto l = eval_partial(id.lhs, _n, _cells, env);
            if (l) {
              auto r = eval_partial(id.rhs, _n, _cells, env);
              if (r && *l != *r) {
                return false;
              }
            }
            std::size_t i = k;
            while (i > 0 && ++values[i - 1] == _n) {
              values[i - 1] = 0;
              --i;
            }
            if (i == 0) {
              break;
            }
          }
        }
        return true;
      }

      void dfs(std::size_t pos) {
        if (pos == _cells.size()) {
          leaf();
          return;
        }
        for (element_type v = 0; v < _n; ++v) {
          if (assign(pos, v)
              && ((pos + 1) % _n != 0 || prime_free_identities_hold())) {
            dfs(pos + 1);
          }
        }
        _cells[pos] = static_cast<element_type>(_n);
      }

      void leaf() {
        CayleyTable table(_n, _cells);
        if (validate(table)) {
          throw InternalError("search: a leaf table is not associative");
        }
        if (!is_canonical(table)) {
          return;
        }
        UnarySemigroup canonical = pseudoinverse_map(table);
        if (!_ctx.spec.free_unary) {
          if (accept(canonical, _ctx)) {
            _models.push_back(std::move(canonical));
          }
          return;
        }
        std::vector<element_type> unary(_n, 0);
        while (true) {
          UnarySemigroup s = unary == canonical.unary()
                                 ? canonical
                                 : UnarySemigroup(table, unary);
          if (is_canonical(s) && accept(s, _ctx)) {
            _models.push_back(std::move(s));
          }
          std::size_t i = _n;
          while (i > 0 && ++unary[i - 1] == _n) {
            unary[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            break;
          }
        }
      }

      std::size_t                 _n;
      std::vector<element_type>   _cells;
      LeafContext const&          _ctx;
      std::vector<Identity>       _prime_free;
      std::vector<UnarySemigroup> _models;
    };

    std::vector<UnarySemigroup> enumerate_order(std::size_t        n,
                                                LeafContext const& ctx) {
      // The first cells are fixed per task, so tasks partition the tree.
      std::size_t const seed_cells = std::min<std::size_t>(2, n * n);
      std::size_t       tasks      = 1;
      for (std::size_t i = 0; i < seed_cells; ++i) {
        tasks *= n;
      }
      std::vector<std::vector<UnarySemigroup>> found(tasks);
      std::atomic<std::size_t>                 next{0};
      std::exception_ptr                       error;
      std::mutex                               error_mtx;

      auto worker = [&]() {
        try {
          for (std::size_t task = next++; task < tasks; task = next++) {
            std::vector<element_type> values(seed_cells);
            std::size_t               rest = task;
            for (std::size_t i = seed_cells; i > 0; --i) {
              values[i - 1] = static_cast<element_type>(rest % n);
              rest /= n;
            }
            TableSearch search(n, ctx);
            if (search.seed(values)) {
              search.run(seed_cells);
            }
            found[task] = std::move(search.models());
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mtx);
          error = std::current_exception();
        }
      };

      unsigned const jobs = std::max(1u, ctx.spec.jobs);
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) {
          threads.emplace_back(worker);
        }
        for (auto& t : threads) {
          t.join();
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }

      std::vector<UnarySemigroup> out;
      for (auto& v : found) {
        for (auto& m : v) {
          out.push_back(std::move(m));
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return serialise(x) < serialise(y);
      });
      return out;
    }

    UnarySemigroup opposite(UnarySemigroup const& s, bool derived) {
      CayleyTable t = transpose(s.base());
      if (derived) {
        return pseudoinverse_map(t);
      }
      return UnarySemigroup(std::move(t), s.unary());
    }

    std::string echo(SearchSpec const& spec) {
      std::ostringstream os;
      os << "order=" << spec.order << (spec.all_orders ? " (all orders)" : "")
         << " identities=[";
      for (std::size_t i = 0; i < spec.identities.size(); ++i) {
        os << (i ? "; " : "") << spec.identities[i].to_string();
      }
      os << "] filters=[";
      for (std::size_t i = 0; i < spec.filters.size(); ++i) {
        os << (i ? "," : "") << spec.filters[i];
      }
      os << "]" << (spec.merge_anti_isomorphic ? " merge-anti" : "")
         << (spec.free_unary ? " free-unary" : "");
      return os.str();
    }

  }  // namespace

  ModelFilter make_filter(std::string const& name) {
    if (name.starts_with("not:")) {
      auto inner = make_filter(name.substr(4));
      return [inner](UnarySemigroup const& s) { return !inner(s); };
    }
    if (name == "canonical_unary") {
      return [](UnarySemigroup const& s) { return s.is_canonical(); };
    }
    if (name == "completely_regular" || name == "CR") {
      return [](UnarySemigroup const& s) {
        return is_completely_regular(s.base());
      };
    }
    if (name == "W") {
      return [](UnarySemigroup const& s) {
        return s.is_canonical() && in_W(s).holds;
      };
    }
    if (name == "W_structural") {
      return [](UnarySemigroup const& s) { return in_W_structural(s.base()); };
    }
    if (name == "variant_of_CR" || name == "variant_of_CR_plain") {
      VariantSearchOptions opts;
      opts.compare_unary = name == "variant_of_CR";
      return [opts](UnarySemigroup const& s) {
        return is_unary_variant_of_completely_regular(s, opts).has_value();
      };
    }
    if (name == "commutative") {
      return [](UnarySemigroup const& s) { return is_commutative(s.base()); };
    }
    if (name == "monoid") {
      return [](UnarySemigroup const& s) {
        return identity_element(s.base()).has_value();
      };
    }
    if (!name.empty() && name[0] == 'E') {
      std::size_t const n = parse_index(name, 1);
      return [n](UnarySemigroup const& s) { return in_E(s, n).holds; };
    }
    if (!name.empty() && name[0] == 'V') {
      std::size_t const n = parse_index(name, 1);
      return [n](UnarySemigroup const& s) { return in_V(s, n).holds; };
    }
    throw InvalidArgument("unknown filter '" + name + "'");
  }

  SearchResult enumerate(SearchSpec const& spec) {
    if (spec.order == 0) {
      throw InvalidArgument("search order must be positive");
    }
    if (spec.order > spec.max_order) {
      throw CapExceeded("search order " + std::to_string(spec.order)
                        + " exceeds the cap of "
                        + std::to_string(spec.max_order));
    }
    auto const start = std::chrono::steady_clock::now();

    std::vector<ModelFilter> filters;
    for (auto const& name : spec.filters) {
      filters.push_back(make_filter(name));
    }
    LeafContext const ctx{spec, filters};

    SearchResult result;
    result.spec_echo = echo(spec);
    for (std::size_t n = spec.all_orders ? 1 : spec.order; n <= spec.order;
         ++n) {
      auto models = enumerate_order(n, ctx);
      if (spec.merge_anti_isomorphic) {
        std::map<CanonicalForm, std::size_t> seen;
        std::vector<UnarySemigroup>          kept;
        for (auto& m : models) {
          auto const own  = serialise(m);
          auto const anti = canonical_form(opposite(m, !spec.free_unary));
          if (seen.try_emplace(std::min(own, anti), kept.size()).second) {
            kept.push_back(std::move(m));
          }
        }
        models = std::move(kept);
      }
      result.counts_by_order[n] = models.size();
      for (auto& m : models) {
        result.models.push_back(std::move(m));
      }
    }
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
  }

  std::size_t count_semigroups(std::size_t order, bool merge_anti) {
    SearchSpec spec;
    spec.order                 = order;
    spec.merge_anti_isomorphic = merge_anti;
    return enumerate(spec).models.size();
  }

  NonVariantReproduction
  reproduce_v1_nonvariants(std::span<UnarySemigroup const> printed,
                           std::size_t                     order,
                           unsigned                        jobs) {
    SearchSpec spec;
    spec.order      = order;
    spec.all_orders = true;
    spec.filters    = {"canonical_unary", "V1", "not:variant_of_CR"};
    spec.max_order  = 4;
    spec.jobs       = jobs;

    NonVariantReproduction out;
    out.result = enumerate(spec);
    auto const& models = out.result.models;

    std::ostringstream diff;
    for (auto [n, count] : out.result.counts_by_order) {
      std::size_t expected = 0;
      for (auto const& p : printed) {
        expected += p.order() == n;
      }
      if (count != expected) {
        diff << "order " << n << ": found " << count << " models, expected "
             << expected << "\n";
      }
    }

    std::vector<std::size_t> used(models.size(), 0);
    for (std::size_t i = 0; i < printed.size(); ++i) {
      auto const&  p = printed[i];
      PrintedMatch match{models.size(), {}, false, 0};
      for (std::size_t j = 0; j < models.size(); ++j) {
        auto iso = find_isomorphism(p.base(), models[j].base());
        if (!iso) {
          continue;
        }
        ++match.matching_models;
        if (match.model == models.size()) {
          match.model       = j;
          match.isomorphism = *iso;
        }
      }
      if (match.model == models.size()) {
        diff << "printed table " << i << " matches no model\n";
      } else {
        ++used[match.model];
        // another isomorphism may still carry the unary map across
        auto const& m      = models[match.model];
        bool        agrees = true;
        for (element_type x = 0; x < p.order(); ++x) {
          agrees = agrees
                   && m.prime(match.isomorphism[x])
                          == match.isomorphism[p.prime(x)];
        }
        if (!agrees) {
          if (auto iso = find_isomorphism(p, m)) {
            match.isomorphism = *iso;
            agrees            = true;
          }
        }
        match.unary_agrees = agrees;
        if (!agrees) {
          diff << "printed table " << i
               << ": unary map differs from the model's pseudoinverse\n";
        }
        if (match.matching_models != 1) {
          diff << "printed table " << i << " matches "
               << match.matching_models << " models\n";
        }
      }
      out.matches.push_back(std::move(match));
    }
    for (std::size_t j = 0; j < models.size(); ++j) {
      if (used[j] != 1) {
        diff << "model " << j << " is matched by " << used[j]
             << " printed tables\n";
      }
    }
    out.diff    = diff.str();
    out.perfect = out.diff.empty();
    return out;
  }

}  // namespace semivar
