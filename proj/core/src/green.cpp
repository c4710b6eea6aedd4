#include "semivar/green.hpp"

#include <algorithm>  // for count, find
#include <map>        // for map
#include <sstream>    // for ostringstream

namespace semivar {

  namespace {

    using Matrix = std::vector<std::vector<bool>>;

    enum class Side { right, left, both };

    // reach[a][b] iff b is reachable from a (in zero or more steps) in the
    // Cayley graph with edges a -> as, a -> sa, or both.
    Matrix reachability(CayleyTable const& t, Side side) {
      std::size_t const         n = t.order();
      Matrix                    reach(n, std::vector<bool>(n, false));
      std::vector<element_type> stack;
      for (element_type a = 0; a < n; ++a) {
        auto& seen = reach[a];
        seen[a]    = true;
        stack.assign(1, a);
        auto visit = [&](element_type y) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        };
        while (!stack.empty()) {
          element_type const x = stack.back();
          stack.pop_back();
          for (element_type s = 0; s < n; ++s) {
            if (side != Side::left) {
              visit(t(x, s));
            }
            if (side != Side::right) {
              visit(t(s, x));
            }
          }
        }
      }
      return reach;
    }

    Matrix mutual(Matrix const& reach) {
      std::size_t const n = reach.size();
      Matrix            rel(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          rel[a][b] = reach[a][b] && reach[b][a];
        }
      }
      return rel;
    }

    Matrix compose(Matrix const& first, Matrix const& second) {
      std::size_t const n = first.size();
      Matrix            rel(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!first[a][c]) {
            continue;
          }
          for (std::size_t b = 0; b < n; ++b) {
            if (second[c][b]) {
              rel[a][b] = true;
            }
          }
        }
      }
      return rel;
    }

    // Numbers the classes of an equivalence by smallest member.
    std::vector<std::size_t> class_ids(Matrix const& rel) {
      std::size_t const        n = rel.size();
      std::size_t const        none = static_cast<std::size_t>(-1);
      std::vector<std::size_t> ids(n, none);
      std::size_t              next = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (ids[a] != none) {
          continue;
        }
        for (std::size_t b = a; b < n; ++b) {
          if (rel[a][b]) {
            ids[b] = next;
          }
        }
        ++next;
      }
      return ids;
    }

  }  // namespace

  std::size_t GreenStructure::number_of_h_classes() const {
    return h_class.empty()
               ? 0
               : *std::max_element(h_class.begin(), h_class.end()) + 1;
  }

  std::vector<element_type>
  GreenStructure::h_class_members(std::size_t id) const {
    std::vector<element_type> out;
    for (element_type a = 0; a < h_class.size(); ++a) {
      if (h_class[a] == id) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool GreenStructure::is_group_h_class_id(std::size_t id) const {
    return std::binary_search(
        group_h_classes.begin(), group_h_classes.end(), id);
  }

  std::vector<element_type> idempotents(CayleyTable const& t) {
    std::vector<element_type> out;
    for (element_type a = 0; a < t.order(); ++a) {
      if (t(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  GreenStructure green(CayleyTable const& t) {
    std::size_t const n = t.order();
    Matrix const      r = mutual(reachability(t, Side::right));
    Matrix const      l = mutual(reachability(t, Side::left));
    Matrix const      j = mutual(reachability(t, Side::both));

    Matrix h(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        h[a][b] = r[a][b] && l[a][b];
      }
    }
    Matrix const d = compose(r, l);
    if (d != compose(l, r)) {
      throw InternalError("green: R o L differs from L o R");
    }
    if (d != j) {
      throw InternalError("green: D differs from J in a finite semigroup");
    }

    GreenStructure g;
    g.r_class     = class_ids(r);
    g.l_class     = class_ids(l);
    g.h_class     = class_ids(h);
    g.d_class     = class_ids(d);
    g.j_class     = class_ids(j);
    g.idempotents = idempotents(t);

    std::map<std::size_t, std::size_t> idempotents_per_h;
    for (auto e : g.idempotents) {
      ++idempotents_per_h[g.h_class[e]];
    }
    for (auto [id, count] : idempotents_per_h) {
      if (count != 1) {
        throw InternalError("green: H-class " + std::to_string(id)
                            + " contains " + std::to_string(count)
                            + " idempotents");
      }
      g.group_h_classes.push_back(id);
    }
    return g;
  }

  bool is_group_h_class(GreenStructure const& g,
                        CayleyTable const&    t,
                        element_type          a) {
    bool const has_idempotent = g.is_group_h_class_id(g.h_class[a]);
    bool const square_in_h    = g.h_class[t(a, a)] == g.h_class[a];
    if (has_idempotent != square_in_h) {
      throw InternalError("green: group H-class criteria disagree at "
                          + std::to_string(a));
    }
    return has_idempotent;
  }

  std::string eggbox(GreenStructure const& g) {
    std::ostringstream os;
    std::size_t const  n     = g.h_class.size();
    std::size_t        max_d = 0;
    for (auto x : g.d_class) {
      max_d = std::max(max_d, x + 1);
    }
    for (std::size_t d = 0; d < max_d; ++d) {
      std::vector<std::size_t> rs, ls;
      for (element_type a = 0; a < n; ++a) {
        if (g.d_class[a] != d) {
          continue;
        }
        if (std::find(rs.begin(), rs.end(), g.r_class[a]) == rs.end()) {
          rs.push_back(g.r_class[a]);
        }
        if (std::find(ls.begin(), ls.end(), g.l_class[a]) == ls.end()) {
          ls.push_back(g.l_class[a]);
        }
      }
      os << "D-class " << d << ":\n";
      for (auto rc : rs) {
        os << " ";
        for (auto lc : ls) {
          std::string cell;
          bool        group = false;
          for (element_type a = 0; a < n; ++a) {
            if (g.r_class[a] == rc && g.l_class[a] == lc) {
              cell += (cell.empty() ? "" : ",") + std::to_string(a);
              group = g.is_group_h_class_id(g.h_class[a]);
            }
          }
          os << " | " << (group ? "*" : " ") << "{" << cell << "}";
        }
        os << " |\n";
      }
    }
    return os.str();
  }

}  // namespace semivar
