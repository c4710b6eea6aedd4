#include "semivar/acceptance.hpp"

#include <algorithm>  // for count_if, sort
#include <chrono>     // for steady_clock
#include <exception>  // for exception
#include <functional> // for function
#include <map>        // for map
#include <numeric>    // for iota
#include <optional>   // for optional
#include <random>     // for mt19937, shuffle
#include <set>        // for set
#include <sstream>    // for ostringstream

#include "semivar/conjugacy.hpp"
#include "semivar/core.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/io.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/search.hpp"
#include "semivar/term.hpp"
#include "semivar/variants.hpp"
#include "semivar/varieties.hpp"

#ifndef SEMIVAR_DEFAULT_CORPUS_DIR
#define SEMIVAR_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace semivar {

  std::filesystem::path AcceptanceOptions::default_corpus_dir() {
    return SEMIVAR_DEFAULT_CORPUS_DIR;
  }

  namespace {

    constexpr std::size_t corpus_order = 4;

    struct Outcome {
      bool               passed = true;
      std::ostringstream detail;

      std::string        first_failure;

      // Records the first failure only; later ones are counted by callers.
      void fail(std::string const& what) {
        if (passed) {
          first_failure = what;
        }
        passed = false;
      }

      std::string text() const {
        std::string out = detail.str();
        while (!out.empty() && (out.back() == ' ' || out.back() == ';')) {
          out.pop_back();
        }
        if (!passed) {
          out += (out.empty() ? "" : "; ") + ("first failure: " + first_failure);
        }
        return out;
      }
    };

    class Context {
     public:
      explicit Context(AcceptanceOptions const& opts) : _opts(opts) {}

      // Every semigroup of order 1..4 up to isomorphism, with pseudoinverse.
      std::vector<UnarySemigroup> const& corpus() {
        if (!_corpus) {
          SearchSpec spec;
          spec.order      = corpus_order;
          spec.all_orders = true;
          spec.jobs       = _opts.jobs;
          _corpus         = enumerate(spec).models;
        }
        return *_corpus;
      }

      UnarySemigroup load(std::string const& name) const {
        return to_unary_semigroup(read_table_file(_opts.corpus_dir / name));
      }

      unsigned jobs() const {
        return _opts.jobs;
      }

     private:
      AcceptanceOptions const&                   _opts;
      std::optional<std::vector<UnarySemigroup>> _corpus;
    };

    std::string vec_str(std::vector<element_type> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
      }
      return out + "]";
    }

    std::string describe_model(UnarySemigroup const& s) {
      return "order-" + std::to_string(s.order()) + " model "
             + serialise(s).to_text();
    }

    // x ~ y over S^1 written out directly: either x = y (one multiplier is
    // the identity) or x = ab and y = ba with a, b in S.
    bool conjugate_direct(CayleyTable const& t, element_type x, element_type y) {
      if (x == y) {
        return true;
      }
      for (element_type a = 0; a < t.order(); ++a) {
        for (element_type b = 0; b < t.order(); ++b) {
          if (t(a, b) == x && t(b, a) == y) {
            return true;
          }
        }
      }
      return false;
    }

    bool is_group(CayleyTable const& t) {
      auto const e = identity_element(t);
      if (!e) {
        return false;
      }
      for (element_type a = 0; a < t.order(); ++a) {
        bool inverse = false;
        for (element_type b = 0; b < t.order() && !inverse; ++b) {
          inverse = t(a, b) == *e && t(b, a) == *e;
        }
        if (!inverse) {
          return false;
        }
      }
      return true;
    }

    element_type group_inverse(CayleyTable const& t, element_type a) {
      auto const e = *identity_element(t);
      for (element_type b = 0; b < t.order(); ++b) {
        if (t(a, b) == e) {
          return b;
        }
      }
      throw InternalError("group_inverse: no inverse");
    }

    ////////////////////////////////////////////////////////////////////////
    // Criteria
    ////////////////////////////////////////////////////////////////////////

    void v1_nonvariants(Context& ctx, Outcome& out) {
      std::vector<UnarySemigroup> printed;
      for (int i = 1; i <= 3; ++i) {
        printed.push_back(
            ctx.load("v1_nonvariant_" + std::to_string(i) + ".sgp"));
        if (printed.back().unary() != std::vector<element_type>{1, 1, 2, 3}) {
          out.fail("printed table " + std::to_string(i)
                   + " does not carry unary [1,1,2,3]");
        }
        if (!printed.back().is_canonical()) {
          out.fail("printed table " + std::to_string(i)
                   + ": unary map is not the pseudoinverse");
        }
      }
      auto const rep = reproduce_v1_nonvariants(printed, corpus_order, ctx.jobs());
      auto const& counts = rep.result.counts_by_order;
      for (std::size_t n = 1; n <= corpus_order; ++n) {
        std::size_t const found    = counts.count(n) ? counts.at(n) : 0;
        std::size_t const expected = n == corpus_order ? 3 : 0;
        out.detail << "order " << n << ": " << found << " models; ";
        if (found != expected) {
          out.fail("order " + std::to_string(n) + " has " + std::to_string(found)
                   + " models, expected " + std::to_string(expected));
        }
      }
      std::size_t const regular = std::count_if(
          rep.result.models.begin(),
          rep.result.models.end(),
          [](UnarySemigroup const& m) { return is_completely_regular(m.base()); });
      out.detail << regular << " of " << rep.result.models.size()
                 << " models are completely regular; ";
      if (!rep.perfect) {
        out.fail("printed tables do not match the models one-to-one");
      }
      std::size_t matched = 0;
      for (auto const& m : rep.matches) {
        matched += m.matching_models == 1 && m.unary_agrees;
      }
      out.detail << matched << " of 3 printed tables matched with agreeing "
                 << "pseudoinverse";
    }

    void w_not_v1_witness(Context& ctx, Outcome& out) {
      auto const file = ctx.load("w_not_v1.sgp");
      auto const s    = pseudoinverse_map(file.base());
      std::vector<element_type> const expected{2, 1, 2, 3};
      out.detail << "pseudoinverse " << vec_str(s.unary()) << "; ";
      if (s.unary() != expected) {
        out.fail("pseudoinverse is " + vec_str(s.unary()) + ", expected "
                 + vec_str(expected));
      }
      if (file.unary() != s.unary()) {
        out.fail("stored unary line disagrees with the pseudoinverse");
      }
      // in_W throws if its three characterisations disagree.
      auto const w = in_W(s);
      out.detail << w.to_string() << "; ";
      if (!w.holds || !in_W_structural(s.base())) {
        out.fail("table is not in W");
      }
      auto const v = in_V(s, 1);
      out.detail << v.to_string();
      if (v.holds) {
        out.fail("table is in V1");
        return;
      }
      Assignment const env{{'x', 0}, {'y', 1}};
      if (v.failing_assignment != env) {
        out.fail("first counterexample is " + to_string(*v.failing_assignment));
      }
      if (!(v.failing_identity == laws::left_v(1))) {
        out.fail("first failing law is " + v.failing_identity->to_string());
      }
      element_type const lhs = s(s.prime(s.prime(0)), 1);
      element_type const rhs = s(0, 1);
      out.detail << "; 0''*1 = " << lhs << ", 0*1 = " << rhs;
      if (lhs != 2 || rhs != 3) {
        out.fail("0''*1 = " + std::to_string(lhs) + " and 0*1 = "
                 + std::to_string(rhs) + ", expected 2 and 3");
      }
    }

    void epigroup_identities(Context& ctx, Outcome& out) {
      auto const&  corpus   = ctx.corpus();
      std::size_t  failures = 0;
      for (auto const& s : corpus) {
        for (auto const& o : verify_epigroup_identities(s).outcomes) {
          if (!o.holds) {
            ++failures;
            out.fail(o.name + " in " + describe_model(s) + " at "
                     + vec_str(*o.counterexample));
          }
        }
      }
      out.detail << corpus.size() << " semigroups (expected 218), " << failures
                 << " identity failures";
      if (corpus.size() != 218) {
        out.fail("corpus size " + std::to_string(corpus.size()));
      }
    }

    void transport(Context& ctx, Outcome& out) {
      std::size_t checks = 0, failures = 0;
      for (auto const& s : ctx.corpus()) {
        for (element_type c = 0; c < s.order(); ++c) {
          ++checks;
          auto const rep = check_pseudoinverse_transport(s, c);
          if (!rep.holds()) {
            ++failures;
            out.fail("transport fails in " + describe_model(s) + " at c = "
                     + std::to_string(c));
          }
          auto const independent = pseudoinverse_map(variant(s.base(), c));
          if (star(s, c) != independent.unary()) {
            ++failures;
            out.fail("star differs from the variant pseudoinverse in "
                     + describe_model(s) + " at c = " + std::to_string(c));
          }
        }
      }
      out.detail << checks << " (semigroup, c) pairs, " << failures
                 << " failures";
    }

    void variety_chain(Context& ctx, Outcome& out) {
      auto const shipped_table
          = canonical_form(pseudoinverse_map(ctx.load("w_not_v1.sgp").base()));
      std::optional<std::string> v1_not_e1, w_not_v1, e2_not_w;
      bool                       shipped_table_seen = false;
      std::size_t                violations       = 0;
      for (auto const& s : ctx.corpus()) {
        bool const e1 = in_E(s, 1).holds;
        bool const v1 = in_V(s, 1).holds;
        bool const w  = in_W(s).holds;
        bool const e2 = in_E(s, 2).holds;
        bool const v2 = in_V(s, 2).holds;
        if ((e1 && !v1) || (v1 && !w) || (w && !e2) || (e2 && !v2)) {
          ++violations;
          out.fail("chain broken by " + describe_model(s));
        }
        if (v1 && !e1 && !v1_not_e1) {
          v1_not_e1 = describe_model(s);
        }
        if (w && !v1) {
          if (!w_not_v1) {
            w_not_v1 = describe_model(s);
          }
          shipped_table_seen = shipped_table_seen || canonical_form(s) == shipped_table;
        }
        if (e2 && !w && !e2_not_w) {
          e2_not_w = describe_model(s);
        }
      }
      out.detail << violations << " violations";
      auto witness = [&](char const* name, std::optional<std::string> const& w) {
        if (w) {
          out.detail << "; " << name << ": " << *w;
        } else {
          out.fail(std::string("no member of ") + name);
        }
      };
      witness("V1\\E1", v1_not_e1);
      witness("W\\V1", w_not_v1);
      witness("E2\\W", e2_not_w);
      if (!shipped_table_seen) {
        out.fail("shipped W\\V1 table is not in W\\V1 within the corpus");
      } else {
        out.detail << "; shipped W\\V1 table found";
      }
    }

    void closure_under_variants(Context& ctx, Outcome& out) {
      std::map<std::string, std::size_t> checked;
      std::size_t                        violations = 0;
      for (auto const& s : ctx.corpus()) {
        bool const v1 = in_V(s, 1).holds;
        bool const v2 = in_V(s, 2).holds;
        bool const cr = is_completely_regular(s.base());
        bool const w  = in_W(s).holds;
        for (element_type c = 0; c < s.order(); ++c) {
          auto const u    = unary_variant(s, c);
          bool const u_v1 = in_V(u, 1).holds;
          auto check = [&](bool applies, bool ok, std::string const& what) {
            if (!applies) {
              return;
            }
            ++checked[what];
            if (!ok) {
              ++violations;
              out.fail(what + " fails for " + describe_model(s) + " at c = "
                       + std::to_string(c));
            }
          };
          check(v1, u_v1, "V1 closed under variants");
          check(v2, v2 && in_V(u, 2).holds, "V2 closed under variants");
          check(cr, u_v1, "CR variants in V1");
          check(w, u_v1, "W variants in V1");
        }
      }
      for (auto const& [what, n] : checked) {
        out.detail << what << ": " << n << " cases; ";
      }
      out.detail << violations << " violations";
    }

    void transitivity(Context& ctx, Outcome& out) {
      std::size_t w_cases = 0, violations = 0, failures = 0, witnesses = 0;
      auto audit = [&](CayleyTable const& t, std::string const& where) {
        auto const rep = check_transitivity(t);
        if (rep.transitive) {
          return true;
        }
        ++failures;
        if (!rep.witness) {
          out.fail("non-transitive without witness: " + where);
          return false;
        }
        auto const [a, b, c] = *rep.witness;
        if (conjugate_direct(t, a, b) && conjugate_direct(t, b, c)
            && !conjugate_direct(t, a, c)) {
          ++witnesses;
        } else {
          out.fail("witness does not re-verify: " + where);
        }
        return false;
      };
      for (auto const& s : ctx.corpus()) {
        auto const& t = s.base();
        audit(t, describe_model(s));
        bool const w = in_W_structural(t);
        for (element_type c = 0; c < t.order(); ++c) {
          std::string const where
              = describe_model(s) + ", variant at " + std::to_string(c);
          bool const transitive = audit(variant(t, c), where);
          if (w) {
            ++w_cases;
            if (!transitive) {
              ++violations;
              out.fail("variant of a W semigroup is not transitive: " + where);
            }
          }
        }
      }
      out.detail << w_cases << " variants of W semigroups, " << violations
                 << " violations; " << failures
                 << " non-transitive tables in the corpus and its variants, "
                 << witnesses << " witnesses re-verified";
    }

    void index_bounds(Context& ctx, Outcome& out) {
      std::size_t checks = 0, violations = 0;
      for (auto const& s : ctx.corpus()) {
        for (element_type c = 0; c < s.order(); ++c) {
          auto const results = check_variant_indices(s, c);
          for (element_type a = 0; a < results.size(); ++a) {
            ++checks;
            auto const& r = results[a];
            if (!r.ok) {
              ++violations;
              out.fail(describe_model(s) + ", c = " + std::to_string(c)
                       + ", a = " + std::to_string(a) + ": base index "
                       + std::to_string(r.base_index) + ", variant index "
                       + std::to_string(r.variant_index));
            }
          }
        }
      }
      out.detail << checks << " (semigroup, c, a) triples, " << violations
                 << " violations";
    }

    void oracles(Context& ctx, Outcome& out) {
      // Search against generate-and-filter over every labelled table.
      std::size_t const labelled_expected[] = {0, 1, 8, 113};
      for (std::size_t n = 1; n <= 3; ++n) {
        std::set<CanonicalForm>   brute;
        std::size_t               labelled = 0;
        std::size_t               cells    = n * n;
        std::vector<element_type> entries(cells, 0);
        while (true) {
          CayleyTable t(n, entries);
          if (!validate(t)) {
            ++labelled;
            brute.insert(canonical_form(pseudoinverse_map(t)));
          }
          std::size_t i = 0;
          while (i < cells && ++entries[i] == n) {
            entries[i++] = 0;
          }
          if (i == cells) {
            break;
          }
        }
        SearchSpec spec;
        spec.order = n;
        std::set<CanonicalForm> searched;
        for (auto const& m : enumerate(spec).models) {
          searched.insert(serialise(m));
        }
        out.detail << "order " << n << ": " << labelled << " labelled, "
                   << brute.size() << " classes; ";
        if (labelled != labelled_expected[n]) {
          out.fail("order " + std::to_string(n) + ": "
                   + std::to_string(labelled) + " labelled semigroups");
        }
        if (brute != searched) {
          out.fail("order " + std::to_string(n)
                   + ": search and brute force disagree");
        }
      }

      // find_isomorphism against canonical forms, on the corpus against
      // randomly relabelled copies of itself.
      auto const&  corpus = ctx.corpus();
      std::mt19937 rng(20240611);
      std::vector<UnarySemigroup> shuffled;
      for (auto const& s : corpus) {
        Bijection phi(s.order());
        std::iota(phi.begin(), phi.end(), 0);
        std::shuffle(phi.begin(), phi.end(), rng);
        shuffled.push_back(relabel(s, phi));
      }
      std::size_t pairs = 0, isomorphic = 0;
      for (auto const& a : corpus) {
        auto const ca = canonical_form(a);
        for (auto const& b : shuffled) {
          if (a.order() != b.order()) {
            continue;
          }
          ++pairs;
          auto const phi  = find_isomorphism(a, b);
          bool const same = ca == canonical_form(b);
          isomorphic += same;
          if (phi.has_value() != same) {
            out.fail("find_isomorphism and canonical_form disagree on "
                     + describe_model(a));
          } else if (phi && !(relabel(a, *phi) == b)) {
            out.fail("returned bijection is not an isomorphism for "
                     + describe_model(a));
          }
        }
      }
      out.detail << pairs << " same-order pairs, " << isomorphic
                 << " isomorphic; ";
      if (isomorphic != corpus.size()) {
        out.fail("expected exactly one isomorphic partner per model");
      }

      // Conjugacy against a double loop followed by Warshall closure.
      for (auto const& s : corpus) {
        auto const&       t = s.base();
        std::size_t const n = t.order();
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
        for (element_type a = 0; a < n; ++a) {
          for (element_type b = 0; b < n; ++b) {
            rel[a][b] = conjugate_direct(t, a, b);
          }
        }
        auto const fast = primary_conjugacy(t);
        bool       same = true;
        for (element_type a = 0; a < n; ++a) {
          for (element_type b = 0; b < n; ++b) {
            same = same && fast(a, b) == rel[a][b];
          }
        }
        if (!same) {
          out.fail("primary_conjugacy differs from the oracle on "
                   + describe_model(s));
        }
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              if (rel[a][k] && rel[k][b]) {
                rel[a][b] = true;
              }
            }
          }
        }
        Partition expected;
        std::vector<bool> placed(n);
        for (element_type a = 0; a < n; ++a) {
          if (placed[a]) {
            continue;
          }
          expected.emplace_back();
          for (element_type b = a; b < n; ++b) {
            if (rel[a][b]) {
              expected.back().push_back(b);
              placed[b] = true;
            }
          }
        }
        if (conjugacy_classes(t) != expected) {
          out.fail("conjugacy classes differ from the oracle on "
                   + describe_model(s));
        }
      }
      out.detail << "conjugacy checked on " << corpus.size() << " semigroups";
    }

    void groups(Context& ctx, Outcome& out) {
      for (std::string name : {"z2.sgp", "z3.sgp", "s3.sgp"}) {
        auto const  s = ctx.load(name);
        auto const& t = s.base();
        if (!is_group(t)) {
          out.fail(name + " is not a group");
          continue;
        }
        auto const rel = primary_conjugacy(t);
        for (element_type a = 0; a < t.order(); ++a) {
          for (element_type b = 0; b < t.order(); ++b) {
            bool conj = false;
            for (element_type g = 0; g < t.order() && !conj; ++g) {
              conj = t(t(g, a), group_inverse(t, g)) == b;
            }
            if (conj != rel(a, b)) {
              out.fail(name + ": primary and group conjugacy differ at ("
                       + std::to_string(a) + ", " + std::to_string(b) + ")");
            }
          }
        }
        for (element_type c = 0; c < t.order(); ++c) {
          auto const u = unary_variant(s, c);
          if (!is_group(u.base())) {
            out.fail(name + ": variant at " + std::to_string(c)
                     + " is not a group");
            continue;
          }
          for (element_type x = 0; x < t.order(); ++x) {
            if (u.prime(x) != group_inverse(u.base(), x)) {
              out.fail(name + ": star differs from inversion in the variant at "
                       + std::to_string(c));
              break;
            }
          }
        }
        out.detail << name << " (order " << t.order() << ") ok; ";
      }
    }

    struct Criterion {
      char const*                          name;
      std::function<void(Context&, Outcome&)> run;
    };

    std::vector<Criterion> const& criteria() {
      static std::vector<Criterion> const all{
          {"V1 semigroups that are not variants of completely regular ones",
           v1_nonvariants},
          {"W member outside V1", w_not_v1_witness},
          {"epigroup identities on all semigroups of order <= 4",
           epigroup_identities},
          {"pseudoinverse transport to variants", transport},
          {"variety chain E1 <= V1 <= W <= E2 <= V2 with strict witnesses",
           variety_chain},
          {"V_n, CR and W variants land in V_n or V1", closure_under_variants},
          {"primary conjugacy is transitive in variants of W semigroups",
           transitivity},
          {"variant index bounds", index_bounds},
          {"oracle equivalences", oracles},
          {"group sanity on Z2, Z3, S3", groups},
      };
      return all;
    }

  }  // namespace

  std::string criterion_name(std::size_t id) {
    if (id == 0 || id > criteria().size()) {
      throw InvalidArgument("no acceptance criterion " + std::to_string(id));
    }
    return criteria()[id - 1].name;
  }

  std::vector<CriterionResult> run_acceptance(AcceptanceOptions const& opts) {
    for (auto id : opts.only) {
      static_cast<void>(criterion_name(id));
    }
    Context                      ctx(opts);
    std::vector<CriterionResult> results;
    for (std::size_t id = 1; id <= criteria().size(); ++id) {
      if (!opts.only.empty() && !opts.only.count(id)) {
        continue;
      }
      auto const start = std::chrono::steady_clock::now();
      Outcome    out;
      try {
        criteria()[id - 1].run(ctx, out);
      } catch (std::exception const& e) {
        out.fail(std::string("exception: ") + e.what());
      }
      CriterionResult r;
      r.id      = id;
      r.name    = criteria()[id - 1].name;
      r.passed  = out.passed;
      r.detail  = out.text();
      r.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      results.push_back(std::move(r));
    }
    return results;
  }

}  // namespace semivar
