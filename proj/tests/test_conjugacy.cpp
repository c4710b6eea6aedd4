#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semivar/conjugacy.hpp"
#include "semivar/green.hpp"
#include "semivar/search.hpp"
#include "semivar/transformation.hpp"
#include "semivar/varieties.hpp"

using namespace semivar;

namespace {
  // Components of the oracle relation by breadth-first search.
  Partition oracle_classes(CayleyTable const& t) {
    std::size_t const n = t.order();
    Partition         out;
    std::vector<bool> seen(n);
    for (element_type a = 0; a < n; ++a) {
      if (seen[a]) {
        continue;
      }
      std::vector<element_type> block{a}, queue{a};
      seen[a] = true;
      while (!queue.empty()) {
        auto const x = queue.back();
        queue.pop_back();
        for (element_type y = 0; y < n; ++y) {
          if (!seen[y] && oracle::primary_conjugate(t, x, y)) {
            seen[y] = true;
            block.push_back(y);
            queue.push_back(y);
          }
        }
      }
      std::sort(block.begin(), block.end());
      out.push_back(block);
    }
    return out;
  }

  std::vector<UnarySemigroup> all_up_to_4() {
    SearchSpec spec;
    spec.order      = 4;
    spec.all_orders = true;
    return enumerate(spec).models;
  }
}  // namespace

TEST_CASE("commutative semigroups give equality", "[conjugacy]") {
  for (auto const& t : {tables::cyclic_group(3), tables::null_semigroup(3),
                        tables::semilattice_2()}) {
    auto const r = primary_conjugacy(t);
    for (element_type a = 0; a < t.order(); ++a) {
      for (element_type b = 0; b < t.order(); ++b) {
        CHECK(r(a, b) == (a == b));
      }
    }
  }
  CHECK(conjugacy_classes(tables::cyclic_group(3)) == Partition{{0}, {1}, {2}});
}

TEST_CASE("S3 conjugacy classes", "[conjugacy]") {
  auto const classes = conjugacy_classes(tables::symmetric_group_3());
  CHECK(classes == Partition{{0}, {1, 2, 5}, {3, 4}});
}

TEST_CASE("T2 conjugacy classes", "[conjugacy]") {
  std::vector<Transformation> const gens{Transformation({1, 0}),
                                         Transformation::constant(2, 0)};
  auto const g = generate_from_transformations(gens);
  auto const classes = conjugacy_classes(g.table);
  CHECK(classes == oracle_classes(g.table));
  CHECK(classes == Partition{{0}, {1, 3}, {2}});
  CHECK(g.elements[1].images() == std::vector<element_type>{0, 0});
  CHECK(g.elements[3].images() == std::vector<element_type>{1, 1});
}

TEST_CASE("transitive_closure", "[conjugacy]") {
  BinaryRelation eq(3);
  for (element_type a = 0; a < 3; ++a) {
    eq.set(a, a);
  }
  CHECK(transitive_closure(eq) == Partition{{0}, {1}, {2}});
  BinaryRelation full(3);
  for (element_type a = 0; a < 3; ++a) {
    for (element_type b = 0; b < 3; ++b) {
      full.set(a, b);
    }
  }
  CHECK(transitive_closure(full) == Partition{{0, 1, 2}});
  BinaryRelation lopsided(2);
  lopsided.set(0, 1);
  CHECK_THROWS_AS(transitive_closure(lopsided), RelationNotSymmetric);
}

TEST_CASE("a non-transitive example of order 4", "[conjugacy]") {
  // 3 is a left identity only, so S^1 needs a new identity.
  auto const t = CayleyTable::from_rows(
      {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 2, 3}});
  auto const rep = check_transitivity(t);
  CHECK_FALSE(rep.transitive);
  REQUIRE(rep.witness);
  CHECK(*rep.witness == std::array<element_type, 3>{1, 0, 2});
  CHECK(rep.classes == Partition{{0, 1, 2}, {3}});

  // Over S alone the relation loses reflexivity at 3 (3 = xy forces x = y = 3).
  auto const s_only = primary_conjugacy(t, Multipliers::semigroup_only);
  CHECK(s_only(3, 3));
  CHECK_FALSE(s_only(1, 1));
}

TEST_CASE("force_adjoin on a monoid", "[conjugacy]") {
  auto const z2 = tables::cyclic_group(2);
  CHECK(primary_conjugacy(z2) == primary_conjugacy(z2, Multipliers::adjoined_identity, true));
}

TEST_CASE("the smallest non-transitive semigroups have order 4", "[conjugacy]") {
  std::map<std::size_t, std::size_t> failures;
  for (auto const& s : all_up_to_4()) {
    auto const rep = check_transitivity(s.base());
    if (!rep.transitive) {
      ++failures[s.order()];
      auto const [a, b, c] = *rep.witness;
      REQUIRE(oracle::primary_conjugate(s.base(), a, b));
      REQUIRE(oracle::primary_conjugate(s.base(), b, c));
      REQUIRE_FALSE(oracle::primary_conjugate(s.base(), a, c));
    }
  }
  CHECK(failures == std::map<std::size_t, std::size_t>{{4, 13}});
}

TEST_CASE("conjugacy against the oracle", "[conjugacy][property]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto const t = oracle::random_semigroup(rng, 12);
    auto const r = primary_conjugacy(t);
    REQUIRE(r.is_reflexive());
    REQUIRE(r.is_symmetric());
    for (element_type a = 0; a < t.order(); ++a) {
      for (element_type b = 0; b < t.order(); ++b) {
        REQUIRE(r(a, b) == oracle::primary_conjugate(t, a, b));
      }
    }
    REQUIRE(conjugacy_classes(t) == oracle_classes(t));
    auto const rep = check_transitivity(t);
    REQUIRE(rep.transitive == r.is_transitive());
    REQUIRE(rep.witness.has_value() != rep.transitive);
  }
}

TEST_CASE("W semigroups and completely regular elements", "[conjugacy][property]") {
  for (auto const& s : all_up_to_4()) {
    auto const& t = s.base();
    auto const  r = primary_conjugacy(t);
    if (in_W_structural(t)) {
      REQUIRE(r.is_transitive());
    }
    // restricted to completely regular elements the relation is transitive
    auto const g = green(t);
    std::vector<element_type> cr;
    for (element_type a = 0; a < t.order(); ++a) {
      if (is_group_h_class(g, t, a)) {
        cr.push_back(a);
      }
    }
    for (auto a : cr) {
      for (auto b : cr) {
        for (auto c : cr) {
          REQUIRE((!(r(a, b) && r(b, c)) || r(a, c)));
        }
      }
    }
  }
}

TEST_CASE("group conjugacy", "[conjugacy][property]") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t const degree = 3 + trial % 2;
    std::vector<Transformation> gens{
        Transformation(oracle::random_permutation(rng, degree)),
        Transformation(oracle::random_permutation(rng, degree))};
    auto const t = generate_from_transformations(gens).table;
    auto const e = identity_element(t);
    REQUIRE(e);
    auto const r = primary_conjugacy(t);
    for (element_type a = 0; a < t.order(); ++a) {
      for (element_type b = 0; b < t.order(); ++b) {
        bool conj = false;
        for (element_type g = 0; g < t.order() && !conj; ++g) {
          for (element_type h = 0; h < t.order() && !conj; ++h) {
            conj = t(g, h) == *e && t(t(g, a), h) == b;
          }
        }
        REQUIRE(r(a, b) == conj);
      }
    }
  }
}
