#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/search.hpp"
#include "semivar/varieties.hpp"

using namespace semivar;

TEST_CASE("semigroup counts", "[search]") {
  std::vector<std::size_t> const iso{1, 5, 24, 188};
  std::vector<std::size_t> const anti{1, 4, 18, 126};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(count_semigroups(n) == iso[n - 1]);
    CHECK(count_semigroups(n, true) == anti[n - 1]);
  }
  CHECK_THROWS_AS(count_semigroups(6), CapExceeded);
}

TEST_CASE("semigroups of order 5", "[search][slow]") {
  CHECK(count_semigroups(5) == 1915);
  CHECK(count_semigroups(5, true) == 1160);
}

TEST_CASE("search agrees with brute force up to order 3", "[search]") {
  std::size_t const labelled[] = {0, 1, 8, 113};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<CanonicalForm> brute;
    std::size_t             count = 0;
    oracle::for_each_labelled_semigroup(n, [&](CayleyTable const& t) {
      ++count;
      brute.insert(canonical_form(pseudoinverse_map(t)));
    });
    CHECK(count == labelled[n]);
    SearchSpec spec;
    spec.order = n;
    std::set<CanonicalForm> searched;
    for (auto const& m : enumerate(spec).models) {
      searched.insert(serialise(m));
    }
    CHECK(searched == brute);
  }
}

TEST_CASE("models are sound, canonical and distinct", "[search]") {
  SearchSpec spec;
  spec.order      = 4;
  spec.all_orders = true;
  spec.filters    = {"W", "not:V1"};
  auto const result = enumerate(spec);
  REQUIRE_FALSE(result.models.empty());
  std::set<CanonicalForm> seen;
  for (auto const& m : result.models) {
    REQUIRE_FALSE(validate(m.base()));
    REQUIRE(m.is_canonical());
    REQUIRE(is_canonical(m));
    REQUIRE(in_W(m).holds);
    REQUIRE_FALSE(in_V(m, 1).holds);
    REQUIRE(seen.insert(serialise(m)).second);
  }
  auto const w = pseudoinverse_map(CayleyTable::from_rows(
      {{2, 3, 2, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}}));
  CHECK(seen.count(canonical_form(w)) == 1);
  CHECK(result.counts_by_order.at(4) == result.models.size());
}

TEST_CASE("identities prune the search", "[search]") {
  SearchSpec spec;
  spec.order      = 4;
  spec.identities = {parse_identity("xy = yx")};
  auto const commutative = enumerate(spec);
  spec.identities.clear();
  spec.filters = {"commutative"};
  auto const filtered = enumerate(spec);
  CHECK(commutative.models == filtered.models);
  CHECK(commutative.models.size() == 58);

  spec.filters    = {};
  spec.identities = {parse_identity("xx = x")};
  CHECK(enumerate(spec).models.size() == 46);  // bands of order 4
  spec.merge_anti_isomorphic = true;
  CHECK(enumerate(spec).models.size() == 26);
}

TEST_CASE("results do not depend on the number of workers", "[search]") {
  SearchSpec spec;
  spec.order      = 4;
  spec.all_orders = true;
  auto const one  = enumerate(spec);
  spec.jobs       = 3;
  auto const three = enumerate(spec);
  CHECK(one.models == three.models);
  CHECK(one.counts_by_order == three.counts_by_order);
}

TEST_CASE("free unary search rediscovers the pseudoinverse", "[search]") {
  SearchSpec spec;
  spec.order      = 3;
  spec.all_orders = true;
  spec.free_unary = true;
  spec.identities = {laws::prime_absorbs(), laws::prime_commutes(),
                     laws::bounded_index(3)};
  auto const free_models = enumerate(spec);
  for (auto const& m : free_models.models) {
    REQUIRE(m.is_canonical());
  }
  CHECK(free_models.models.size() == 1 + 5 + 24);
}

TEST_CASE("filters", "[search]") {
  CHECK_THROWS_AS(make_filter("nonsense"), InvalidArgument);
  CHECK_THROWS_AS(make_filter("E0"), InvalidArgument);
  auto const cr = make_filter("CR");
  CHECK(cr(pseudoinverse_map(tables::left_zero(2))));
  CHECK_FALSE(make_filter("not:CR")(pseudoinverse_map(tables::left_zero(2))));
  CHECK(make_filter("monoid")(pseudoinverse_map(tables::cyclic_group(2))));

  SearchSpec spec;
  spec.order = 6;
  CHECK_THROWS_AS(enumerate(spec), CapExceeded);
}

TEST_CASE("V1 semigroups that are not variants of completely regular ones",
          "[search]") {
  std::vector<UnarySemigroup> printed;
  for (auto const& rows : std::vector<std::vector<std::vector<element_type>>>{
           {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 3}},
           {{1, 1, 2, 2}, {1, 1, 2, 2}, {2, 2, 2, 2}, {2, 2, 2, 3}},
           {{2, 2, 1, 1}, {2, 2, 1, 1}, {1, 1, 2, 2}, {1, 1, 2, 3}}}) {
    printed.push_back(pseudoinverse_map(CayleyTable::from_rows(rows)));
  }
  auto const rep = reproduce_v1_nonvariants(printed);

  // Frozen from a verified run. The completely regular models are the extra
  // ones: a completely regular semigroup without an identity need not be a
  // variant of any completely regular semigroup of the same order.
  CHECK(rep.result.counts_by_order
        == std::map<std::size_t, std::size_t>{{1, 0}, {2, 0}, {3, 1}, {4, 16}});
  std::size_t non_cr = 0;
  for (auto const& m : rep.result.models) {
    if (!is_completely_regular(m.base())) {
      ++non_cr;
      CHECK(m.order() == 4);
    }
  }
  CHECK(non_cr == 3);
  for (auto const& match : rep.matches) {
    CHECK(match.matching_models == 1);
    CHECK(match.unary_agrees);
    CHECK(relabel(printed[&match - rep.matches.data()], match.isomorphism)
          == rep.result.models[match.model]);
  }
  CHECK_FALSE(rep.perfect);
}
