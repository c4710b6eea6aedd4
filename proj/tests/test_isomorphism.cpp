#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/search.hpp"

using namespace semivar;

namespace {
  std::vector<UnarySemigroup> printed_tables() {
    std::vector<std::vector<std::vector<element_type>>> const rows{
        {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 3}},
        {{1, 1, 2, 2}, {1, 1, 2, 2}, {2, 2, 2, 2}, {2, 2, 2, 3}},
        {{2, 2, 1, 1}, {2, 2, 1, 1}, {1, 1, 2, 2}, {1, 1, 2, 3}}};
    std::vector<UnarySemigroup> out;
    for (auto const& r : rows) {
      out.push_back(pseudoinverse_map(CayleyTable::from_rows(r)));
    }
    return out;
  }
}  // namespace

TEST_CASE("find_isomorphism", "[isomorphism]") {
  auto const s3 = tables::symmetric_group_3();
  auto const self = find_isomorphism(s3, s3);
  REQUIRE(self);
  CHECK(is_isomorphism(s3, s3, *self));

  CHECK_FALSE(find_isomorphism(tables::left_zero(2), tables::right_zero(2)));
  CHECK_FALSE(oracle::isomorphic(tables::left_zero(2), tables::right_zero(2)));

  auto const p = printed_tables();
  CHECK_FALSE(find_isomorphism(p[0], p[1]));
  CHECK_FALSE(find_isomorphism(p[1], p[2]));
  CHECK_FALSE(find_isomorphism(p[0], p[2]));
  CHECK_FALSE(find_isomorphism(tables::cyclic_group(2), tables::cyclic_group(3)));
}

TEST_CASE("canonical_form", "[isomorphism]") {
  CHECK(canonical_form(CayleyTable(1, {0})).to_text() == "0");
  CHECK(canonical_form(tables::left_zero(2))
        != canonical_form(tables::right_zero(2)));
  auto const p = printed_tables();
  CHECK(canonical_form(p[0]) != canonical_form(p[1]));
  CHECK(canonical_form(p[1]) != canonical_form(p[2]));
  CHECK(canonical_form(p[0]) != canonical_form(p[2]));
  CHECK(canonical_form(p[0]).hash().size() == 16);

  auto const t = tables::symmetric_group_3();
  auto const phi = canonical_relabelling(t);
  CHECK(serialise(relabel(t, phi)) == canonical_form(t));
  CHECK(is_canonical(relabel(t, phi)));
  CHECK_THROWS_AS(canonical_form(full_transformation_monoid(3).table), CapExceeded);
}

TEST_CASE("canonical forms are complete invariants", "[isomorphism][property]") {
  // Brute-force isomorphism on random pairs of small semigroups, some of
  // them relabelled copies of each other.
  std::mt19937 rng(17);
  std::size_t  isomorphic_pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto const a = oracle::random_semigroup(rng, 5);
    auto const b = trial % 2 == 0
                       ? relabel(a, oracle::random_permutation(rng, a.order()))
                       : oracle::random_semigroup(rng, 5);
    bool const brute = oracle::isomorphic(a, b);
    isomorphic_pairs += brute;
    CHECK((canonical_form(a) == canonical_form(b)) == brute);
    auto const phi = find_isomorphism(a, b);
    CHECK(phi.has_value() == brute);
    if (phi) {
      CHECK(relabel(a, *phi) == b);
    }
    auto const ua = pseudoinverse_map(a);
    auto const ub = pseudoinverse_map(b);
    CHECK((canonical_form(ua) == canonical_form(ub))
          == oracle::isomorphic(a, ua.unary(), b, ub.unary()));
  }
  CHECK(isomorphic_pairs >= 150);
}

TEST_CASE("unary isomorphism respects the unary map", "[isomorphism]") {
  auto const z2 = tables::cyclic_group(2);
  UnarySemigroup const a(z2, {0, 1});
  UnarySemigroup const b(z2, {1, 0});
  CHECK(find_isomorphism(z2, z2));
  CHECK_FALSE(find_isomorphism(a, b));
  CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("all pairs of order-4 models", "[isomorphism][property]") {
  SearchSpec spec;
  spec.order = 4;
  auto const models = enumerate(spec).models;
  REQUIRE(models.size() == 188);
  std::mt19937 rng(23);
  for (std::size_t i = 0; i < models.size(); ++i) {
    auto const shuffled = relabel(models[i], oracle::random_permutation(rng, 4));
    for (std::size_t j = 0; j < models.size(); ++j) {
      bool const same = canonical_form(models[j]) == canonical_form(shuffled);
      REQUIRE(same == (i == j));
      REQUIRE(find_isomorphism(models[j], shuffled).has_value() == same);
    }
  }
}
