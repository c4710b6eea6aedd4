#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/green.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/search.hpp"

using namespace semivar;

namespace {
  CayleyTable w_not_v1() {
    return CayleyTable::from_rows(
        {{2, 3, 2, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}});
  }

  bool same_partition(std::vector<std::size_t> const& classes,
                      CayleyTable const&              t,
                      bool (*related)(CayleyTable const&, element_type, element_type)) {
    for (element_type a = 0; a < t.order(); ++a) {
      for (element_type b = 0; b < t.order(); ++b) {
        if ((classes[a] == classes[b]) != related(t, a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool h_related(CayleyTable const& t, element_type a, element_type b) {
    return oracle::r_related(t, a, b) && oracle::l_related(t, a, b);
  }
}  // namespace

TEST_CASE("groups have one class of each kind", "[green]") {
  auto const g = green(tables::symmetric_group_3());
  for (auto const* cls : {&g.r_class, &g.l_class, &g.h_class, &g.d_class, &g.j_class}) {
    CHECK(*cls == std::vector<std::size_t>(6, 0));
  }
  CHECK(g.idempotents == std::vector<element_type>{0});
  CHECK(g.number_of_h_classes() == 1);
}

TEST_CASE("left zero semigroup of order 2", "[green]") {
  // aS^1 = {a}, S^1a = {0, 1}
  auto const g = green(tables::left_zero(2));
  CHECK(g.r_class == std::vector<std::size_t>{0, 1});
  CHECK(g.l_class == std::vector<std::size_t>{0, 0});
  CHECK(g.h_class == std::vector<std::size_t>{0, 1});
  CHECK(g.d_class == std::vector<std::size_t>{0, 0});
}

TEST_CASE("null semigroup of order 2", "[green]") {
  auto const t = tables::null_semigroup(2);
  auto const g = green(t);
  CHECK(g.r_class == std::vector<std::size_t>{0, 1});
  CHECK(g.l_class == std::vector<std::size_t>{0, 1});
  CHECK(g.h_class == std::vector<std::size_t>{0, 1});
  CHECK(is_group_h_class(g, t, 0));
  CHECK_FALSE(is_group_h_class(g, t, 1));
}

TEST_CASE("the W table outside V1", "[green]") {
  auto const t = w_not_v1();
  auto const g = green(t);
  CHECK(is_group_h_class(g, t, 2));
  CHECK_FALSE(is_group_h_class(g, t, 0));
  CHECK(idempotents(t) == std::vector<element_type>{1, 2, 3});
  CHECK(g.h_class_members(g.h_class[0]) == std::vector<element_type>{0});
  CHECK_FALSE(eggbox(g).empty());
}

TEST_CASE("idempotents of the first printed V1 table", "[green]") {
  auto const t = CayleyTable::from_rows(
      {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 3}});
  CHECK(idempotents(t) == std::vector<element_type>{1, 2, 3});
}

TEST_CASE("Green's relations match the ideal definitions", "[green][property]") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    auto const t = oracle::random_semigroup(rng, 12);
    auto const g = green(t);
    REQUIRE(same_partition(g.r_class, t, oracle::r_related));
    REQUIRE(same_partition(g.l_class, t, oracle::l_related));
    REQUIRE(same_partition(g.j_class, t, oracle::j_related));
    REQUIRE(same_partition(g.h_class, t, h_related));
    REQUIRE(g.d_class == g.j_class);
    for (element_type a = 0; a < t.order(); ++a) {
      REQUIRE(is_group_h_class(g, t, a) == oracle::completely_regular_element(t, a));
    }
  }
}

TEST_CASE("Green's classes are invariant under relabelling", "[green][property]") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto const t   = oracle::random_semigroup(rng, 9);
    auto const phi = oracle::random_permutation(rng, t.order());
    auto const g   = green(t);
    auto const h   = green(relabel(t, phi));
    for (element_type a = 0; a < t.order(); ++a) {
      for (element_type b = 0; b < t.order(); ++b) {
        REQUIRE((g.r_class[a] == g.r_class[b]) == (h.r_class[phi[a]] == h.r_class[phi[b]]));
        REQUIRE((g.l_class[a] == g.l_class[b]) == (h.l_class[phi[a]] == h.l_class[phi[b]]));
        REQUIRE((g.d_class[a] == g.d_class[b]) == (h.d_class[phi[a]] == h.d_class[phi[b]]));
      }
    }
  }
}

TEST_CASE("idempotents are the elements x'x", "[green][property]") {
  SearchSpec spec;
  spec.order      = 4;
  spec.all_orders = true;
  for (auto const& s : enumerate(spec).models) {
    std::set<element_type> xpx;
    for (element_type x = 0; x < s.order(); ++x) {
      xpx.insert(s(s.prime(x), x));
    }
    auto const e = idempotents(s.base());
    REQUIRE(std::vector<element_type>(xpx.begin(), xpx.end()) == e);
  }
}
