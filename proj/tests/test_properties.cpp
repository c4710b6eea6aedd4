// Randomised checks that cut across modules. Inputs come from random
// transformation semigroups and random relabellings of enumerated ones.

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semivar/conjugacy.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/io.hpp"
#include "semivar/isomorphism.hpp"
#include "semivar/variants.hpp"
#include "semivar/varieties.hpp"

using namespace semivar;

TEST_CASE("text format round trip", "[property]") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto const t = oracle::random_semigroup(rng, 20);
    auto const s = pseudoinverse_map(t);
    auto const text = format_table_text(s);
    auto const back = to_unary_semigroup(parse_table_text(text));
    REQUIRE(back == s);
    REQUIRE(back.is_canonical());
    REQUIRE(format_table_text(back) == text);
  }
}

TEST_CASE("everything commutes with relabelling", "[property]") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    auto const t   = oracle::random_semigroup(rng, 8);
    auto const phi = oracle::random_permutation(rng, t.order());
    auto const u   = relabel(t, phi);
    auto const s   = pseudoinverse_map(t);
    auto const su  = pseudoinverse_map(u);
    REQUIRE(relabel(s, phi) == su);
    REQUIRE(in_W_structural(t) == in_W_structural(u));
    REQUIRE(in_V(s, 1).holds == in_V(su, 1).holds);
    REQUIRE(check_transitivity(t).transitive == check_transitivity(u).transitive);
    for (element_type c = 0; c < t.order(); ++c) {
      REQUIRE(relabel(unary_variant(s, c), phi) == unary_variant(su, phi[c]));
    }
  }
}

TEST_CASE("variants of larger random semigroups", "[property]") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    auto const t = oracle::random_semigroup(rng, 12);
    auto const s = pseudoinverse_map(t);
    bool const w = in_W(s).holds;
    for (element_type c = 0; c < t.order(); ++c) {
      auto const v = variant(t, c);
      REQUIRE(oracle::associative(v));
      auto const u = unary_variant(s, c);
      REQUIRE(u.unary() == oracle::pseudoinverses(v));
      REQUIRE(check_pseudoinverse_transport(s, c).holds());
      if (w) {
        REQUIRE(in_V(u, 1).holds);
        REQUIRE(check_transitivity(v).transitive);
      }
      for (auto const& r : check_variant_indices(s, c)) {
        REQUIRE(r.ok);
      }
    }
  }
}
