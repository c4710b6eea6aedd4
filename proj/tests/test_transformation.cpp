#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "semivar/transformation.hpp"

using namespace semivar;

TEST_CASE("Transformation basics", "[transformation]") {
  CHECK_THROWS_AS(Transformation({}), InvalidArgument);
  CHECK_THROWS_AS(Transformation({0, 2}), InvalidArgument);
  auto const f = Transformation({1, 1, 0});
  CHECK(f.degree() == 3);
  CHECK(f[2] == 0);
  CHECK(Transformation::identity(3).images()
        == std::vector<element_type>{0, 1, 2});
  CHECK(Transformation::constant(3, 2).images()
        == std::vector<element_type>{2, 2, 2});
  CHECK_FALSE(f.to_string().empty());
}

TEST_CASE("composition applies the left factor first", "[transformation]") {
  auto const f = Transformation({1, 2, 0});  // x -> x + 1
  auto const g = Transformation({0, 0, 2});
  // (f * g)(x) = g(f(x))
  CHECK((f * g).images() == std::vector<element_type>{0, 2, 0});
  CHECK((g * f).images() == std::vector<element_type>{1, 1, 0});
}

TEST_CASE("generated semigroups", "[transformation]") {
  std::vector<Transformation> const id{Transformation::identity(2)};
  CHECK(generate_from_transformations(id).table.order() == 1);

  // With maps acting on the right, c0 * c1 = c1, so the two constant maps
  // form a right zero semigroup.
  std::vector<Transformation> const consts{Transformation::constant(2, 0),
                                           Transformation::constant(2, 1)};
  auto const rz = generate_from_transformations(consts);
  CHECK(rz.table == CayleyTable::from_rows({{0, 1}, {0, 1}}));

  std::vector<Transformation> const t2{Transformation({1, 0}),
                                       Transformation::constant(2, 0)};
  auto const g = generate_from_transformations(t2);
  CHECK(g.table.order() == 4);
  CHECK_FALSE(validate(g.table));
  // every self-map of a 2-set appears exactly once
  std::set<std::vector<element_type>> maps;
  for (auto const& e : g.elements) {
    maps.insert(e.images());
  }
  CHECK(maps.size() == 4);

  CHECK_THROWS_AS(generate_from_transformations(t2, 3), CapExceeded);
  std::vector<Transformation> const mixed{Transformation({0}),
                                          Transformation({0, 1})};
  CHECK_THROWS_AS(generate_from_transformations(mixed), InvalidArgument);
  std::vector<Transformation> const none;
  CHECK_THROWS_AS(generate_from_transformations(none), InvalidArgument);
}

TEST_CASE("table entries match pointwise composition", "[transformation][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const degree = 2 + trial % 3;
    std::vector<Transformation> gens;
    for (int i = 0; i < 2; ++i) {
      gens.push_back(Transformation(oracle::random_permutation(rng, degree)));
      std::vector<element_type> images(degree);
      for (auto& x : images) {
        x = std::uniform_int_distribution<element_type>(0, degree - 1)(rng);
      }
      gens.push_back(Transformation(images));
    }
    auto const g = generate_from_transformations(gens);
    auto const n = g.table.order();
    for (element_type i = 0; i < n; ++i) {
      for (element_type j = 0; j < n; ++j) {
        auto const& fi = g.elements[i];
        auto const& fj = g.elements[j];
        std::vector<element_type> composed(degree);
        for (element_type x = 0; x < degree; ++x) {
          composed[x] = fj[fi[x]];
        }
        REQUIRE(g.elements[g.table(i, j)].images() == composed);
      }
    }
  }
}

TEST_CASE("full transformation monoids", "[transformation]") {
  CHECK(full_transformation_monoid(1).table.order() == 1);
  CHECK(full_transformation_monoid(2).table.order() == 4);
  CHECK(full_transformation_monoid(3).table.order() == 27);
  CHECK(full_transformation_monoid(4).table.order() == 256);
  CHECK(identity_element(full_transformation_monoid(3).table).has_value());
}
