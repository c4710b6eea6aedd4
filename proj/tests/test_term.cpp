#include "catch_amalgamated.hpp"
#include "semivar/epigroup.hpp"
#include "semivar/term.hpp"

using namespace semivar;

TEST_CASE("parsing and printing", "[term]") {
  auto const t = parse_term("x'xx'");
  CHECK(t.to_string() == "x'xx'");
  CHECK(t.variables() == std::vector<char>{'x'});
  CHECK(t.contains_prime());
  CHECK(parse_term("x^3").to_string() == "xxx");
  CHECK(parse_term("x * (y z)").to_string() == "x(yz)");
  CHECK(parse_term("(xy)''").to_string() == "(xy)''");
  CHECK_FALSE(parse_term("(xy)x").contains_prime());
  CHECK(parse_term("y x").variables() == std::vector<char>{'x', 'y'});

  auto const id = parse_identity("x x' = x' x");
  CHECK(id.to_string() == "xx' = x'x");
  CHECK(parse_identity_list("# comment\n\nx = x\nxy = yx\n").size() == 2);

  CHECK_THROWS_AS(parse_term(""), TermSyntaxError);
  CHECK_THROWS_AS(parse_term("(x"), TermSyntaxError);
  CHECK_THROWS_AS(parse_term("x^0"), TermSyntaxError);
  CHECK_THROWS_AS(parse_term("x + y"), TermSyntaxError);
  CHECK_THROWS_AS(parse_identity("x"), TermSyntaxError);
  CHECK_THROWS_AS(Term::power(Term::variable('x'), 0), InvalidArgument);
}

TEST_CASE("evaluation", "[term]") {
  auto const w = pseudoinverse_map(CayleyTable::from_rows(
      {{2, 3, 2, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}}));
  CHECK(eval(parse_term("x"), w, {{'x', 3}}) == 3);
  CHECK(eval(parse_term("x'xx'"), w, {{'x', 0}}) == 2);
  CHECK_THROWS_AS(eval(parse_term("xy"), w, {{'x', 0}}), UnboundVariable);

  auto const z3 = pseudoinverse_map(tables::cyclic_group(3));
  CHECK(eval(parse_term("(xy)'"), z3, {{'x', 1}, {'y', 1}}) == 1);
}

TEST_CASE("counterexamples are lexicographically first", "[term]") {
  auto const w = pseudoinverse_map(CayleyTable::from_rows(
      {{2, 3, 2, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}}));
  CHECK(satisfies(w, parse_identity("xx' = x'x")));
  auto const env = find_counterexample(w, parse_identity("x''y = xy"));
  REQUIRE(env);
  CHECK(*env == Assignment{{'x', 0}, {'y', 1}});
  CHECK(to_string(*env) == "{x: 0, y: 1}");

  UnarySemigroup const one(CayleyTable(1, {0}), {0});
  CHECK(satisfies(one, parse_identity("(xy)'z = zyx''")));

  // 0 is the identity of S3, so commutativity first fails at x = 1, y = 2.
  auto const s3 = pseudoinverse_map(tables::symmetric_group_3());
  auto const c  = find_counterexample(s3, parse_identity("xy = yx"));
  REQUIRE(c);
  CHECK(*c == Assignment{{'x', 1}, {'y', 2}});
}

TEST_CASE("partial evaluation", "[term]") {
  // cells with value 2 are undefined in an order-2 table
  std::vector<element_type> const cells{0, 1, 1, 2};
  Assignment const                env{{'x', 0}, {'y', 1}};
  CHECK(eval_partial(parse_term("xy"), 2, cells, env) == element_type{1});
  CHECK_FALSE(eval_partial(parse_term("yy"), 2, cells, env));
  CHECK_FALSE(eval_partial(parse_term("x'"), 2, cells, env));
}
