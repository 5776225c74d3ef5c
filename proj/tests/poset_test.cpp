#include <doctest.h>

#include "cfpo/error.hpp"
#include "cfpo/poset.hpp"
#include "fixtures.hpp"

using cfpo::ColoredPoset;

TEST_CASE("build takes the reflexive-transitive closure") {
  auto p = ColoredPoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq("a", "c"));
  CHECK(p.leq("a", "a"));
  CHECK_FALSE(p.leq("c", "a"));
}

TEST_CASE("build rejects cycles, unknown and duplicate elements") {
  CHECK_THROWS_WITH_AS(ColoredPoset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                       doctest::Contains("CycleInOrder"), cfpo::Error);
  CHECK_THROWS_WITH_AS(ColoredPoset::build({"a"}, {{"a", "z"}}),
                       doctest::Contains("UnknownElement"), cfpo::Error);
  CHECK_THROWS_WITH_AS(ColoredPoset::build({"a", "a"}, {}),
                       doctest::Contains("DuplicateElement"), cfpo::Error);
}

TEST_CASE("reserved colour names are rejected unless explicitly allowed") {
  for (const char* name : {"U", "ROOT", "VIRTUAL", "P_0", "P_17"}) {
    CHECK(cfpo::is_reserved_color(name));
    CHECK_THROWS_WITH_AS(ColoredPoset::build({"a"}, {}, {{name, {"a"}}}),
                         doctest::Contains("ReservedColor"), cfpo::Error);
    CHECK_NOTHROW(ColoredPoset::build({"a"}, {}, {{name, {"a"}}}, true));
  }
  CHECK_FALSE(cfpo::is_reserved_color("P_"));
  CHECK_FALSE(cfpo::is_reserved_color("P_x"));
  CHECK_FALSE(cfpo::is_reserved_color("blue"));
}

TEST_CASE("colour members must be elements") {
  CHECK_THROWS_WITH_AS(ColoredPoset::build({"a"}, {}, {{"blue", {"z"}}}),
                       doctest::Contains("UnknownElement"), cfpo::Error);
}

TEST_CASE("covers of a chain are consecutive") {
  auto p = fixtures::chain(4);
  auto cov = covers(p);
  REQUIRE(cov.edges.size() == 3);
  for (auto [lo, hi] : cov.edges) CHECK(hi == lo + 1);
}

TEST_CASE("covers skip transitive edges") {
  auto p = ColoredPoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(covers(p).edges.size() == 2);
}

TEST_CASE("principal sets are strict") {
  auto p = fixtures::bowtie();
  auto [down, up] = principal_sets(p, "x");
  CHECK(down == std::vector<std::string>{"b1", "b2"});
  CHECK(up == std::vector<std::string>{"c1", "c2"});
}

TEST_CASE("meet of the bowtie tops is the waist") {
  auto p = fixtures::bowtie();
  CHECK(meet(p, "c1", "c2") == std::optional<std::string>{"x"});
  CHECK(meet(p, "b1", "b2") == std::nullopt);
  // In bip22 the tops have two maximal lower bounds, hence no meet.
  CHECK(meet(fixtures::bip22(), "c", "d") == std::nullopt);
}

TEST_CASE("tree and forest predicates") {
  auto v = ColoredPoset::build({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}});
  CHECK(cfpo::is_tree(v));
  CHECK(cfpo::is_forest(v));
  CHECK_FALSE(cfpo::is_tree(fixtures::antichain(2)));
  CHECK(cfpo::is_forest(fixtures::antichain(2)));
  CHECK_FALSE(cfpo::is_tree(fixtures::diamond()));    // down-set of d is not a chain
  CHECK_FALSE(cfpo::is_forest(fixtures::diamond()));
  CHECK_FALSE(cfpo::is_tree(fixtures::bowtie()));     // b1, b2 below x
  CHECK(cfpo::is_tree(fixtures::chain(1)));
}

TEST_CASE("induced subposet keeps order, colours and declared order") {
  auto p = fixtures::hbar().with_color("blue", {"x", "c1"});
  auto q = p.induced({"b1", "x", "c1"});
  CHECK(q.elements() == std::vector<std::string>{"b1", "x", "c1"});
  CHECK(q.leq("b1", "c1"));
  CHECK(q.colors().at("blue") == std::set<std::string>{"x", "c1"});
}

TEST_CASE("without_colors drops classes") {
  auto p = fixtures::chain(2).with_color("blue", {"c0"}).with_color("red", {"c1"});
  auto q = p.without_colors({"blue"});
  CHECK_FALSE(q.colors().count("blue"));
  CHECK(q.colors().count("red"));
}
