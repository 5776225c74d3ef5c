#include <doctest.h>

#include "cfpo/completion.hpp"
#include "cfpo/error.hpp"
#include "cfpo/dot.hpp"
#include "cfpo/json_io.hpp"
#include "cfpo/treeify.hpp"
#include "fixtures.hpp"

using namespace cfpo;

TEST_CASE("parse and serialise round trip") {
  std::string text = R"({"elements":["a","b","c"],
                         "leq":[["a","b"],["a","c"]],
                         "colors":{"blue":["b"],"red":[]}})";
  auto p = parse_poset_text(text);
  CHECK(p.elements() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.leq("a", "b"));
  CHECK(p.colors().at("blue") == std::set<std::string>{"b"});
  CHECK(p.colors().count("red"));
  auto doc = poset_to_json(p);
  auto q = parse_poset(doc);
  CHECK(q.elements() == p.elements());
  CHECK(q.relation_pairs() == p.relation_pairs());
  CHECK(q.colors() == p.colors());
}

TEST_CASE("malformed input is reported as such") {
  CHECK_THROWS_WITH_AS(parse_poset_text("{"), doctest::Contains("MalformedInput"), Error);
  CHECK_THROWS_WITH_AS(parse_poset_text("[]"), doctest::Contains("MalformedInput"), Error);
  CHECK_THROWS_WITH_AS(parse_poset_text(R"({"leq":[]})"), doctest::Contains("MalformedInput"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_poset_text(R"({"elements":[1],"leq":[]})"),
                       doctest::Contains("MalformedInput"), Error);
  CHECK_THROWS_WITH_AS(parse_poset_text(R"({"elements":["a"],"leq":[["a"]]})"),
                       doctest::Contains("MalformedInput"), Error);
  CHECK_THROWS_WITH_AS(parse_poset_text(R"({"elements":["a"],"leq":[],"colors":[]})"),
                       doctest::Contains("MalformedInput"), Error);
}

TEST_CASE("domain errors keep their own names through parsing") {
  CHECK_THROWS_WITH_AS(parse_poset_text(R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})"),
                       doctest::Contains("CycleInOrder"), Error);
  CHECK_THROWS_WITH_AS(parse_poset_text(R"({"elements":["a"],"leq":[],"colors":{"U":["a"]}})"),
                       doctest::Contains("ReservedColor"), Error);
}

TEST_CASE("reserved colours parse when explicitly allowed") {
  auto p = parse_poset_text(R"({"elements":["a"],"leq":[],"colors":{"U":["a"]}})", true);
  CHECK(p.colors().at("U") == std::set<std::string>{"a"});
}

TEST_CASE("completion serialisation lists virtuals") {
  auto doc = completion_to_json(complete(fixtures::bip22()));
  CHECK(doc["virtual"] == std::vector<std::string>{"cut:a|b"});
  CHECK(doc["elements"].size() == 5);
}

TEST_CASE("tree conversion serialisation") {
  auto doc = treeify_to_json(treeify(fixtures::hidden_junction()));
  CHECK(doc["root"] == "x0");
  CHECK(doc["provenance"] == "fixed_point");
  CHECK(doc["virtual"] == std::vector<std::string>{"cut:x0|x1"});
  CHECK(doc["poset"]["colors"].contains("U"));
}

TEST_CASE("dot output styles the special sets") {
  auto t = treeify(fixtures::hidden_junction());
  std::set<std::string> u(t.u.begin(), t.u.end());
  auto dot = emit_dot(t.tree, u, {"cut:x0|x1"});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("fillcolor=lightgrey") != std::string::npos);
  CHECK(dot.find("VIRTUAL") == std::string::npos);  // marker colour is not a label
}
