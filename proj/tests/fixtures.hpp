#ifndef CFPO_TESTS_FIXTURES_HPP
#define CFPO_TESTS_FIXTURES_HPP

// Small named posets shared by the tests.

#include <string>
#include <vector>

#include "cfpo/poset.hpp"

namespace fixtures {

using cfpo::ColoredPoset;

// c0 < c1 < ... < c{k-1}
inline ColoredPoset chain(int k) {
  std::vector<std::string> e;
  std::vector<std::pair<std::string, std::string>> r;
  for (int i = 0; i < k; ++i) e.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) r.emplace_back(e[i], e[i + 1]);
  return ColoredPoset::build(e, r);
}

// k pairwise incomparable points
inline ColoredPoset antichain(int k) {
  std::vector<std::string> e;
  for (int i = 0; i < k; ++i) e.push_back("a" + std::to_string(i));
  return ColoredPoset::build(e, {});
}

// a, b < c, d  (four points, no middle element; its completion adds one cut)
inline ColoredPoset bip22() {
  return ColoredPoset::build({"a", "b", "c", "d"},
                             {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// b1, b2 < x < c1, c2
inline ColoredPoset bowtie() {
  return ColoredPoset::build({"b1", "b2", "x", "c1", "c2"},
                             {{"b1", "x"}, {"b2", "x"}, {"x", "c1"}, {"x", "c2"}});
}

// b1, b2 < x < y < c1, c2
inline ColoredPoset hbar() {
  return ColoredPoset::build({"b1", "b2", "x", "y", "c1", "c2"},
                             {{"b1", "x"}, {"b2", "x"}, {"x", "y"}, {"y", "c1"}, {"y", "c2"}});
}

// x0 < x2; x0 < x3; x1 < x3  (the four-point zigzag)
inline ColoredPoset zigzag4() {
  return ColoredPoset::build({"x0", "x1", "x2", "x3"}, {{"x0", "x2"}, {"x0", "x3"}, {"x1", "x3"}});
}

// a < b, c < d  with b, c incomparable: the smallest cycle, not a CFPO
inline ColoredPoset diamond() {
  return ColoredPoset::build({"a", "b", "c", "d"},
                             {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// d1, d2 < m1 < m2; e < m2; d1 < p1; d2 < p2; e < g
// Connected, fence-class 5, centre {m1, m2}, automorphism group of order 2
// (swap d1<->d2 and p1<->p2).
inline ColoredPoset doublev() {
  return ColoredPoset::build({"d1", "d2", "e", "m1", "m2", "p1", "p2", "g"},
                             {{"d1", "m1"},
                              {"d2", "m1"},
                              {"m1", "m2"},
                              {"e", "m2"},
                              {"d1", "p1"},
                              {"d2", "p2"},
                              {"e", "g"}});
}

// The five-element order whose unique branch point is a cut:
// x0 < x2, x3, x4; x1 < x3, x4
inline ColoredPoset hidden_junction() {
  return ColoredPoset::build(
      {"x0", "x1", "x2", "x3", "x4"},
      {{"x0", "x2"}, {"x0", "x3"}, {"x0", "x4"}, {"x1", "x3"}, {"x1", "x4"}});
}

}  // namespace fixtures

#endif
