#ifndef CFPO_TREEIFY_HPP
#define CFPO_TREEIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "cfpo/poset.hpp"

namespace cfpo {

// Alternating layer partition around a basepoint r: X0 = up-set of r,
// Y0 = strict down-set of r, then X{n} grows above Y{n-1} and Y{n} below
// X{n-1}, each layer excluding everything seen before.
struct XYPartition {
  std::string root;
  std::vector<std::vector<std::string>> x_layers;
  std::vector<std::vector<std::string>> y_layers;
};

struct TreeifyResult {
  ColoredPoset tree;                 // carries original colours plus "U"
  std::vector<std::string> u;        // the U predicate, ascending carrier order
  std::string root;
  std::string provenance;            // fixed_point | cfpo3 | odd_center | even_adjoin | disconnected
  std::map<std::string, std::string> carrier_map;  // original id -> tree id
};

XYPartition partition_xy(const ColoredPoset& m, const std::string& r);

// Order change of Definition-style tree conversion at a fixed point r:
// s <=_T t iff s lies on the path from r to t. Asserts that the automorphism
// group is preserved exactly.
TreeifyResult treeify_fixed_point(const ColoredPoset& m, const std::string& r);

// Recover the original order from a converted tree via the three-clause
// interpretation; exclude_root drops the unique minimum first (used for the
// disconnected construction).
ColoredPoset interpret_back(const ColoredPoset& tree, bool exclude_root = false);

// Deterministic choice of two fixed points realising a path intersection:
// <c,d> = <A,B>, both fixed points.
std::pair<std::string, std::string> find_path_fixed_points(const ColoredPoset& m,
                                                           const std::vector<std::string>& a,
                                                           const std::vector<std::string>& b);

// Class <= 3 decomposition into an upper tree part, a middle chain and a
// lower reverse-tree part (inspection only; all parts Aut-invariant).
struct Cfpo3Decomposition {
  std::vector<std::string> upper, middle, lower;
};
Cfpo3Decomposition decompose_cfpo3(const ColoredPoset& m);

TreeifyResult treeify_cfpo3(const ColoredPoset& m);

// Odd class: convert the midpoint centre, graft converted branches onto it.
TreeifyResult treeify_odd(const ColoredPoset& m);

// Even class 2n: adjoin a fresh coloured point below every member of the
// orbit of the witness e (an a0-image of a length-2n fence), raising the
// class to 2n+1 while preserving Aut under restriction.
ColoredPoset adjoin_orbit_points(const ColoredPoset& m, const std::string& e);

// Per-component conversion joined under a fresh global root.
TreeifyResult treeify_disconnected(const ColoredPoset& m);

// Dispatcher; always verifies that the automorphism group is preserved.
TreeifyResult treeify(const ColoredPoset& m);

}  // namespace cfpo

#endif
