#ifndef CFPO_POSET_HPP
#define CFPO_POSET_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cfpo {

// "U", "ROOT", "VIRTUAL" and "P_<k>" are reserved for predicates introduced
// by the tree constructions; user input may not use them.
bool is_reserved_color(const std::string& name);

// Finite partial order with named elements and named unary predicates
// (colours). The declared element order is the canonical deterministic order
// used for every tie-break downstream.
class ColoredPoset {
 public:
  using Colors = std::map<std::string, std::set<std::string>>;

  ColoredPoset() = default;  // empty poset

  // relation_pairs are (x, y) meaning x <= y; the reflexive-transitive
  // closure is taken, antisymmetry violations raise CycleInOrder.
  static ColoredPoset build(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& relation_pairs,
                            const Colors& colors = {},
                            bool allow_reserved_colors = false);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& id_of(int i) const { return elements_[i]; }
  bool contains(const std::string& id) const;
  int index_of(const std::string& id) const;  // UnknownElement if absent

  bool leq(int a, int b) const { return rel_[static_cast<size_t>(a) * elements_.size() + b] != 0; }
  bool leq(const std::string& a, const std::string& b) const { return leq(index_of(a), index_of(b)); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  const Colors& colors() const { return colors_; }
  std::set<std::string> colors_of(int i) const;
  bool has_color(const std::string& color, int i) const;

  std::vector<int> down_set(int x) const;  // indices, ascending, includes x
  std::vector<int> up_set(int x) const;
  std::optional<int> meet_index(int x, int y) const;

  // Sub-poset on the given elements, keeping declared order and colours.
  ColoredPoset induced(const std::vector<std::string>& subset) const;
  ColoredPoset with_color(const std::string& name, const std::vector<std::string>& members) const;
  ColoredPoset without_colors(const std::set<std::string>& names) const;

  std::vector<std::pair<std::string, std::string>> relation_pairs() const;

 private:
  std::vector<std::string> elements_;
  std::map<std::string, int> index_;
  std::vector<unsigned char> rel_;  // row-major leq matrix
  Colors colors_;
};

// Hasse diagram, edges as (lower, upper) element indices.
struct CoverGraph {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> upper;  // upper covers per element
  std::vector<std::vector<int>> lower;  // lower covers per element
};

CoverGraph covers(const ColoredPoset& p);

// (strict down-set, strict up-set) of x, in declared order.
std::pair<std::vector<std::string>, std::vector<std::string>> principal_sets(const ColoredPoset& p,
                                                                             const std::string& x);

std::optional<std::string> meet(const ColoredPoset& p, const std::string& x, const std::string& y);

// Tree in the order-theoretic sense: connected, every down-set a chain and
// every pair of elements with a common lower bound (hence a root).
bool is_tree(const ColoredPoset& p);

// Every component a tree.
bool is_forest(const ColoredPoset& p);

}  // namespace cfpo

#endif
