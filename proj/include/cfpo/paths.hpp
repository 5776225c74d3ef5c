#ifndef CFPO_PATHS_HPP
#define CFPO_PATHS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfpo/completion.hpp"
#include "cfpo/poset.hpp"

namespace cfpo {

struct PathResult {
  std::vector<std::string> element_set;      // completed declared order
  std::vector<std::string> corner_sequence;  // endpoints plus interior direction changes
  std::vector<std::string> virtual_members;
};

struct ConnectionClosureResult {
  std::vector<std::string> elements;         // non-virtual members
  std::vector<std::string> virtual_members;  // virtuals met along the way
};

// Completion plus cover adjacency, computed once and shared by the path
// operations (all of which require the cover graph to be a forest).
class PathContext {
 public:
  explicit PathContext(const ColoredPoset& p);

  const ColoredPoset& original() const { return original_; }
  const Completion& completion() const { return comp_; }
  const CoverGraph& completed_covers() const { return cov_; }
  bool cfpo() const { return forest_; }
  void require_cfpo() const;

  // Unique simple cover path between completed indices, inclusive; nullopt if
  // the endpoints are in different components.
  std::optional<std::vector<int>> cover_path(int cu, int cv) const;
  std::optional<std::set<int>> path_full(int cu, int cv) const;  // vertex set of that path

  std::optional<PathResult> path(const std::string& x, const std::string& y) const;

  // Intersection of all paths between A and B over full (virtual-inclusive)
  // element sets; nullopt if some pair has no path.
  std::optional<std::set<int>> path_sets_full(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) const;

  std::vector<std::vector<std::string>> components() const;
  int component_of_completed(int ci) const { return comp_id_[ci]; }

  // Two distinct cover paths witnessing a failure (arcs of a cycle); only
  // meaningful when !cfpo().
  struct Witness {
    std::string x, y;
    std::vector<std::string> path1, path2;
  };
  std::optional<Witness> non_unique_witness() const;

 private:
  ColoredPoset original_;
  Completion comp_;
  CoverGraph cov_;
  std::vector<std::vector<int>> adj_;  // undirected cover adjacency
  std::vector<int> comp_id_;
  bool forest_ = false;
};

std::optional<PathResult> path(const ColoredPoset& p, const std::string& x, const std::string& y);

// <A,B>: intersection over all pairs of full element sets, restricted to
// non-virtual elements on output; a pair without a path empties the result.
// EmptySet if either input set is empty.
std::vector<std::string> path_sets(const ColoredPoset& p, const std::vector<std::string>& a,
                                   const std::vector<std::string>& b);

bool is_cfpo(const ColoredPoset& p);

std::vector<std::vector<std::string>> components(const ColoredPoset& p);

ConnectionClosureResult connection_closure(const ColoredPoset& p, const std::vector<std::string>& xs);

// B(a;b) = { t : a < t meet b } in a tree; empty when a is not below b.
std::vector<std::string> cone(const ColoredPoset& t, const std::string& a, const std::string& b);

// B(x) relative to a centre set C: elements whose path to x meets C in {x}.
std::vector<std::string> branch_at(const ColoredPoset& p, const std::vector<std::string>& c,
                                   const std::string& x);

}  // namespace cfpo

#endif
