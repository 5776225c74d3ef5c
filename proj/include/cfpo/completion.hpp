#ifndef CFPO_COMPLETION_HPP
#define CFPO_COMPLETION_HPP

#include <map>
#include <string>
#include <vector>

#include "cfpo/poset.hpp"

namespace cfpo {

// Bounded-cut Dedekind-MacNeille completion: every non-principal cut (A, B)
// with both sides nonempty, A = lower bounds of B and B = upper bounds of A,
// becomes a colourless virtual element sitting between A and B.
struct Completion {
  ColoredPoset completed;  // original elements first (declared order), then virtuals
  std::map<std::string, std::string> embedding;  // original id -> completed id (identity)
  std::vector<std::string> virtual_ids;          // deterministic order

  bool is_virtual(const std::string& id) const;
  bool is_virtual_index(int completed_index) const;
  int original_size = 0;
};

Completion complete(const ColoredPoset& p);

}  // namespace cfpo

#endif
