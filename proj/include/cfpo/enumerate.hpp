#ifndef CFPO_ENUMERATE_HPP
#define CFPO_ENUMERATE_HPP

#include <vector>

#include "cfpo/poset.hpp"

namespace cfpo {

// All posets on exactly n elements up to isomorphism (uncoloured, elements
// named x0..x{n-1}), generated by repeatedly adding a maximal element over an
// order ideal and deduplicating by isomorphism. Deterministic order.
const std::vector<ColoredPoset>& all_posets(int n);

// Connected CFPOs on exactly n elements up to isomorphism.
std::vector<ColoredPoset> connected_cfpos(int n);

bool is_connected(const ColoredPoset& p);

}  // namespace cfpo

#endif
