#ifndef CFPO_DOT_HPP
#define CFPO_DOT_HPP

#include <set>
#include <string>

#include "cfpo/poset.hpp"

namespace cfpo {

// Deterministic Hasse-diagram DOT output; U-elements are filled, virtual
// elements dashed.
std::string emit_dot(const ColoredPoset& p, const std::set<std::string>& u = {},
                     const std::set<std::string>& virtuals = {});

}  // namespace cfpo

#endif
