#ifndef CFPO_ALT_HPP
#define CFPO_ALT_HPP

#include <string>
#include <vector>

#include "cfpo/poset.hpp"

namespace cfpo {

// Alternating fence a0..a{n-1}: for odd i, a{i-1} > a{i} < a{i+1}; the
// reversed variant flips the order.
ColoredPoset alt_poset(int n, bool reversed = false);

struct Embedding {
  int n = 0;
  bool reversed = false;               // source fence variant
  std::vector<std::string> images;     // images[i] = image of a_i
};

// All order-embeddings of both fence variants of length n, deduplicated
// (the two variants coincide only for n = 1).
std::vector<Embedding> alt_embeddings(const ColoredPoset& p, int n);

struct Classification {
  int n = 0;
  Embedding witness;
  bool refuted_exhaustively = false;  // length n+1 ruled out by full search
};

// Largest n for which a fence of length n embeds.
Classification classify(const ColoredPoset& p);

// Images of the fence midpoint over all embeddings of maximal (odd) length.
std::vector<std::string> center_midpoints(const ColoredPoset& p);

}  // namespace cfpo

#endif
