#include "cfpo/alt.hpp"

#include <algorithm>

#include "cfpo/error.hpp"
#include "cfpo/paths.hpp"

namespace cfpo {

namespace {

// Direction of the fence edge between positions k and k+1; true means
// a_k < a_{k+1}. The plain fence starts downward (a0 > a1).
bool edge_up(int k, bool reversed) {
  bool up = (k % 2 == 1);
  return reversed ? !up : up;
}

void search(const ColoredPoset& p, int n, bool reversed, std::vector<int>& partial,
            std::vector<char>& used, std::vector<Embedding>& out) {
  int k = static_cast<int>(partial.size());
  if (k == n) {
    Embedding e;
    e.n = n;
    e.reversed = reversed;
    for (int i : partial) e.images.push_back(p.id_of(i));
    out.push_back(std::move(e));
    return;
  }
  for (int cand = 0; cand < p.size(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      if (j == k - 1) {
        bool up = edge_up(k - 1, reversed);
        ok = up ? p.less(partial[j], cand) : p.less(cand, partial[j]);
      } else {
        ok = !p.comparable(partial[j], cand);
      }
    }
    if (!ok) continue;
    partial.push_back(cand);
    used[cand] = 1;
    search(p, n, reversed, partial, used, out);
    used[cand] = 0;
    partial.pop_back();
  }
}

}  // namespace

ColoredPoset alt_poset(int n, bool reversed) {
  if (n < 1) fail("InvalidSize", "fence length must be at least 1");
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back("a" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rels;
  for (int k = 0; k + 1 < n; ++k) {
    if (edge_up(k, reversed))
      rels.emplace_back(els[k], els[k + 1]);
    else
      rels.emplace_back(els[k + 1], els[k]);
  }
  return ColoredPoset::build(els, rels);
}

std::vector<Embedding> alt_embeddings(const ColoredPoset& p, int n) {
  if (n < 1) fail("InvalidSize", "fence length must be at least 1");
  std::vector<Embedding> out;
  std::vector<int> partial;
  std::vector<char> used(p.size(), 0);
  search(p, n, false, partial, used, out);
  if (n > 1) search(p, n, true, partial, used, out);
  return out;
}

Classification classify(const ColoredPoset& p) {
  if (p.size() == 0) fail("EmptyPoset", "cannot classify the empty poset");
  Classification c;
  for (int n = 1; n <= p.size(); ++n) {
    auto embs = alt_embeddings(p, n);
    if (embs.empty()) break;
    c.n = n;
    c.witness = embs.front();
  }
  c.refuted_exhaustively = true;
  return c;
}

std::vector<std::string> center_midpoints(const ColoredPoset& p) {
  if (!is_cfpo(p)) fail("NotACFPO", "centre midpoints are defined for CFPOs");
  Classification c = classify(p);
  if (c.n % 2 == 0 || c.n < 3) fail("NotOddClass", "class is " + std::to_string(c.n));
  int mid = (c.n - 1) / 2;
  std::set<int> seen;
  for (const auto& e : alt_embeddings(p, c.n)) seen.insert(p.index_of(e.images[mid]));
  std::vector<std::string> out;
  for (int i : seen) out.push_back(p.id_of(i));
  return out;
}

}  // namespace cfpo
