#include "cfpo/completion.hpp"

#include <algorithm>
#include <set>

namespace cfpo {

bool Completion::is_virtual(const std::string& id) const {
  return std::find(virtual_ids.begin(), virtual_ids.end(), id) != virtual_ids.end();
}

bool Completion::is_virtual_index(int completed_index) const { return completed_index >= original_size; }

namespace {

using Mask = std::vector<char>;

Mask intersect(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

bool empty_mask(const Mask& m) {
  for (char c : m)
    if (c) return false;
  return true;
}

}  // namespace

Completion complete(const ColoredPoset& p) {
  const int n = p.size();

  // Every cut's ideal side is an intersection of principal down-sets; close
  // the principal ideals under pairwise intersection.
  std::set<Mask> closed;
  std::vector<Mask> work;
  for (int x = 0; x < n; ++x) {
    Mask m(n, 0);
    for (int i = 0; i < n; ++i) m[i] = p.leq(i, x) ? 1 : 0;
    if (closed.insert(m).second) work.push_back(m);
  }
  for (size_t i = 0; i < work.size(); ++i) {
    std::vector<Mask> snapshot(closed.begin(), closed.end());
    for (const auto& other : snapshot) {
      Mask m = intersect(work[i], other);
      if (empty_mask(m)) continue;
      if (closed.insert(m).second) work.push_back(m);
    }
  }

  struct Cut {
    Mask a;                   // ideal side
    Mask b;                   // filter side
    std::vector<int> gens;    // maximal elements of a, ascending
  };
  std::vector<Cut> cuts;
  for (const auto& a : closed) {
    Mask b(n, 0);
    bool b_nonempty = false;
    for (int u = 0; u < n; ++u) {
      bool ub = true;
      for (int x = 0; x < n; ++x)
        if (a[x] && !p.leq(x, u)) {
          ub = false;
          break;
        }
      if (ub) {
        b[u] = 1;
        b_nonempty = true;
      }
    }
    if (!b_nonempty) continue;
    // a == lb(b) holds automatically for intersection-closed ideals; check
    // non-principality: no maximum in a.
    bool has_max = false;
    for (int x = 0; x < n && !has_max; ++x) {
      if (!a[x]) continue;
      bool top = true;
      for (int y = 0; y < n; ++y)
        if (a[y] && !p.leq(y, x)) {
          top = false;
          break;
        }
      has_max = top;
    }
    if (has_max) continue;
    Cut c;
    c.a = a;
    c.b = b;
    for (int x = 0; x < n; ++x) {
      if (!a[x]) continue;
      bool maximal = true;
      for (int y = 0; y < n; ++y)
        if (y != x && a[y] && p.leq(x, y)) {
          maximal = false;
          break;
        }
      if (maximal) c.gens.push_back(x);
    }
    cuts.push_back(std::move(c));
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& l, const Cut& r) { return l.gens < r.gens; });

  Completion out;
  out.original_size = n;
  std::vector<std::string> elements = p.elements();
  std::vector<std::pair<std::string, std::string>> rels = p.relation_pairs();
  std::vector<std::string> vids;
  for (const auto& c : cuts) {
    std::string id = "cut:";
    for (size_t i = 0; i < c.gens.size(); ++i) {
      if (i) id += "|";
      id += p.id_of(c.gens[i]);
    }
    while (p.contains(id) || std::find(vids.begin(), vids.end(), id) != vids.end()) id += "'";
    vids.push_back(id);
  }
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    elements.push_back(vids[ci]);
    for (int x = 0; x < n; ++x) {
      if (cuts[ci].a[x]) rels.emplace_back(p.id_of(x), vids[ci]);
      if (cuts[ci].b[x]) rels.emplace_back(vids[ci], p.id_of(x));
    }
    for (size_t cj = 0; cj < cuts.size(); ++cj) {
      if (ci == cj) continue;
      bool subset = true;
      for (int x = 0; x < n; ++x)
        if (cuts[ci].a[x] && !cuts[cj].a[x]) {
          subset = false;
          break;
        }
      if (subset) rels.emplace_back(vids[ci], vids[cj]);
    }
  }
  out.completed = ColoredPoset::build(elements, rels, p.colors(), true);
  out.virtual_ids = vids;
  for (const auto& e : p.elements()) out.embedding[e] = e;
  return out;
}

}  // namespace cfpo
