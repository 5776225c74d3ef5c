#include "cfpo/poset.hpp"

#include <algorithm>
#include <numeric>

#include "cfpo/error.hpp"

namespace cfpo {

bool is_reserved_color(const std::string& name) {
  if (name == "U" || name == "ROOT" || name == "VIRTUAL") return true;
  if (name.size() >= 3 && name.compare(0, 2, "P_") == 0) {
    for (size_t i = 2; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
  }
  return false;
}

ColoredPoset ColoredPoset::build(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& relation_pairs,
                                 const Colors& colors, bool allow_reserved_colors) {
  ColoredPoset p;
  p.elements_ = std::move(elements);
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.elements_[i], i).second)
      fail("DuplicateElement", "element id repeated: " + p.elements_[i]);
  }
  p.rel_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) p.rel_[static_cast<size_t>(i) * n + i] = 1;
  for (const auto& [a, b] : relation_pairs) {
    auto ia = p.index_.find(a);
    auto ib = p.index_.find(b);
    if (ia == p.index_.end()) fail("UnknownElement", "relation mentions unknown element: " + a);
    if (ib == p.index_.end()) fail("UnknownElement", "relation mentions unknown element: " + b);
    p.rel_[static_cast<size_t>(ia->second) * n + ib->second] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.rel_[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (p.rel_[static_cast<size_t>(k) * n + j]) p.rel_[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.rel_[static_cast<size_t>(i) * n + j] && p.rel_[static_cast<size_t>(j) * n + i])
        fail("CycleInOrder",
             "order relation has a cycle through " + p.elements_[i] + " and " + p.elements_[j]);
  for (const auto& [name, members] : colors) {
    if (!allow_reserved_colors && is_reserved_color(name))
      fail("ReservedColor", "colour name is reserved: " + name);
    for (const auto& m : members)
      if (!p.index_.count(m)) fail("UnknownElement", "colour " + name + " mentions unknown element: " + m);
    p.colors_[name] = members;
  }
  return p;
}

bool ColoredPoset::contains(const std::string& id) const { return index_.count(id) != 0; }

int ColoredPoset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail("UnknownElement", "no element named " + id);
  return it->second;
}

std::set<std::string> ColoredPoset::colors_of(int i) const {
  std::set<std::string> out;
  for (const auto& [name, members] : colors_)
    if (members.count(elements_[i])) out.insert(name);
  return out;
}

bool ColoredPoset::has_color(const std::string& color, int i) const {
  auto it = colors_.find(color);
  return it != colors_.end() && it->second.count(elements_[i]) != 0;
}

std::vector<int> ColoredPoset::down_set(int x) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq(i, x)) out.push_back(i);
  return out;
}

std::vector<int> ColoredPoset::up_set(int x) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq(x, i)) out.push_back(i);
  return out;
}

std::optional<int> ColoredPoset::meet_index(int x, int y) const {
  std::vector<int> lows;
  for (int i = 0; i < size(); ++i)
    if (leq(i, x) && leq(i, y)) lows.push_back(i);
  for (int c : lows) {
    bool top = true;
    for (int o : lows)
      if (!leq(o, c)) {
        top = false;
        break;
      }
    if (top) return c;
  }
  return std::nullopt;
}

ColoredPoset ColoredPoset::induced(const std::vector<std::string>& subset) const {
  std::set<int> keep;
  for (const auto& id : subset) keep.insert(index_of(id));
  std::vector<std::string> els;
  for (int i = 0; i < size(); ++i)
    if (keep.count(i)) els.push_back(elements_[i]);
  std::vector<std::pair<std::string, std::string>> rels;
  for (int a : keep)
    for (int b : keep)
      if (less(a, b)) rels.emplace_back(elements_[a], elements_[b]);
  Colors cols;
  for (const auto& [name, members] : colors_) {
    std::set<std::string> kept;
    for (const auto& m : members)
      if (keep.count(index_of(m))) kept.insert(m);
    if (!kept.empty()) cols[name] = kept;
  }
  return build(els, rels, cols, true);
}

ColoredPoset ColoredPoset::with_color(const std::string& name, const std::vector<std::string>& members) const {
  ColoredPoset p = *this;
  auto& slot = p.colors_[name];
  for (const auto& m : members) {
    index_of(m);
    slot.insert(m);
  }
  return p;
}

ColoredPoset ColoredPoset::without_colors(const std::set<std::string>& names) const {
  ColoredPoset p = *this;
  for (const auto& n : names) p.colors_.erase(n);
  return p;
}

std::vector<std::pair<std::string, std::string>> ColoredPoset::relation_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(elements_[i], elements_[j]);
  return out;
}

CoverGraph covers(const ColoredPoset& p) {
  CoverGraph g;
  const int n = p.size();
  g.upper.resize(n);
  g.lower.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (int z = 0; z < n; ++z)
        if (z != a && z != b && p.less(a, z) && p.less(z, b)) {
          cover = false;
          break;
        }
      if (cover) {
        g.edges.emplace_back(a, b);
        g.upper[a].push_back(b);
        g.lower[b].push_back(a);
      }
    }
  return g;
}

std::pair<std::vector<std::string>, std::vector<std::string>> principal_sets(const ColoredPoset& p,
                                                                             const std::string& x) {
  int xi = p.index_of(x);
  std::vector<std::string> down, up;
  for (int i = 0; i < p.size(); ++i) {
    if (i == xi) continue;
    if (p.leq(i, xi)) down.push_back(p.id_of(i));
    if (p.leq(xi, i)) up.push_back(p.id_of(i));
  }
  return {down, up};
}

std::optional<std::string> meet(const ColoredPoset& p, const std::string& x, const std::string& y) {
  auto m = p.meet_index(p.index_of(x), p.index_of(y));
  if (!m) return std::nullopt;
  return p.id_of(*m);
}

namespace {

// Components of the comparability graph (identical to reachability classes in
// the cover graph of the completion: every cut is bounded, so it only joins
// elements that already share a bound).
std::vector<int> comparability_components(const ColoredPoset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] == -1 && v != w && p.comparable(v, w)) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool component_is_tree(const ColoredPoset& p, const std::vector<int>& comp, int which) {
  std::vector<int> members;
  for (int i = 0; i < p.size(); ++i)
    if (comp[i] == which) members.push_back(i);
  for (int x : members) {
    auto ds = p.down_set(x);
    for (size_t i = 0; i < ds.size(); ++i)
      for (size_t j = i + 1; j < ds.size(); ++j)
        if (!p.comparable(ds[i], ds[j])) return false;
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j) {
      bool found = false;
      for (int z : members)
        if (p.leq(z, members[i]) && p.leq(z, members[j])) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace

bool is_tree(const ColoredPoset& p) {
  if (p.size() == 0) return false;
  auto comp = comparability_components(p);
  if (*std::max_element(comp.begin(), comp.end()) != 0) return false;
  return component_is_tree(p, comp, 0);
}

bool is_forest(const ColoredPoset& p) {
  if (p.size() == 0) return true;
  auto comp = comparability_components(p);
  int k = *std::max_element(comp.begin(), comp.end());
  for (int c = 0; c <= k; ++c)
    if (!component_is_tree(p, comp, c)) return false;
  return true;
}

}  // namespace cfpo
