#include "cfpo/paths.hpp"

#include <algorithm>
#include <queue>

#include "cfpo/error.hpp"

namespace cfpo {

PathContext::PathContext(const ColoredPoset& p) : original_(p), comp_(complete(p)) {
  cov_ = covers(comp_.completed);
  const int m = comp_.completed.size();
  adj_.resize(m);
  for (auto [lo, hi] : cov_.edges) {
    adj_[lo].push_back(hi);
    adj_[hi].push_back(lo);
  }
  comp_id_.assign(m, -1);
  int next = 0;
  for (int s = 0; s < m; ++s) {
    if (comp_id_[s] != -1) continue;
    comp_id_[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v])
        if (comp_id_[w] == -1) {
          comp_id_[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  // Forest iff every component has edges = vertices - 1.
  std::vector<int> verts(next, 0), edges(next, 0);
  for (int v = 0; v < m; ++v) ++verts[comp_id_[v]];
  for (auto [lo, hi] : cov_.edges) ++edges[comp_id_[lo]];
  forest_ = true;
  for (int c = 0; c < next; ++c)
    if (edges[c] != verts[c] - 1) forest_ = false;
}

void PathContext::require_cfpo() const {
  if (!forest_) fail("NotACFPO", "two distinct paths exist between some pair of points");
}

std::optional<std::vector<int>> PathContext::cover_path(int cu, int cv) const {
  if (comp_id_[cu] != comp_id_[cv]) return std::nullopt;
  std::vector<int> parent(adj_.size(), -2);
  std::queue<int> q;
  parent[cu] = -1;
  q.push(cu);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == cv) break;
    for (int w : adj_[v])
      if (parent[w] == -2) {
        parent[w] = v;
        q.push(w);
      }
  }
  std::vector<int> rev;
  for (int v = cv; v != -1; v = parent[v]) rev.push_back(v);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<std::set<int>> PathContext::path_full(int cu, int cv) const {
  auto p = cover_path(cu, cv);
  if (!p) return std::nullopt;
  return std::set<int>(p->begin(), p->end());
}

std::optional<PathResult> PathContext::path(const std::string& x, const std::string& y) const {
  require_cfpo();
  const auto& q = comp_.completed;
  int xi = original_.index_of(x), yi = original_.index_of(y);
  auto vp = cover_path(xi, yi);
  if (!vp) return std::nullopt;
  PathResult res;
  std::set<int> verts(vp->begin(), vp->end());
  for (int v : verts) {
    res.element_set.push_back(q.id_of(v));
    if (comp_.is_virtual_index(v)) res.virtual_members.push_back(q.id_of(v));
  }
  const auto& seq = *vp;
  res.corner_sequence.push_back(q.id_of(seq.front()));
  for (size_t i = 1; i + 1 < seq.size(); ++i) {
    bool up_prev = q.less(seq[i - 1], seq[i]);
    bool up_next = q.less(seq[i], seq[i + 1]);
    if (up_prev != up_next) res.corner_sequence.push_back(q.id_of(seq[i]));
  }
  if (seq.size() > 1) res.corner_sequence.push_back(q.id_of(seq.back()));
  return res;
}

std::optional<std::set<int>> PathContext::path_sets_full(const std::vector<std::string>& a,
                                                         const std::vector<std::string>& b) const {
  require_cfpo();
  if (a.empty() || b.empty()) fail("EmptySet", "path_sets requires nonempty input sets");
  std::optional<std::set<int>> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto pf = path_full(original_.index_of(x), original_.index_of(y));
      if (!pf) return std::set<int>{};
      if (!acc) {
        acc = std::move(pf);
      } else {
        std::set<int> next;
        std::set_intersection(acc->begin(), acc->end(), pf->begin(), pf->end(),
                              std::inserter(next, next.begin()));
        acc = std::move(next);
      }
      if (acc->empty()) return acc;
    }
  return acc;
}

std::vector<std::vector<std::string>> PathContext::components() const {
  std::vector<std::vector<std::string>> out;
  std::vector<int> seen;
  for (int i = 0; i < original_.size(); ++i) {
    int c = comp_id_[i];
    auto it = std::find(seen.begin(), seen.end(), c);
    size_t slot;
    if (it == seen.end()) {
      seen.push_back(c);
      out.emplace_back();
      slot = out.size() - 1;
    } else {
      slot = static_cast<size_t>(it - seen.begin());
    }
    out[slot].push_back(original_.id_of(i));
  }
  return out;
}

std::optional<PathContext::Witness> PathContext::non_unique_witness() const {
  if (forest_) return std::nullopt;
  const int m = comp_.completed.size();
  // DFS to find one fundamental cycle in the undirected cover graph.
  std::vector<int> parent(m, -2);
  for (int s = 0; s < m; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (w == parent[v]) continue;
        if (parent[w] != -2) {
          // Cycle between v and w: climb both to their common ancestor.
          std::vector<int> pv{v}, pw{w};
          std::set<int> anc;
          for (int t = v; t != -1; t = parent[t]) anc.insert(t);
          int join = w;
          while (!anc.count(join)) {
            join = parent[join];
            pw.push_back(join);
          }
          for (int t = v; t != join; t = parent[t])
            if (t != v) pv.push_back(t);
          pv.push_back(join);
          // pv: v .. join, pw: w .. join. Whole cycle: v..join..w + edge w-v.
          Witness wit;
          const auto& q = comp_.completed;
          wit.x = q.id_of(v);
          wit.y = q.id_of(join);
          for (int t : pv) wit.path1.push_back(q.id_of(t));
          wit.path2.push_back(q.id_of(v));
          for (int t : pw) wit.path2.push_back(q.id_of(t));
          return wit;
        }
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<PathResult> path(const ColoredPoset& p, const std::string& x, const std::string& y) {
  return PathContext(p).path(x, y);
}

std::vector<std::string> path_sets(const ColoredPoset& p, const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  PathContext ctx(p);
  auto full = ctx.path_sets_full(a, b);
  std::vector<std::string> out;
  for (int v : *full)
    if (!ctx.completion().is_virtual_index(v)) out.push_back(ctx.completion().completed.id_of(v));
  return out;
}

bool is_cfpo(const ColoredPoset& p) { return PathContext(p).cfpo(); }

std::vector<std::vector<std::string>> components(const ColoredPoset& p) {
  return PathContext(p).components();
}

ConnectionClosureResult connection_closure(const ColoredPoset& p, const std::vector<std::string>& xs) {
  if (xs.empty()) fail("EmptySet", "connection_closure requires a nonempty set");
  PathContext ctx(p);
  ctx.require_cfpo();
  std::set<int> acc;
  for (const auto& x : xs)
    for (const auto& y : xs) {
      auto pf = ctx.path_full(p.index_of(x), p.index_of(y));
      if (pf) acc.insert(pf->begin(), pf->end());
    }
  ConnectionClosureResult out;
  for (int v : acc) {
    if (ctx.completion().is_virtual_index(v))
      out.virtual_members.push_back(ctx.completion().completed.id_of(v));
    else
      out.elements.push_back(ctx.completion().completed.id_of(v));
  }
  return out;
}

std::vector<std::string> cone(const ColoredPoset& t, const std::string& a, const std::string& b) {
  if (!is_tree(t)) fail("NotATree", "cone is defined on trees only");
  int ai = t.index_of(a), bi = t.index_of(b);
  std::vector<std::string> out;
  if (!t.less(ai, bi)) return out;
  for (int x = 0; x < t.size(); ++x) {
    auto m = t.meet_index(x, bi);
    if (m && t.less(ai, *m)) out.push_back(t.id_of(x));
  }
  return out;
}

std::vector<std::string> branch_at(const ColoredPoset& p, const std::vector<std::string>& c,
                                   const std::string& x) {
  PathContext ctx(p);
  ctx.require_cfpo();
  if (std::find(c.begin(), c.end(), x) == c.end())
    fail("ElementNotInCenter", x + " is not a member of the given centre set");
  std::set<int> cset;
  for (const auto& id : c) cset.insert(p.index_of(id));
  int xi = p.index_of(x);
  std::vector<std::string> out;
  for (int y = 0; y < p.size(); ++y) {
    auto pf = ctx.path_full(xi, y);
    if (!pf) continue;
    std::set<int> inter;
    for (int v : *pf)
      if (v < p.size() && cset.count(v)) inter.insert(v);
    if (inter == std::set<int>{xi}) out.push_back(p.id_of(y));
  }
  return out;
}

}  // namespace cfpo
