#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cfpo/aut.hpp"
#include "cfpo/completion.hpp"

namespace oracle {

namespace {

std::vector<int> upper_bounds(const cfpo::ColoredPoset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int b = 0; b < p.size(); ++b) {
    bool all = true;
    for (int a : s)
      if (!p.leq(a, b)) {
        all = false;
        break;
      }
    if (all) out.push_back(b);
  }
  return out;
}

std::vector<int> lower_bounds(const cfpo::ColoredPoset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int a = 0; a < p.size(); ++a) {
    bool all = true;
    for (int b : s)
      if (!p.leq(a, b)) {
        all = false;
        break;
      }
    if (all) out.push_back(a);
  }
  return out;
}

}  // namespace

std::set<std::set<std::string>> cut_lower_sets(const cfpo::ColoredPoset& p) {
  std::set<std::set<std::string>> out;
  const int n = p.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    std::vector<int> b = upper_bounds(p, s);
    if (b.empty()) continue;
    std::vector<int> a = lower_bounds(p, b);
    if (upper_bounds(p, a) != b) continue;  // not a stable (A, B) pair
    // Principal cuts have a greatest element in A.
    bool has_max = false;
    for (int x : a) {
      bool top = true;
      for (int y : a)
        if (!p.leq(y, x)) {
          top = false;
          break;
        }
      if (top) {
        has_max = true;
        break;
      }
    }
    if (has_max) continue;
    std::set<std::string> ids;
    for (int x : a) ids.insert(p.id_of(x));
    out.insert(std::move(ids));
  }
  return out;
}

namespace {

// Every saturated chain from lo up to hi (inclusive), as index sets.
std::vector<std::set<int>> saturated_chains(const cfpo::ColoredPoset& q, int lo, int hi) {
  std::vector<std::set<int>> out;
  std::vector<int> chain{lo};
  std::function<void(int)> climb = [&](int at) {
    if (at == hi) {
      out.emplace_back(chain.begin(), chain.end());
      return;
    }
    for (int nxt = 0; nxt < q.size(); ++nxt) {
      if (!q.less(at, nxt) || !q.leq(nxt, hi)) continue;
      bool cover = true;
      for (int z = 0; z < q.size(); ++z)
        if (q.less(at, z) && q.less(z, nxt)) {
          cover = false;
          break;
        }
      if (!cover) continue;
      chain.push_back(nxt);
      climb(nxt);
      chain.pop_back();
    }
  };
  if (q.leq(lo, hi)) climb(lo);
  return out;
}

}  // namespace

std::set<std::set<int>> all_paths(const cfpo::ColoredPoset& q, int a, int b, std::size_t cap) {
  std::set<std::set<int>> found;
  if (a == b) {
    found.insert({a});
    return found;
  }
  // Chain systems for a fixed corner sequence, segment by segment, enforcing
  // that two chains meet only when adjacent and only at the shared corner.
  std::function<void(const std::vector<int>&, std::size_t, std::vector<std::set<int>>&)>
      assemble = [&](const std::vector<int>& corners, std::size_t k,
                     std::vector<std::set<int>>& chosen) {
        if (found.size() >= cap) return;
        if (k + 1 == corners.size()) {
          std::set<int> all;
          for (const auto& c : chosen) all.insert(c.begin(), c.end());
          found.insert(std::move(all));
          return;
        }
        int u = corners[k], v = corners[k + 1];
        int lo = q.leq(u, v) ? u : v;
        int hi = q.leq(u, v) ? v : u;
        for (const auto& sigma : saturated_chains(q, lo, hi)) {
          bool ok = true;
          for (std::size_t j = 0; j + 1 < chosen.size() + 1 && ok; ++j) {
            std::set<int> inter;
            std::set_intersection(sigma.begin(), sigma.end(), chosen[j].begin(), chosen[j].end(),
                                  std::inserter(inter, inter.begin()));
            if (j + 1 == chosen.size()) {
              // adjacent: exactly the shared corner
              if (inter != std::set<int>{corners[k]}) ok = false;
            } else if (!inter.empty()) {
              ok = false;
            }
          }
          if (!ok) continue;
          chosen.push_back(sigma);
          assemble(corners, k + 1, chosen);
          chosen.pop_back();
        }
      };
  // Corner sequences: distinct elements, consecutive strictly comparable,
  // interior corners strict local extrema.
  std::vector<int> corners{a};
  std::vector<char> used(static_cast<std::size_t>(q.size()), 0);
  used[a] = 1;
  std::function<void()> extend = [&]() {
    if (found.size() >= cap) return;
    int last = corners.back();
    for (int nxt = 0; nxt < q.size(); ++nxt) {
      if (used[nxt] || !q.comparable(last, nxt)) continue;
      if (corners.size() >= 2) {
        int prev = corners[corners.size() - 2];
        bool valley = q.less(last, prev) && q.less(last, nxt);
        bool peak = q.less(prev, last) && q.less(nxt, last);
        if (!valley && !peak) continue;
      }
      corners.push_back(nxt);
      used[nxt] = 1;
      if (nxt == b) {
        std::vector<std::set<int>> chosen;
        assemble(corners, 0, chosen);
      } else {
        extend();
      }
      used[nxt] = 0;
      corners.pop_back();
    }
  };
  extend();
  return found;
}

bool is_cfpo_definitional(const cfpo::ColoredPoset& p) {
  cfpo::Completion c = cfpo::complete(p);
  for (int i = 0; i < c.original_size; ++i)
    for (int j = i + 1; j < c.original_size; ++j)
      if (all_paths(c.completed, i, j, 2).size() > 1) return false;
  return true;
}

bool same_orbit_bruteforce(const cfpo::ColoredPoset& p, const std::vector<std::string>& a,
                           const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  cfpo::PermGroup g = cfpo::automorphisms(p, cfpo::AutOptions{p.size(), 1'000'000});
  for (const auto& f : g.generate()) {
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i)
      if (g.apply(f, a[i]) != b[i]) all = false;
    if (all) return true;
  }
  return false;
}

namespace {

// Canonical multiset-of-subtrees shape strings for rooted trees whose
// internal nodes have at least two children.
void shapes(int n, std::vector<std::string>& out) {
  if (n == 1) {
    out.push_back("()");
    return;
  }
  // Partition n-1 nodes into at least two child subtrees.
  std::vector<std::string> result;
  std::function<void(int, int, std::vector<std::string>&)> split =
      [&](int remaining, int min_size, std::vector<std::string>& parts) {
        if (remaining == 0) {
          if (parts.size() >= 2) {
            std::vector<std::string> sorted = parts;
            std::sort(sorted.begin(), sorted.end());
            std::string s = "(";
            for (const auto& q : sorted) s += q;
            s += ")";
            result.push_back(s);
          }
          return;
        }
        for (int k = min_size; k <= remaining; ++k) {
          std::vector<std::string> subs;
          shapes(k, subs);
          for (const auto& sub : subs) {
            parts.push_back(sub);
            split(remaining - k, k, parts);
            parts.pop_back();
          }
        }
      };
  std::vector<std::string> parts;
  split(n - 1, 1, parts);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  out.insert(out.end(), result.begin(), result.end());
}

// Parse a shape string back into a poset (root below all descendants).
cfpo::ColoredPoset shape_to_poset(const std::string& s) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> rels;
  std::vector<int> stack;
  int next = 0;
  for (char ch : s) {
    if (ch == '(') {
      int id = next++;
      elements.push_back("t" + std::to_string(id));
      if (!stack.empty())
        rels.emplace_back("t" + std::to_string(stack.back()), "t" + std::to_string(id));
      stack.push_back(id);
    } else {
      stack.pop_back();
    }
  }
  return cfpo::ColoredPoset::build(elements, rels);
}

}  // namespace

std::vector<cfpo::ColoredPoset> ramified_trees(int n) {
  std::vector<std::string> out;
  shapes(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<cfpo::ColoredPoset> trees;
  for (const auto& s : out) trees.push_back(shape_to_poset(s));
  return trees;
}

bool transitive_on_maximals(const cfpo::ColoredPoset& p) {
  std::vector<std::string> maximals;
  for (int i = 0; i < p.size(); ++i) {
    bool mx = true;
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j)) {
        mx = false;
        break;
      }
    if (mx) maximals.push_back(p.id_of(i));
  }
  if (maximals.size() <= 1) return true;
  cfpo::PermGroup g = cfpo::automorphisms(p, cfpo::AutOptions{p.size(), 1'000'000});
  auto elems = g.generate();
  for (std::size_t i = 1; i < maximals.size(); ++i) {
    bool reached = false;
    for (const auto& f : elems)
      if (g.apply(f, maximals[0]) == maximals[i]) {
        reached = true;
        break;
      }
    if (!reached) return false;
  }
  return true;
}

}  // namespace oracle
