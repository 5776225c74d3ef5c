#include "cfpo/treeify.hpp"

#include <algorithm>
#include <set>

#include "cfpo/alt.hpp"
#include "cfpo/aut.hpp"
#include "cfpo/error.hpp"
#include "cfpo/paths.hpp"

namespace cfpo {

namespace {

void require_connected_cfpo(const PathContext& ctx) {
  ctx.require_cfpo();
  if (ctx.components().size() != 1) fail("NotConnected", "input has several components");
}

bool is_fixed(const PermGroup& g, int index) {
  for (const auto& f : g.generators())
    if (f[index] != index) return false;
  return true;
}

// Restriction of every group element to a sub-carrier; the subset must be
// setwise invariant.
std::set<std::vector<int>> restricted_elements(const PermGroup& g,
                                               const std::vector<std::string>& sub) {
  std::map<std::string, int> rank;
  for (size_t i = 0; i < sub.size(); ++i) rank[sub[i]] = static_cast<int>(i);
  std::set<std::vector<int>> out;
  for (const auto& f : g.generate()) {
    std::vector<int> rf(sub.size());
    for (size_t i = 0; i < g.carrier().size(); ++i) {
      auto it = rank.find(g.carrier()[i]);
      if (it == rank.end()) continue;
      rf[it->second] = rank.at(g.carrier()[f[i]]);
    }
    out.insert(std::move(rf));
  }
  return out;
}

// Alternating reach layers around a root; works on any finite poset.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> layer_partition(
    const ColoredPoset& p, int ri) {
  std::vector<std::vector<int>> xs, ys;
  std::vector<char> seen(p.size(), 0);
  std::vector<int> x0, y0;
  for (int t = 0; t < p.size(); ++t) {
    if (p.leq(ri, t)) {
      x0.push_back(t);
      seen[t] = 1;
    } else if (p.less(t, ri)) {
      y0.push_back(t);
      seen[t] = 1;
    }
  }
  xs.push_back(x0);
  ys.push_back(y0);
  std::vector<int> x_prev = x0, y_prev = y0;
  while (true) {
    std::vector<int> xn, yn;
    for (int t = 0; t < p.size(); ++t) {
      if (seen[t]) continue;
      for (int y : y_prev)
        if (p.leq(y, t)) {
          xn.push_back(t);
          break;
        }
    }
    for (int t : xn) seen[t] = 1;
    for (int t = 0; t < p.size(); ++t) {
      if (seen[t]) continue;
      for (int x : x_prev)
        if (p.less(t, x)) {
          yn.push_back(t);
          break;
        }
    }
    for (int t : yn) seen[t] = 1;
    if (xn.empty() && yn.empty()) break;
    xs.push_back(xn);
    ys.push_back(yn);
    x_prev = xn;
    y_prev = yn;
  }
  return {xs, ys};
}

}  // namespace

XYPartition partition_xy(const ColoredPoset& m, const std::string& r) {
  PathContext ctx(m);
  require_connected_cfpo(ctx);
  auto [xs, ys] = layer_partition(m, m.index_of(r));
  XYPartition part;
  part.root = r;
  auto names = [&](const std::vector<int>& v) {
    std::vector<std::string> out;
    for (int i : v) out.push_back(m.id_of(i));
    return out;
  };
  for (const auto& layer : xs) part.x_layers.push_back(names(layer));
  for (const auto& layer : ys) part.y_layers.push_back(names(layer));
  return part;
}

TreeifyResult treeify_fixed_point(const ColoredPoset& m, const std::string& r) {
  PathContext ctx(m);
  require_connected_cfpo(ctx);
  int ri = m.index_of(r);
  PermGroup aut_m = automorphisms(m, AutOptions{m.size(), 1'000'000});
  if (!is_fixed(aut_m, ri)) fail("NotAFixedPoint", r + " is moved by some automorphism");

  // The tree lives on the cut completion: branchings of the order may happen
  // at cut points, and dropping them collapses distinct branches of the tree.
  const ColoredPoset& q = ctx.completion().completed;
  auto [xs, ys] = layer_partition(q, ri);
  std::vector<std::string> u;
  {
    std::set<int> in_x;
    for (const auto& layer : xs)
      for (int i : layer) in_x.insert(i);
    for (int i : in_x) u.push_back(q.id_of(i));
  }
  std::vector<std::pair<std::string, std::string>> rels;
  for (int t = 0; t < q.size(); ++t) {
    auto pf = ctx.path_full(ri, t);
    for (int s : *pf)
      if (s != t) rels.emplace_back(q.id_of(s), q.id_of(t));
  }
  ColoredPoset::Colors cols = m.colors();
  cols["U"] = std::set<std::string>(u.begin(), u.end());
  cols["VIRTUAL"] = std::set<std::string>(ctx.completion().virtual_ids.begin(),
                                          ctx.completion().virtual_ids.end());
  ColoredPoset tree = ColoredPoset::build(q.elements(), rels, cols, true);
  if (!is_tree(tree)) fail("VerificationFailed", "conversion did not produce a tree");
  PermGroup aut_t = automorphisms(tree, AutOptions{tree.size(), 1'000'000});
  if (restricted_elements(aut_t, m.elements()) != restricted_elements(aut_m, m.elements()))
    fail("VerificationFailed", "tree conversion changed the automorphism group");

  TreeifyResult res;
  res.tree = tree;
  res.u = u;
  res.root = r;
  res.provenance = "fixed_point";
  for (const auto& e : m.elements()) res.carrier_map[e] = e;
  return res;
}

ColoredPoset interpret_back(const ColoredPoset& tree_in, bool exclude_root) {
  if (!is_tree(tree_in)) fail("NotATree", "interpretation requires a tree");
  ColoredPoset tree = tree_in;
  if (exclude_root) {
    // Drop the unique minimum.
    int root = -1;
    for (int i = 0; i < tree.size(); ++i) {
      bool minimal = true;
      for (int j = 0; j < tree.size(); ++j)
        if (tree.less(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) {
        root = i;
        break;
      }
    }
    std::vector<std::string> rest;
    for (int i = 0; i < tree.size(); ++i)
      if (i != root) rest.push_back(tree.id_of(i));
    tree = tree_in.induced(rest);
  }
  const int n = tree.size();
  std::vector<char> u(n, 0);
  for (int i = 0; i < n; ++i) u[i] = tree.has_color("U", i) ? 1 : 0;

  auto between_all_u = [&](int lo, int hi, bool want_u) {
    for (int z = 0; z < n; ++z)
      if (tree.leq(lo, z) && tree.leq(z, hi) && u[z] != (want_u ? 1 : 0)) return false;
    return true;
  };
  auto holds = [&](int x, int y) {
    // (a) x <=_T y through U only.
    if (tree.leq(x, y) && between_all_u(x, y, true)) return true;
    // (b) y <=_T x through non-U only.
    if (tree.leq(y, x) && between_all_u(y, x, false)) return true;
    // (c) a common lower bound of x and y from which the route to x runs
    // entirely outside U and the route to y entirely inside U; a step from a
    // node to its child raises the recovered order exactly when the child is
    // in U, so such a bound witnesses a monotone rise from x up to y.
    if (u[y] && !u[x]) {
      for (int z = 0; z < n; ++z) {
        if (!tree.leq(z, x) || !tree.leq(z, y)) continue;
        bool ok = true;
        for (int w = 0; w < n && ok; ++w) {
          if (w == z) continue;
          if (tree.leq(z, w) && tree.leq(w, x) && u[w]) ok = false;
          if (tree.leq(z, w) && tree.leq(w, y) && !u[w]) ok = false;
        }
        if (ok) return true;
      }
    }
    return false;
  };
  // Cut points participate in the clause evaluation but are not part of the
  // recovered order.
  std::vector<char> real(n, 1);
  for (int i = 0; i < n; ++i)
    if (tree.has_color("VIRTUAL", i)) real[i] = 0;
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i)
    if (real[i]) ids.push_back(tree.id_of(i));
  std::vector<std::pair<std::string, std::string>> rels;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (real[x] && real[y] && x != y && holds(x, y))
        rels.emplace_back(tree.id_of(x), tree.id_of(y));
  ColoredPoset::Colors cols;
  for (const auto& [name, members] : tree.colors()) {
    if (name == "U" || name == "ROOT" || name == "VIRTUAL") continue;
    cols[name] = members;
  }
  return ColoredPoset::build(ids, rels, cols, true);
}

std::pair<std::string, std::string> find_path_fixed_points(const ColoredPoset& m,
                                                           const std::vector<std::string>& a,
                                                           const std::vector<std::string>& b) {
  PathContext ctx(m);
  require_connected_cfpo(ctx);
  if (a.empty() || b.empty()) fail("EmptySet", "both sets must be nonempty");
  std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  for (const auto& x : sa)
    if (sb.count(x)) fail("Disjointness", "sets share the element " + x);
  auto closed = [&](const std::set<std::string>& s) {
    auto cc = connection_closure(m, std::vector<std::string>(s.begin(), s.end()));
    return std::set<std::string>(cc.elements.begin(), cc.elements.end()) == s;
  };
  if (!closed(sa) || !closed(sb))
    fail("NotConnectedSubset", "sets must be closed under paths between their members");
  PermGroup aut = automorphisms(m, AutOptions{m.size(), 1'000'000});
  auto invariant = [&](const std::set<std::string>& s) {
    for (const auto& f : aut.generators())
      for (const auto& x : s)
        if (!s.count(aut.apply(f, x))) return false;
    return true;
  };
  if (!invariant(sa) || !invariant(sb)) fail("NotInvariant", "sets must be setwise Aut-invariant");

  // One sweep of the induction: find the gateway of `from` towards `target`.
  auto sweep = [&](const std::vector<std::string>& from_order, const std::set<std::string>& from,
                   int target) {
    int c = m.index_of(from_order.front());
    while (true) {
      std::vector<int> missing;
      for (const auto& xid : from_order) {
        if (!from.count(xid)) continue;
        int x = m.index_of(xid);
        auto pf = ctx.path_full(x, target);
        if (!pf->count(c)) missing.push_back(x);
      }
      if (missing.empty()) return c;
      int anext = missing.front();
      auto p1 = ctx.path_full(c, target);
      auto p2 = ctx.path_full(anext, target);
      std::set<int> inter;
      std::set_intersection(p1->begin(), p1->end(), p2->begin(), p2->end(),
                            std::inserter(inter, inter.begin()));
      int found = -1;
      for (int z : inter)
        if (*ctx.path_full(z, target) == inter) {
          found = z;
          break;
        }
      if (found == -1 || ctx.completion().is_virtual_index(found))
        fail("NotRubinComplete", "the junction towards the target is a virtual point");
      c = found;
    }
  };
  std::vector<std::string> order_a, order_b;
  for (const auto& e : m.elements()) {
    if (sa.count(e)) order_a.push_back(e);
    if (sb.count(e)) order_b.push_back(e);
  }
  int b0 = m.index_of(order_b.front());
  int c = sweep(order_a, sa, b0);
  int d = sweep(order_b, sb, c);

  if (!is_fixed(aut, c) || !is_fixed(aut, d))
    fail("VerificationFailed", "computed junctions are not fixed points");
  auto ab = ctx.path_sets_full(std::vector<std::string>(order_a), std::vector<std::string>(order_b));
  auto cd = ctx.path_full(c, d);
  if (!cd || *cd != *ab) fail("VerificationFailed", "junction path does not realise <A,B>");
  return {m.id_of(c), m.id_of(d)};
}

Cfpo3Decomposition decompose_cfpo3(const ColoredPoset& m) {
  PathContext ctx(m);
  require_connected_cfpo(ctx);
  if (classify(m).n > 3) fail("NotCFPO3", "class exceeds 3");
  auto cov = covers(m);
  std::set<int> down_branch, up_branch;
  for (int i = 0; i < m.size(); ++i) {
    if (cov.lower[i].size() >= 2) down_branch.insert(i);
    if (cov.upper[i].size() >= 2) up_branch.insert(i);
  }
  Cfpo3Decomposition out;
  if (down_branch.empty() && up_branch.empty()) {
    out.upper = m.elements();  // a chain branches nowhere
    return out;
  }
  std::set<int> lower, upper;
  for (int i = 0; i < m.size(); ++i) {
    for (int b : down_branch)
      if (m.leq(i, b)) {
        lower.insert(i);
        break;
      }
    for (int b : up_branch)
      if (m.leq(b, i)) {
        upper.insert(i);
        break;
      }
  }
  for (int i = 0; i < m.size(); ++i) {
    if (upper.count(i))
      out.upper.push_back(m.id_of(i));  // junctions go to the upper part
    else if (lower.count(i))
      out.lower.push_back(m.id_of(i));
    else
      out.middle.push_back(m.id_of(i));
  }
  return out;
}

TreeifyResult treeify_cfpo3(const ColoredPoset& m) {
  PathContext ctx(m);
  require_connected_cfpo(ctx);
  if (classify(m).n > 3) fail("NotCFPO3", "class exceeds 3");
  auto fixed = fixed_points(m);
  if (fixed.empty()) fail("NoFixedPoint", "no element is fixed by every automorphism");
  TreeifyResult res = treeify_fixed_point(m, fixed.front());
  res.provenance = "cfpo3";
  return res;
}

namespace {

std::string fresh_color(const ColoredPoset& m, int index) {
  std::string name = "P_" + std::to_string(index);
  while (m.colors().count(name)) name = "P_" + std::to_string(++index);
  return name;
}

}  // namespace

TreeifyResult treeify_odd(const ColoredPoset& m) {
  PathContext ctx(m);
  require_connected_cfpo(ctx);
  Classification cls = classify(m);
  if (cls.n % 2 == 0) fail("NotOddClass", "class is " + std::to_string(cls.n));
  if (cls.n <= 3) {
    TreeifyResult res = treeify_cfpo3(m);
    return res;
  }
  PermGroup aut_m = automorphisms(m, AutOptions{m.size(), 1'000'000});
  std::vector<std::string> centre = center_midpoints(m);
  // Branches, rooted at their centre point.
  std::map<std::string, std::vector<std::string>> branch;
  std::set<std::string> covered;
  for (const auto& x : centre) {
    auto bx = branch_at(m, centre, x);
    for (const auto& y : bx) {
      if (y != x && covered.count(y))
        fail("VerificationFailed", "branches overlap outside the centre at " + y);
      covered.insert(y);
    }
    branch[x] = bx;
  }
  if (covered.size() != static_cast<size_t>(m.size()))
    fail("VerificationFailed", "branches do not cover the carrier");
  // Branch isomorphism types colour the centre.
  std::map<std::string, ColoredPoset> rooted;
  std::map<std::string, int> type_of;
  std::vector<ColoredPoset> types;
  for (const auto& x : centre) {
    ColoredPoset bp = m.induced(branch[x]).with_color("ROOT", {x});
    int t = -1;
    for (size_t i = 0; i < types.size(); ++i)
      if (find_isomorphism(bp, types[i])) {
        t = static_cast<int>(i);
        break;
      }
    if (t == -1) {
      types.push_back(bp);
      t = static_cast<int>(types.size()) - 1;
    }
    type_of[x] = t;
    rooted.emplace(x, std::move(bp));
  }
  ColoredPoset centre_poset = m.induced(centre);
  for (const auto& [x, t] : type_of)
    centre_poset = centre_poset.with_color("P_" + std::to_string(t), {x});
  TreeifyResult tc = treeify_cfpo3(centre_poset);

  std::map<std::string, TreeifyResult> tb;
  for (const auto& x : centre) tb.emplace(x, treeify_fixed_point(rooted.at(x), x));

  std::vector<std::pair<std::string, std::string>> rels;
  std::vector<std::string> elements = m.elements();
  std::set<std::string> virtuals;
  auto collect_virtuals = [&](const ColoredPoset& t) {
    auto it = t.colors().find("VIRTUAL");
    if (it == t.colors().end()) return;
    for (const auto& id : it->second) {
      virtuals.insert(id);
      elements.push_back(id);
    }
  };
  collect_virtuals(tc.tree);
  for (const auto& x : centre) collect_virtuals(tb.at(x).tree);
  for (const auto& [s, t] : tc.tree.relation_pairs()) rels.emplace_back(s, t);
  for (const auto& x : centre)
    for (const auto& [s, t] : tb.at(x).tree.relation_pairs()) rels.emplace_back(s, t);
  // Graft each branch tree above its centre point's position in the centre tree.
  for (const auto& x : centre) {
    const ColoredPoset& bt = tb.at(x).tree;
    for (const auto& s : tc.tree.elements()) {
      if (!tc.tree.leq(tc.tree.index_of(s), tc.tree.index_of(x)) || s == x) continue;
      for (const auto& y : bt.elements())
        if (y != x) rels.emplace_back(s, y);
    }
  }
  std::set<std::string> u_set;
  for (const auto& id : tc.u) u_set.insert(id);
  for (const auto& x : centre)
    for (const auto& id : tb.at(x).u)
      if (id != x) u_set.insert(id);
  ColoredPoset::Colors cols;
  for (const auto& [name, members] : m.colors()) cols[name] = members;
  cols["U"] = u_set;
  cols["VIRTUAL"] = virtuals;
  ColoredPoset tree = ColoredPoset::build(elements, rels, cols, true);
  if (!is_tree(tree)) fail("VerificationFailed", "grafting did not produce a tree");
  PermGroup aut_t = automorphisms(tree, AutOptions{tree.size(), 1'000'000});
  if (restricted_elements(aut_t, m.elements()) != restricted_elements(aut_m, m.elements()))
    fail("VerificationFailed", "tree conversion changed the automorphism group");
  TreeifyResult res;
  res.tree = tree;
  res.u.assign(u_set.begin(), u_set.end());
  res.root = tc.root;
  res.provenance = "odd_center";
  for (const auto& e : m.elements()) res.carrier_map[e] = e;
  return res;
}

ColoredPoset adjoin_orbit_points(const ColoredPoset& m, const std::string& e) {
  PathContext ctx(m);
  ctx.require_cfpo();
  Classification cls = classify(m);
  if (cls.n % 2 != 0) fail("NotEvenClass", "class is " + std::to_string(cls.n));
  int ei = m.index_of(e);
  bool witness = false;
  for (const auto& emb : alt_embeddings(m, cls.n))
    if (!emb.reversed && emb.images.front() == e) {
      witness = true;
      break;
    }
  if (!witness) fail("NotAWitness", e + " is not an a0-image of a maximal even fence");
  PermGroup aut_m = automorphisms(m, AutOptions{m.size(), 1'000'000});
  std::set<int> orbit{ei};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : std::set<int>(orbit))
      for (const auto& f : aut_m.generators())
        if (orbit.insert(f[x]).second) grew = true;
  }
  std::vector<std::string> elements = m.elements();
  std::vector<std::pair<std::string, std::string>> rels = m.relation_pairs();
  std::string color = fresh_color(m, 0);
  std::set<std::string> fresh_members;
  for (int x : orbit) {
    std::string id = m.id_of(x) + "'";
    while (m.contains(id) || fresh_members.count(id)) id += "'";
    elements.push_back(id);
    rels.emplace_back(id, m.id_of(x));
    fresh_members.insert(id);
  }
  ColoredPoset::Colors cols = m.colors();
  cols[color] = fresh_members;
  ColoredPoset out = ColoredPoset::build(elements, rels, cols, true);
  if (classify(out).n != cls.n + 1)
    fail("VerificationFailed", "adjoining did not raise the class by one");
  PermGroup aut_out = automorphisms(out, AutOptions{out.size(), 1'000'000});
  if (restricted_elements(aut_out, m.elements()) != restricted_elements(aut_m, m.elements()))
    fail("VerificationFailed", "adjoining changed the restricted automorphism group");
  return out;
}

TreeifyResult treeify_disconnected(const ColoredPoset& m) {
  PathContext ctx(m);
  ctx.require_cfpo();
  auto comps = ctx.components();
  if (comps.size() <= 1) return treeify(m);

  PermGroup aut_m = automorphisms(m, AutOptions{m.size(), 1'000'000});
  std::vector<std::pair<std::string, std::string>> rels;
  std::set<std::string> u_set;
  std::vector<std::string> elements = m.elements();
  std::set<std::string> virtuals;
  for (const auto& comp : comps) {
    ColoredPoset sub = m.induced(comp);
    auto fixed = fixed_points(sub);
    if (fixed.empty())
      fail("NoFixedPoint", "a component has no fixed point to root its tree at");
    // Isomorphism-invariant root choice: minimise the canonical certificate of
    // the root-marked component, ties by declared order.
    std::string best_key;
    std::string best_root;
    for (const auto& r : fixed) {
      std::string key = canonical_certificate(sub.with_color("ROOT", {r}));
      if (best_root.empty() || key < best_key) {
        best_key = key;
        best_root = r;
      }
    }
    TreeifyResult tr = treeify_fixed_point(sub, best_root);
    for (const auto& [s, t] : tr.tree.relation_pairs()) rels.emplace_back(s, t);
    for (const auto& id : tr.u) u_set.insert(id);
    auto it = tr.tree.colors().find("VIRTUAL");
    if (it != tr.tree.colors().end())
      for (const auto& id : it->second) {
        virtuals.insert(id);
        elements.push_back(id);
      }
  }
  std::string root_id = "ROOT";
  while (m.contains(root_id)) root_id = "_" + root_id;
  for (const auto& e : elements) rels.emplace_back(root_id, e);
  elements.push_back(root_id);
  ColoredPoset::Colors cols = m.colors();
  cols["U"] = u_set;
  cols["VIRTUAL"] = virtuals;
  ColoredPoset tree = ColoredPoset::build(elements, rels, cols, true);
  if (!is_tree(tree)) fail("VerificationFailed", "the joined result is not a tree");
  PermGroup aut_t = automorphisms(tree, AutOptions{tree.size(), 1'000'000});
  if (restricted_elements(aut_t, m.elements()) != restricted_elements(aut_m, m.elements()))
    fail("VerificationFailed", "tree conversion changed the automorphism group");
  TreeifyResult res;
  res.tree = tree;
  res.u.assign(u_set.begin(), u_set.end());
  res.root = root_id;
  res.provenance = "disconnected";
  for (const auto& e : m.elements()) res.carrier_map[e] = e;
  return res;
}

TreeifyResult treeify(const ColoredPoset& m) {
  PathContext ctx(m);
  ctx.require_cfpo();
  if (ctx.components().size() > 1) return treeify_disconnected(m);
  auto fixed = fixed_points(m);
  if (fixed.empty()) fail("NoFixedPoint", "no element is fixed by every automorphism");
  return treeify_fixed_point(m, fixed.front());
}

}  // namespace cfpo
