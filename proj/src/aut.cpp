#include "cfpo/aut.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cfpo/error.hpp"
#include "cfpo/paths.hpp"

namespace cfpo {

namespace {

Perm identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

// One refinement round: signature of x from its colours/degrees (round 0) or
// the previous classes plus the relation profile against every class.
std::vector<int> refine_classes(const ColoredPoset& p) {
  const int n = p.size();
  std::vector<std::string> keys(n);
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    for (const auto& c : p.colors_of(i)) os << c << ",";
    os << "#" << p.down_set(i).size() << "," << p.up_set(i).size();
    keys[i] = os.str();
  }
  auto compress = [&](const std::vector<std::string>& raw) {
    std::vector<std::string> sorted(raw);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i)
      cls[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), raw[i]) - sorted.begin());
    return cls;
  };
  std::vector<int> cls = compress(keys);
  while (true) {
    int before = *std::max_element(cls.begin(), cls.end());
    std::vector<std::string> raw(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> profile;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        char rel = p.less(i, j) ? '<' : (p.less(j, i) ? '>' : '|');
        profile.push_back(std::to_string(cls[j]) + rel);
      }
      std::sort(profile.begin(), profile.end());
      std::ostringstream os;
      os << cls[i] << "!";
      for (const auto& s : profile) os << s << ";";
      raw[i] = os.str();
    }
    cls = compress(raw);
    if (*std::max_element(cls.begin(), cls.end()) == before) break;
  }
  return cls;
}

void aut_search(const ColoredPoset& p, const std::vector<int>& cls, std::vector<int>& m,
                std::vector<char>& used, std::vector<Perm>& out, long long cap) {
  int k = static_cast<int>(m.size());
  const int n = p.size();
  if (k == n) {
    if (static_cast<long long>(out.size()) >= cap)
      fail("TooLarge", "automorphism group exceeds the materialisation bound");
    out.push_back(m);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || cls[cand] != cls[k]) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      ok = (p.leq(k, j) == p.leq(cand, m[j])) && (p.leq(j, k) == p.leq(m[j], cand));
    if (!ok) continue;
    m.push_back(cand);
    used[cand] = 1;
    aut_search(p, cls, m, used, out, cap);
    used[cand] = 0;
    m.pop_back();
  }
}

std::vector<Perm> close_under_product(const std::vector<Perm>& gens, int n, long long cap) {
  std::set<Perm> seen;
  std::vector<Perm> queue{identity(n)};
  seen.insert(queue.front());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : gens) {
      Perm next = compose(queue[qi], g);
      if (seen.insert(next).second) {
        if (static_cast<long long>(seen.size()) > cap)
          fail("TooLarge", "group closure exceeds the cap");
        queue.push_back(std::move(next));
      }
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<Perm> reduce_generators(const std::vector<Perm>& elements, int n) {
  std::vector<Perm> gens;
  std::set<Perm> span{identity(n)};
  for (const auto& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    auto closed = close_under_product(gens, n, static_cast<long long>(elements.size()) + 1);
    span = std::set<Perm>(closed.begin(), closed.end());
    if (span.size() == elements.size()) break;
  }
  if (gens.empty()) gens.push_back(identity(n));
  return gens;
}

}  // namespace

PermGroup::PermGroup(std::vector<std::string> carrier, std::vector<Perm> generators,
                     std::optional<std::vector<Perm>> elements)
    : carrier_(std::move(carrier)), generators_(std::move(generators)), elements_(std::move(elements)) {
  if (generators_.empty()) generators_.push_back(identity(static_cast<int>(carrier_.size())));
  if (elements_) std::sort(elements_->begin(), elements_->end());
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!elements_) fail("TooLarge", "group is generator-only; raise the materialisation bound");
  return *elements_;
}

std::vector<Perm> PermGroup::generate(long long cap) const {
  if (elements_) return *elements_;
  return close_under_product(generators_, static_cast<int>(carrier_.size()), cap);
}

long long PermGroup::order(long long cap) const { return static_cast<long long>(generate(cap).size()); }

std::string PermGroup::apply(const Perm& f, const std::string& id) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), id);
  if (it == carrier_.end()) fail("UnknownElement", id + " is not in the carrier");
  return carrier_[f[it - carrier_.begin()]];
}

PermGroup automorphisms(const ColoredPoset& p, const AutOptions& opt) {
  auto cls = refine_classes(p);
  std::vector<Perm> all;
  std::vector<int> m;
  std::vector<char> used(p.size(), 0);
  aut_search(p, cls, m, used, all, opt.group_bound);
  std::sort(all.begin(), all.end());
  auto gens = reduce_generators(all, p.size());
  if (p.size() <= opt.carrier_bound)
    return PermGroup(p.elements(), std::move(gens), std::move(all));
  return PermGroup(p.elements(), std::move(gens), std::nullopt);
}

std::vector<std::vector<std::vector<std::string>>> orbits(const ColoredPoset& p, int k,
                                                          const AutOptions& opt) {
  if (k < 1) fail("InvalidSize", "orbit arity must be positive");
  PermGroup g = automorphisms(p, opt);
  const auto& elems = g.elements();
  const int n = p.size();
  double total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  if (total > 2'000'000) fail("TooLarge", "tuple space too large to materialise");
  std::map<std::vector<int>, int> orbit_of;
  std::vector<std::vector<std::vector<std::string>>> out;
  std::vector<int> tuple(k, 0);
  auto advance = [&]() {
    for (int i = k - 1; i >= 0; --i) {
      if (++tuple[i] < n) return true;
      tuple[i] = 0;
    }
    return false;
  };
  if (n == 0) return out;
  do {
    if (orbit_of.count(tuple)) continue;
    int oid = static_cast<int>(out.size());
    std::vector<std::vector<int>> members;
    for (const auto& f : elems) {
      std::vector<int> img(k);
      for (int i = 0; i < k; ++i) img[i] = f[tuple[i]];
      if (orbit_of.emplace(img, oid).second) members.push_back(std::move(img));
    }
    std::sort(members.begin(), members.end());
    std::vector<std::vector<std::string>> named;
    for (const auto& t : members) {
      std::vector<std::string> ids;
      for (int i : t) ids.push_back(p.id_of(i));
      named.push_back(std::move(ids));
    }
    out.push_back(std::move(named));
  } while (advance());
  return out;
}

std::vector<std::string> fixed_points(const ColoredPoset& p) {
  PermGroup g = automorphisms(p, AutOptions{0, 1'000'000});
  std::vector<std::string> out;
  for (int i = 0; i < p.size(); ++i) {
    bool fixed = true;
    for (const auto& f : g.generators())
      if (f[i] != i) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p.id_of(i));
  }
  return out;
}

OrbitCriterion::OrbitCriterion(const ColoredPoset& p, const AutOptions& opt) : p_(p) {
  PathContext ctx(p);
  ctx.require_cfpo();
  PermGroup g = automorphisms(p, AutOptions{p.size(), opt.group_bound});
  const auto& elems = g.elements();
  int next = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (two_orbit_.count({i, j})) continue;
      for (const auto& f : elems) two_orbit_.emplace(std::make_pair(f[i], f[j]), next);
      ++next;
    }
  between_.assign(p.size(), std::vector<std::optional<std::set<int>>>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      auto full = ctx.path_full(i, j);
      if (!full) continue;  // different components
      std::set<int> inner;
      for (int v : *full)
        if (v < p.size() && v != i && v != j) inner.insert(v);
      between_[i][j] = std::move(inner);
    }
}

bool OrbitCriterion::same_orbit(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) const {
  if (a.size() != b.size() || a.empty())
    fail("InvalidSize", "tuples must be nonempty and of equal length");
  const int k = static_cast<int>(a.size());
  std::vector<int> ai(k), bi(k);
  for (int i = 0; i < k; ++i) {
    ai[i] = p_.index_of(a[i]);
    bi[i] = p_.index_of(b[i]);
  }
  // The candidate isomorphism is index-respecting: a_i -> b_i.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if ((ai[i] == ai[j]) != (bi[i] == bi[j])) return false;
      if (p_.leq(ai[i], ai[j]) != p_.leq(bi[i], bi[j])) return false;
    }
  for (int i = 0; i < k; ++i)
    if (p_.colors_of(ai[i]) != p_.colors_of(bi[i])) return false;
  // Adjacent pairs: no other tuple entry strictly inside the path between
  // them. Pairs in different components count as adjacent; their 2-orbit
  // carries the component-separation information. Diagonal pairs carry the
  // 1-orbit information.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const auto& inner = between_[ai[i]][ai[j]];
      bool adjacent = true;
      if (inner)
        for (int l = 0; l < k && adjacent; ++l)
          if (inner->count(ai[l])) adjacent = false;
      if (!adjacent) continue;
      if (two_orbit_.at({ai[i], ai[j]}) != two_orbit_.at({bi[i], bi[j]})) return false;
    }
  return true;
}

bool same_orbit_criterion(const ColoredPoset& p, const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
  return OrbitCriterion(p).same_orbit(a, b);
}

std::vector<std::string> support(const PermGroup& g, const Perm& f) {
  std::vector<std::string> out;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != static_cast<int>(i)) out.push_back(g.carrier()[i]);
  return out;
}

bool groups_equal(const PermGroup& g, const PermGroup& h) {
  std::vector<std::string> cg = g.carrier(), ch = h.carrier();
  std::sort(cg.begin(), cg.end());
  std::sort(ch.begin(), ch.end());
  if (cg != ch) fail("CarrierMismatch", "groups act on different carriers");
  auto normalise = [&](const PermGroup& grp, const std::vector<std::string>& sorted_ids) {
    std::map<std::string, int> rank;
    for (size_t i = 0; i < sorted_ids.size(); ++i) rank[sorted_ids[i]] = static_cast<int>(i);
    std::set<Perm> out;
    for (const auto& f : grp.generate()) {
      Perm nf(sorted_ids.size());
      for (size_t i = 0; i < grp.carrier().size(); ++i)
        nf[rank.at(grp.carrier()[i])] = rank.at(grp.carrier()[f[i]]);
      out.insert(std::move(nf));
    }
    return out;
  };
  return normalise(g, cg) == normalise(h, cg);
}

PermGroup wreath_product(const PermGroup& g, const PermGroup& h, long long cap) {
  auto gelems = g.generate(cap);
  auto helems = h.generate(cap);
  const int blocks = static_cast<int>(h.carrier().size());
  const int inner = static_cast<int>(g.carrier().size());
  double order = static_cast<double>(helems.size());
  for (int i = 0; i < blocks; ++i) order *= static_cast<double>(gelems.size());
  if (order > static_cast<double>(cap)) fail("TooLarge", "wreath product exceeds the cap");
  std::vector<std::string> carrier;
  for (const auto& s : h.carrier())
    for (const auto& m : g.carrier()) carrier.push_back(s + "." + m);
  std::vector<Perm> elems;
  std::vector<int> eta(blocks, 0);  // odometer over gelems per block
  while (true) {
    for (const auto& hp : helems) {
      Perm f(carrier.size());
      for (int s = 0; s < blocks; ++s)
        for (int m = 0; m < inner; ++m) {
          int s2 = hp[s];
          f[s * inner + m] = s2 * inner + gelems[eta[s2]][m];
        }
      elems.push_back(std::move(f));
    }
    int i = blocks - 1;
    while (i >= 0 && ++eta[i] == static_cast<int>(gelems.size())) eta[i--] = 0;
    if (i < 0) break;
  }
  std::sort(elems.begin(), elems.end());
  auto gens = reduce_generators(elems, static_cast<int>(carrier.size()));
  return PermGroup(std::move(carrier), std::move(gens), std::move(elems));
}

bool is_fh_regular(const ColoredPoset& t) {
  if (!is_tree(t)) fail("NotATree", "fh-regularity is defined on trees");
  auto cov = covers(t);
  const int n = t.size();
  std::vector<int> depth(n), ram(n);
  for (int i = 0; i < n; ++i) {
    depth[i] = static_cast<int>(t.down_set(i).size());
    ram[i] = static_cast<int>(cov.upper[i].size());
  }
  int leaf_depth = -1;
  for (int i = 0; i < n; ++i) {
    if (ram[i] == 0) {  // maximal
      if (leaf_depth == -1) leaf_depth = depth[i];
      if (depth[i] != leaf_depth) return false;
    } else {
      if (ram[i] < 2) return false;
    }
  }
  std::map<int, int> ram_at_depth;
  for (int i = 0; i < n; ++i) {
    if (ram[i] == 0) continue;
    auto [it, fresh] = ram_at_depth.emplace(depth[i], ram[i]);
    if (!fresh && it->second != ram[i]) return false;
  }
  return true;
}

namespace {

// Parallel refinement over two posets with a shared signature pool; the class
// ids are comparable between the posets.
bool refine_pair(const ColoredPoset& p, const ColoredPoset& q, std::vector<int>& cp,
                 std::vector<int>& cq) {
  auto initial = [](const ColoredPoset& r, int i) {
    std::ostringstream os;
    for (const auto& c : r.colors_of(i)) os << c << ",";
    os << "#" << r.down_set(i).size() << "," << r.up_set(i).size();
    return os.str();
  };
  const int n = p.size();
  std::vector<std::string> kp(n), kq(n);
  for (int i = 0; i < n; ++i) {
    kp[i] = initial(p, i);
    kq[i] = initial(q, i);
  }
  auto compress = [&](std::vector<int>& op, std::vector<int>& oq, const std::vector<std::string>& rp,
                      const std::vector<std::string>& rq) {
    std::vector<std::string> pool(rp);
    pool.insert(pool.end(), rq.begin(), rq.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    op.resize(n);
    oq.resize(n);
    for (int i = 0; i < n; ++i) {
      op[i] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), rp[i]) - pool.begin());
      oq[i] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), rq[i]) - pool.begin());
    }
  };
  compress(cp, cq, kp, kq);
  while (true) {
    auto histogram = [&](const std::vector<int>& c) {
      std::map<int, int> h;
      for (int x : c) ++h[x];
      return h;
    };
    if (histogram(cp) != histogram(cq)) return false;
    int before = *std::max_element(cp.begin(), cp.end());
    auto round = [&](const ColoredPoset& r, const std::vector<int>& c) {
      std::vector<std::string> raw(n);
      for (int i = 0; i < n; ++i) {
        std::vector<std::string> profile;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          char rel = r.less(i, j) ? '<' : (r.less(j, i) ? '>' : '|');
          profile.push_back(std::to_string(c[j]) + rel);
        }
        std::sort(profile.begin(), profile.end());
        std::ostringstream os;
        os << c[i] << "!";
        for (const auto& s : profile) os << s << ";";
        raw[i] = os.str();
      }
      return raw;
    };
    auto rp = round(p, cp), rq = round(q, cq);
    compress(cp, cq, rp, rq);
    if (*std::max_element(cp.begin(), cp.end()) == before) break;
  }
  auto histogram = [&](const std::vector<int>& c) {
    std::map<int, int> h;
    for (int x : c) ++h[x];
    return h;
  };
  return histogram(cp) == histogram(cq);
}

bool iso_search(const ColoredPoset& p, const ColoredPoset& q, const std::vector<int>& cp,
                const std::vector<int>& cq, std::vector<int>& m, std::vector<char>& used) {
  int k = static_cast<int>(m.size());
  if (k == p.size()) return true;
  for (int cand = 0; cand < q.size(); ++cand) {
    if (used[cand] || cq[cand] != cp[k]) continue;
    bool ok = p.colors_of(k) == q.colors_of(cand);
    for (int j = 0; j < k && ok; ++j)
      ok = (p.leq(k, j) == q.leq(cand, m[j])) && (p.leq(j, k) == q.leq(m[j], cand));
    if (!ok) continue;
    m.push_back(cand);
    used[cand] = 1;
    if (iso_search(p, q, cp, cq, m, used)) return true;
    used[cand] = 0;
    m.pop_back();
  }
  return false;
}

struct CanonState {
  const ColoredPoset* p;
  std::vector<int> cell_of_pos;           // which refinement class each position draws from
  std::vector<std::vector<int>> cells;    // members per class, ascending
  std::vector<int> perm;
  std::vector<char> used;
  std::string cur;
  std::string best;
  bool has_best = false;
};

void canon_search(CanonState& st, int depth, bool tight) {
  const int n = st.p->size();
  if (depth == n) {
    if (!st.has_best || st.cur < st.best) {
      st.best = st.cur;
      st.has_best = true;
    }
    return;
  }
  for (int cand : st.cells[st.cell_of_pos[depth]]) {
    if (st.used[cand]) continue;
    std::string seg;
    for (int j = 0; j < depth; ++j) {
      int prev = st.perm[j];
      seg += st.p->less(prev, cand) ? '1' : (st.p->less(cand, prev) ? '2' : '0');
    }
    bool next_tight = tight;
    if (st.has_best && tight) {
      std::string bseg = st.best.substr(st.cur.size(), seg.size());
      if (seg > bseg) continue;
      if (seg < bseg) next_tight = false;
    }
    st.perm.push_back(cand);
    st.used[cand] = 1;
    size_t mark = st.cur.size();
    st.cur += seg;
    canon_search(st, depth + 1, next_tight);
    st.cur.resize(mark);
    st.used[cand] = 0;
    st.perm.pop_back();
  }
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_isomorphism(const ColoredPoset& p,
                                                                   const ColoredPoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.size() == 0) return std::map<std::string, std::string>{};
  std::vector<int> cp, cq;
  if (!refine_pair(p, q, cp, cq)) return std::nullopt;
  std::vector<int> m;
  std::vector<char> used(q.size(), 0);
  if (!iso_search(p, q, cp, cq, m, used)) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int i = 0; i < p.size(); ++i) out[p.id_of(i)] = q.id_of(m[i]);
  return out;
}

std::string canonical_certificate(const ColoredPoset& p) {
  const int n = p.size();
  auto cls = refine_classes(p);
  int classes = n == 0 ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  CanonState st;
  st.p = &p;
  st.cells.resize(classes);
  for (int i = 0; i < n; ++i) st.cells[cls[i]].push_back(i);
  std::ostringstream header;
  header << n << ";";
  for (int c = 0; c < classes; ++c) {
    header << st.cells[c].size() << "[";
    for (const auto& col : p.colors_of(st.cells[c][0])) header << col << ",";
    header << "]";
    for (size_t i = 0; i < st.cells[c].size(); ++i) st.cell_of_pos.push_back(c);
  }
  header << ";";
  st.used.assign(n, 0);
  canon_search(st, 0, true);
  return header.str() + st.best;
}

}  // namespace cfpo
