#include "cfpo/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cfpo/aut.hpp"
#include "cfpo/error.hpp"
#include "cfpo/paths.hpp"

namespace cfpo {

namespace {

std::string invariant_key(const ColoredPoset& p) {
  std::vector<std::string> profile;
  for (int i = 0; i < p.size(); ++i) {
    std::ostringstream os;
    os << p.down_set(i).size() << "," << p.up_set(i).size();
    profile.push_back(os.str());
  }
  std::sort(profile.begin(), profile.end());
  std::ostringstream os;
  os << p.size() << ":";
  for (const auto& s : profile) os << s << ";";
  return os.str();
}

std::vector<ColoredPoset> next_level(const std::vector<ColoredPoset>& level) {
  std::map<std::string, std::vector<ColoredPoset>> buckets;
  std::vector<ColoredPoset> out;
  for (const auto& p : level) {
    const int n = p.size();
    std::string fresh = "x" + std::to_string(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool ideal = true;
      for (int i = 0; i < n && ideal; ++i) {
        if (!(mask & (1u << i))) continue;
        for (int j = 0; j < n && ideal; ++j)
          if (p.leq(j, i) && !(mask & (1u << j))) ideal = false;
      }
      if (!ideal) continue;
      std::vector<std::string> els = p.elements();
      els.push_back(fresh);
      auto rels = p.relation_pairs();
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) rels.emplace_back(p.id_of(i), fresh);
      ColoredPoset cand = ColoredPoset::build(els, rels);
      std::string key = invariant_key(cand);
      auto& bucket = buckets[key];
      bool dup = false;
      for (const auto& seen : bucket)
        if (find_isomorphism(cand, seen)) {
          dup = true;
          break;
        }
      if (!dup) {
        bucket.push_back(cand);
        out.push_back(std::move(cand));
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<ColoredPoset>& all_posets(int n) {
  if (n < 1 || n > 9) fail("InvalidSize", "enumeration is supported for 1..9 elements");
  static std::vector<std::vector<ColoredPoset>> cache;  // cache[k] = posets on k+1 elements
  while (static_cast<int>(cache.size()) < n) {
    if (cache.empty())
      cache.push_back({ColoredPoset::build({"x0"}, {})});
    else
      cache.push_back(next_level(cache.back()));
  }
  return cache[n - 1];
}

std::vector<ColoredPoset> connected_cfpos(int n) {
  std::vector<ColoredPoset> out;
  for (const auto& p : all_posets(n))
    if (is_connected(p) && is_cfpo(p)) out.push_back(p);
  return out;
}

bool is_connected(const ColoredPoset& p) { return components(p).size() == 1; }

}  // namespace cfpo
