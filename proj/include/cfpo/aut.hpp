#ifndef CFPO_AUT_HPP
#define CFPO_AUT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfpo/poset.hpp"

namespace cfpo {

// Permutation of carrier indices.
using Perm = std::vector<int>;

class PermGroup {
 public:
  PermGroup(std::vector<std::string> carrier, std::vector<Perm> generators,
            std::optional<std::vector<Perm>> elements);

  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool materialised() const { return elements_.has_value(); }
  const std::vector<Perm>& elements() const;  // TooLarge when not materialised

  // Closure of the generators, capped; sorted. Cached when already known.
  std::vector<Perm> generate(long long cap = 1'000'000) const;
  long long order(long long cap = 1'000'000) const;

  std::string apply(const Perm& f, const std::string& id) const;

 private:
  std::vector<std::string> carrier_;
  std::vector<Perm> generators_;
  std::optional<std::vector<Perm>> elements_;
};

struct AutOptions {
  int carrier_bound = 10;            // materialise elements up to this carrier size
  long long group_bound = 1'000'000; // hard cap on enumerated group order
};

PermGroup automorphisms(const ColoredPoset& p, const AutOptions& opt = {});

// Orbit partition of k-tuples under the diagonal action, deterministic order.
std::vector<std::vector<std::vector<std::string>>> orbits(const ColoredPoset& p, int k,
                                                          const AutOptions& opt = {});

std::vector<std::string> fixed_points(const ColoredPoset& p);

// Reduction of k-orbit membership to 2-orbit data on adjacent tuple pairs
// (pairs with no tuple entry strictly between, diagonal included).
bool same_orbit_criterion(const ColoredPoset& p, const std::vector<std::string>& a,
                          const std::vector<std::string>& b);

// Same criterion with the 2-orbit table precomputed once per poset.
class OrbitCriterion {
 public:
  explicit OrbitCriterion(const ColoredPoset& p, const AutOptions& opt = {});
  bool same_orbit(const std::vector<std::string>& a, const std::vector<std::string>& b) const;

 private:
  const ColoredPoset& p_;
  std::map<std::pair<int, int>, int> two_orbit_;
  // between_[i][j]: elements strictly inside the path from i to j, or nullopt
  // when i and j are in different components.
  std::vector<std::vector<std::optional<std::set<int>>>> between_;
};

std::vector<std::string> support(const PermGroup& g, const Perm& f);

// Equality of the generated groups; CarrierMismatch when the carriers differ
// as sets.
bool groups_equal(const PermGroup& g, const PermGroup& h);

// Imprimitive wreath product G wr H: H permutes the blocks (its own carrier),
// G acts inside each block; carrier ids are "<block>.<point>".
PermGroup wreath_product(const PermGroup& g, const PermGroup& h, long long cap = 1'000'000);

// Finite fh-regularity: maximal chains pairwise isomorphic, ramification of
// non-maximal elements at least 2, equal depth implies equal ramification.
bool is_fh_regular(const ColoredPoset& t);

// Helpers shared by the enumeration and tree constructions.
std::optional<std::map<std::string, std::string>> find_isomorphism(const ColoredPoset& p,
                                                                   const ColoredPoset& q);
std::string canonical_certificate(const ColoredPoset& p);

}  // namespace cfpo

#endif
