#pragma once

#include "pqs/rational.hpp"
#include "pqs/singularity.hpp"
#include "pqs/spherical.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

/// Multiset of singularity types, each stored in normalized form.
class Basket {
 public:
  Basket() = default;

  void add(const SingularityType& t, unsigned multiplicity = 1);
  const std::map<SingularityType, unsigned>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Number of points counted with multiplicity.
  std::size_t count() const;
  /// Sum of two baskets.
  Basket operator+(const Basket& o) const;
  /// Every entry 1/n(1,a) replaced by 1/n(1,n-a).
  Basket mirrored() const;

  /// "2x1/2(1,1) + 1/4(1,3)"; the empty basket prints as "{}".
  std::string to_string() const;
  /// Whitespace insensitive. Accepts "{}", "empty" and "" for the empty
  /// basket. Parse errors carry 1-based positions.
  static Basket parse(std::string_view text);

  auto operator<=>(const Basket&) const = default;

 private:
  std::map<SingularityType, unsigned> entries_;
};

struct BasketInvariants {
  Rational k, e, B, gamma, mu;
  long long l = 0;
  long long I = 1;      // lcm of the per-type indices
  long long I_alt = 1;  // same with a' in place of a
};

BasketInvariants basket_invariants(const Basket& b);

/// The points over one branch point, as left cosets delta<g_j>.
struct BranchPointClass {
  std::size_t branch_index = 0;
  unsigned m = 1;
  std::vector<ElementId> cosets;            // minimal element of each coset
  std::vector<ElementId> local_generators;  // delta g_j delta^-1, per coset
};

std::vector<BranchPointClass> fixed_point_classes(const SphericalSystem& sys);

/// Singularities of (C1 x C2)/G via double cosets <g_j> \ G / <h_k>.
Basket compute_basket(const SurfaceDatum& d);

}  // namespace pqs
