#pragma once

#include "pqs/group.hpp"
#include "pqs/signature.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

using Tuple = std::vector<ElementId>;

/// (g_1, ..., g_r) generating G with g_1 ... g_r = 1. The branching orders
/// are positional: orders()[i] is the order of g_i.
struct SphericalSystem {
  GroupPtr group;
  Tuple tuple;

  std::vector<unsigned> orders() const;
  Signature signature() const { return Signature(orders()); }
  std::size_t length() const noexcept { return tuple.size(); }
  bool operator==(const SphericalSystem& o) const {
    return group == o.group && tuple == o.tuple;
  }
};

/// Throws InvalidSystem with "tuple does not generate G",
/// "product of the tuple is not the identity" or an order mismatch message.
void validate(const SphericalSystem& sys);
void validate(const SphericalSystem& sys, std::span<const unsigned> expected_orders);

/// All spherical systems with order(g_i) = orders[i], in lexicographic order of
/// the tuples.
std::vector<Tuple> spherical_tuples(const FiniteGroup& g, std::span<const unsigned> orders);
std::vector<SphericalSystem> spherical_systems(const GroupPtr& g, std::span<const unsigned> orders);
inline std::vector<SphericalSystem> spherical_systems(const GroupPtr& g, const Signature& s) {
  return spherical_systems(g, s.ms());
}

/// Text form "(2,5,5):[(1,2)(3,4),...,...]": positional orders, colon, and
/// the elements in cycle notation separated by top-level commas.
std::string format_system(const SphericalSystem& sys);
/// Parses and validates against the group. Parse errors carry positions.
SphericalSystem parse_system(const GroupPtr& g, std::string_view text);

struct SurfaceDatum {
  GroupPtr group;
  SphericalSystem sys1;
  SphericalSystem sys2;
};

SurfaceDatum make_datum(const GroupPtr& g, Tuple t1, Tuple t2);
/// Both systems valid, over the same group.
void validate(const SurfaceDatum& d);

/// One Hurwitz move at position i (0-based, i+1 < r):
/// (.., a, b, ..) -> (.., b, b^-1 a b, ..); inverse: (.., a b a^-1, a, ..).
void hurwitz_move(const FiniteGroup& g, Tuple& t, std::size_t i);
void inverse_hurwitz_move(const FiniteGroup& g, Tuple& t, std::size_t i);

}  // namespace pqs
