#pragma once

#include "pqs/group.hpp"
#include "pqs/spherical.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pqs {

enum class DedupMode { Hurwitz, HurwitzAut, HurwitzAutSwap };

std::string to_string(DedupMode mode);
/// "hurwitz", "hurwitz+aut", "hurwitz+aut+swap"
DedupMode parse_dedup_mode(std::string_view text);

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;
inline constexpr std::size_t kMaxTupleLength = 16;

struct TupleKey {
  std::array<std::uint16_t, kMaxTupleLength> v{};
  std::uint8_t size = 0;
  bool operator==(const TupleKey&) const = default;
};
struct TupleKeyHash {
  std::size_t operator()(const TupleKey& k) const noexcept;
};
TupleKey pack(std::span<const ElementId> t);

/// Open-addressing map from tuple keys to 32-bit labels.
class TupleKeyMap {
 public:
  const std::uint32_t* find(const TupleKey& k) const;
  /// Inserts when absent; returns true on insertion.
  bool emplace(const TupleKey& k, std::uint32_t value);
  std::size_t size() const noexcept { return size_; }
  void reserve(std::size_t n);

 private:
  void rehash(std::size_t buckets);
  std::vector<TupleKey> keys_;
  std::vector<std::uint32_t> values_;
  std::size_t size_ = 0;
};

/// Hurwitz-move orbits of tuples in every ordering of the branch orders.
/// Orbits are explored on first sight; the canonical member of an orbit is
/// the lexicographically least tuple whose order sequence is nondecreasing.
class BraidOrbitIndex {
 public:
  explicit BraidOrbitIndex(GroupPtr g, std::size_t cap = kDefaultOrbitCap);

  std::size_t label(std::span<const ElementId> t);
  const Tuple& canonical(std::size_t label) const { return canonical_[label]; }
  /// Members of the orbit with nondecreasing order sequence.
  std::size_t aligned_size(std::size_t label) const { return aligned_[label]; }
  std::size_t orbit_count() const noexcept { return canonical_.size(); }
  std::size_t states() const noexcept { return index_.size(); }

 private:
  GroupPtr g_;
  std::size_t cap_;
  TupleKeyMap index_;
  std::vector<Tuple> canonical_;
  std::vector<std::size_t> aligned_;
};

/// Hurwitz orbits of all spherical systems of a sorted signature, indexed in
/// ascending order of their canonical tuples.
struct SystemOrbits {
  GroupPtr group;
  Signature signature;
  std::vector<Tuple> representatives;
  std::vector<std::size_t> aligned_sizes;
  TupleKeyMap lookup;  // aligned tuple -> orbit

  std::size_t size() const noexcept { return representatives.size(); }
  std::size_t orbit_of(std::span<const ElementId> aligned_tuple) const;
};

SystemOrbits system_orbits(const GroupPtr& g, const Signature& sig,
                           std::size_t cap = kDefaultOrbitCap);

struct PairClass {
  std::size_t orbit1 = 0;  // index into the first SystemOrbits
  std::size_t orbit2 = 0;
  std::size_t orbit_size = 0;  // aligned datum pairs in the class
};

/// Classes of pairs of Hurwitz orbits under automorphisms (and the factor
/// swap when both signatures coincide). auts need only generate the
/// automorphism group. Each class is given by its least (orbit1, orbit2);
/// the result is sorted.
std::vector<PairClass> pair_classes(const SystemOrbits& s1, const SystemOrbits& s2,
                                    DedupMode mode, std::span<const GroupMap> auts);

struct FamilyClass {
  SurfaceDatum canonical;
  std::vector<std::size_t> members;  // indices into the input
};

/// Partition of arbitrary data over one group. Uses every map in auts.
std::vector<FamilyClass> dedup_families(std::span<const SurfaceDatum> data, DedupMode mode,
                                        std::span<const GroupMap> auts,
                                        std::size_t orbit_cap = kDefaultOrbitCap);

/// Same, computing the automorphism group itself (inner automorphisms only
/// above aut_cap; a note is appended to warnings).
std::vector<FamilyClass> dedup_families(std::span<const SurfaceDatum> data, DedupMode mode,
                                        std::vector<std::string>* warnings = nullptr,
                                        std::size_t orbit_cap = kDefaultOrbitCap,
                                        std::size_t aut_cap = kDefaultAutomorphismCap);

/// Automorphisms of g, or the inner ones when the search is refused.
std::vector<GroupMap> automorphisms_or_inner(const GroupPtr& g, std::size_t cap,
                                             std::vector<std::string>* warnings);

}  // namespace pqs
