#pragma once

#include "pqs/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pqs {

/// Index of an element in the canonical (lexicographic) ordering of a group.
/// The identity is always 0.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 20000;
inline constexpr std::size_t kMultiplicationTableLimit = 4096;
inline constexpr std::size_t kDefaultAutomorphismCap = 256;

/// A finite permutation group with its full element list. Immutable once
/// built; share it through GroupPtr.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(std::vector<Permutation> generators, std::size_t degree,
                                     std::string name = {},
                                     std::size_t cap = kDefaultClosureCap);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const Permutation& element(ElementId id) const { return elements_[id]; }
  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws InvalidSystem if p is not in the group.
  ElementId index_of(const Permutation& p) const;

  static constexpr ElementId identity() noexcept { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  ElementId power(ElementId a, long long exponent) const;
  /// by * g * by^-1
  ElementId conjugate(ElementId g, ElementId by) const;
  unsigned element_order(ElementId a) const { return orders_[a]; }

  /// Elements of the given order, ascending.
  const std::vector<ElementId>& elements_of_order(unsigned order) const;
  /// Sorted list of the element orders that occur.
  std::vector<unsigned> element_orders() const;

  /// g^0, g^1, ..., g^(m-1).
  std::vector<ElementId> cyclic_subgroup(ElementId g) const;

  /// Order of the subgroup generated by gens. With stop_above > 0 the
  /// closure stops as soon as it exceeds that many elements and returns the
  /// count reached.
  std::size_t subgroup_order(std::span<const ElementId> gens, std::size_t stop_above = 0) const;
  bool generates(std::span<const ElementId> gens) const;

  bool is_abelian() const;
  std::vector<std::vector<ElementId>> conjugacy_classes() const;

  /// Deterministic small generating set (two elements whenever a pair is
  /// found among the high-order elements, greedy otherwise).
  const std::vector<ElementId>& small_generating_set() const { return small_gens_; }

  bool has_multiplication_table() const noexcept { return !table_.empty(); }

 private:
  FiniteGroup() = default;
  void build_small_generating_set();

  std::string name_;
  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverses_;
  std::vector<unsigned> orders_;
  std::vector<std::vector<ElementId>> by_order_;
  std::vector<ElementId> small_gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::vector<Permutation> generators, std::size_t degree,
                    std::string name = {}, std::size_t cap = kDefaultClosureCap);

/// Representatives of the double cosets <h> g <k>, each the minimal element
/// of its coset, in ascending order.
std::vector<ElementId> double_coset_reps(const FiniteGroup& g, ElementId h, ElementId k);

/// A homomorphism between permutation groups, stored with its full element
/// table.
struct GroupMap {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<ElementId> generators;  // domain->small_generating_set()
  std::vector<ElementId> images;      // images of generators
  std::vector<ElementId> table;       // image of every domain element

  ElementId operator()(ElementId x) const { return table[x]; }
  bool operator==(const GroupMap& o) const { return table == o.table; }
};

/// Extends generator images to a homomorphism; nullopt when the assignment
/// does not define one.
std::optional<GroupMap> extend_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                                            std::span<const ElementId> images);

/// All automorphisms by backtracking over generator images of matching
/// order. Sorted by element table; the identity map comes first. Throws
/// AutomorphismSearchTooLarge when |G| > cap.
std::vector<GroupMap> automorphisms(const GroupPtr& g, std::size_t cap = kDefaultAutomorphismCap);

/// Distinct conjugation maps x -> y^-1 x y, sorted like automorphisms().
std::vector<GroupMap> inner_automorphisms(const GroupPtr& g);

GroupMap compose(const GroupMap& first, const GroupMap& second);

/// Small subset of the given automorphisms generating the same group.
std::vector<std::size_t> generating_subset(std::span<const GroupMap> maps);

}  // namespace pqs
