#pragma once

#include "pqs/basket.hpp"
#include "pqs/dedup.hpp"
#include "pqs/invariants.hpp"
#include "pqs/rational.hpp"
#include "pqs/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pqs {

/// All baskets with B(basket) = target, in ascending order.
std::vector<Basket> baskets_with_B(const Rational& target);

struct SearchCaps {
  std::size_t max_group_order = 2000;
  unsigned max_r = 9;
  unsigned max_m = 60;
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t aut_cap = kDefaultAutomorphismCap;
  bool operator==(const SearchCaps&) const = default;
};

struct SignaturePair {
  Signature t1, t2;  // t1 <= t2
  std::size_t group_order = 0;
  auto operator<=>(const SignaturePair&) const = default;
};

/// Signature pairs with |G| = (K^2 + k(basket)) / (2 Theta1 Theta2) a
/// positive integer <= max_group_order, both genera integral and >= 2, and
/// every basket n dividing some m_i and some n_j. With allowed_orders given,
/// only those group orders are considered; allowed_m restricts the branching
/// indices.
std::vector<SignaturePair> admissible_signature_pairs(
    long long chi, long long k2, const Basket& basket, const SearchCaps& caps,
    const std::vector<std::size_t>* allowed_orders = nullptr,
    const std::vector<unsigned>* allowed_m = nullptr);

struct SearchParams {
  long long chi = 1;
  std::optional<long long> k2;
  std::optional<Rational> gamma;
  long long k2_min = -2, k2_max = 0;  // gamma mode window
  bool k2_window_set = false;
  std::vector<GroupPtr> groups;
  /// true: groups replace the default catalog and uncovered admissible
  /// orders are reported; false: the search is restricted to groups.
  bool groups_are_catalog = false;
  /// Restrict to one basket (table verification).
  std::optional<Basket> basket;
  DedupMode dedup = DedupMode::HurwitzAutSwap;
  SearchCaps caps;
  unsigned jobs = 1;
};

struct Family {
  SurfaceDatum datum;
  Signature t1, t2;
  Basket basket;
  InvariantRecord invariants;
  InvariantRecord dual;
  HodgeCheck hodge;
  std::size_t orbit_size = 0;
  std::vector<std::string> warnings;
};

/// An admissible group order with no group in the catalog.
struct CoverageGap {
  long long k2 = 0;
  std::size_t group_order = 0;
  std::size_t signature_pairs = 0;
  Signature t1, t2;  // first admissible pair
  bool operator==(const CoverageGap&) const = default;
};

struct SkippedTask {
  std::string reason;
  long long k2 = 0;
  std::size_t group_order = 0;
  std::string group;
  Signature t1, t2;
  bool operator==(const SkippedTask&) const = default;
};

struct SearchResult {
  std::vector<Family> families;
  std::vector<CoverageGap> coverage_gaps;
  std::vector<SkippedTask> skipped;
  std::vector<std::string> warnings;
};

/// Orders the search refuses.
bool is_hard_order(std::size_t order);

/// Throws Usage when the parameters are contradictory.
void check_params(const SearchParams& p);

SearchResult classify(const SearchParams& params);

}  // namespace pqs
