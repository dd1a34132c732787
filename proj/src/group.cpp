#include "pqs/group.hpp"

#include "pqs/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pqs {

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<ElementId>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

FiniteGroup FiniteGroup::from_generators(std::vector<Permutation> generators, std::size_t degree,
                                         std::string name, std::size_t cap) {
  FiniteGroup g;
  g.name_ = std::move(name);
  g.degree_ = degree == 0 ? 1 : degree;
  for (auto& p : generators) p = p.with_degree(g.degree_);
  g.generators_ = std::move(generators);

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(g.degree_)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : g.generators_) {
      auto y = elements[i] * s;
      if (seen.insert(y).second) {
        if (elements.size() >= cap)
          throw Error(ErrorKind::GroupTooLarge,
                      "group closure exceeds the cap of " + std::to_string(cap) + " elements");
        elements.push_back(std::move(y));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  g.elements_ = std::move(elements);
  const auto n = g.elements_.size();
  g.index_.reserve(n);
  for (ElementId i = 0; i < n; ++i) g.index_.emplace(g.elements_[i], i);

  if (n <= kMultiplicationTableLimit) {
    // Right multiplication by generators, then fill every row along a
    // spanning tree of the Cayley graph.
    const auto ngen = g.generators_.size();
    std::vector<ElementId> by_gen(n * ngen);
    for (ElementId x = 0; x < n; ++x)
      for (std::size_t s = 0; s < ngen; ++s)
        by_gen[x * ngen + s] = g.index_.at(g.elements_[x] * g.generators_[s]);

    std::vector<ElementId> parent(n, 0), via(n, 0), bfs{0};
    std::vector<bool> reached(n, false);
    reached[0] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (std::size_t s = 0; s < ngen; ++s) {
        auto y = by_gen[bfs[i] * ngen + s];
        if (!reached[y]) {
          reached[y] = true;
          parent[y] = bfs[i];
          via[y] = static_cast<ElementId>(s);
          bfs.push_back(y);
        }
      }
    }
    g.table_.assign(n * n, 0);
    for (ElementId x = 0; x < n; ++x) {
      auto* row = &g.table_[static_cast<std::size_t>(x) * n];
      row[0] = x;
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        auto y = bfs[i];
        row[y] = by_gen[row[parent[y]] * ngen + via[y]];
      }
    }
  }

  g.inverses_.resize(n);
  for (ElementId x = 0; x < n; ++x) g.inverses_[x] = g.index_.at(g.elements_[x].inverse());

  g.orders_.assign(n, 1);
  for (ElementId x = 1; x < n; ++x) {
    unsigned k = 1;
    for (auto p = x; p != 0; p = g.multiply(p, x)) ++k;
    g.orders_[x] = k;
  }
  unsigned max_order = *std::max_element(g.orders_.begin(), g.orders_.end());
  g.by_order_.assign(max_order + 1, {});
  for (ElementId x = 0; x < n; ++x) g.by_order_[g.orders_[x]].push_back(x);

  g.build_small_generating_set();
  return g;
}

void FiniteGroup::build_small_generating_set() {
  const auto n = order();
  if (n == 1) return;
  std::vector<ElementId> by_desc_order(n - 1);
  std::iota(by_desc_order.begin(), by_desc_order.end(), 1u);
  std::stable_sort(by_desc_order.begin(), by_desc_order.end(),
                   [&](ElementId a, ElementId b) { return orders_[a] > orders_[b]; });
  if (orders_[by_desc_order.front()] == n) {
    small_gens_ = {by_desc_order.front()};
    return;
  }
  if (n <= 2000) {
    const std::size_t tries = std::min<std::size_t>(8, by_desc_order.size());
    for (std::size_t i = 0; i < tries; ++i) {
      for (auto y : by_desc_order) {
        const ElementId pair[2] = {by_desc_order[i], y};
        if (generates(pair)) {
          small_gens_ = {pair[0], pair[1]};
          return;
        }
      }
    }
  }
  std::vector<bool> in_sub(n, false);
  in_sub[0] = true;
  while (subgroup_order(small_gens_) < n) {
    std::vector<ElementId> sub{0};
    std::fill(in_sub.begin(), in_sub.end(), false);
    in_sub[0] = true;
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (auto s : small_gens_) {
        auto y = multiply(sub[i], s);
        if (!in_sub[y]) {
          in_sub[y] = true;
          sub.push_back(y);
        }
      }
    for (auto x : by_desc_order)
      if (!in_sub[x]) {
        small_gens_.push_back(x);
        break;
      }
  }
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  if (p.degree() != degree_) {
    try {
      return find(p.with_degree(degree_));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(const Permutation& p) const {
  if (auto id = find(p)) return *id;
  throw Error(ErrorKind::InvalidSystem,
              "element " + to_cycle_string(p) + " is not in the group " + name_);
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementId FiniteGroup::power(ElementId a, long long exponent) const {
  const long long m = orders_[a];
  long long e = ((exponent % m) + m) % m;
  ElementId result = 0, base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

ElementId FiniteGroup::conjugate(ElementId g, ElementId by) const {
  return multiply(multiply(by, g), inverses_[by]);
}

const std::vector<ElementId>& FiniteGroup::elements_of_order(unsigned order) const {
  static const std::vector<ElementId> empty;
  if (order >= by_order_.size()) return empty;
  return by_order_[order];
}

std::vector<unsigned> FiniteGroup::element_orders() const {
  std::vector<unsigned> out;
  for (unsigned k = 1; k < by_order_.size(); ++k)
    if (!by_order_[k].empty()) out.push_back(k);
  return out;
}

std::vector<ElementId> FiniteGroup::cyclic_subgroup(ElementId g) const {
  std::vector<ElementId> out{0};
  for (auto p = g; p != 0; p = multiply(p, g)) out.push_back(p);
  return out;
}

std::size_t FiniteGroup::subgroup_order(std::span<const ElementId> gens,
                                        std::size_t stop_above) const {
  const auto n = order();
  std::vector<bool> in_sub(n, false);
  std::vector<ElementId> sub{0};
  in_sub[0] = true;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (auto s : gens) {
      auto y = multiply(sub[i], s);
      if (!in_sub[y]) {
        in_sub[y] = true;
        sub.push_back(y);
        if (stop_above > 0 && sub.size() > stop_above) return sub.size();
      }
    }
  }
  return sub.size();
}

bool FiniteGroup::generates(std::span<const ElementId> gens) const {
  const auto n = order();
  if (n == 1) return true;
  // A subgroup with more than |G|/2 elements is G itself.
  return subgroup_order(gens, n / 2) > n / 2;
}

bool FiniteGroup::is_abelian() const {
  for (auto a : small_gens_)
    for (auto b : small_gens_)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<std::vector<ElementId>> FiniteGroup::conjugacy_classes() const {
  const auto n = order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<ElementId> cls;
    for (ElementId y = 0; y < n; ++y) cls.insert(conjugate(x, y));
    for (auto c : cls) done[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

GroupPtr make_group(std::vector<Permutation> generators, std::size_t degree, std::string name,
                    std::size_t cap) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_generators(std::move(generators), degree, std::move(name), cap));
}

std::vector<ElementId> double_coset_reps(const FiniteGroup& g, ElementId h, ElementId k) {
  const auto hs = g.cyclic_subgroup(h);
  const auto ks = g.cyclic_subgroup(k);
  std::vector<bool> covered(g.order(), false);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (auto a : hs) {
      auto ax = g.multiply(a, x);
      for (auto b : ks) covered[g.multiply(ax, b)] = true;
    }
  }
  return reps;
}

std::optional<GroupMap> extend_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                                            std::span<const ElementId> images) {
  const auto& gens = domain->small_generating_set();
  if (images.size() != gens.size())
    throw Error(ErrorKind::InvalidDatum, "generator image count mismatch");
  constexpr ElementId unset = static_cast<ElementId>(-1);
  std::vector<ElementId> table(domain->order(), unset);
  table[0] = 0;
  std::vector<ElementId> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const auto x = bfs[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto y = domain->multiply(x, gens[s]);
      const auto fy = codomain->multiply(table[x], images[s]);
      if (table[y] == unset) {
        table[y] = fy;
        bfs.push_back(y);
      } else if (table[y] != fy) {
        return std::nullopt;
      }
    }
  }
  GroupMap m{domain, codomain, gens, std::vector<ElementId>(images.begin(), images.end()),
             std::move(table)};
  return m;
}

std::vector<GroupMap> automorphisms(const GroupPtr& g, std::size_t cap) {
  if (g->order() > cap)
    throw Error(ErrorKind::AutomorphismSearchTooLarge,
                "automorphism search refused for |G| = " + std::to_string(g->order()) +
                    " > cap " + std::to_string(cap));
  const auto& gens = g->small_generating_set();
  std::vector<GroupMap> out;
  if (gens.empty()) {
    out.push_back(*extend_homomorphism(g, g, {}));
    return out;
  }
  std::vector<const std::vector<ElementId>*> candidates;
  for (auto s : gens) candidates.push_back(&g->elements_of_order(g->element_order(s)));

  std::vector<ElementId> images(gens.size());
  std::vector<bool> hit(g->order());
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto m = extend_homomorphism(g, g, images);
      if (!m) return;
      std::fill(hit.begin(), hit.end(), false);
      for (auto y : m->table) {
        if (hit[y]) return;
        hit[y] = true;
      }
      out.push_back(std::move(*m));
      return;
    }
    for (auto c : *candidates[depth]) {
      images[depth] = c;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.table < b.table; });
  return out;
}

std::vector<GroupMap> inner_automorphisms(const GroupPtr& g) {
  std::map<std::vector<ElementId>, ElementId> seen;
  for (ElementId y = 0; y < g->order(); ++y) {
    std::vector<ElementId> table(g->order());
    const auto yi = g->inverse(y);
    for (ElementId x = 0; x < g->order(); ++x) table[x] = g->conjugate(x, yi);
    seen.emplace(std::move(table), y);
  }
  std::vector<GroupMap> out;
  const auto& gens = g->small_generating_set();
  for (auto& [table, y] : seen) {
    std::vector<ElementId> images;
    for (auto s : gens) images.push_back(table[s]);
    out.push_back(GroupMap{g, g, gens, std::move(images), table});
  }
  return out;
}

GroupMap compose(const GroupMap& first, const GroupMap& second) {
  GroupMap out{first.domain, second.codomain, first.generators, {}, {}};
  out.table.resize(first.table.size());
  for (std::size_t x = 0; x < first.table.size(); ++x) out.table[x] = second.table[first.table[x]];
  for (auto s : out.generators) out.images.push_back(out.table[s]);
  return out;
}

std::vector<std::size_t> generating_subset(std::span<const GroupMap> maps) {
  std::vector<std::size_t> chosen;
  if (maps.empty()) return chosen;
  std::unordered_set<std::vector<ElementId>, TableHash> closure;
  const auto n = maps.front().table.size();
  std::vector<ElementId> id(n);
  std::iota(id.begin(), id.end(), 0u);
  closure.insert(id);
  std::vector<std::vector<ElementId>> members{id};
  for (std::size_t i = 0; i < maps.size() && closure.size() < maps.size(); ++i) {
    if (closure.contains(maps[i].table)) continue;
    chosen.push_back(i);
    members.assign(closure.begin(), closure.end());
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (auto c : chosen) {
        std::vector<ElementId> next(n);
        for (std::size_t x = 0; x < n; ++x) next[x] = maps[c].table[members[j][x]];
        if (closure.insert(next).second) members.push_back(std::move(next));
      }
    }
  }
  return chosen;
}

}  // namespace pqs
