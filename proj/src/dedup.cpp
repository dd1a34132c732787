#include "pqs/dedup.hpp"

#include "pqs/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace pqs {

std::string to_string(DedupMode mode) {
  switch (mode) {
    case DedupMode::Hurwitz: return "hurwitz";
    case DedupMode::HurwitzAut: return "hurwitz+aut";
    case DedupMode::HurwitzAutSwap: return "hurwitz+aut+swap";
  }
  return "?";
}

DedupMode parse_dedup_mode(std::string_view text) {
  if (text == "hurwitz") return DedupMode::Hurwitz;
  if (text == "hurwitz+aut") return DedupMode::HurwitzAut;
  if (text == "hurwitz+aut+swap") return DedupMode::HurwitzAutSwap;
  throw Error(ErrorKind::Usage, "unknown dedup mode '" + std::string(text) +
                                    "' (expected hurwitz, hurwitz+aut or hurwitz+aut+swap)");
}

std::size_t TupleKeyHash::operator()(const TupleKey& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull * (k.size + 1);
  for (std::size_t w = 0; w * 4 < k.size; ++w) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < 4; ++i) x |= std::uint64_t(k.v[4 * w + i]) << (16 * i);
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

TupleKey pack(std::span<const ElementId> t) {
  if (t.size() > kMaxTupleLength)
    throw Error(ErrorKind::OutOfRange, "tuple longer than " + std::to_string(kMaxTupleLength));
  TupleKey k;
  k.size = static_cast<std::uint8_t>(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > 0xffff) throw Error(ErrorKind::OutOfRange, "group too large for tuple keys");
    k.v[i] = static_cast<std::uint16_t>(t[i]);
  }
  return k;
}

namespace {
constexpr std::uint32_t kEmpty = UINT32_MAX;
}

const std::uint32_t* TupleKeyMap::find(const TupleKey& k) const {
  if (keys_.empty()) return nullptr;
  const std::size_t mask = keys_.size() - 1;
  for (std::size_t i = TupleKeyHash{}(k) & mask;; i = (i + 1) & mask) {
    if (values_[i] == kEmpty) return nullptr;
    if (keys_[i] == k) return &values_[i];
  }
}

bool TupleKeyMap::emplace(const TupleKey& k, std::uint32_t value) {
  if ((size_ + 1) * 2 > keys_.size()) rehash(std::max<std::size_t>(64, keys_.size() * 2));
  const std::size_t mask = keys_.size() - 1;
  for (std::size_t i = TupleKeyHash{}(k) & mask;; i = (i + 1) & mask) {
    if (values_[i] == kEmpty) {
      keys_[i] = k;
      values_[i] = value;
      ++size_;
      return true;
    }
    if (keys_[i] == k) return false;
  }
}

void TupleKeyMap::reserve(std::size_t n) {
  std::size_t buckets = 64;
  while (buckets < 2 * n) buckets *= 2;
  if (buckets > keys_.size()) rehash(buckets);
}

void TupleKeyMap::rehash(std::size_t buckets) {
  std::vector<TupleKey> keys(buckets);
  std::vector<std::uint32_t> values(buckets, kEmpty);
  const std::size_t mask = buckets - 1;
  for (std::size_t j = 0; j < keys_.size(); ++j) {
    if (values_[j] == kEmpty) continue;
    std::size_t i = TupleKeyHash{}(keys_[j]) & mask;
    while (values[i] != kEmpty) i = (i + 1) & mask;
    keys[i] = keys_[j];
    values[i] = values_[j];
  }
  keys_ = std::move(keys);
  values_ = std::move(values);
}

namespace {

Tuple unpack(const TupleKey& k) { return Tuple(k.v.begin(), k.v.begin() + k.size); }

Tuple map_tuple(const GroupMap& a, std::span<const ElementId> t) {
  Tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = a(t[i]);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root so roots are class minima.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};

}  // namespace

BraidOrbitIndex::BraidOrbitIndex(GroupPtr g, std::size_t cap) : g_(std::move(g)), cap_(cap) {}

std::size_t BraidOrbitIndex::label(std::span<const ElementId> t) {
  auto start = pack(t);
  if (auto* found = index_.find(start)) return *found;

  const auto id = static_cast<std::uint32_t>(canonical_.size());
  const auto& g = *g_;
  std::vector<TupleKey> queue{start};
  index_.emplace(start, id);
  std::size_t count_aligned = 0;
  TupleKey best{};
  bool have_best = false;
  auto key_less = [](const TupleKey& a, const TupleKey& b) {
    return std::lexicographical_compare(a.v.begin(), a.v.begin() + a.size, b.v.begin(),
                                        b.v.begin() + b.size);
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const TupleKey cur = queue[qi];
    bool is_aligned = true;
    for (std::size_t i = 1; i < cur.size && is_aligned; ++i)
      is_aligned = g.element_order(cur.v[i - 1]) <= g.element_order(cur.v[i]);
    if (is_aligned) {
      ++count_aligned;
      if (!have_best || key_less(cur, best)) {
        best = cur;
        have_best = true;
      }
    }
    for (std::size_t i = 0; i + 1 < cur.size; ++i) {
      const ElementId a = cur.v[i], b = cur.v[i + 1];
      for (int dir = 0; dir < 2; ++dir) {
        TupleKey key = cur;
        if (dir == 0) {
          key.v[i] = static_cast<std::uint16_t>(b);
          key.v[i + 1] = static_cast<std::uint16_t>(g.multiply(g.multiply(g.inverse(b), a), b));
        } else {
          key.v[i] = static_cast<std::uint16_t>(g.multiply(g.multiply(a, b), g.inverse(a)));
          key.v[i + 1] = static_cast<std::uint16_t>(a);
        }
        if (index_.emplace(key, id)) {
          if (index_.size() > cap_)
            throw Error(ErrorKind::OrbitExplosion,
                        "Hurwitz orbit exploration exceeds the cap of " + std::to_string(cap_) +
                            " states");
          queue.push_back(key);
        }
      }
    }
  }
  canonical_.push_back(unpack(best));
  aligned_.push_back(count_aligned);
  return id;
}

std::size_t SystemOrbits::orbit_of(std::span<const ElementId> aligned_tuple) const {
  auto* found = lookup.find(pack(aligned_tuple));
  if (!found)
    throw Error(ErrorKind::AlgorithmInvariant, "tuple is not a spherical system of the signature");
  return *found;
}

SystemOrbits system_orbits(const GroupPtr& g, const Signature& sig, std::size_t cap) {
  SystemOrbits out;
  out.group = g;
  out.signature = sig;
  auto tuples = spherical_tuples(*g, sig.ms());
  BraidOrbitIndex index(g, cap);
  std::vector<std::size_t> labels(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) labels[i] = index.label(tuples[i]);
  // Tuples are in ascending order, so labels appear in canonical order.
  std::vector<std::size_t> remap(index.orbit_count(), SIZE_MAX);
  for (auto l : labels) {
    if (remap[l] == SIZE_MAX) {
      remap[l] = out.representatives.size();
      out.representatives.push_back(index.canonical(l));
      out.aligned_sizes.push_back(index.aligned_size(l));
    }
  }
  out.lookup.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i)
    out.lookup.emplace(pack(tuples[i]), static_cast<std::uint32_t>(remap[labels[i]]));
  return out;
}

std::vector<PairClass> pair_classes(const SystemOrbits& s1, const SystemOrbits& s2,
                                    DedupMode mode, std::span<const GroupMap> auts) {
  const std::size_t n1 = s1.size(), n2 = s2.size();
  std::vector<PairClass> out;
  if (n1 == 0 || n2 == 0) return out;
  UnionFind uf(n1 * n2);
  auto idx = [n2](std::size_t a, std::size_t b) { return a * n2 + b; };
  if (mode != DedupMode::Hurwitz) {
    for (const auto& a : auts) {
      std::vector<std::size_t> p1(n1), p2(n2);
      for (std::size_t i = 0; i < n1; ++i) p1[i] = s1.orbit_of(map_tuple(a, s1.representatives[i]));
      for (std::size_t i = 0; i < n2; ++i) p2[i] = s2.orbit_of(map_tuple(a, s2.representatives[i]));
      for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) uf.unite(idx(i, j), idx(p1[i], p2[j]));
    }
  }
  if (mode == DedupMode::HurwitzAutSwap && s1.signature == s2.signature) {
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) uf.unite(idx(i, j), idx(j, i));
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      sizes[uf.find(idx(i, j))] += s1.aligned_sizes[i] * s2.aligned_sizes[j];
  for (auto [root, size] : sizes) out.push_back(PairClass{root / n2, root % n2, size});
  return out;
}

std::vector<GroupMap> automorphisms_or_inner(const GroupPtr& g, std::size_t cap,
                                             std::vector<std::string>* warnings) {
  try {
    return automorphisms(g, cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AutomorphismSearchTooLarge) throw;
    if (warnings)
      warnings->push_back("automorphism search refused for |G| = " + std::to_string(g->order()) +
                          " (cap " + std::to_string(cap) +
                          "); deduplicating by inner automorphisms only");
    return inner_automorphisms(g);
  }
}

std::vector<FamilyClass> dedup_families(std::span<const SurfaceDatum> data, DedupMode mode,
                                        std::span<const GroupMap> auts, std::size_t orbit_cap) {
  std::vector<FamilyClass> out;
  if (data.empty()) return out;
  const GroupPtr g = data.front().group;
  for (const auto& d : data)
    if (d.group != g) throw Error(ErrorKind::InvalidDatum, "dedup input spans several groups");

  BraidOrbitIndex index(g, orbit_cap);
  using Key = std::pair<Tuple, Tuple>;
  std::map<std::pair<std::size_t, std::size_t>, Key> memo;

  auto key_of = [&](const SurfaceDatum& d) -> Key {
    const auto l1 = index.label(d.sys1.tuple);
    const auto l2 = index.label(d.sys2.tuple);
    if (auto it = memo.find({l1, l2}); it != memo.end()) return it->second;
    Key best{index.canonical(l1), index.canonical(l2)};
    const bool swap = mode == DedupMode::HurwitzAutSwap &&
                      d.sys1.signature() == d.sys2.signature();
    auto consider = [&](const Tuple& a, const Tuple& b) {
      // label() may grow the index, so resolve both labels before reading.
      const auto la = index.label(a), lb = index.label(b);
      Key k{index.canonical(la), index.canonical(lb)};
      if (swap) {
        Key s{k.second, k.first};
        if (s < best) best = std::move(s);
      }
      if (k < best) best = std::move(k);
    };
    consider(d.sys1.tuple, d.sys2.tuple);
    if (mode != DedupMode::Hurwitz)
      for (const auto& a : auts) consider(map_tuple(a, d.sys1.tuple), map_tuple(a, d.sys2.tuple));
    memo.emplace(std::pair{l1, l2}, best);
    return best;
  };

  std::map<Key, std::size_t> classes;
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto k = key_of(data[i]);
    auto [it, fresh] = classes.emplace(k, out.size());
    if (fresh) out.push_back(FamilyClass{make_datum(g, k.first, k.second), {}});
    out[it->second].members.push_back(i);
  }
  std::sort(out.begin(), out.end(), [](const FamilyClass& a, const FamilyClass& b) {
    return std::tie(a.canonical.sys1.tuple, a.canonical.sys2.tuple) <
           std::tie(b.canonical.sys1.tuple, b.canonical.sys2.tuple);
  });
  return out;
}

std::vector<FamilyClass> dedup_families(std::span<const SurfaceDatum> data, DedupMode mode,
                                        std::vector<std::string>* warnings,
                                        std::size_t orbit_cap, std::size_t aut_cap) {
  if (data.empty()) return {};
  std::vector<GroupMap> auts;
  if (mode != DedupMode::Hurwitz) auts = automorphisms_or_inner(data.front().group, aut_cap, warnings);
  return dedup_families(data, mode, auts, orbit_cap);
}

}  // namespace pqs
