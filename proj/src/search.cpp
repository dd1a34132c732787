#include "pqs/search.hpp"

#include "pqs/error.hpp"
#include "pqs/presets.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace pqs {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Small exact fraction for the hot loops; q > 0, lowest terms.
struct Frac {
  long long p = 0, q = 1;
  static Frac make(i128 p, i128 q) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    i128 g = gcd128(p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
    constexpr i128 lim = static_cast<i128>(1) << 62;
    if (p > lim || p < -lim || q > lim)
      throw Error(ErrorKind::OutOfRange, "fraction overflow in signature search");
    return Frac{static_cast<long long>(p), static_cast<long long>(q)};
  }
  bool operator==(const Frac&) const = default;
  friend bool operator<(const Frac& a, const Frac& b) {
    return static_cast<i128>(a.p) * b.q < static_cast<i128>(b.p) * a.q;
  }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
};

struct FracHash {
  std::size_t operator()(const Frac& f) const noexcept {
    return std::hash<long long>()(f.p) * 1000003u ^ std::hash<long long>()(f.q);
  }
};

Frac to_frac(const Rational& r) {
  auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  return Frac::make(static_cast<i128>(static_cast<long long>(num)),
                    static_cast<i128>(static_cast<long long>(den)));
}

struct SigInfo {
  std::vector<unsigned> ms;
  Frac theta;
  std::size_t lcm = 1;
};

// Sorted signatures with 0 < Theta <= theta_max and lcm <= max_lcm, in
// lexicographic order.
std::vector<SigInfo> signatures_up_to(const std::vector<unsigned>& m_values, unsigned max_r,
                                      Frac theta_max, std::size_t max_lcm) {
  std::vector<SigInfo> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, std::size_t from, Frac theta, std::size_t lcm) -> void {
    if (Frac{0, 1} < theta) out.push_back(SigInfo{cur, theta, lcm});
    if (cur.size() >= max_r) return;
    for (std::size_t i = from; i < m_values.size(); ++i) {
      const unsigned m = m_values[i];
      // Theta grows with each entry and grows more for larger m.
      Frac next = Frac::make(static_cast<i128>(theta.p) * m + static_cast<i128>(m - 1) * theta.q,
                             static_cast<i128>(theta.q) * m);
      if (theta_max < next) break;
      const std::size_t l = std::lcm(lcm, static_cast<std::size_t>(m));
      if (l > max_lcm) continue;
      cur.push_back(m);
      self(self, i, next, l);
      cur.pop_back();
    }
  };
  rec(rec, 0, Frac{-2, 1}, 1);
  return out;
}

// (2g - 2) = d * Theta as an even integer >= 2.
bool genus_ok(std::size_t d, const Frac& theta) {
  const i128 num = static_cast<i128>(d) * theta.p;
  if (num % theta.q != 0) return false;
  const i128 v = num / theta.q;
  return v >= 2 && v % 2 == 0;
}

bool divides_some(unsigned n, const std::vector<unsigned>& ms) {
  return std::any_of(ms.begin(), ms.end(), [n](unsigned m) { return m % n == 0; });
}

bool basket_fits(const Basket& b, const std::vector<unsigned>& m1, const std::vector<unsigned>& m2) {
  for (const auto& [t, mult] : b.entries())
    if (!divides_some(t.n, m1) || !divides_some(t.n, m2)) return false;
  return true;
}

// Calls f(i, j, d) for every admissible pair sigs[i] <= sigs[j] and order d.
template <class F>
void for_each_pair(const Frac& x, const std::vector<SigInfo>& sigs,
                   const std::vector<std::size_t>* orders, std::size_t max_order, F&& f) {
  std::unordered_map<Frac, std::vector<std::size_t>, FracHash> by_theta;
  for (std::size_t i = 0; i < sigs.size(); ++i) by_theta[sigs[i].theta].push_back(i);
  auto visit = [&](std::size_t i, std::size_t d) {
    const auto& s1 = sigs[i];
    if (!genus_ok(d, s1.theta)) return;
    // Theta2 = x / (2 d Theta1)
    Frac t2 = Frac::make(static_cast<i128>(x.p) * s1.theta.q,
                         static_cast<i128>(x.q) * 2 * static_cast<i128>(d) * s1.theta.p);
    auto it = by_theta.find(t2);
    if (it == by_theta.end()) return;
    for (auto j : it->second) {
      if (j < i) continue;
      const auto& s2 = sigs[j];
      if (d % s2.lcm != 0 || !genus_ok(d, s2.theta)) continue;
      f(i, j, d);
    }
  };
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (orders) {
      for (auto d : *orders)
        if (d % sigs[i].lcm == 0 && d <= max_order) visit(i, d);
    } else {
      for (std::size_t d = sigs[i].lcm; d <= max_order; d += sigs[i].lcm) visit(i, d);
    }
  }
}

// Upper bound on Theta: the other curve has 2g - 2 = d Theta' >= 2, so
// d Theta Theta' = x/2 gives Theta <= x/4.
Frac theta_bound(const Frac& x) { return Frac::make(x.p, static_cast<i128>(x.q) * 4); }

std::vector<unsigned> m_range(unsigned max_m) {
  std::vector<unsigned> out;
  for (unsigned m = 2; m <= max_m; ++m) out.push_back(m);
  return out;
}

struct TypeB {
  SingularityType type;
  Frac B;
};

}  // namespace

std::vector<Basket> baskets_with_B(const Rational& target) {
  std::vector<Basket> out;
  if (target < 0) return out;
  if (target == 0) {
    out.emplace_back();
    return out;
  }
  const Frac tgt = to_frac(target);
  // B(type) = sum b_i + (a + a')/n > sum b_i, so only strings with
  // sum b_i < target occur; each string is one type.
  std::set<SingularityType> types;
  std::vector<unsigned> b;
  auto strings = [&](auto&& self, long long sum) -> void {
    if (!b.empty()) {
      // n/a from the descending continued fraction, evaluated backwards.
      long long p = b.back(), q = 1;
      for (std::size_t i = b.size() - 1; i-- > 0;) {
        long long np = static_cast<long long>(b[i]) * p - q;
        q = p;
        p = np;
      }
      types.insert(SingularityType{static_cast<unsigned>(p), static_cast<unsigned>(q)}.normalized());
    }
    for (unsigned v = 2; Frac{sum + v, 1} < tgt; ++v) {
      b.push_back(v);
      self(self, sum + v);
      b.pop_back();
    }
  };
  strings(strings, 0);

  std::vector<TypeB> cands;
  for (const auto& t : types) {
    Frac B = to_frac(sing_record(t).B);
    if (B <= tgt) cands.push_back(TypeB{t, B});
  }
  std::sort(cands.begin(), cands.end(), [](const TypeB& x, const TypeB& y) {
    return x.B < y.B || (x.B == y.B && x.type < y.type);
  });

  std::set<Basket> found;
  std::vector<std::size_t> chosen;
  auto multisets = [&](auto&& self, std::size_t from, Frac left) -> void {
    if (left.p == 0) {
      Basket bk;
      for (auto i : chosen) bk.add(cands[i].type);
      found.insert(std::move(bk));
      return;
    }
    for (std::size_t i = from; i < cands.size(); ++i) {
      if (left < cands[i].B) break;
      chosen.push_back(i);
      self(self, i,
           Frac::make(static_cast<i128>(left.p) * cands[i].B.q - static_cast<i128>(cands[i].B.p) * left.q,
                      static_cast<i128>(left.q) * cands[i].B.q));
      chosen.pop_back();
    }
  };
  multisets(multisets, 0, tgt);
  out.assign(found.begin(), found.end());
  return out;
}

std::vector<SignaturePair> admissible_signature_pairs(long long chi, long long k2,
                                                      const Basket& basket,
                                                      const SearchCaps& caps,
                                                      const std::vector<std::size_t>* allowed_orders,
                                                      const std::vector<unsigned>* allowed_m) {
  (void)chi;
  std::vector<SignaturePair> out;
  const auto bi = basket_invariants(basket);
  const Frac x = to_frac(Rational(k2) + bi.k);
  if (x.p <= 0) return out;
  const auto ms = allowed_m ? *allowed_m : m_range(caps.max_m);
  auto sigs = signatures_up_to(ms, caps.max_r, theta_bound(x), caps.max_group_order);
  for_each_pair(x, sigs, allowed_orders, caps.max_group_order,
                [&](std::size_t i, std::size_t j, std::size_t d) {
                  if (!basket_fits(basket, sigs[i].ms, sigs[j].ms)) return;
                  out.push_back(SignaturePair{Signature(sigs[i].ms), Signature(sigs[j].ms), d});
                });
  std::sort(out.begin(), out.end(), [](const SignaturePair& a, const SignaturePair& b) {
    return std::tie(a.group_order, a.t1, a.t2) < std::tie(b.group_order, b.t1, b.t2);
  });
  return out;
}

bool is_hard_order(std::size_t order) { return order == 512 || order == 1024 || order == 1536; }

void check_params(const SearchParams& p) {
  if (p.chi < 1) throw Error(ErrorKind::Usage, "chi must be >= 1");
  if (p.k2.has_value() == p.gamma.has_value())
    throw Error(ErrorKind::Usage, "exactly one of k2 and gamma must be given");
  if (p.k2 && p.k2_window_set) throw Error(ErrorKind::Usage, "a K^2 window needs gamma mode");
  if (p.k2_window_set && p.k2_min > p.k2_max) throw Error(ErrorKind::Usage, "empty K^2 window");
  if (p.caps.max_r < 3 || p.caps.max_m < 2 || p.caps.max_group_order < 1)
    throw Error(ErrorKind::Usage, "caps too small");
  if (p.jobs < 1) throw Error(ErrorKind::Usage, "jobs must be >= 1");
}

namespace {

struct Task {
  std::size_t group;
  long long k2;
  Signature t1, t2;
  std::vector<Basket> baskets;  // candidates, sorted
};

struct TaskResult {
  std::vector<Family> families;
  std::vector<SkippedTask> skipped;
};

class OrbitCache {
 public:
  explicit OrbitCache(std::size_t cap) : cap_(cap) {}
  std::shared_ptr<const SystemOrbits> get(const GroupPtr& g, std::size_t gi, const Signature& s) {
    std::shared_future<std::shared_ptr<const SystemOrbits>> fut;
    std::promise<std::shared_ptr<const SystemOrbits>> prom;
    bool mine = false;
    {
      std::lock_guard lock(mu_);
      auto key = std::make_pair(gi, s);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        fut = prom.get_future().share();
        cache_.emplace(key, fut);
        mine = true;
      } else {
        fut = it->second;
      }
    }
    if (mine) {
      try {
        prom.set_value(std::make_shared<const SystemOrbits>(system_orbits(g, s, cap_)));
      } catch (...) {
        prom.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

 private:
  std::size_t cap_;
  std::mutex mu_;
  std::map<std::pair<std::size_t, Signature>, std::shared_future<std::shared_ptr<const SystemOrbits>>>
      cache_;
};

struct GroupInfo {
  GroupPtr group;
  std::vector<unsigned> orders;
  std::vector<GroupMap> aut_generators;
  std::vector<std::string> warnings;
  bool auts_ready = false;
};

bool has_orders(const GroupInfo& g, const Signature& s) {
  for (auto m : s.ms())
    if (!std::binary_search(g.orders.begin(), g.orders.end(), m)) return false;
  return true;
}

TaskResult run_task(const Task& t, const GroupInfo& gi, OrbitCache& cache, const SearchParams& p) {
  TaskResult r;
  try {
    auto o1 = cache.get(gi.group, t.group, t.t1);
    auto o2 = cache.get(gi.group, t.group, t.t2);
    if (o1->size() == 0 || o2->size() == 0) return r;
    auto classes = pair_classes(*o1, *o2, p.dedup, gi.aut_generators);
    for (const auto& c : classes) {
      auto datum = make_datum(gi.group, o1->representatives[c.orbit1], o2->representatives[c.orbit2]);
      auto basket = compute_basket(datum);
      if (!std::binary_search(t.baskets.begin(), t.baskets.end(), basket)) continue;
      Family f;
      f.invariants = surface_invariants(datum, basket);
      if (f.invariants.KS2 != t.k2) continue;
      if (p.gamma && f.invariants.gamma != *p.gamma) continue;
      f.dual = surface_invariants(dual_surface(datum));
      f.hodge = h2_quotient_check(datum, f.invariants);
      f.t1 = t.t1;
      f.t2 = t.t2;
      f.basket = std::move(basket);
      f.orbit_size = c.orbit_size;
      f.warnings = gi.warnings;
      for (auto& w : advisory_flags(f.invariants, f.dual)) f.warnings.push_back(std::move(w));
      f.datum = std::move(datum);
      r.families.push_back(std::move(f));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OrbitExplosion && e.kind() != ErrorKind::OutOfRange) throw;
    r.skipped.push_back(SkippedTask{e.what(), t.k2, gi.group->order(), gi.group->name(), t.t1, t.t2});
  }
  return r;
}

}  // namespace

SearchResult classify(const SearchParams& params) {
  check_params(params);
  SearchResult result;

  std::vector<GroupInfo> groups;
  bool catalog = params.groups_are_catalog;
  if (params.groups.empty()) {
    catalog = true;
    for (const auto& name : default_catalog()) groups.push_back(GroupInfo{group_preset(name), {}, {}, {}, false});
  } else {
    for (const auto& g : params.groups) groups.push_back(GroupInfo{g, {}, {}, {}, false});
  }
  std::vector<std::size_t> orders;
  std::set<unsigned> m_union;
  for (auto& g : groups) {
    g.orders = g.group->element_orders();
    orders.push_back(g.group->order());
    for (auto m : g.orders)
      if (m >= 2 && m <= params.caps.max_m) m_union.insert(m);
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  const std::vector<unsigned> ms(m_union.begin(), m_union.end());
  const auto all_ms = m_range(params.caps.max_m);

  std::vector<long long> k2_values;
  if (params.k2) {
    k2_values.push_back(*params.k2);
  } else {
    const Rational top = 8 * params.chi - 2 * *params.gamma;
    long long hi = static_cast<long long>(boost::multiprecision::numerator(top) /
                                          boost::multiprecision::denominator(top));
    if (Rational(hi) > top) --hi;
    long long lo = params.k2_window_set ? params.k2_min : -2;
    if (params.k2_window_set) hi = std::min(hi, params.k2_max);
    for (long long k = lo; k <= hi; ++k) k2_values.push_back(k);
  }

  std::vector<Task> tasks;
  std::set<std::pair<std::string, std::size_t>> hard_reported;
  for (auto k2 : k2_values) {
    const Rational B = 3 * (8 * params.chi - k2);
    std::vector<Basket> baskets;
    if (params.basket) {
      if (basket_invariants(*params.basket).B == B) baskets.push_back(*params.basket);
    } else {
      baskets = baskets_with_B(B);
    }
    if (params.gamma)
      std::erase_if(baskets,
                    [&](const Basket& b) { return basket_invariants(b).gamma != *params.gamma; });
    std::map<Rational, std::vector<Basket>> by_k;
    for (auto& b : baskets) by_k[basket_invariants(b).k].push_back(b);

    for (const auto& [k, group_baskets] : by_k) {
      const Rational xr = Rational(k2) + k;
      if (xr <= 0) continue;
      const Frac x = to_frac(xr);
      // Pairs over the available orders and branching indices.
      auto sigs = signatures_up_to(ms, params.caps.max_r, theta_bound(x), params.caps.max_group_order);
      std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<Basket>> pairs;
      for_each_pair(x, sigs, &orders, params.caps.max_group_order,
                    [&](std::size_t i, std::size_t j, std::size_t d) {
                      for (const auto& b : group_baskets)
                        if (basket_fits(b, sigs[i].ms, sigs[j].ms)) pairs[{d, i, j}].push_back(b);
                    });
      for (auto& [key, bs] : pairs) {
        const auto [d, i, j] = key;
        std::sort(bs.begin(), bs.end());
        Signature s1(sigs[i].ms), s2(sigs[j].ms);
        for (std::size_t g = 0; g < groups.size(); ++g) {
          if (groups[g].group->order() != d) continue;
          if (!has_orders(groups[g], s1) || !has_orders(groups[g], s2)) continue;
          if (is_hard_order(d)) {
            if (hard_reported.insert({groups[g].group->name(), d}).second)
              result.skipped.push_back(SkippedTask{
                  "group order " + std::to_string(d) +
                      " is one of the orders (512, 1024, 1536, ...) that have to be treated by "
                      "hand separately; not searched",
                  k2, d, groups[g].group->name(), s1, s2});
            continue;
          }
          tasks.push_back(Task{g, k2, s1, s2, bs});
        }
      }
      if (catalog) {
        auto all_sigs =
            signatures_up_to(all_ms, params.caps.max_r, theta_bound(x), params.caps.max_group_order);
        std::map<std::size_t, CoverageGap> gaps;
        for_each_pair(x, all_sigs, nullptr, params.caps.max_group_order,
                      [&](std::size_t i, std::size_t j, std::size_t d) {
                        if (std::binary_search(orders.begin(), orders.end(), d)) return;
                        bool fits = std::any_of(group_baskets.begin(), group_baskets.end(),
                                                [&](const Basket& b) {
                                                  return basket_fits(b, all_sigs[i].ms, all_sigs[j].ms);
                                                });
                        if (!fits) return;
                        auto [it, fresh] = gaps.try_emplace(d);
                        auto& gap = it->second;
                        if (fresh) {
                          gap.k2 = k2;
                          gap.group_order = d;
                          gap.t1 = Signature(all_sigs[i].ms);
                          gap.t2 = Signature(all_sigs[j].ms);
                        }
                        ++gap.signature_pairs;
                      });
        for (auto& [d, gap] : gaps) result.coverage_gaps.push_back(std::move(gap));
      }
    }
  }

  // Automorphisms once per group that has work.
  if (params.dedup != DedupMode::Hurwitz) {
    for (const auto& t : tasks) {
      auto& gi = groups[t.group];
      if (gi.auts_ready) continue;
      auto auts = automorphisms_or_inner(gi.group, params.caps.aut_cap, &gi.warnings);
      for (auto i : generating_subset(auts)) gi.aut_generators.push_back(auts[i]);
      gi.auts_ready = true;
      for (const auto& w : gi.warnings) result.warnings.push_back(gi.group->name() + ": " + w);
    }
  }

  OrbitCache cache(params.caps.orbit_cap);
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = run_task(tasks[i], groups[tasks[i].group], cache, params);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(params.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& r : results) {
    for (auto& f : r.families) result.families.push_back(std::move(f));
    for (auto& s : r.skipped) result.skipped.push_back(std::move(s));
  }
  std::sort(result.families.begin(), result.families.end(), [](const Family& a, const Family& b) {
    const auto ka = a.invariants.KS2, kb = b.invariants.KS2;
    if (ka != kb) return ka < kb;
    if (a.datum.group->order() != b.datum.group->order())
      return a.datum.group->order() < b.datum.group->order();
    if (a.datum.group->name() != b.datum.group->name())
      return a.datum.group->name() < b.datum.group->name();
    return std::tie(a.t1, a.t2, a.datum.sys1.tuple, a.datum.sys2.tuple) <
           std::tie(b.t1, b.t2, b.datum.sys1.tuple, b.datum.sys2.tuple);
  });
  return result;
}

}  // namespace pqs
