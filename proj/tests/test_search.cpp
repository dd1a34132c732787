#include "doctest.h"

#include "oracle.hpp"
#include "pqs/error.hpp"
#include "pqs/presets.hpp"
#include "pqs/report.hpp"
#include "pqs/search.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace pqs;

namespace {

std::set<Basket> as_set(const std::vector<Basket>& v) { return {v.begin(), v.end()}; }

SearchParams k2_params(long long k2, std::initializer_list<const char*> groups) {
  SearchParams p;
  p.chi = 1;
  p.k2 = k2;
  for (auto g : groups) p.groups.push_back(group_preset(g));
  return p;
}

std::size_t family_count(const char* group, long long k2, DedupMode mode) {
  auto p = k2_params(k2, {group});
  p.dedup = mode;
  return classify(p).families.size();
}

// Sorted genus-zero signatures with entries in [2, max_m], length <= max_r.
std::vector<Signature> naive_signatures(unsigned max_m, unsigned max_r) {
  std::vector<Signature> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned from) -> void {
    if (cur.size() >= 3 && theta(cur) > 0) out.emplace_back(cur);
    if (cur.size() == max_r) return;
    for (unsigned m = from; m <= max_m; ++m) {
      cur.push_back(m);
      self(self, m);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace

TEST_CASE("baskets with a given B") {
  CHECK(as_set(baskets_with_B(0)) == std::set<Basket>{Basket()});
  CHECK(as_set(baskets_with_B(3)) == std::set<Basket>{Basket::parse("1/2(1,1)")});
  CHECK(as_set(baskets_with_B(6)) ==
        std::set<Basket>{Basket::parse("2x1/2(1,1)"), Basket::parse("1/5(1,2)")});
  CHECK(baskets_with_B(1).empty());
  CHECK(baskets_with_B(make_rational(1, 2)).empty());
}

TEST_CASE("baskets with B agree with the brute-force sweep") {
  for (int num = 0; num <= 36; ++num) {
    const Rational target = make_rational(num, 3);
    const unsigned max_n = std::max(200, 3 * num);
    auto got = baskets_with_B(target);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(as_set(got).size() == got.size());
    CHECK(as_set(got) == oracle::naive_baskets_with_B(target, max_n));
    for (const auto& b : got) CHECK(basket_invariants(b).B == target);
  }
}

TEST_CASE("admissible signature pairs include the table examples") {
  SearchCaps caps;
  auto has = [](const std::vector<SignaturePair>& v, const char* a, const char* b, std::size_t d) {
    auto s1 = Signature::parse(a), s2 = Signature::parse(b);
    return std::any_of(v.begin(), v.end(), [&](const SignaturePair& p) {
      return p.group_order == d && ((p.t1 == s1 && p.t2 == s2) || (p.t1 == s2 && p.t2 == s1));
    });
  };
  auto free8 = admissible_signature_pairs(1, 8, Basket(), caps);
  CHECK(has(free8, "2,5^2", "3^4", 60));
  CHECK(has(free8, "5^3", "5^3", 25));
  CHECK(has(free8, "5^3", "2^3,3", 60));
  CHECK(has(free8, "2^2,4^2", "2^3,4", 32));
  auto two_halves = admissible_signature_pairs(1, 6, Basket::parse("2x1/2(1,1)"), caps);
  CHECK(has(two_halves, "2,5^2", "2,3^3", 60));
  CHECK(std::is_sorted(free8.begin(), free8.end(), [](const SignaturePair& a, const SignaturePair& b) {
    return std::tie(a.group_order, a.t1, a.t2) < std::tie(b.group_order, b.t1, b.t2);
  }));
}

TEST_CASE("admissible signature pairs agree with a direct sweep") {
  SearchCaps caps;
  caps.max_m = 8;
  caps.max_r = 5;
  caps.max_group_order = 400;
  const auto sigs = naive_signatures(caps.max_m, caps.max_r);
  struct Case {
    long long k2;
    const char* basket;
  };
  for (auto c : {Case{8, "{}"}, Case{6, "2x1/2(1,1)"}, Case{5, "1/3(1,1) + 1/3(1,2)"},
                 Case{4, "2x1/5(1,2)"}, Case{2, "6x1/2(1,1)"}}) {
    const auto basket = Basket::parse(c.basket);
    const Rational x = Rational(c.k2) + basket_invariants(basket).k;
    std::set<std::tuple<std::size_t, Signature, Signature>> expected;
    for (std::size_t i = 0; i < sigs.size(); ++i)
      for (std::size_t j = i; j < sigs.size(); ++j) {
        const Rational d = x / (2 * theta(sigs[i]) * theta(sigs[j]));
        if (!is_integer(d) || d < 1 || d > Rational(caps.max_group_order)) continue;
        const Rational g1 = 1 + d * theta(sigs[i]) / 2, g2 = 1 + d * theta(sigs[j]) / 2;
        if (!is_integer(g1) || !is_integer(g2) || g1 < 2 || g2 < 2) continue;
        const auto order = static_cast<std::size_t>(to_integer(d));
        bool fits = true;
        for (const auto& [type, count] : basket.entries()) {
          auto divides = [n = type.n](const Signature& s) {
            return std::any_of(s.ms().begin(), s.ms().end(), [&](unsigned m) { return m % n == 0; });
          };
          if (!divides(sigs[i]) || !divides(sigs[j])) fits = false;
        }
        bool lcm_ok = true;
        for (const auto* s : {&sigs[i], &sigs[j]})
          for (auto m : s->ms())
            if (order % m != 0) lcm_ok = false;
        if (fits && lcm_ok) expected.emplace(order, sigs[i], sigs[j]);
      }
    std::set<std::tuple<std::size_t, Signature, Signature>> got;
    for (const auto& p : admissible_signature_pairs(1, c.k2, basket, caps))
      got.emplace(p.group_order, p.t1, p.t2);
    CHECK(got == expected);
  }
}

TEST_CASE("A5 at K^2 = 8") {
  auto r = classify(k2_params(8, {"A5"}));
  REQUIRE(r.families.size() == 3);
  std::set<std::pair<Signature, Signature>> sigs;
  for (const auto& f : r.families) {
    sigs.emplace(std::min(f.t1, f.t2), std::max(f.t1, f.t2));
    CHECK(f.basket.empty());
    CHECK(f.invariants.KS2 == 8);
    CHECK(f.hodge.dimV == 0);
    CHECK(f.hodge.h11X == 2);
  }
  auto pair = [](const char* a, const char* b) {
    auto s = Signature::parse(a), t = Signature::parse(b);
    return std::make_pair(std::min(s, t), std::max(s, t));
  };
  CHECK(sigs == std::set<std::pair<Signature, Signature>>{
                    pair("2,5,5", "3,3,3,3"), pair("5,5,5", "2,2,2,3"), pair("3,3,5", "2,2,2,2,2")});
  CHECK(r.coverage_gaps.empty());
}

TEST_CASE("Z2 has no families") {
  auto r = classify(k2_params(8, {"Z2"}));
  CHECK(r.families.empty());
  CHECK(r.coverage_gaps.empty());
}

TEST_CASE("Z5^2 counts match brute-force orbits of free pairs") {
  auto g = group_preset("Z5^2");
  const auto auts = automorphisms(g, 1000);
  const std::vector<unsigned> sig{5, 5, 5};
  // Spherical systems as unordered triples; Hurwitz moves only reorder them
  // in an abelian group.
  std::set<std::vector<ElementId>> systems;
  for (auto t : spherical_tuples(*g, sig)) {
    std::sort(t.begin(), t.end());
    systems.insert(t);
  }
  auto subgroup = [&](ElementId x) {
    auto c = g->cyclic_subgroup(x);
    return std::set<ElementId>(c.begin(), c.end());
  };
  auto is_free = [&](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    for (auto x : a)
      for (auto y : b) {
        auto sx = subgroup(x), sy = subgroup(y);
        std::vector<ElementId> both;
        std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(both));
        if (both.size() > 1) return false;
      }
    return true;
  };
  using Pair = std::pair<std::vector<ElementId>, std::vector<ElementId>>;
  std::vector<Pair> pairs;
  for (const auto& a : systems)
    for (const auto& b : systems)
      if (is_free(a, b)) pairs.emplace_back(a, b);
  auto image = [&](const GroupMap& m, std::vector<ElementId> t) {
    for (auto& x : t) x = m(x);
    std::sort(t.begin(), t.end());
    return t;
  };
  auto orbit_count = [&](bool swap) {
    std::set<Pair> seen;
    std::size_t n = 0;
    for (const auto& p : pairs) {
      if (seen.count(p)) continue;
      ++n;
      for (const auto& m : auts) {
        Pair q{image(m, p.first), image(m, p.second)};
        if (swap) seen.emplace(q.second, q.first);
        seen.insert(std::move(q));
      }
    }
    return n;
  };
  const auto aut_orbits = orbit_count(false), swap_orbits = orbit_count(true);
  CHECK(aut_orbits == 2);
  CHECK(family_count("Z5^2", 8, DedupMode::HurwitzAut) == aut_orbits);
  CHECK(family_count("Z5^2", 8, DedupMode::HurwitzAutSwap) == swap_orbits);
  CHECK(family_count("Z5^2", 8, DedupMode::Hurwitz) == pairs.size());
}

TEST_CASE("dedup counts are monotone") {
  for (auto [group, k2] : {std::pair{"Z2^4", 8LL}, std::pair{"G(16,3)", 8LL}, std::pair{"Z2xZ4", 4LL},
                           std::pair{"Z3^2", 8LL}}) {
    auto h = family_count(group, k2, DedupMode::Hurwitz);
    auto a = family_count(group, k2, DedupMode::HurwitzAut);
    auto s = family_count(group, k2, DedupMode::HurwitzAutSwap);
    CHECK(h >= a);
    CHECK(a >= s);
    CHECK(s >= 1);
  }
}

TEST_CASE("every family satisfies the global identities") {
  for (auto [group, k2] : {std::pair{"A5", 5LL}, std::pair{"S4", 2LL}, std::pair{"PSL(2,7)", 1LL},
                           std::pair{"Z2xD4", 4LL}}) {
    auto r = classify(k2_params(k2, {group}));
    CHECK(!r.families.empty());
    for (const auto& f : r.families) {
      const auto& i = f.invariants;
      const auto& d = f.dual;
      CHECK(i.KS2 == k2);
      CHECK(12 * i.chi == i.KS2 + i.eS);
      CHECK(i.KS2 == 8 * i.chi - i.B / 3);
      CHECK(i.KS2 == 8 * i.chi - 2 * i.gamma - i.l);
      CHECK(is_integer(i.gamma + i.pg));
      CHECK(i.gamma + i.pg >= 0);
      CHECK(d.gamma == -i.gamma);
      CHECK(d.mu == i.mu);
      CHECK(Rational(d.chi) == i.chi + i.gamma);
      CHECK(i.tau == -2 * i.gamma - i.l);
      CHECK(f.basket == compute_basket(f.datum));
    }
  }
}

TEST_CASE("parallel search equals the sequential one") {
  auto p = k2_params(5, {"A5", "S4", "Z2xS4"});
  auto seq = dump_report(make_report(p, classify(p)));
  p.jobs = 3;
  auto par = dump_report(make_report(p, classify(p)));
  CHECK(seq == par);
  CHECK(seq == dump_report(make_report(p, classify(p))));
}

TEST_CASE("gamma mode") {
  SearchParams p;
  p.chi = 1;
  p.gamma = Rational(0);
  p.k2_min = 5;
  p.k2_max = 8;
  p.k2_window_set = true;
  p.groups = {group_preset("A5")};
  auto r = classify(p);
  std::map<long long, std::size_t> by_k2;
  for (const auto& f : r.families) {
    CHECK(f.invariants.gamma == 0);
    ++by_k2[to_integer(f.invariants.KS2)];
  }
  CHECK(by_k2[8] == 3);
  CHECK(by_k2[6] == 1);
  CHECK(by_k2[5] == 2);
}

TEST_CASE("coverage gaps") {
  auto p = k2_params(8, {"A5"});
  CHECK(classify(p).coverage_gaps.empty());
  p.groups_are_catalog = true;
  auto r = classify(p);
  CHECK(std::any_of(r.coverage_gaps.begin(), r.coverage_gaps.end(),
                    [](const CoverageGap& g) { return g.group_order == 32 && g.k2 == 8; }));
  CHECK(std::none_of(r.coverage_gaps.begin(), r.coverage_gaps.end(),
                     [](const CoverageGap& g) { return g.group_order == 60; }));
  CHECK(r.families.size() == 3);
}

TEST_CASE("parameter checks") {
  SearchParams p;
  CHECK_THROWS_AS(check_params(p), Error);
  p.k2 = 8;
  CHECK_NOTHROW(check_params(p));
  p.gamma = Rational(0);
  CHECK_THROWS_AS(check_params(p), Error);
  p.gamma.reset();
  p.k2_window_set = true;
  CHECK_THROWS_AS(check_params(p), Error);
  p.k2_window_set = false;
  p.chi = 0;
  CHECK_THROWS_AS(check_params(p), Error);
  CHECK(is_hard_order(512));
  CHECK(is_hard_order(1024));
  CHECK(is_hard_order(1536));
  CHECK(!is_hard_order(256));
}
