#include "doctest.h"

#include "pqs/dedup.hpp"
#include "pqs/error.hpp"
#include "pqs/presets.hpp"
#include "pqs/signature.hpp"
#include "pqs/spherical.hpp"

#include <random>
#include <set>

using namespace pqs;

namespace {

std::size_t brute_force_systems(const FiniteGroup& g, std::vector<unsigned> ms) {
  std::size_t count = 0;
  const std::size_t n = g.order(), r = ms.size();
  Tuple t(r, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    ElementId prod = 0;
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
      t[i] = static_cast<ElementId>(c % n);
      c /= n;
      ok = ok && g.element_order(t[i]) == ms[i];
      prod = g.multiply(prod, t[i]);
    }
    if (ok && prod == 0 && g.generates(t)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("theta and Hurwitz genus") {
  CHECK(theta(Signature::parse("(2,3,7)")) == make_rational(1, 42));
  CHECK(theta(Signature::parse("2,5,5")) == make_rational(1, 10));
  CHECK(theta(Signature::parse("(2,2)")) == -1);
  CHECK(hurwitz_genus(60, Signature::parse("2,5^2")) == 4);
  CHECK(hurwitz_genus(60, Signature::parse("3^4")) == 21);
  CHECK(hurwitz_genus(2, Signature::parse("2^6")) == 2);
  CHECK_THROWS_AS(hurwitz_genus(7, Signature::parse("2,5,5")), Error);
  CHECK_THROWS_AS(hurwitz_genus(10, Signature::parse("2,5,5")), Error);  // 2g-2 = 1
}

TEST_CASE("signature text") {
  auto s = Signature::parse("5,2^2,3");
  CHECK(s.to_string() == "(2,2,3,5)");
  CHECK(s.to_short_string() == "2^2,3,5");
  CHECK(Signature::parse(s.to_short_string()) == s);
  CHECK_THROWS_AS(Signature::parse("(2,1,3)"), Error);
  try {
    Signature::parse("2,x");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("spherical systems") {
  auto v4 = group_preset("Z2^2");
  std::vector<unsigned> s222{2, 2, 2};
  CHECK(spherical_systems(v4, s222).size() == 6);
  auto z5 = group_preset("Z5");
  std::vector<unsigned> s555{5, 5, 5};
  CHECK(spherical_systems(z5, s555).size() == 12);
  std::vector<unsigned> s22{2, 2};
  CHECK(spherical_systems(group_preset("Z2"), s22).size() == 1);

  SUBCASE("agree with brute force, including unsorted positional orders") {
    struct Case {
      const char* group;
      std::vector<unsigned> ms;
    };
    for (const auto& c : std::vector<Case>{{"S3", {2, 2, 3}},
                                           {"S3", {3, 2, 2}},
                                           {"S3", {2, 3, 2}},
                                           {"D4", {2, 2, 4}},
                                           {"Q8", {4, 4, 4}},
                                           {"A4", {3, 3, 3}},
                                           {"A4", {2, 3, 3}},
                                           {"Z2^3", {2, 2, 2, 2, 2}},
                                           {"Z5", {5, 5, 5, 5}}}) {
      CAPTURE(c.group);
      auto g = group_preset(c.group);
      auto systems = spherical_systems(g, c.ms);
      CHECK(systems.size() == brute_force_systems(*g, c.ms));
      for (const auto& s : systems) {
        CHECK(s.orders() == c.ms);
        CHECK_NOTHROW(validate(s, c.ms));
      }
      CHECK(std::is_sorted(systems.begin(), systems.end(),
                           [](auto& a, auto& b) { return a.tuple < b.tuple; }));
    }
  }

  SUBCASE("deterministic") {
    auto a5 = group_preset("A5");
    std::vector<unsigned> ms{2, 5, 5};
    auto x = spherical_tuples(*a5, ms), y = spherical_tuples(*group_preset("A5"), ms);
    CHECK(x == y);
  }
}

TEST_CASE("system text format") {
  auto a5 = group_preset("A5");
  std::vector<unsigned> ms{2, 5, 5};
  auto sys = spherical_systems(a5, ms).front();
  auto text = format_system(sys);
  CHECK(text.substr(0, 9) == "(2,5,5):[");
  auto back = parse_system(a5, text);
  CHECK(back.tuple == sys.tuple);

  auto v4 = group_preset("Z2^2");
  const auto e = [&](ElementId i) { return to_cycle_string(v4->element(i)); };
  CHECK_THROWS_WITH_AS(parse_system(v4, "(2,2,2):[" + e(1) + "," + e(1) + "," + e(2) + "]"),
                       doctest::Contains("not the identity"), Error);
  CHECK_NOTHROW(parse_system(v4, "(2,2,2):[" + e(1) + "," + e(2) + "," + e(3) + "]"));
  CHECK_THROWS_WITH_AS(parse_system(v4, "(2,2):[(1,2)(3,4),(1,2)(3,4)]"),
                       doctest::Contains("tuple does not generate G"), Error);
  CHECK_THROWS_WITH_AS(parse_system(v4, "(2,3):[(1,2)(3,4),(1,2)(3,4)]"),
                       doctest::Contains("expected 3"), Error);
  try {
    parse_system(v4, "(2,2):[(1,2)(3,4),(1,2)(3,3)]");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 27);
  }
  CHECK_THROWS_AS(parse_system(v4, "(2,2)[(1,2)(3,4)]"), ParseError);
}

TEST_CASE("Hurwitz moves preserve the defining properties") {
  auto a5 = group_preset("A5");
  std::vector<unsigned> ms{2, 3, 3, 5};
  auto systems = spherical_tuples(*a5, ms);
  REQUIRE(!systems.empty());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Tuple t = systems[rng() % systems.size()];
    std::multiset<unsigned> before;
    for (auto x : t) before.insert(a5->element_order(x));
    for (int step = 0; step < 10; ++step) {
      auto i = rng() % (t.size() - 1);
      if (rng() % 2) hurwitz_move(*a5, t, i);
      else inverse_hurwitz_move(*a5, t, i);
    }
    std::multiset<unsigned> after;
    ElementId prod = 0;
    for (auto x : t) {
      after.insert(a5->element_order(x));
      prod = a5->multiply(prod, x);
    }
    CHECK(before == after);
    CHECK(prod == 0);
    CHECK(a5->generates(t));
  }
  Tuple t = systems[3], u = t;
  hurwitz_move(*a5, u, 1);
  inverse_hurwitz_move(*a5, u, 1);
  CHECK(u == t);
}

TEST_CASE("dedup") {
  SUBCASE("one Hurwitz move apart") {
    auto a5 = group_preset("A5");
    std::vector<unsigned> m1{2, 5, 5}, m2{3, 3, 3, 3};
    auto t1 = spherical_tuples(*a5, m1)[10];
    auto t2 = spherical_tuples(*a5, m2)[0];
    auto moved = t1;
    hurwitz_move(*a5, moved, 1);
    std::vector<SurfaceDatum> data{make_datum(a5, t1, t2), make_datum(a5, moved, t2)};
    auto classes = dedup_families(data, DedupMode::Hurwitz, std::span<const GroupMap>{});
    CHECK(classes.size() == 1);
    CHECK(classes.front().members.size() == 2);
  }

  SUBCASE("inner automorphism image") {
    auto s4 = group_preset("S4");
    std::vector<unsigned> m1{2, 3, 4}, m2{3, 3, 4, 4};
    REQUIRE(!spherical_tuples(*s4, m1).empty());
    auto t1 = spherical_tuples(*s4, m1)[0];
    auto t2 = spherical_tuples(*s4, m2).back();
    auto inner = inner_automorphisms(s4);
    const auto& a = inner[5];
    Tuple u1, u2;
    for (auto x : t1) u1.push_back(a(x));
    for (auto x : t2) u2.push_back(a(x));
    std::vector<SurfaceDatum> data{make_datum(s4, t1, t2), make_datum(s4, u1, u2)};
    CHECK(dedup_families(data, DedupMode::HurwitzAut).size() == 1);
  }

  SUBCASE("Z5^2 with (5,5,5) twice: both routes agree") {
    auto g = group_preset("Z5^2");
    auto sig = Signature::parse("5^3");
    auto tuples = spherical_tuples(*g, sig.ms());
    CHECK(tuples.size() == 480);
    auto auts = automorphisms(g);
    std::vector<SurfaceDatum> data;
    data.reserve(tuples.size() * tuples.size());
    for (const auto& a : tuples)
      for (const auto& b : tuples) data.push_back(make_datum(g, a, b));
    auto swap = dedup_families(data, DedupMode::HurwitzAutSwap, auts);
    auto aut = dedup_families(data, DedupMode::HurwitzAut, auts);
    auto hur = dedup_families(data, DedupMode::Hurwitz, auts);
    // Abelian: Hurwitz orbits are the 3! orderings, so 480 / 6 = 80 orbits.
    CHECK(hur.size() == 80 * 80);
    CHECK(swap.size() <= aut.size());
    CHECK(aut.size() <= hur.size());

    auto orbits = system_orbits(g, sig);
    auto gens = generating_subset(auts);
    std::vector<GroupMap> gen_maps;
    for (auto i : gens) gen_maps.push_back(auts[i]);
    for (auto mode : {DedupMode::Hurwitz, DedupMode::HurwitzAut, DedupMode::HurwitzAutSwap}) {
      auto pc = pair_classes(orbits, orbits, mode, gen_maps);
      auto& ref = mode == DedupMode::Hurwitz ? hur : mode == DedupMode::HurwitzAut ? aut : swap;
      REQUIRE(pc.size() == ref.size());
      std::size_t total = 0;
      for (std::size_t i = 0; i < pc.size(); ++i) {
        CHECK(orbits.representatives[pc[i].orbit1] == ref[i].canonical.sys1.tuple);
        CHECK(orbits.representatives[pc[i].orbit2] == ref[i].canonical.sys2.tuple);
        CHECK(pc[i].orbit_size == ref[i].members.size());
        total += pc[i].orbit_size;
      }
      CHECK(total == data.size());
    }
  }

  SUBCASE("orbit cap") {
    auto a5 = group_preset("A5");
    std::vector<unsigned> ms{2, 2, 2, 2, 2};
    auto t = spherical_tuples(*a5, ms).front();
    BraidOrbitIndex index(a5, 10);
    CHECK_THROWS_AS(index.label(t), Error);
  }

  CHECK(parse_dedup_mode("hurwitz+aut") == DedupMode::HurwitzAut);
  CHECK(to_string(DedupMode::HurwitzAutSwap) == "hurwitz+aut+swap");
  CHECK_THROWS_AS(parse_dedup_mode("aut"), Error);
}
