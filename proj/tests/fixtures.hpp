#pragma once

#include "pqs/group.hpp"
#include "pqs/presets.hpp"
#include "pqs/spherical.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace pqs;

inline Tuple elements(const GroupPtr& g, std::initializer_list<const char*> cycles) {
  Tuple t;
  for (auto c : cycles) t.push_back(g->index_of(parse_permutation(c, g->degree())));
  return t;
}

inline GroupPtr psl27() {
  return make_group({parse_permutation("(367)(458)", 8), parse_permutation("(182)(456)", 8)}, 8,
                    "PSL(2,7)");
}

// phi_1 on T(7,3,3) and phi_2 on T(7,4,2). The printed image of the last
// generator of phi_2 repeats a point, so it is recovered from the relation
// c_1 c_2 c_3 = 1.
inline SurfaceDatum fake_godeaux() {
  auto g = psl27();
  auto t1 = elements(g, {"(1824375)", "(136)(284)", "(164)(357)"});
  auto t2 = elements(g, {"(1658327)", "(1478)(2653)"});
  t2.push_back(g->inverse(g->multiply(t2[0], t2[1])));
  return make_datum(g, t1, t2);
}

// The genus 2 hyperelliptic involution on both factors.
inline SurfaceDatum z2_square() {
  auto g = group_preset("Z2");
  Tuple t(6, 1);
  return make_datum(g, t, t);
}

// A5 with (2,5,5) and (3,3,3,3): the first table row.
inline SurfaceDatum a5_row1() {
  auto g = group_preset("A5");
  std::vector<unsigned> m1{2, 5, 5}, m2{3, 3, 3, 3};
  return make_datum(g, spherical_tuples(*g, m1).front(), spherical_tuples(*g, m2).front());
}

}  // namespace fixtures
