#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "spherewright/cyclic.hpp"
#include "spherewright/errors.hpp"
#include "test_support.hpp"

using namespace spherewright;
namespace st = spherewright::testing;

TEST_CASE("evenness predicate") {
  CHECK(is_gale_facet(Simplex{2, 3, 5, 6}, 8));
  CHECK_FALSE(is_gale_facet(Simplex{1, 3, 5, 7}, 8));
  CHECK(is_gale_facet(Simplex{1, 2, 3, 4}, 8));

  SUBCASE("exhaustive agreement with the literal double loop") {
    for (int m = 5; m <= 12; ++m) {
      for (const auto& sub : st::k_subsets([m] {
             std::vector<int> all;
             for (int i = 1; i <= m; ++i) all.push_back(i);
             return all;
           }(), 4)) {
        CHECK(is_gale_facet(Simplex(sub), m) == st::brute_gale(sub, m));
      }
    }
  }
}

TEST_CASE("facet enumeration") {
  SUBCASE("m=5 gives the 4-simplex boundary") {
    CHECK(cyclic_facets(5).size() == 5);
  }
  SUBCASE("m=8 gives 20 facets, m=12 gives 54") {
    CHECK(cyclic_facets(8).size() == 20);
    CHECK(cyclic_facets(12).size() == 54);
  }
  SUBCASE("count formula m(m-3)/2") {
    for (int m = 5; m <= 20; ++m) {
      CHECK(static_cast<int>(cyclic_facets(m).size()) == m * (m - 3) / 2);
    }
  }
  SUBCASE("too small ground sets are rejected") {
    CHECK_THROWS_AS(cyclic_facets(4), GroundSetTooSmallError);
  }
}

TEST_CASE("the three enumeration routes coincide") {
  for (int m = 5; m <= 16; ++m) {
    const auto brute = cyclic_facets_serial(m);
    CHECK(cyclic_facets(m) == brute);
    CHECK(cyclic_facets_adjacent_pairs(m) == brute);
  }
}

TEST_CASE("reversal symmetry of the facet set") {
  for (int m : {8, 11, 14}) {
    const auto facets = cyclic_facets(m);
    std::vector<Simplex> reversed;
    for (const Simplex& f : facets) {
      std::vector<VertexId> image;
      for (VertexId v : f.vertices()) image.push_back(m + 1 - v);
      reversed.emplace_back(image);
    }
    std::sort(reversed.begin(), reversed.end());
    CHECK(reversed == facets);
  }
}

TEST_CASE("base spheres") {
  const auto p1 = build_base_sphere(1);
  CHECK(p1.vertex_set().size() == 8);
  CHECK(p1.facet_count() == 20);
  CHECK(p1.faces(1).size() == 28);  // neighborly: every label pair is an edge
  CHECK(p1.is_closed_pseudomanifold3());
  CHECK(p1.betti_mod2() == std::vector<int>{1, 0, 0, 1});

  const auto p2 = build_base_sphere(2);
  CHECK(p2.vertex_set().size() == 12);
  CHECK(p2.facet_count() == 54);
  CHECK(p2.f_vector().euler() == 0);

  CHECK_THROWS_AS(build_base_sphere(0), InvalidNError);
}
