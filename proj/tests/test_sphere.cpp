#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "spherewright/errors.hpp"
#include "spherewright/sphere.hpp"

using namespace spherewright;

TEST_CASE("apex labels stay above the base labels") {
  CHECK(apex_vertex(4, 1) == 9);
  CHECK(apex_vertex(4, 2) == 13);
  CHECK(apex_vertex(6, 2) == 14);
  CHECK_THROWS_AS(apex_vertex(5, 2), OutOfRangeError);
}

TEST_CASE("coning") {
  const auto ball = build_ball(4, 1, Variant::Extended);
  const auto cone = cone_over_boundary(9, ball.boundary());
  CHECK(cone.facet_count() == 8);
  CHECK(cone.contains(Simplex{9, 2, 3, 5}));
  CHECK(cone.contains(Simplex{9, 2, 5, 6}));

  CHECK(cone_over_boundary(5, build_complex({Simplex{1, 2, 3}})).facets() ==
        std::vector<Simplex>{{1, 2, 3, 5}});
  CHECK_THROWS_AS(cone_over_boundary(3, build_complex({Simplex{1, 2, 3}})), ApexCollisionError);
}

TEST_CASE("coned spheres") {
  const auto p1e = build_coned_sphere(1, Variant::Extended);
  CHECK(p1e.vertex_set().size() == 9);
  CHECK(p1e.facet_count() == 24);
  CHECK(p1e.is_closed_pseudomanifold3());
  CHECK(p1e.betti_mod2() == std::vector<int>{1, 0, 0, 1});

  const auto p1l = build_coned_sphere(1, Variant::Literal);
  CHECK(p1l.vertex_set().size() == 9);
  CHECK(p1l.facet_count() == 25);
  CHECK(p1l.is_closed_pseudomanifold3());

  const auto p2e = build_coned_sphere(2, Variant::Extended);
  CHECK(p2e.vertex_set().size() == 14);
  CHECK(p2e.facet_count() == 64);
  CHECK(p2e.betti_mod2() == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("interior-edge screen per site") {
  CHECK_FALSE(site_edge_is_interior(4, 1, 1, Variant::Literal));
  CHECK(site_edge_is_interior(4, 1, 1, Variant::Extended));
  CHECK_FALSE(site_edge_is_interior(4, 1, 2, Variant::Literal));
  CHECK(site_edge_is_interior(4, 2, 2, Variant::Literal));
  CHECK(site_edge_is_interior(6, 2, 2, Variant::Literal));
}

TEST_CASE("bipyramid sphere at n=1") {
  const auto q = build_bipyramid_sphere(1, Variant::Extended);
  CHECK(q.vertex_set().size() == 9);
  CHECK(q.tetrahedra.size() == 22);
  REQUIRE(q.bipyramids.size() == 1);
  CHECK(q.bipyramids[0].apexes == Simplex{3, 6});
  CHECK(q.bipyramids[0].equator == Simplex{2, 5, 9});
  CHECK(q.sites == std::vector<Site>{{4, 1}});

  SUBCASE("literal auto keeps no site at n=1") {
    const auto ql = build_bipyramid_sphere(1, Variant::Literal);
    CHECK(ql.bipyramids.empty());
    CHECK(ql.tetrahedra.size() == 25);
    CHECK(ql.vertex_set().size() == 9);  // the apex is added regardless
  }
  SUBCASE("literal with a forced width-1 site is rejected") {
    CHECK_THROWS_AS(build_bipyramid_sphere(1, Variant::Literal,
                                           SiteSelection::explicit_sites({{4, 1}})),
                    SiteRejectedError);
  }
  SUBCASE("out-of-range sites are invalid") {
    CHECK_THROWS_AS(build_bipyramid_sphere(1, Variant::Extended,
                                           SiteSelection::explicit_sites({{4, 2}})),
                    InvalidSiteError);
  }
}

TEST_CASE("bipyramid sphere at n=2") {
  const auto q = build_bipyramid_sphere(2, Variant::Extended, SiteSelection::all_sites());
  CHECK(q.vertex_set().size() == 14);
  CHECK(q.tetrahedra.size() == 56);
  CHECK(q.bipyramids.size() == 4);

  SUBCASE("literal auto keeps the width-2 sites only") {
    const auto ql = build_bipyramid_sphere(2, Variant::Literal);
    CHECK(ql.sites == std::vector<Site>{{4, 2}, {6, 2}});
  }
  SUBCASE("literal all-sites trips on a width-1 site") {
    CHECK_THROWS_AS(build_bipyramid_sphere(2, Variant::Literal, SiteSelection::all_sites()),
                    SiteRejectedError);
  }
}

TEST_CASE("bipyramid face lattice") {
  BipyramidCell cell;
  cell.apexes = Simplex{3, 6};
  cell.equator = Simplex{2, 5, 9};

  const auto faces = cell.faces();
  CHECK(faces.size() == 20);
  CHECK(std::count_if(faces.begin(), faces.end(),
                      [](const Simplex& f) { return f.dimension() == 1; }) == 9);

  std::vector<Simplex> triangles;
  for (const Simplex& f : faces) {
    if (f.dimension() == 2) triangles.push_back(f);
  }
  CHECK(triangles == std::vector<Simplex>{{2, 3, 5}, {2, 3, 9}, {2, 5, 6}, {2, 6, 9},
                                          {3, 5, 9}, {5, 6, 9}});

  CHECK_FALSE(cell.has_face(Simplex{3, 6}));     // apex pair
  CHECK_FALSE(cell.has_face(Simplex{2, 5, 9}));  // equator
  CHECK(cell.has_face(Simplex{2, 5}));
  CHECK(cell.has_face(Simplex{}));
  for (const Simplex& f : faces) CHECK(cell.has_face(f));
}

TEST_CASE("deleted and surviving faces of the assembled sphere") {
  for (int n = 1; n <= 3; ++n) {
    const auto q = build_bipyramid_sphere(n, Variant::Extended);
    auto in_some_cell = [&q](const Simplex& f) {
      for (const Simplex& t : q.tetrahedra) {
        if (t.contains(f)) return true;
      }
      for (const BipyramidCell& b : q.bipyramids) {
        if (b.has_face(f)) return true;
      }
      return false;
    };
    for (const Site& s : q.sites) {
      const SiteFaces site = site_faces(s.a, s.u, n);
      const VertexId apex = q.apex_of.at(s.a);
      CHECK_FALSE(in_some_cell(site.missing_edge));
      CHECK_FALSE(in_some_cell(site.hinge.with(apex)));  // the deleted equator
      CHECK(in_some_cell(site.hinge));                   // stays as an equatorial edge
    }
  }
}

TEST_CASE("cell bookkeeping across site sets") {
  const auto coned = build_coned_sphere(2, Variant::Extended);
  for (const auto& sel :
       {SiteSelection::auto_sites(), SiteSelection::explicit_sites({{4, 1}, {6, 2}}),
        SiteSelection::explicit_sites({{6, 1}})}) {
    const auto q = build_bipyramid_sphere(2, Variant::Extended, sel);
    CHECK(q.tetrahedra.size() == coned.facet_count() - 2 * q.bipyramids.size());
    CHECK(q.bipyramids.size() == q.sites.size());
    CHECK(q.vertex_set().size() == 14);
    // the merged pair met exactly in the deleted equator
    for (const BipyramidCell& b : q.bipyramids) {
      const auto split_lo = b.equator.with(b.apexes[0]);
      const auto split_hi = b.equator.with(b.apexes[1]);
      CHECK(split_lo.intersection(split_hi) == b.equator);
      CHECK(coned.contains(split_lo));
      CHECK(coned.contains(split_hi));
    }
  }
}
