#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necker/tiling.hpp"

#include <set>

using namespace necker;

TEST_CASE("polygon predicates") {
  Polygon sq;
  sq.pts = {Vec2r(Rat(0), Rat(0)), Vec2r(Rat(2), Rat(0)), Vec2r(Rat(2), Rat(2)),
            Vec2r(Rat(0), Rat(2))};
  CHECK(polygon_area2(sq) == Rat(8));
  CHECK(locate_point(sq, Vec2r(Rat(1), Rat(1))) == PointLoc::Inside);
  CHECK(locate_point(sq, Vec2r(Rat(2), Rat(1))) == PointLoc::Boundary);
  CHECK(locate_point(sq, Vec2r(Rat(3), Rat(1))) == PointLoc::Outside);
  CHECK(locate_point(sq, Vec2r(Rat(0), Rat(0))) == PointLoc::Boundary);
  CHECK(polygon_simple(sq));

  // a nonconvex hexagon
  Polygon l;
  l.pts = {Vec2r(Rat(0), Rat(0)), Vec2r(Rat(3), Rat(0)), Vec2r(Rat(3), Rat(1)),
           Vec2r(Rat(1), Rat(1)), Vec2r(Rat(1), Rat(3)), Vec2r(Rat(0), Rat(3))};
  CHECK(polygon_area2(l) == Rat(2 * (3 + 2)));
  CHECK(polygon_simple(l));
  CHECK(locate_point(l, Vec2r(Rat(2), Rat(2))) == PointLoc::Outside);
  CHECK(locate_point(l, Vec2r(Rat(1, 2), Rat(2))) == PointLoc::Inside);
  auto tris = triangulate(l);
  CHECK(tris.size() == l.pts.size() - 2);
  Rat tri_total(0);
  for (const auto& t : tris) {
    Polygon p;
    p.pts = {t[0], t[1], t[2]};
    tri_total += polygon_area2(p);
  }
  CHECK(tri_total == polygon_area2(l));

  // clipping to a box
  CHECK(box_clip_area2(l, Rat(0), Rat(1), Rat(0), Rat(1)) == Rat(2));
  CHECK(box_clip_area2(sq, Rat(1), Rat(5), Rat(1), Rat(5)) == Rat(2));
  CHECK(box_clip_area2(sq, Rat(5), Rat(6), Rat(5), Rat(6)) == Rat(0));

  // intersection area of translates
  Polygon shifted = sq;
  for (auto& p : shifted.pts) p = Vec2r(p(0) + Rat(1), p(1) + Rat(1));
  CHECK(intersection_area2(triangulate(sq), shifted) == Rat(2));
  Polygon apart = sq;
  for (auto& p : apart.pts) p = Vec2r(p(0) + Rat(2), p(1));
  CHECK(intersection_area2(triangulate(sq), apart) == Rat(0));

  // a self-crossing quadrilateral is rejected
  Polygon bow;
  bow.pts = {Vec2r(Rat(0), Rat(0)), Vec2r(Rat(2), Rat(2)), Vec2r(Rat(2), Rat(0)),
             Vec2r(Rat(0), Rat(2))};
  CHECK(!polygon_simple(bow));
}

TEST_CASE("symmetry pair of the slope-one cylinder") {
  Direction d = Direction::make(1, 1);
  TraceOutcome seed = trace(default_start(d), default_max_crossings(d));
  Cylinder cyl = maximal_cylinder(seed);
  REQUIRE(cyl.labeled);
  SymmetryPair sp = symmetry_pair(cyl, cyl.boundary_out);
  CHECK(sp.A.order() == 6);
  CHECK(sp.B.order() == 2);
  NeckerIsometry ab = sp.A.compose(sp.B);
  CHECK(ab.compose(ab).compose(ab).is_identity());
  CHECK(!exact_eq<Vec3r>(project(sp.center_a), project(sp.center_b)));

  auto [t1, t2] = translation_generators(sp);
  CHECK(exact_eq<Mat3l>(t1.P, Mat3l::Identity()));
  CHECK(exact_eq<Mat3l>(t2.P, Mat3l::Identity()));
  CHECK(level(t1.t) == 0);
  CHECK(level(t2.t) == 0);
  // conjugating a generator by A lands in the same translation lattice
  NeckerIsometry conj = sp.A.compose(t1).compose(sp.A.inverse());
  CHECK(exact_eq<Mat3l>(conj.P, Mat3l::Identity()));
  Vec2l c = Vec2l(conj.t(0), -conj.t(2));
  Vec2l a1 = Vec2l(t1.t(0), -t1.t(2)), a2 = Vec2l(t2.t(0), -t2.t(2));
  std::int64_t det = a1(0) * a2(1) - a1(1) * a2(0);
  // c = m a1 + n a2 with integer m, n
  std::int64_t mnum = c(0) * a2(1) - c(1) * a2(0);
  std::int64_t nnum = -c(0) * a1(1) + c(1) * a1(0);
  CHECK(mnum % det == 0);
  CHECK(nnum % det == 0);
}

TEST_CASE("slope-one tiling covers a window without overlap") {
  Tiling tiling = generate_tiling(Direction::make(1, 1), true, Rat(6));
  CHECK(tiling.tiles.size() > 4);
  TilingReport report = verify_tiling(tiling);
  CHECK(report.covered);
  CHECK(!report.overlap);
  CHECK(report.area_balance);
  CHECK(report.tile_area2 == report.covolume2);

  // the order-six symmetry permutes the tiles: it maps the base tile to itself
  std::set<std::pair<std::string, std::string>> base_set, image_set;
  for (const Vec3r& p : tiling.base.plane) {
    Vec2r c = lattice_coords(p);
    base_set.insert({c(0).str(), c(1).str()});
    Vec2r ci = lattice_coords(project(tiling.sym.A.apply(p)));
    image_set.insert({ci(0).str(), ci(1).str()});
  }
  CHECK(base_set == image_set);
}

TEST_CASE("inner tiling of slope one also tiles") {
  Tiling tiling = generate_tiling(Direction::make(1, 1), false, Rat(5));
  TilingReport report = verify_tiling(tiling);
  CHECK(report.covered);
  CHECK(!report.overlap);
  CHECK(report.area_balance);
}

TEST_CASE("slope 3/5 outer tiling, small window") {
  Tiling tiling = generate_tiling(Direction::from_slope(3, 5), true, Rat(4));
  TilingReport report = verify_tiling(tiling);
  CHECK(report.covered);
  CHECK(!report.overlap);
  CHECK(report.area_balance);
  // twelve or more bends: the boundary is nowhere a regular hexagon
  CHECK(tiling.base.boundary.pts.size() >= 12);
}

TEST_CASE("slope 9/1: the simplicity oracle decides the tiling outcome") {
  Direction d = Direction::from_slope(9, 1);
  TraceOutcome seed = trace(default_start(d), default_max_crossings(d));
  REQUIRE(seed.kind == TraceKind::Periodic);
  if (is_simple(seed)) {
    Tiling tiling = generate_tiling(d, true, Rat(4));
    TilingReport rep = verify_tiling(tiling);
    CHECK(rep.covered);
    CHECK(!rep.overlap);
    CHECK(rep.area_balance);
  } else {
    CHECK_THROWS_AS(generate_tiling(d, true, Rat(4)), NonSimpleDirection);
  }
}

TEST_CASE("non-simple directions are refused") {
  CHECK_THROWS_AS(generate_tiling(Direction::from_slope(71, 23), true, Rat(3)),
                  NonSimpleDirection);
}

TEST_CASE("empty tile list reports uncovered") {
  Tiling empty;
  empty.window_radius = Rat(1);
  empty.t1 = Vec2l(1, 0);
  empty.t2 = Vec2l(0, 1);
  empty.base.boundary.pts = {Vec2r(Rat(0), Rat(0)), Vec2r(Rat(1), Rat(0)),
                             Vec2r(Rat(0), Rat(1))};
  TilingReport report = verify_tiling(empty);
  CHECK(!report.covered);
}
