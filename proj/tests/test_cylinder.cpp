#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necker/cylinder.hpp"

#include <set>

using namespace necker;

namespace {

TraceOutcome periodic_trace(std::int64_t a, std::int64_t b) {
  Direction d = Direction::make(a, b);
  TraceOutcome out = trace(default_start(d), default_max_crossings(d));
  REQUIRE(out.kind == TraceKind::Periodic);
  return out;
}

std::set<std::array<std::int64_t, 3>> vertex_set(const BoundaryChain& c) {
  std::set<std::array<std::int64_t, 3>> s;
  for (const Vec3l& v : c.singularities) s.insert({v(0), v(1), v(2)});
  return s;
}

}  // namespace

TEST_CASE("shear normalization") {
  CHECK(exact_eq<Mat2z>(shear_normalize(Direction::make(1, 0)), Mat2z::Identity()));
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {1, 1}, {5, 3}, {-7, 9}, {23, 71}, {0, 1}}) {
    if (a == 0 && b == 0) continue;
    Direction d = Direction::make(a, b);
    Mat2z m = shear_normalize(d);
    CHECK(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == Zint(1));
    Vec2z v{Zint(a), Zint(b)};
    Vec2z img = m * v;
    CHECK(img(0) == Zint(1));
    CHECK(img(1) == Zint(0));
  }
}

TEST_CASE("prong counts match the cone angle") {
  Direction d = Direction::make(1, 1);
  CHECK(enumerate_prongs(Vec3l(-1, 0, 0), d).size() == 3);
  CHECK(enumerate_prongs(Vec3l(0, 0, 1), d).size() == 3);
  CHECK(enumerate_prongs(Vec3l(0, 0, 0), d).size() == 6);
  Direction d2 = Direction::make(5, 3);
  CHECK(enumerate_prongs(Vec3l(0, 0, 0), d2).size() == 6);
}

TEST_CASE("slope one separatrices are square diagonals") {
  Direction d = Direction::make(1, 1);
  for (const GeodesicState& prong : enumerate_prongs(Vec3l(0, 0, 0), d)) {
    SaddleConnection sc = separatrix(prong);
    CHECK(sc.length_sq == Rat(2));
    CHECK(is_surface_vertex(sc.start));
    CHECK(is_surface_vertex(sc.end));
    GeodesicState mid = midpoint_state(sc);
    CHECK(mid.point(0) == Rat(1, 2));
    CHECK(mid.point(1) == Rat(1, 2));
  }
}

TEST_CASE("odd/odd saddle connection midpoints are square centers") {
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 3}, {3, 5}, {7, 1}}) {
    Direction d = Direction::make(a, b);
    for (const GeodesicState& prong : enumerate_prongs(Vec3l(-1, 0, 0), d)) {
      SaddleConnection sc = separatrix(prong);
      GeodesicState mid = midpoint_state(sc);
      CHECK(mid.point(0) == Rat(1, 2));
      CHECK(mid.point(1) == Rat(1, 2));
    }
  }
}

TEST_CASE("maximal cylinder of slope one") {
  Cylinder cyl = maximal_cylinder(periodic_trace(1, 1));
  CHECK(cyl.area == Rat(6));
  CHECK(cyl.circumference_sq == Rat(72));
  CHECK(cyl.boundary_out.saddles.size() == 6);
  CHECK(cyl.boundary_in.saddles.size() == 6);
  CHECK(vertex_set(cyl.boundary_out).size() == 6);
  CHECK(vertex_set(cyl.boundary_in).size() == 6);
  CHECK(cyl.labeled);
  // all boundary saddles are diagonals in the slope-one case
  for (const auto& sc : cyl.boundary_out.saddles) CHECK(sc.length_sq == Rat(2));
  // each boundary passes through singularities of one cone angle only
  for (const BoundaryChain* c : {&cyl.boundary_out, &cyl.boundary_in}) {
    std::set<int> angles;
    for (const Vec3l& v : c->singularities) angles.insert(cone_angle(v));
    CHECK(angles.size() == 1);
  }
}

TEST_CASE("maximal cylinder of slope 3/5") {
  Cylinder cyl = maximal_cylinder(periodic_trace(5, 3));
  CHECK(cyl.area == Rat(6));
  CHECK(cyl.circumference_sq == Rat(36 * 34));
  CHECK(cyl.boundary_out.saddles.size() == 6);
  CHECK(cyl.boundary_in.saddles.size() == 6);
  CHECK(vertex_set(cyl.boundary_out).size() == 6);
  CHECK(vertex_set(cyl.boundary_in).size() == 6);
  CHECK(cyl.labeled);
  // width times circumference stays rational and exact under shear bookkeeping
  CHECK((cyl.offset_plus - cyl.offset_minus) * Rat(5) == Rat(1));
}

TEST_CASE("simplicity of the Fibonacci slopes, non-simplicity of 71/23") {
  CHECK(is_simple(periodic_trace(1, 1)));
  CHECK(is_simple(periodic_trace(5, 3)));
  CHECK(is_simple(periodic_trace(21, 13)));
  CHECK(!is_simple(periodic_trace(23, 71)));
}

TEST_CASE("transversal sweep tiles the deck period with area-six cylinders") {
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {5, 3}, {3, 5}}) {
    Direction d = Direction::make(a, b);
    auto bands = sweep_decomposition(d);
    CHECK(bands.size() == static_cast<std::size_t>(2 * std::abs(a)));
    Rat total(0);
    for (const SweepBand& band : bands) {
      CHECK(band.area == Rat(6));
      CHECK(band.circumference_sq == Rat(36 * (a * a + b * b)));
      CHECK(band.hi - band.lo == Rat(1, std::abs(a)));
      total += band.hi - band.lo;
    }
    CHECK(total == Rat(2));
  }
}
