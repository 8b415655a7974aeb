#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necker/geodesic.hpp"

#include <vector>

using namespace necker;

TEST_CASE("direction construction and parity classes") {
  CHECK(Direction::make(1, 1).parity() == ParityClass::O);
  CHECK(Direction::make(11, 4).parity() == ParityClass::E2);
  CHECK(Direction::make(4, 11).parity() == ParityClass::E1);
  CHECK(Direction::make(0, 1).parity() == ParityClass::E1);
  CHECK(Direction::make(1, 0).parity() == ParityClass::E2);
  CHECK_THROWS_AS(Direction::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Direction::make(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(Direction::make(0, 0), std::invalid_argument);
  // slope p/q is the vector (q,p)
  CHECK(Direction::from_slope(3, 5).a == 5);
  CHECK(Direction::from_slope(3, 5).b == 3);
}

TEST_CASE("embed chart points") {
  GeodesicState st{favorite_square(), Vec2r(Rat(0), Rat(0)), Vec2l(1, 1)};
  CHECK(exact_eq<Vec3r>(embed(st), Vec3r(Rat(-1), Rat(0), Rat(0))));
  st.point = Vec2r(Rat(1), Rat(1));
  CHECK(exact_eq<Vec3r>(embed(st), Vec3r(Rat(0), Rat(0), Rat(1))));
  st.point = Vec2r(Rat(1, 2), Rat(1, 2));
  CHECK(exact_eq<Vec3r>(embed(st), Vec3r(Rat(-1, 2), Rat(0), Rat(1, 2))));
}

TEST_CASE("single steps") {
  SUBCASE("diagonal through the center hits a vertex") {
    GeodesicState st{favorite_square(), Vec2r(Rat(1, 2), Rat(1, 2)), Vec2l(1, 1)};
    auto res = step(st);
    REQUIRE(std::holds_alternative<SingularHit>(res));
    CHECK(std::get<SingularHit>(res).vertex == Vec3l(0, 0, 1));
  }
  SUBCASE("axis-parallel advance") {
    GeodesicState st{favorite_square(), Vec2r(Rat(1, 3), Rat(1, 7)), Vec2l(0, 1)};
    auto res = step(st);
    REQUIRE(std::holds_alternative<Step>(res));
    const Step& s = std::get<Step>(res);
    CHECK(s.exit_side == 2);
    CHECK(s.tau == Rat(6, 7));
    // same 3-space point in both charts
    GeodesicState exit_state{favorite_square(), Vec2r(Rat(1, 3), Rat(1)), Vec2l(0, 1)};
    CHECK(exact_eq<Vec3r>(embed(s.next), embed(exit_state)));
  }
  SUBCASE("diagonal exit keeps the 3-space point and rotates the direction") {
    GeodesicState st{favorite_square(), Vec2r(Rat(1, 3), Rat(1, 7)), Vec2l(1, 1)};
    auto res = step(st);
    REQUIRE(std::holds_alternative<Step>(res));
    const Step& s = std::get<Step>(res);
    CHECK(s.exit_side == 1);
    // exit on s=1 at t = 1 - (1/3 - 1/7)
    GeodesicState exit_state{favorite_square(), Vec2r(Rat(1), Rat(17, 21)), Vec2l(1, 1)};
    CHECK(exact_eq<Vec3r>(embed(s.next), embed(exit_state)));
    CHECK(s.next.point(1) == Rat(1));
    // crossing the edge rotates the chart direction by a quarter turn
    CHECK((s.next.dir == Vec2l(1, -1) || s.next.dir == Vec2l(-1, 1)));
  }
}

TEST_CASE("classification by direction") {
  CHECK(classify_direction(Direction::make(1, 1)) == TraceKind::Periodic);
  CHECK(classify_direction(Direction::make(11, 4)) == TraceKind::DriftPeriodic);
  CHECK(classify_direction(Direction::make(23, 71)) == TraceKind::Periodic);
}

TEST_CASE("slope 1/1 closes with squared length 72") {
  Direction d = Direction::make(1, 1);
  TraceOutcome out = trace(default_start(d), default_max_crossings(d));
  REQUIRE(out.kind == TraceKind::Periodic);
  CHECK(out.length_sq == Rat(72));
  CHECK(out.displacement == Vec3l(0, 0, 0));
  CHECK(out.deck_displacement == Vec2l(0, 0));
  CHECK(out.crossings <= 6 * 2 + 6);
}

TEST_CASE("slope 71/23 closes with six times the vector norm") {
  Direction d = Direction::from_slope(71, 23);
  TraceOutcome out = trace(default_start(d), default_max_crossings(d));
  REQUIRE(out.kind == TraceKind::Periodic);
  CHECK(out.length_sq == Rat(36 * (71 * 71 + 23 * 23)));
}

TEST_CASE("slope 4/11 drifts") {
  Direction d = Direction::from_slope(4, 11);
  TraceOutcome out = trace(default_start(d), default_max_crossings(d));
  REQUIRE(out.kind == TraceKind::DriftPeriodic);
  CHECK(level(out.displacement) == 0);
  CHECK(out.displacement != Vec3l(0, 0, 0));
  // doubling the traced period doubles the drift: gamma(l+t) = x + gamma(t)
  TraceOutcome longer = trace(state_at_parameter(out, out.path[out.path.size() - 1].tau),
                              4 * out.crossings + 8);
  REQUIRE(longer.kind == TraceKind::DriftPeriodic);
  CHECK(longer.displacement == out.displacement);
}

TEST_CASE("reversibility: negating the direction retraces exactly") {
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {1, 1}, {5, 3}, {11, 4}, {3, -5}, {-7, 9}}) {
    Direction d = Direction::make(a, b);
    TraceOutcome fwd = trace(default_start(d), default_max_crossings(d));
    REQUIRE(fwd.path.size() > 5);
    std::size_t k = fwd.path.size() - 1;
    std::vector<Vec3r> fwd_pts;
    for (std::size_t i = 1; i <= k; ++i) fwd_pts.push_back(embed(fwd.path[i].state));

    GeodesicState rev = fwd.path[k].state;
    rev.dir = -rev.dir;
    TraceOutcome back = trace(rev, static_cast<std::int64_t>(k) + 4);
    // first reverse crossing re-crosses the same edge with zero advance
    REQUIRE(back.path.size() >= k + 1);
    CHECK(back.path[1].tau == Rat(0));
    CHECK(exact_eq<Vec3r>(embed(back.path[1].state), fwd_pts[k - 1]));
    for (std::size_t i = 1; i < k; ++i) {
      CHECK(exact_eq<Vec3r>(embed(back.path[1 + i].state), fwd_pts[k - 1 - i]));
    }
  }
}

TEST_CASE("projected path bends at every crossing") {
  // consecutive projected segments are never collinear: the orientation form
  // (u x v) . (1,1,1) of consecutive 3-space directions never vanishes
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {5, 3}, {11, 4}}) {
    Direction d = Direction::make(a, b);
    TraceOutcome out = trace(default_start(d), default_max_crossings(d));
    for (std::size_t i = 1; i + 1 < out.path.size(); ++i) {
      Vec3l u = dir3(out.path[i].state);
      Vec3l v = dir3(out.path[i + 1].state);
      Vec3l c = cross3<std::int64_t>(u, v);
      CHECK(c(0) + c(1) + c(2) != 0);
    }
  }
}

TEST_CASE("small odd/odd sweep: periodic with exact length and crossing bound") {
  for (std::int64_t a = -9; a <= 9; a += 2)
    for (std::int64_t b = -9; b <= 9; b += 2) {
      if (gcd64(a, b) != 1) continue;
      Direction d = Direction::make(a, b);
      TraceOutcome out = trace(sweep_start(d), default_max_crossings(d));
      REQUIRE(out.kind == TraceKind::Periodic);
      CHECK(out.length_sq == Rat(36 * (a * a + b * b)));
      CHECK(out.crossings <= 6 * (std::abs(a) + std::abs(b)) + 6);
    }
}

TEST_CASE("small one-even sweep: drift-periodic with nonzero level-zero displacement") {
  for (std::int64_t a = -8; a <= 8; ++a)
    for (std::int64_t b = -8; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      if (gcd64(a, b) != 1) continue;
      if (a % 2 != 0 && b % 2 != 0) continue;
      Direction d = Direction::make(a, b);
      TraceOutcome out = trace(sweep_start(d), default_max_crossings(d));
      REQUIRE(out.kind == TraceKind::DriftPeriodic);
      CHECK(level(out.displacement) == 0);
      CHECK(out.displacement != Vec3l(0, 0, 0));
    }
}

TEST_CASE("sixfold witness for simple slopes") {
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {5, 3}, {3, 5}}) {
    Direction d = Direction::make(a, b);
    TraceOutcome out = trace(default_start(d), default_max_crossings(d));
    REQUIRE(out.kind == TraceKind::Periodic);
    NeckerIsometry xi = sixfold_witness(out);
    CHECK(xi.order() == 6);
    // xi^6 fixes sampled trajectory states
    NeckerIsometry p = xi;
    for (int k = 1; k < 6; ++k) p = p.compose(xi);
    for (std::size_t q = 0; q < out.path.size(); q += out.path.size() / 5 + 1) {
      Vec3r x = embed(out.path[q].state);
      CHECK(exact_eq<Vec3r>(p.apply(x), x));
    }
    // restriction to the plane is a rotation by 60 degrees: order six and
    // orientation-preserving
    CHECK(surface_orientation_sign(xi) == 1);
  }
}

TEST_CASE("a start singular for a specific direction is reported, not perturbed") {
  // from (1/3, 1/7), direction (7,3) meets a cone point at parameter 20/21
  Direction d = Direction::make(7, 3);
  TraceOutcome out = trace(default_start(d), default_max_crossings(d));
  CHECK(out.kind == TraceKind::Singular);
  // the same direction closes from the sweep start
  TraceOutcome ok = trace(sweep_start(d), default_max_crossings(d));
  REQUIRE(ok.kind == TraceKind::Periodic);
  CHECK(ok.length_sq == Rat(36 * (49 + 9)));
}

TEST_CASE("parity classes under the chart rotation") {
  // a quarter turn fixes the odd/odd class and swaps the even classes
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
      {1, 1}, {3, -5}, {4, 7}, {7, 4}, {-9, 2}, {1, 0}, {0, 1}};
  for (auto [a, b] : pairs) {
    Direction d = Direction::make(a, b);
    Direction r = Direction::make(-b, a);
    switch (d.parity()) {
      case ParityClass::O: CHECK(r.parity() == ParityClass::O); break;
      case ParityClass::E1: CHECK(r.parity() == ParityClass::E2); break;
      case ParityClass::E2: CHECK(r.parity() == ParityClass::E1); break;
    }
  }
}

TEST_CASE("trace truncation is reported") {
  Direction d = Direction::from_slope(71, 23);
  TraceOutcome out = trace(default_start(d), 10);
  CHECK(out.kind == TraceKind::Truncated);
  CHECK(out.crossings == 10);
}

TEST_CASE("singular trace is reported") {
  GeodesicState st{favorite_square(), Vec2r(Rat(1, 2), Rat(1, 2)), Vec2l(1, 1)};
  TraceOutcome out = trace(st, 100);
  CHECK(out.kind == TraceKind::Singular);
  REQUIRE(out.hit.has_value());
  CHECK(out.hit->vertex == Vec3l(0, 0, 1));
}
