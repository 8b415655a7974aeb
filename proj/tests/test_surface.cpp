#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necker/surface.hpp"

#include <map>
#include <set>

using namespace necker;

TEST_CASE("square vertices of the favorite square") {
  SquareId s0 = favorite_square();  // base (-1,0,0), axes (2,0)
  auto v = square_vertices(s0);
  CHECK(v[0] == Vec3l(-1, 0, 0));
  CHECK(v[1] == Vec3l(-1, 0, 1));
  CHECK(v[2] == Vec3l(0, 0, 1));
  CHECK(v[3] == Vec3l(0, 0, 0));
  CHECK(level(v[0]) == -1);
  CHECK(level(v[1]) == 0);
  CHECK(level(v[2]) == 1);
  CHECK(level(v[3]) == 0);
}

TEST_CASE("vertex levels for every axis choice") {
  for (int k = 0; k < 3; ++k) {
    SquareId s{Vec3l(-axis_vector(k)), k};
    auto v = square_vertices(s);
    CHECK(level(v[0]) == -1);
    CHECK(level(v[1]) == 0);
    CHECK(level(v[2]) == 1);
    CHECK(level(v[3]) == 0);
  }
}

TEST_CASE("adjacency is an involution and shares the edge") {
  std::vector<SquareId> squares = {favorite_square(),
                                   SquareId{Vec3l(0, -1, 0), 0},
                                   SquareId{Vec3l(2, -3, 0), 1},
                                   SquareId{Vec3l(-2, 1, 0), 2}};
  for (const auto& s : squares) {
    auto vs = square_vertices(s);
    for (int side = 0; side < 4; ++side) {
      Transition tr = adjacent_square(s, side);
      CHECK(square_well_formed(tr.square));
      CHECK(tr.square != s);
      // the shared edge's endpoints agree as 3-space vertex sets
      auto vn = square_vertices(tr.square);
      std::set<std::array<std::int64_t, 3>> edge_s, edge_n;
      auto key = [](const Vec3l& v) { return std::array<std::int64_t, 3>{v(0), v(1), v(2)}; };
      edge_s.insert(key(vs[side]));
      edge_s.insert(key(vs[(side + 1) % 4]));
      edge_n.insert(key(vn[tr.side]));
      edge_n.insert(key(vn[(tr.side + 1) % 4]));
      CHECK(edge_s == edge_n);
      // involution with inverse rotation
      Transition back = adjacent_square(tr.square, tr.side);
      CHECK(back.square == s);
      CHECK(back.side == side);
      CHECK(((back.rot + tr.rot) & 3) == 0);
    }
  }
}

TEST_CASE("point maps across edges are mutually inverse") {
  SquareId s = favorite_square();
  for (int side = 0; side < 4; ++side) {
    Transition tr = adjacent_square(s, side);
    Vec2r p;
    switch (side) {
      case 0: p = Vec2r(Rat(1, 3), Rat(0)); break;
      case 1: p = Vec2r(Rat(1), Rat(2, 5)); break;
      case 2: p = Vec2r(Rat(3, 7), Rat(1)); break;
      default: p = Vec2r(Rat(0), Rat(5, 9)); break;
    }
    Vec2r q = transition_point(side, p);
    Vec2r back = transition_point(tr.side, q);
    CHECK(exact_eq<Vec2r>(back, p));
  }
}

TEST_CASE("cone angles") {
  CHECK(cone_angle(Vec3l(0, 0, 0)) == 6);
  CHECK(cone_angle(Vec3l(-1, 0, 0)) == 3);
  CHECK(cone_angle(Vec3l(1, 1, -1)) == 3);
  CHECK_THROWS_AS(cone_angle(Vec3l(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("walking around vertices reproduces the cone angle") {
  for (const Vec3l& p : {Vec3l(-1, 0, 0), Vec3l(0, 0, 0), Vec3l(0, 0, 1), Vec3l(1, -1, 1)}) {
    auto inc = squares_at_vertex(p);
    // start anywhere and cross sides adjacent to the corner until returning
    SquareId s = inc[0].square;
    Vec2l corner = inc[0].corner;
    int count = 0;
    SquareId cur = s;
    Vec2l c = corner;
    do {
      int side = corner_side_ccw(c);
      Transition tr = adjacent_square(cur, side);
      Vec2r img = transition_point(side, to_rat(c));
      cur = tr.square;
      c = Vec2l(img(0).num().to_long(), img(1).num().to_long());
      ++count;
      REQUIRE(count <= 8);
    } while (!(cur == s && c == corner));
    CHECK(count == cone_angle(p));
    // every visited square is incident
    CHECK(static_cast<int>(inc.size()) == cone_angle(p));
  }
}

TEST_CASE("projection values from the rhombille computation") {
  Vec3r p = project(Vec3r(Rat(-1), Rat(0), Rat(0)));
  CHECK(p(0) == Rat(-2, 3));
  CHECK(p(1) == Rat(1, 3));
  CHECK(p(2) == Rat(1, 3));
  Vec3r q = project(Vec3r(Rat(-1), Rat(0), Rat(1)));
  CHECK(q(0) == Rat(-1));
  CHECK(q(1) == Rat(0));
  CHECK(q(2) == Rat(1));
  Vec3r z = project(Vec3r(Rat(1), Rat(1), Rat(1)));
  CHECK(z(0) == Rat(0));
  CHECK(z(1) == Rat(0));
  CHECK(z(2) == Rat(0));
  // idempotent on the plane
  CHECK(exact_eq<Vec3r>(project(p), p));
}

TEST_CASE("projection is injective on a window of vertices") {
  std::map<std::array<std::string, 3>, Vec3l> seen;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n)
      for (int k = 0; k < 3; ++k) {
        auto verts = square_vertices(square_at_deck(Vec2l(m, n), k));
        for (const auto& v : verts) {
          Vec3r pr = project(to_rat(v));
          std::array<std::string, 3> key{pr(0).str(), pr(1).str(), pr(2).str()};
          auto it = seen.find(key);
          if (it != seen.end()) CHECK(it->second == v);
          seen.emplace(key, v);
        }
      }
}

TEST_CASE("rhombille tiling: rhombi counts at projected vertices") {
  // count squares whose projected rhombus touches a given projected vertex
  auto count_at = [](const Vec3l& p) { return static_cast<int>(squares_at_vertex(p).size()); };
  CHECK(count_at(Vec3l(0, 0, 0)) == 6);
  CHECK(count_at(Vec3l(-1, 0, 0)) == 3);
  CHECK(count_at(Vec3l(0, 0, 1)) == 3);
  CHECK(count_at(Vec3l(1, -1, 0)) == 6);
  CHECK(count_at(Vec3l(0, 1, -1)) == 6);
  CHECK(count_at(Vec3l(-1, 1, 1)) == 3);
}

TEST_CASE("isometry group basics") {
  NeckerIsometry id = NeckerIsometry::identity();
  CHECK(apply_isometry(id, favorite_square()) == favorite_square());

  // x -> -x maps S0 to a constituent square with base in Lambda_{-1}
  NeckerIsometry neg{Mat3l(-Mat3l::Identity()), Vec3l::Zero()};
  CHECK(isometry_well_formed(neg));
  SquareId img = apply_isometry(neg, favorite_square());
  CHECK(square_well_formed(img));
  CHECK(level(img.base) == -1);

  // translation shifts the base
  NeckerIsometry tr = NeckerIsometry::translation(Vec3l(1, -1, 0));
  SquareId shifted = apply_isometry(tr, favorite_square());
  CHECK(shifted.base == Vec3l(0, -1, 0));
  CHECK(shifted.axis == favorite_square().axis);

  CHECK_THROWS_AS(NeckerIsometry::translation(Vec3l(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("isometries act as a group on squares and preserve adjacency") {
  Mat3l rot3 = Mat3l::Zero();  // cyclic permutation e0->e1->e2->e0
  rot3(1, 0) = 1;
  rot3(2, 1) = 1;
  rot3(0, 2) = 1;
  NeckerIsometry g{Mat3l(-rot3), Vec3l(1, 0, -1)};  // order six times a translation
  NeckerIsometry h = NeckerIsometry::translation(Vec3l(0, 1, -1));
  REQUIRE(isometry_well_formed(g));

  std::vector<SquareId> squares = {favorite_square(), SquareId{Vec3l(0, 1, -2), 1}};
  for (const auto& s : squares) {
    CHECK(apply_isometry(g.compose(h), s) == apply_isometry(g, apply_isometry(h, s)));
    for (int side = 0; side < 4; ++side) {
      Transition tr = adjacent_square(s, side);
      SquareId gs = apply_isometry(g, s);
      SquareId gn = apply_isometry(g, tr.square);
      bool found = false;  // the image squares are still adjacent
      for (int j = 0; j < 4; ++j)
        if (adjacent_square(gs, j).square == gn) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("deck coordinates") {
  CHECK(deck_coordinate(favorite_square()).first == Vec2l(0, 0));
  CHECK(deck_coordinate(favorite_square()).second == favorite_square().axis);
  NeckerIsometry w1 = NeckerIsometry::translation(Vec3l(1, -1, 0));
  CHECK(deck_coordinate(apply_isometry(w1, favorite_square())).first == Vec2l(1, 0));
  NeckerIsometry w = NeckerIsometry::translation(Vec3l(2, 1, -3));  // 2 w1 + 3 w2
  CHECK(deck_coordinate(apply_isometry(w, favorite_square())).first == Vec2l(2, 3));
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      for (int k = 0; k < 3; ++k) {
        SquareId s = square_at_deck(Vec2l(m, n), k);
        CHECK(square_well_formed(s));
        CHECK(deck_coordinate(s).first == Vec2l(m, n));
        CHECK(deck_coordinate(s).second == k);
      }
}

TEST_CASE("charts are positively oriented in the plane") {
  // orientation form omega(u, v) = (u x v) . (1,1,1) is +1 on every chart's axis pair
  for (int k = 0; k < 3; ++k) {
    Vec3l u = axis_vector(k), v = axis_vector((k + 1) % 3);
    Vec3l c = cross3<std::int64_t>(u, v);
    CHECK(c(0) + c(1) + c(2) == 1);
  }
}
