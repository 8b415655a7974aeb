#include "necker/surface.hpp"

#include <stdexcept>

namespace necker {

Transition adjacent_square(const SquareId& s, int side) {
  if (!square_well_formed(s) || side < 0 || side > 3)
    throw std::invalid_argument("adjacent_square: bad square or side");
  int k = s.axis, l = s.axis_l(), m = s.axis_m();
  Vec3l ek = axis_vector(k), el = axis_vector(l), em = axis_vector(m);
  switch (side) {
    case 0:  // edge [base, base+ek], shared with the third square at base
      return Transition{SquareId{s.base, m}, 3, 1};
    case 1:  // edge [base+ek, base+ek+el]
      return Transition{SquareId{Vec3l(s.base + ek - em), l}, 2, 3};
    case 2:  // edge [base+ek+el, base+el]
      return Transition{SquareId{Vec3l(s.base + el - em), m}, 1, 1};
    default:  // 3: edge [base+el, base]
      return Transition{SquareId{s.base, l}, 0, 3};
  }
}

Vec2r transition_point(int side, const Vec2r& p) {
  switch (side) {
    case 0: return Vec2r(p(1), p(0));          // (x,0) -> (0,x): R90
    case 1: return Vec2r(p(1), Rat(2) - p(0)); // (1,y) -> (y,1): R270 + (0,2)
    case 2: return Vec2r(Rat(2) - p(1), p(0)); // (x,1) -> (1,x): R90 + (2,0)
    default: return Vec2r(p(1), p(0));         // (0,y) -> (y,0): R270
  }
}

Vec2l transition_dir(int rot, const Vec2l& d) {
  switch (rot & 3) {
    case 0: return d;
    case 1: return Vec2l(-d(1), d(0));
    case 2: return Vec2l(-d(0), -d(1));
    default: return Vec2l(d(1), -d(0));
  }
}

Vec2r transition_dir(int rot, const Vec2r& d) {
  switch (rot & 3) {
    case 0: return d;
    case 1: return Vec2r(-d(1), d(0));
    case 2: return Vec2r(-d(0), -d(1));
    default: return Vec2r(d(1), -d(0));
  }
}

int cone_angle(const Vec3l& p) {
  std::int64_t l = level(p);
  if (l < -1 || l > 1) throw std::invalid_argument("cone_angle: point not on the surface");
  return l == 0 ? 6 : 3;
}

NeckerIsometry NeckerIsometry::translation(const Vec3l& w) {
  NeckerIsometry g{Mat3l::Identity(), w};
  if (!isometry_well_formed(g)) throw std::invalid_argument("translation: vector not in Lambda_0");
  return g;
}

NeckerIsometry NeckerIsometry::point_reflection_doubled(const Vec3l& two_c) {
  NeckerIsometry g{Mat3l(-Mat3l::Identity()), two_c};
  if (!isometry_well_formed(g))
    throw std::invalid_argument("point_reflection: center not admissible");
  return g;
}

Vec3r NeckerIsometry::apply(const Vec3r& x) const {
  Vec3r y;
  for (int i = 0; i < 3; ++i) {
    Rat acc(t(i));
    for (int j = 0; j < 3; ++j) acc += Rat(P(i, j)) * x(j);
    y(i) = acc;
  }
  return y;
}

NeckerIsometry NeckerIsometry::inverse() const {
  // P is a signed permutation, so P^-1 = P^T
  Mat3l Pi = P.transpose();
  return NeckerIsometry{Pi, Vec3l(-(Pi * t))};
}

int NeckerIsometry::order(int cap) const {
  NeckerIsometry g = *this;
  for (int n = 1; n <= cap; ++n) {
    if (g.is_identity()) return n;
    g = compose(g);
  }
  return 0;
}

std::optional<Vec3r> NeckerIsometry::fixed_point() const {
  // solve (I - P) x = t over Q
  Eigen::Matrix<Rat, 3, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Rat((i == j ? 1 : 0) - P(i, j));
  Eigen::Matrix<Rat, 3, 3> mi;
  try {
    mi = exact_inverse<3>(m);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  Vec3r rhs = to_rat(t);
  Vec3r x;
  for (int i = 0; i < 3; ++i) {
    Rat acc(0);
    for (int j = 0; j < 3; ++j) acc += mi(i, j) * rhs(j);
    x(i) = acc;
  }
  return x;
}

bool isometry_well_formed(const NeckerIsometry& g) {
  if (level(g.t) != 0) return false;
  // exactly one +-1 per row and column, all entries the same sign
  int sign = 0;
  for (int i = 0; i < 3; ++i) {
    int nz = 0;
    for (int j = 0; j < 3; ++j) {
      std::int64_t e = g.P(i, j);
      if (e == 0) continue;
      if (e != 1 && e != -1) return false;
      if (sign == 0) sign = static_cast<int>(e);
      else if (static_cast<int>(e) != sign) return false;
      ++nz;
    }
    if (nz != 1) return false;
  }
  for (int j = 0; j < 3; ++j) {
    int nz = 0;
    for (int i = 0; i < 3; ++i) nz += g.P(i, j) != 0;
    if (nz != 1) return false;
  }
  return true;
}

int surface_orientation_sign(const NeckerIsometry& g) {
  // the underlying permutation's parity: even permutations act
  // orientation-preservingly on N regardless of the overall sign
  std::int64_t det = g.P(0, 0) * (g.P(1, 1) * g.P(2, 2) - g.P(1, 2) * g.P(2, 1)) -
                     g.P(0, 1) * (g.P(1, 0) * g.P(2, 2) - g.P(1, 2) * g.P(2, 0)) +
                     g.P(0, 2) * (g.P(1, 0) * g.P(2, 1) - g.P(1, 1) * g.P(2, 0));
  int eps = 0;
  for (int i = 0; i < 3 && eps == 0; ++i)
    for (int j = 0; j < 3 && eps == 0; ++j)
      if (g.P(i, j) != 0) eps = g.P(i, j) > 0 ? 1 : -1;
  // det(P) = eps * sgn(permutation)
  return static_cast<int>(det) * eps;
}

SquareId apply_isometry(const NeckerIsometry& g, const SquareId& s) {
  auto vs = square_vertices(s);
  std::array<Vec3l, 4> img;
  for (int i = 0; i < 4; ++i) img[i] = g.apply(vs[i]);
  int b = -1;
  for (int i = 0; i < 4; ++i)
    if (level(img[i]) == -1) { b = i; break; }
  if (b < 0) throw std::logic_error("apply_isometry: no level -1 vertex in image");
  Vec3l base = img[b];
  Vec3l u1 = img[(b + 1) % 4] - base;  // both unit axis vectors
  Vec3l u2 = img[(b + 3) % 4] - base;
  int i1 = -1, i2 = -1;
  for (int i = 0; i < 3; ++i) {
    if (u1(i) == 1) i1 = i;
    if (u2(i) == 1) i2 = i;
  }
  if (i1 < 0 || i2 < 0) throw std::logic_error("apply_isometry: image is not a constituent square");
  int k = (i2 == (i1 + 1) % 3) ? i1 : i2;
  return SquareId{base, k};
}

std::vector<IncidentSquare> squares_at_vertex(const Vec3l& p) {
  std::int64_t l = level(p);
  std::vector<IncidentSquare> out;
  if (l == -1) {
    for (int k = 0; k < 3; ++k) out.push_back({SquareId{p, k}, Vec2l(0, 0)});
  } else if (l == 1) {
    for (int k = 0; k < 3; ++k) {
      Vec3l base = p - axis_vector(k) - axis_vector((k + 1) % 3);
      out.push_back({SquareId{base, k}, Vec2l(1, 1)});
    }
  } else if (l == 0) {
    for (int k = 0; k < 3; ++k) {
      out.push_back({SquareId{Vec3l(p - axis_vector(k)), k}, Vec2l(1, 0)});
      out.push_back({SquareId{Vec3l(p - axis_vector((k + 1) % 3)), k}, Vec2l(0, 1)});
    }
  } else {
    throw std::invalid_argument("squares_at_vertex: point not on the surface");
  }
  return out;
}

int corner_side_ccw(const Vec2l& corner) {
  if (corner(0) == 0 && corner(1) == 0) return 3;
  if (corner(0) == 1 && corner(1) == 0) return 0;
  if (corner(0) == 1 && corner(1) == 1) return 1;
  return 2;
}

int corner_side_cw(const Vec2l& corner) {
  if (corner(0) == 0 && corner(1) == 0) return 0;
  if (corner(0) == 1 && corner(1) == 0) return 1;
  if (corner(0) == 1 && corner(1) == 1) return 2;
  return 3;
}

}  // namespace necker
