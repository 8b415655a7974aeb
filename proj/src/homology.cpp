#include "necker/homology.hpp"

#include <stdexcept>

namespace necker {

HomologyClass gamma_class(int j) {
  j = ((j % 6) + 6) % 6;
  HomologyClass g = HomologyClass::Zero();
  switch (j) {
    case 0: g(0) = Zint(1); break;
    case 1: g(1) = Zint(1); break;
    case 2: g(0) = Zint(-1); g(3) = Zint(-1); break;  // gamma2 = -g0 - g4
    case 3: g(2) = Zint(1); break;
    case 4: g(3) = Zint(1); break;
    default: g(1) = Zint(-1); g(2) = Zint(-1); break;  // gamma5 = -g1 - g3
  }
  return g;
}

HomologyClass beta_class(int j) {
  return gamma_class(j) + gamma_class(j + 3);
}

Mat4z intersection_form() {
  // basis order (gamma0, gamma1, gamma3, gamma4); (g0, g3; g1, g4) is a
  // standard symplectic quadruple
  Mat4z j = Mat4z::Zero();
  j(0, 1) = Zint(1);
  j(1, 0) = Zint(-1);
  j(2, 3) = Zint(1);
  j(3, 2) = Zint(-1);
  return j;
}

Zint intersect(const HomologyClass& x, const HomologyClass& y) {
  static const Mat4z j = intersection_form();
  Zint acc(0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += x(r) * j(r, c) * y(c);
  return acc;
}

namespace {

// twist action of one letter: alpha -> alpha + sign * sum_j i(gamma_j, alpha) gamma_j
// over the three core curves (odd indices for h, even for v)
Mat4z letter_action(Letter l) {
  bool horizontal = (l == Letter::H || l == Letter::Hinv);
  // h is a right twist (+), its inverse a left twist; v is a left twist (-)
  int sign = (l == Letter::H || l == Letter::Vinv) ? 1 : -1;
  Mat4z out = Mat4z::Identity();
  for (int c = 0; c < 4; ++c) {
    HomologyClass e = HomologyClass::Zero();
    e(c) = Zint(1);
    HomologyClass img = e;
    for (int j = horizontal ? 1 : 0; j < 6; j += 2) {
      Zint coeff = intersect(gamma_class(j), e);
      img += HomologyClass(gamma_class(j) * (Zint(sign) * coeff));
    }
    for (int r = 0; r < 4; ++r) out(r, c) = img(r);
  }
  return out;
}

}  // namespace

Mat4z psi_star(const TwistWord& w) {
  Mat4z acc = Mat4z::Identity();
  for (Letter l : w.letters()) acc = acc * letter_action(l);
  return acc;
}

Mat4r in_basis_B(const Mat4z& m) {
  // columns: gamma1, gamma2 - gamma0, gamma3, gamma4 - gamma2
  Mat4r basis = Mat4r::Zero();
  auto put = [&](int col, const HomologyClass& v) {
    for (int r = 0; r < 4; ++r) basis(r, col) = Rat(v(r).raw());
  };
  put(0, gamma_class(1));
  put(1, HomologyClass(gamma_class(2) - gamma_class(0)));
  put(2, gamma_class(3));
  put(3, HomologyClass(gamma_class(4) - gamma_class(2)));
  Mat4r mr;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) mr(r, c) = Rat(m(r, c).raw());
  return Mat4r(exact_inverse<4>(basis) * mr * basis);
}

bool lifts_to_cover(const HomologyClass& x) {
  return intersect(beta_class(0), x).is_zero() && intersect(beta_class(1), x).is_zero();
}

namespace {

// do the two integer vectors span the same plane in Q^4 as the two targets?
bool same_plane(const HomologyClass& u1, const HomologyClass& u2,
                const HomologyClass& t1, const HomologyClass& t2) {
  Eigen::Matrix<Rat, 4, 4> rows;
  for (int c = 0; c < 4; ++c) {
    rows(0, c) = Rat(u1(c).raw());
    rows(1, c) = Rat(u2(c).raw());
    rows(2, c) = Rat(t1(c).raw());
    rows(3, c) = Rat(t2(c).raw());
  }
  Eigen::Matrix<Rat, 2, 4> img;
  for (int c = 0; c < 4; ++c) {
    img(0, c) = rows(0, c);
    img(1, c) = rows(1, c);
  }
  return exact_rank(rows) == 2 && exact_rank(img) == 2;
}

}  // namespace

WImage w_space_image(const TwistWord& w) {
  Mat4z m = psi_star(w);
  HomologyClass u1 = m * beta_class(0);
  HomologyClass u2 = m * beta_class(1);
  HomologyClass wm1 = gamma_class(0) - gamma_class(3);
  HomologyClass wm2 = gamma_class(1) - gamma_class(4);
  if (same_plane(u1, u2, beta_class(0), beta_class(1))) return WImage::WPlus;
  if (same_plane(u1, u2, wm1, wm2)) return WImage::WMinus;
  return WImage::Other;
}

}  // namespace necker
