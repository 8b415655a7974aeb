#pragma once

// Exact model of the first homology of the genus-two half-translation cover
// of the half-cube, in the basis (gamma0, gamma1, gamma3, gamma4): the
// symplectic intersection form, the multi-twist action on homology, the
// change of basis splitting that action as rho + rho, the lifting criterion
// for the Z^2-cover, and the W+/W- subspace tests.

#include "necker/exact.hpp"
#include "necker/veech.hpp"  // TwistWord

#include <array>

namespace necker {

// integer 4-vector over (gamma0, gamma1, gamma3, gamma4); gamma2 = -g0-g4 and
// gamma5 = -g1-g3 are derived
using HomologyClass = Vec4z;

// gamma_j for j in 0..5, expanded in the basis
HomologyClass gamma_class(int j);

// beta_j = gamma_j + gamma_{j+3}
HomologyClass beta_class(int j);

// the symplectic pairing matrix in the basis
Mat4z intersection_form();

Zint intersect(const HomologyClass& x, const HomologyClass& y);

// action on homology of a word in the two multi-twists: h twists right in the
// three odd-index core curves, v twists left in the three even-index ones
Mat4z psi_star(const TwistWord& w);

// rewrite a gamma-basis matrix in the basis {g1, g2-g0, g3, g4-g2}, where the
// twist actions become block-diagonal rho + rho
Mat4r in_basis_B(const Mat4z& m);

// true iff the class lifts to the Z^2-cover: both beta-pairings vanish
bool lifts_to_cover(const HomologyClass& x);

enum class WImage { WPlus, WMinus, Other };

// image of W+ = span{beta_j} under psi_star(w), compared with W+ and
// W- = span{gamma_j - gamma_{j+3}} as rational subspaces
WImage w_space_image(const TwistWord& w);

}  // namespace necker
