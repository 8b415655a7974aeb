#include "necker/veech.hpp"

#include <stdexcept>

namespace necker {

TwistWord::TwistWord(std::vector<Letter> letters) {
  for (Letter l : letters) append(l);
}

TwistWord TwistWord::parse(const std::string& s) {
  TwistWord w;
  for (char c : s) {
    switch (c) {
      case 'h': w.append(Letter::H); break;
      case 'v': w.append(Letter::V); break;
      case 'H': w.append(Letter::Hinv); break;
      case 'V': w.append(Letter::Vinv); break;
      case ' ': case '\t': break;
      default: throw std::invalid_argument("TwistWord: bad letter in word");
    }
  }
  return w;
}

TwistWord& TwistWord::append(Letter l) {
  if (!letters_.empty() && letters_.back() == letter_inverse(l)) letters_.pop_back();
  else letters_.push_back(l);
  return *this;
}

TwistWord TwistWord::concat(const TwistWord& o) const {
  TwistWord w = *this;
  for (Letter l : o.letters_) w.append(l);
  return w;
}

TwistWord TwistWord::inverse() const {
  TwistWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.append(letter_inverse(*it));
  return w;
}

TwistWord TwistWord::pow(int k) const {
  TwistWord base = k < 0 ? inverse() : *this;
  int n = k < 0 ? -k : k;
  TwistWord w;
  for (int i = 0; i < n; ++i) w = w.concat(base);
  return w;
}

std::string TwistWord::str() const {
  std::string s;
  for (Letter l : letters_) {
    switch (l) {
      case Letter::H: s += 'h'; break;
      case Letter::V: s += 'v'; break;
      case Letter::Hinv: s += 'H'; break;
      case Letter::Vinv: s += 'V'; break;
    }
  }
  return s;
}

Mat2z m_of(Letter l) {
  Mat2z m;
  switch (l) {
    case Letter::H: m << Zint(1), Zint(2), Zint(0), Zint(1); break;
    case Letter::Hinv: m << Zint(1), Zint(-2), Zint(0), Zint(1); break;
    case Letter::V: m << Zint(1), Zint(0), Zint(2), Zint(1); break;
    default: m << Zint(1), Zint(0), Zint(-2), Zint(1); break;
  }
  return m;
}

Mat2z rho_of(Letter l) {
  Mat2z m;
  switch (l) {
    case Letter::H: m << Zint(1), Zint(3), Zint(0), Zint(1); break;
    case Letter::Hinv: m << Zint(1), Zint(-3), Zint(0), Zint(1); break;
    case Letter::V: m << Zint(1), Zint(0), Zint(1), Zint(1); break;
    default: m << Zint(1), Zint(0), Zint(-1), Zint(1); break;
  }
  return m;
}

Mat2z m_of(const TwistWord& w) {
  Mat2z acc = Mat2z::Identity();
  for (Letter l : w.letters()) acc = acc * m_of(l);
  return acc;
}

Mat2z rho_of(const TwistWord& w) {
  Mat2z acc = Mat2z::Identity();
  for (Letter l : w.letters()) acc = acc * rho_of(l);
  return acc;
}

namespace {

void append_power(TwistWord& w, Letter gen, const Zint& exponent) {
  if (!exponent.fits_long()) throw std::logic_error("twist word exponent overflow");
  long e = exponent.to_long();
  Letter l = e >= 0 ? gen : letter_inverse(gen);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) w.append(l);
}

}  // namespace

std::optional<Gamma2Word> gamma2_decompose(const Mat2z& a0) {
  if (!(a0(0, 0) * a0(1, 1) - a0(0, 1) * a0(1, 0) == Zint(1)))
    throw std::invalid_argument("gamma2_decompose: determinant must be 1");
  if (!a0(0, 0).is_odd() || !a0(1, 1).is_odd() || !a0(0, 1).is_even() || !a0(1, 0).is_even())
    return std::nullopt;

  // Column-reduction ping-pong on the first column: left-multiplying by
  // M(h)^k adds 2k * row1 to row0, by M(v)^k adds 2k * row0 to row1. The
  // parities (odd vs even) make each rounded quotient strictly shrink the
  // larger entry, so the loop reaches a triangular matrix.
  Mat2z a = a0;
  std::vector<std::pair<Letter, Zint>> ops;
  auto left_h = [&](const Zint& k) {
    a(0, 0) += Zint(2) * k * a(1, 0);
    a(0, 1) += Zint(2) * k * a(1, 1);
    ops.emplace_back(Letter::H, k);
  };
  auto left_v = [&](const Zint& k) {
    a(1, 0) += Zint(2) * k * a(0, 0);
    a(1, 1) += Zint(2) * k * a(0, 1);
    ops.emplace_back(Letter::V, k);
  };

  while (!a(1, 0).is_zero()) {
    if (a(0, 0).abs() > a(1, 0).abs()) left_h(-div_round(a(0, 0), Zint(2) * a(1, 0)));
    else left_v(-div_round(a(1, 0), Zint(2) * a(0, 0)));
  }
  // a = (s, b; 0, s) with s = +-1 and b even; clear the corner
  Zint s = a(0, 0);
  if (!a(0, 1).is_zero()) left_h(Zint(mpz_class(-(s.raw() * a(0, 1).raw()) / 2)));
  int sign = s == Zint(1) ? 1 : -1;

  // L_n ... L_1 a0 = s I, so a0 = (L_1^-1)(L_2^-1)...(L_n^-1) s: the word
  // lists the inverted operations in application order
  TwistWord w;
  for (const auto& [gen, k] : ops) append_power(w, gen, -k);
  return Gamma2Word{w, sign};
}

TwistWord reduce_direction(const Direction& d) {
  Vec2z v(Zint(d.a), Zint(d.b));
  ParityClass cls = d.parity();
  std::vector<std::pair<Letter, Zint>> ops;
  auto apply_h = [&](const Zint& k) {
    v(0) += Zint(2) * k * v(1);  // M(h)^k : (a,b) -> (a + 2k b, b)
    ops.emplace_back(Letter::H, k);
  };
  auto apply_v = [&](const Zint& k) {
    v(1) += Zint(2) * k * v(0);
    ops.emplace_back(Letter::V, k);
  };

  if (cls == ParityClass::O) {
    while (!(v(0).abs() == Zint(1) && v(1).abs() == Zint(1))) {
      if (v(0).abs() > v(1).abs()) apply_h(-div_round(v(0), Zint(2) * v(1)));
      else apply_v(-div_round(v(1), Zint(2) * v(0)));
    }
    // mixed signs (+-1, -+1): one h-twist lands on -+(1,1)
    if (!(v(0) == v(1))) apply_h(Zint(1));
  } else if (cls == ParityClass::E1) {
    while (!v(0).is_zero()) {
      if (v(0).abs() > v(1).abs()) apply_h(-div_round(v(0), Zint(2) * v(1)));
      else apply_v(-div_round(v(1), Zint(2) * v(0)));
    }
  } else {
    while (!v(1).is_zero()) {
      if (v(1).abs() > v(0).abs()) apply_v(-div_round(v(1), Zint(2) * v(0)));
      else apply_h(-div_round(v(0), Zint(2) * v(1)));
    }
  }
  // the op applied first acts first on the vector, so it is the rightmost
  // factor of M(word)
  TwistWord w;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) append_power(w, it->first, it->second);
  return w;
}

TwoByTwo twist_matrix(std::int64_t p, std::int64_t q) {
  if (p % 2 == 0 || q % 2 == 0 || gcd64(p, q) != 1)
    throw std::invalid_argument("twist_matrix: p, q must be odd and coprime");
  TwoByTwo t;
  t.projective = true;
  t.m << Zint(1 - 6 * p * q), Zint(6 * p * p), Zint(-6 * q * q), Zint(1 + 6 * p * q);
  return t;
}

namespace {

// nonzero class of an integer vector mod 2: 1 = (0,1), 2 = (1,0), 3 = (1,1)
int mod2_class(const Vec2z& v) {
  return (v(0).is_odd() ? 2 : 0) + (v(1).is_odd() ? 1 : 0);
}

}  // namespace

VeechVerdict veech_decide(const TwoByTwo& a0) {
  Zint det = a0.det();
  if (!(det.abs() == Zint(1)))
    throw std::invalid_argument("veech_contains: determinant must be +-1");
  VeechVerdict verdict;
  if (det == Zint(-1)) return verdict;  // orientation-reversing, never a derivative

  Mat2z a = a0.m;
  // (1) quarter-turn normalization when the mod-2 action swaps the even classes
  Vec2z e1(Zint(0), Zint(1)), e2(Zint(1), Zint(0));
  int c1 = mod2_class(Vec2z(a * e1)), c2 = mod2_class(Vec2z(a * e2));
  if (c1 == 2 && c2 == 1) {
    Mat2z r;
    r << Zint(0), Zint(-1), Zint(1), Zint(0);
    a = r * a;
    verdict.rotated = true;
  } else if (c1 != 1 || c2 != 2) {
    // the mod-2 action permutes {E1, E2, O}; an action moving O cannot become
    // trivial after the quarter-turn normalization
    return verdict;
  }
  // (2) membership requires A = +-I mod 2
  if (!(a(0, 0).is_odd() && a(1, 1).is_odd() && a(0, 1).is_even() && a(1, 0).is_even()))
    return verdict;
  // (3) decompose and (4) test the rho image
  auto dec = gamma2_decompose(a);
  if (!dec) return verdict;
  if (exact_eq<Mat2z>(rho_of(dec->word), Mat2z::Identity())) {
    verdict.member = true;
    verdict.word = dec->word;
  }
  return verdict;
}

bool veech_contains(const TwoByTwo& a) { return veech_decide(a).member; }

}  // namespace necker
