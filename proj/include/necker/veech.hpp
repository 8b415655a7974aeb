#pragma once

// Word algebra for the level-2 congruence subgroup and the Veech-group
// membership decision: the two multi-twist generators map to M(h), M(v),
// column-reduction decomposes congruence-2 matrices into twist words, and
// membership reduces to the rho-representation being trivial on the word.

#include "necker/exact.hpp"
#include "necker/geodesic.hpp"  // Direction

#include <optional>
#include <string>
#include <vector>

namespace necker {

enum class Letter { H, V, Hinv, Vinv };

inline Letter letter_inverse(Letter l) {
  switch (l) {
    case Letter::H: return Letter::Hinv;
    case Letter::Hinv: return Letter::H;
    case Letter::V: return Letter::Vinv;
    default: return Letter::V;
  }
}

// freely reduced word over {h, v, h^-1, v^-1}
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<Letter> letters);
  // parse e.g. "hvH", with H = h^-1 and V = v^-1; whitespace ignored
  static TwistWord parse(const std::string& s);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  TwistWord& append(Letter l);
  TwistWord concat(const TwistWord& o) const;
  TwistWord inverse() const;
  TwistWord pow(int k) const;

  std::string str() const;

  friend bool operator==(const TwistWord& a, const TwistWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// 2x2 integer matrix with an equality-mode tag
struct TwoByTwo {
  Mat2z m;
  bool projective = false;  // when set, A and -A compare equal

  static TwoByTwo from(long a, long b, long c, long d, bool projective = false) {
    TwoByTwo t;
    t.m << Zint(a), Zint(b), Zint(c), Zint(d);
    t.projective = projective;
    return t;
  }
  Zint det() const { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

  friend bool operator==(const TwoByTwo& x, const TwoByTwo& y) {
    if (exact_eq<Mat2z>(x.m, y.m)) return true;
    if (!(x.projective || y.projective)) return false;
    Mat2z neg = -y.m;
    return exact_eq<Mat2z>(x.m, neg);
  }
};

// M(h) = (1 2; 0 1), M(v) = (1 0; 2 1); homomorphic on words
Mat2z m_of(const TwistWord& w);
// rho(h) = (1 3; 0 1), rho(v) = (1 0; 1 1)
Mat2z rho_of(const TwistWord& w);

Mat2z m_of(Letter l);
Mat2z rho_of(Letter l);

struct Gamma2Word {
  TwistWord word;
  int sign;  // M(word) * sign == input
};

// decomposes A in SL(2,Z) with A = I (mod 2) into a twist word and a sign;
// nullopt when A is not congruent to I mod 2
std::optional<Gamma2Word> gamma2_decompose(const Mat2z& a);

// word carrying (a,b) to +-(1,1) / +-(0,1) / +-(1,0) according to its parity
// class, by greedy Euclidean subtraction with M(h)^k, M(v)^k
TwistWord reduce_direction(const Direction& d);

// the twist derivative P_{p,q} = +-(1-6pq, 6p^2; -6q^2, 1+6pq), p,q odd coprime
TwoByTwo twist_matrix(std::int64_t p, std::int64_t q);

// decides membership in the Veech group of the half-translation cover.
// Throws std::invalid_argument when |det| != 1.
bool veech_contains(const TwoByTwo& a);

// membership certificate: the twist word whose multi-twist realizes A (after
// the optional quarter-turn normalization); empty when not a member
struct VeechVerdict {
  bool member = false;
  bool rotated = false;  // a quarter-turn factor R was split off first
  TwistWord word;
};
VeechVerdict veech_decide(const TwoByTwo& a);

}  // namespace necker
