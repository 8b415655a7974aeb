#pragma once

// Exact scalars for the geometry core: Zint (arbitrary-precision integer) and
// Rat (arbitrary-precision rational), both thin value-semantics wrappers over
// GMP so they can be used as Eigen scalars without gmpxx expression templates
// leaking into Eigen's internals.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace necker {

class Zint {
 public:
  Zint() : v_(0) {}
  Zint(int n) : v_(n) {}
  Zint(long n) : v_(n) {}
  Zint(long long n) : v_(static_cast<long>(n)) {}
  explicit Zint(const std::string& s) : v_(s) {}
  explicit Zint(mpz_class v) : v_(std::move(v)) {}

  const mpz_class& raw() const { return v_; }

  friend Zint operator+(const Zint& a, const Zint& b) { return Zint(mpz_class(a.v_ + b.v_)); }
  friend Zint operator-(const Zint& a, const Zint& b) { return Zint(mpz_class(a.v_ - b.v_)); }
  friend Zint operator*(const Zint& a, const Zint& b) { return Zint(mpz_class(a.v_ * b.v_)); }
  friend Zint operator-(const Zint& a) { return Zint(mpz_class(-a.v_)); }

  Zint& operator+=(const Zint& o) { v_ += o.v_; return *this; }
  Zint& operator-=(const Zint& o) { v_ -= o.v_; return *this; }
  Zint& operator*=(const Zint& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Zint& a, const Zint& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Zint& a, const Zint& b) { return a.v_ != b.v_; }
  friend bool operator<(const Zint& a, const Zint& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Zint& a, const Zint& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Zint& a, const Zint& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Zint& a, const Zint& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

  Zint abs() const { return Zint(mpz_class(::abs(v_))); }

  // quotient rounded to the nearest integer; any nearest rounding on ties
  // works for the matrix reductions that use this
  friend Zint div_round(const Zint& a, const Zint& b) {
    mpz_class num = a.v_, den = b.v_;
    mpz_class q = num / den;  // truncates toward zero
    mpz_class r = num - q * den;
    if (mpz_class(2 * ::abs(r)) >= ::abs(den)) {
      if ((sgn(num) > 0) == (sgn(den) > 0)) q += 1; else q -= 1;
    }
    return Zint(q);
  }

  friend Zint gcd(const Zint& a, const Zint& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Zint(g);
  }

  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Zint& z) { return os << z.str(); }

 private:
  mpz_class v_;
};

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  Rat(const Zint& n) : v_(n.raw()) {}
  Rat(const Zint& n, const Zint& d) : v_(n.raw(), d.raw()) {
    if (d.is_zero()) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  Zint num() const { return Zint(mpz_class(v_.get_num())); }
  Zint den() const { return Zint(mpz_class(v_.get_den())); }

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (sgn(b.v_) == 0) throw std::invalid_argument("Rat: division by zero");
    return wrap(a.v_ / b.v_);
  }
  friend Rat operator-(const Rat& a) { return wrap(-a.v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return wrap(::abs(v_)); }

  Zint floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Zint(q);
  }
  Zint ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Zint(q);
  }

  double to_double() const { return v_.get_d(); }

  // "p/q", or "p" when integral
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  // parses "p/q" or "p"
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Zint(s));
      return Rat(Zint(s.substr(0, slash)), Zint(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
  }

 private:
  static Rat wrap(mpq_class q) { Rat r; r.v_ = std::move(q); return r; }
  mpq_class v_;
};

}  // namespace necker

namespace Eigen {

template <>
struct NumTraits<necker::Zint> : GenericNumTraits<necker::Zint> {
  typedef necker::Zint Real;
  typedef necker::Zint NonInteger;
  typedef necker::Zint Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return necker::Zint(0); }
  static inline Real dummy_precision() { return necker::Zint(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<necker::Rat> : GenericNumTraits<necker::Rat> {
  typedef necker::Rat Real;
  typedef necker::Rat NonInteger;
  typedef necker::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return necker::Rat(0); }
  static inline Real dummy_precision() { return necker::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace necker {

using Vec2l = Eigen::Matrix<std::int64_t, 2, 1>;
using Vec3l = Eigen::Matrix<std::int64_t, 3, 1>;
using Mat3l = Eigen::Matrix<std::int64_t, 3, 3>;
using Vec2r = Eigen::Matrix<Rat, 2, 1>;
using Vec3r = Eigen::Matrix<Rat, 3, 1>;
using Vec4r = Eigen::Matrix<Rat, 4, 1>;
using Mat4r = Eigen::Matrix<Rat, 4, 4>;
using Vec2z = Eigen::Matrix<Zint, 2, 1>;
using Mat2z = Eigen::Matrix<Zint, 2, 2>;
using Vec4z = Eigen::Matrix<Zint, 4, 1>;
using Mat4z = Eigen::Matrix<Zint, 4, 4>;

template <typename M>
bool exact_eq(const M& a, const M& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename M>
bool exact_zero(const M& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == typename M::Scalar(0))) return false;
  return true;
}

// planar cross product a.x*b.y - a.y*b.x
template <typename V>
typename V::Scalar cross2(const V& a, const V& b) {
  return a(0) * b(1) - a(1) * b(0);
}

template <typename S>
Eigen::Matrix<S, 3, 1> cross3(const Eigen::Matrix<S, 3, 1>& a, const Eigen::Matrix<S, 3, 1>& b) {
  return Eigen::Matrix<S, 3, 1>(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                                a(0) * b(1) - a(1) * b(0));
}

inline Vec3r to_rat(const Vec3l& v) { return Vec3r(Rat(v(0)), Rat(v(1)), Rat(v(2))); }
inline Vec2r to_rat(const Vec2l& v) { return Vec2r(Rat(v(0)), Rat(v(1))); }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Gauss-Jordan inverse over Rat; throws std::domain_error when singular
template <int N>
Eigen::Matrix<Rat, N, N> exact_inverse(const Eigen::Matrix<Rat, N, N>& m) {
  Eigen::Matrix<Rat, N, N> a = m;
  Eigen::Matrix<Rat, N, N> inv;
  inv.setZero();
  for (int i = 0; i < N; ++i) inv(i, i) = Rat(1);
  for (int col = 0; col < N; ++col) {
    int pivot = -1;
    for (int r = col; r < N; ++r)
      if (!a(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("exact_inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < N; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Rat p = a(col, col);
    for (int j = 0; j < N; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Rat f = a(r, col);
      for (int j = 0; j < N; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

// rank of a list of row vectors over Q
template <typename Mat>
int exact_rank(Mat a) {
  int rank = 0;
  int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    for (int r = rank + 1; r < rows; ++r) {
      if (a(r, col).is_zero()) continue;
      Rat f = a(r, col) / a(rank, col);
      for (int j = col; j < cols; ++j) a(r, j) = a(r, j) - f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace necker
