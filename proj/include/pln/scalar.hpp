#pragma once

#include "pln/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <iosfwd>
#include <string>

namespace pln {

// Element of Q(n^{1/4}) stored as sum_r c_r n^{r/4}, or a double in float mode.
//
// The radicand n is reduced to the degree d of n^{1/4} over Q: d = 4 when n is
// not a square, d = 2 when n = m^2 with m not a square, d = 1 when n is a
// fourth power. Coefficients c_r with r >= d are always zero, so equality is
// coefficient-wise. A scalar with zero irrational part carries radicand 0 and
// combines with any radicand; two different nonzero radicands do not mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : c_{Rational(v), 0, 0, 0} {}
  Scalar(long v) : c_{Rational(v), 0, 0, 0} {}
  Scalar(long long v) : c_{Rational(v), 0, 0, 0} {}
  Scalar(const Rational& q) : c_{q, 0, 0, 0} {}

  // n^{p/4} for any integer p (n >= 1).
  static Scalar quarter_power(long long n, int p);
  // c_0 + c_1 n^{1/4} + c_2 n^{2/4} + c_3 n^{3/4}
  static Scalar from_coeffs(long long n, const std::array<Rational, 4>& c);
  static Scalar from_double(double v);

  bool is_exact() const { return exact_; }
  bool is_rational() const { return exact_ && n_ == 0; }
  bool is_zero() const;
  // 0 for pure rationals.
  long long radicand() const { return n_; }
  // Coefficient of n^{r/4}, r in 0..3.
  const Rational& coeff(int r) const { return c_[r]; }
  const Rational& rational_value() const;
  double to_double() const;
  // -1, 0, +1. Exact mode evaluates to 60 significant digits.
  int sign() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  static constexpr double kFloatTolerance = 1e-10;

 private:
  void normalize();
  void absorb_radicand(long long n);
  int degree() const;

  bool exact_ = true;
  long long n_ = 0;
  std::array<Rational, 4> c_{};
  double f_ = 0.0;
};

inline Scalar conj(const Scalar& s) { return s; }
inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

// Degree of n^{1/4} over Q together with R = (n^{1/4})^d.
struct RadicalDegree {
  int degree;
  long long power;
};
RadicalDegree radical_degree(long long n);

}  // namespace pln

namespace Eigen {

template <>
struct NumTraits<pln::Scalar> : GenericNumTraits<pln::Scalar> {
  using Real = pln::Scalar;
  using NonInteger = pln::Scalar;
  using Literal = pln::Scalar;
  using Nested = pln::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
