#include "pln/scalar.hpp"

#include "pln/error.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace pln {

namespace {

using Float = boost::multiprecision::number<boost::multiprecision::gmp_float<60>,
                                            boost::multiprecision::et_off>;

long long isqrt(long long n) {
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  auto ok = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok(num) || !ok(den)) throw Error("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  Rational d(den);
  if (d == 0) throw Error("zero denominator in '" + s + "'");
  return Rational(num) / d;
}

std::string to_string(const Rational& q) { return q.str(); }

RadicalDegree radical_degree(long long n) {
  if (n < 1) throw Error("radicand must be positive");
  long long m = isqrt(n);
  if (m * m != n) return {4, n};
  long long q = isqrt(m);
  if (q * q == m) return {1, q};
  return {2, m};
}

int Scalar::degree() const { return n_ == 0 ? 1 : radical_degree(n_).degree; }

Scalar Scalar::quarter_power(long long n, int p) {
  auto [d, power] = radical_degree(n);
  int r = ((p % 4) + 4) % 4;
  int whole = (p - r) / 4;
  // n^{p/4} = n^whole * x^r, x^r folded by x^d = power
  Rational c = 1;
  Rational nn = n;
  for (int i = 0; i < std::abs(whole); ++i) c = whole > 0 ? c * nn : c / nn;
  while (r >= d) {
    c *= power;
    r -= d;
  }
  Scalar s;
  s.n_ = d == 1 ? 0 : n;
  s.c_[r] = c;
  s.normalize();
  return s;
}

Scalar Scalar::from_coeffs(long long n, const std::array<Rational, 4>& c) {
  Scalar out;
  for (int r = 0; r < 4; ++r) {
    if (c[r] == 0) continue;
    Scalar t = quarter_power(n, r);
    t *= Scalar(c[r]);
    out += t;
  }
  return out;
}

Scalar Scalar::from_double(double v) {
  Scalar s;
  s.exact_ = false;
  s.f_ = v;
  return s;
}

bool Scalar::is_zero() const {
  if (!exact_) return std::abs(f_) <= kFloatTolerance;
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw Error("scalar " + to_string() + " is not rational");
  return c_[0];
}

void Scalar::normalize() {
  if (!exact_) return;
  if (c_[1] == 0 && c_[2] == 0 && c_[3] == 0) n_ = 0;
}

void Scalar::absorb_radicand(long long n) {
  if (n == 0 || n_ == n) return;
  if (n_ != 0) {
    throw IncompatibleRadicands("cannot combine n^(1/4) for n = " + std::to_string(n_) +
                                " and n = " + std::to_string(n));
  }
  n_ = n;
}

double Scalar::to_double() const {
  if (!exact_) return f_;
  if (n_ == 0) return c_[0].convert_to<double>();
  Float x = boost::multiprecision::sqrt(boost::multiprecision::sqrt(Float(n_)));
  Float v = 0, p = 1;
  for (int r = 0; r < 4; ++r) {
    v += Float(c_[r]) * p;
    p *= x;
  }
  return v.convert_to<double>();
}

int Scalar::sign() const {
  if (!exact_) {
    if (std::abs(f_) <= kFloatTolerance) return 0;
    return f_ > 0 ? 1 : -1;
  }
  if (is_zero()) return 0;
  if (n_ == 0) return c_[0] > 0 ? 1 : -1;
  Float x = boost::multiprecision::sqrt(boost::multiprecision::sqrt(Float(n_)));
  Float v = 0, p = 1;
  for (int r = 0; r < 4; ++r) {
    v += Float(c_[r]) * p;
    p *= x;
  }
  return v > 0 ? 1 : -1;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!exact_ || !o.exact_) {
    double v = to_double() + o.to_double();
    *this = from_double(v);
    return *this;
  }
  absorb_radicand(o.n_);
  for (int r = 0; r < 4; ++r) c_[r] += o.c_[r];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.f_ = -f_;
  for (auto& c : s.c_) c = -c;
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!exact_ || !o.exact_) {
    double v = to_double() * o.to_double();
    *this = from_double(v);
    return *this;
  }
  if (o.n_ == 0) {
    for (auto& c : c_) c *= o.c_[0];
    normalize();
    return *this;
  }
  if (n_ == 0) {
    Rational k = c_[0];
    *this = o;
    for (auto& c : c_) c *= k;
    normalize();
    return *this;
  }
  absorb_radicand(o.n_);
  auto [d, power] = radical_degree(n_);
  std::array<Rational, 7> prod{};
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  for (int p = 2 * d - 2; p >= d; --p) {
    prod[p - d] += prod[p] * power;
    prod[p] = 0;
  }
  for (int r = 0; r < 4; ++r) c_[r] = prod[r];
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero scalar");
  if (!exact_) return from_double(1.0 / f_);
  if (n_ == 0) return Scalar(Rational(1) / c_[0]);
  int d = degree();
  auto power = radical_degree(n_).power;
  // Column j of m holds the coefficients of this * x^j; solve m y = e_0.
  std::array<std::array<Rational, 5>, 4> m{};
  std::array<Rational, 4> col = c_;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
    Rational top = col[d - 1];
    for (int i = d - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = top * power;
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Scalar s;
  s.n_ = n_;
  for (int i = 0; i < d; ++i) s.c_[i] = m[i][d] / m[i][i];
  s.normalize();
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.exact_ || !b.exact_) {
    double x = a.to_double(), y = b.to_double();
    double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= Scalar::kFloatTolerance * scale;
  }
  if (a.n_ != b.n_) return false;
  return a.c_ == b.c_;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (!exact_) {
    os.precision(17);
    os << f_;
    return os.str();
  }
  bool first = true;
  for (int r = 0; r < 4; ++r) {
    if (c_[r] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[r].str();
    if (r > 0) os << "*" << n_ << "^(" << r << "/4)";
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pln
