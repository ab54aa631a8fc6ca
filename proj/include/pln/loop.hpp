#pragma once

#include "pln/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pln {

// Colour of a planar-algebra space: 0+, 0- or k >= 1.
struct Color {
  int k = 0;
  bool minus = false;  // meaningful only for k == 0

  static Color plus0() { return {0, false}; }
  static Color minus0() { return {0, true}; }
  static Color of(int k) { return {k, false}; }

  bool is_zero() const { return k == 0; }
  std::string str() const;
  static Color parse(std::string_view text);

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;
};

// Based loop: base vertex and edge sequence eps_0..eps_{2k-1}. Colours 0+/0-
// have no edges and the base is the (even/odd) vertex itself.
struct Loop {
  int base = 0;
  std::vector<int> edges;

  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

// Finite linear combination of loops of one colour; zero terms are pruned.
class PAElement {
 public:
  PAElement() = default;
  explicit PAElement(Color c) : color_(c) {}
  PAElement(Color c, const Loop& l, const Scalar& s = Scalar(1)) : color_(c) { add(l, s); }

  Color color() const { return color_; }
  const std::map<Loop, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Loop& l) const;

  void add(const Loop& l, const Scalar& s);
  PAElement& operator+=(const PAElement& o);
  PAElement& operator-=(const PAElement& o);
  PAElement& operator*=(const Scalar& s);
  friend PAElement operator+(PAElement a, const PAElement& b) { return a += b; }
  friend PAElement operator-(PAElement a, const PAElement& b) { return a -= b; }
  friend PAElement operator*(const Scalar& s, PAElement a) { return a *= s; }

  friend bool operator==(const PAElement& a, const PAElement& b);
  friend bool operator!=(const PAElement& a, const PAElement& b) { return !(a == b); }

 private:
  Color color_;
  std::map<Loop, Scalar> terms_;
};

}  // namespace pln
