#include "pln/loop.hpp"

#include "pln/error.hpp"

#include <cctype>

namespace pln {

std::string Color::str() const {
  if (k == 0) return minus ? "0-" : "0+";
  return std::to_string(k);
}

Color Color::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0+") return plus0();
  if (s == "0-") return minus0();
  if (s.empty() || s.size() > 6) throw Error("bad colour '" + s + "'");
  int k = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad colour '" + s + "'");
    k = k * 10 + (c - '0');
  }
  if (k < 1) throw Error("colour 0 must be written 0+ or 0-");
  return of(k);
}

Scalar PAElement::coeff(const Loop& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void PAElement::add(const Loop& l, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.emplace(l, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PAElement& PAElement::operator+=(const PAElement& o) {
  if (o.color_ != color_ && !o.terms_.empty() && !terms_.empty())
    throw ColorMismatch("adding elements of colours " + color_.str() + " and " + o.color_.str());
  if (terms_.empty()) color_ = o.color_;
  for (const auto& [l, s] : o.terms_) add(l, s);
  return *this;
}

PAElement& PAElement::operator-=(const PAElement& o) {
  PAElement neg = Scalar(-1) * o;
  return *this += neg;
}

PAElement& PAElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, c] : terms_) c *= s;
  return *this;
}

bool operator==(const PAElement& a, const PAElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return a.color_ == b.color_;
  return a.color_ == b.color_ && a.terms_ == b.terms_;
}

}  // namespace pln
