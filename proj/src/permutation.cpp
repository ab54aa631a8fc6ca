#include "pln/permutation.hpp"

#include "pln/error.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pln {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
      throw Error("image list is not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::cycle(std::size_t degree, const std::vector<int>& pts) {
  Permutation p(degree);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int a = pts[i] - 1;
    int b = pts[(i + 1) % pts.size()] - 1;
    p.images_[a] = b;
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("trailing input after 'e'", pos);
    return Permutation(min_degree);
  }
  int max_point = 0;
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in permutation", pos);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (pos == text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point in cycle", pos);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1) throw ParseError("cycle points are 1-based", pos);
      if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
        throw ParseError("repeated point in cycle", pos);
      cyc.push_back(v);
      max_point = std::max(max_point, v);
    }
    cycles.push_back(std::move(cyc));
  }
  Permutation p(std::max<std::size_t>(min_degree, static_cast<std::size_t>(max_point)));
  // Cycles compose right to left like any product.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    p = cycle(p.degree(), *it) * p;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<int>(i);
  return p;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  Permutation p(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

int Permutation::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::size_t n = std::max(p.degree(), q.degree());
  Permutation a = p.extended(n), b = q.extended(n);
  Permutation r(n);
  for (std::size_t i = 0; i < n; ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  return boost::hash_range(p.images().begin(), p.images().end());
}

}  // namespace pln
