#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pln {

// Permutation of {0, ..., degree-1}. Text forms use 1-based cycle notation.
// Composition: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<int> images);

  // "(1 2)(3 4 5)", "()" or "e"; the result has at least min_degree points.
  static Permutation parse(std::string_view text, std::size_t min_degree = 0);
  static Permutation cycle(std::size_t degree, const std::vector<int>& one_based_points);

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  Permutation extended(std::size_t degree) const;
  int sign() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace pln
