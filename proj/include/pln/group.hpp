#pragma once

#include "pln/permutation.hpp"
#include "pln/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pln {

// 1-based k-tuple over I = {1, ..., n}.
using Tuple = std::vector<int>;

std::size_t default_max_group_order();  // PLN_MAX_GROUP_ORDER, default 10000

// Closure of a set of permutations. Elements are sorted by image vector, so the
// identity has index 0.
class FiniteGroup {
 public:
  static FiniteGroup generate(const std::vector<Permutation>& generators,
                              std::size_t max_order = default_max_group_order());

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& element(int g) const { return elements_[g]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[a]; }
  // -1 when p is not in the group.
  int index_of(const Permutation& p) const;
  bool has_table() const { return !table_.empty(); }

  std::vector<int> closure_of(const std::vector<int>& gens) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

struct ConjugacyClass {
  std::vector<int> elements;
  std::size_t meet_subgroup = 0;  // |C cap H|
};

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g,
                                              const std::vector<int>& subgroup = {});

// Orbit partition of a finite domain {0, ..., size-1} under a group given by a
// list of acting elements. Representatives are the least index of each orbit.
struct OrbitPartition {
  std::vector<int> orbit_of;
  std::vector<std::int64_t> reps;
  std::vector<std::vector<std::int64_t>> members;
  std::size_t burnside = 0;  // independent count via average fixed points

  std::size_t count() const { return reps.size(); }
};

using ActionFn = std::function<std::int64_t(int g, std::int64_t x)>;

OrbitPartition orbits(const std::vector<int>& acting, std::int64_t domain_size,
                      const ActionFn& act);
std::vector<int> isotropy(const std::vector<int>& acting, std::int64_t x, const ActionFn& act);
std::size_t burnside_count(const std::vector<int>& acting, std::int64_t domain_size,
                           const ActionFn& act);

// Right cosets H g_1, ..., H g_n with g_1 = e; coset indices are 1-based.
class CosetSpace {
 public:
  CosetSpace(std::shared_ptr<const FiniteGroup> group, std::vector<int> subgroup);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const std::vector<int>& subgroup() const { return subgroup_; }
  bool in_subgroup(int g) const { return in_h_[g] != 0; }
  int n() const { return static_cast<int>(reps_.size()); }
  int rep(int i) const { return reps_[i - 1]; }
  const std::vector<int>& reps() const { return reps_; }
  int coset_of(int g) const { return coset_of_[g]; }

  int beta1(int g, int i) const;
  Tuple beta_k(int g, const Tuple& t) const;
  // g_{t_1} g_{t_2} ... g_{t_k}; identity for the empty tuple.
  int product(const Tuple& t) const;
  int product(const Tuple& t, std::size_t from) const;
  // (prod g_i)(prod g_j)^{-1}
  int label(const Tuple& i, const Tuple& j) const;
  bool in_y(const Tuple& i, const Tuple& j) const;
  std::vector<std::pair<Tuple, Tuple>> y_k(int k) const;

  // Flat index of a tuple, leading coordinate most significant.
  std::int64_t flat(const Tuple& t) const;
  Tuple unflat(std::int64_t idx, int k) const;
  std::int64_t power(int k) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<int> subgroup_;
  std::vector<char> in_h_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
  std::vector<int> beta1_;  // (g, i) -> j, 0-based table
};

}  // namespace pln
