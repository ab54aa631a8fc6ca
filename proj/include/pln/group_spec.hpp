#pragma once

#include "pln/group.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pln {

struct GroupPair {
  std::string group_name;
  std::string subgroup_name;
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> subgroup;

  CosetSpace cosets() const { return CosetSpace(group, subgroup); }
};

// Generators of S<n>, A<n>, C<n>, D<n> on {1..n}.
std::vector<Permutation> builtin_generators(std::string_view name);

// "G:H" with builtin names, e.g. "S3:S2", "C4:C2". A cyclic subgroup C<m> of
// C<n> or D<n> is generated by the (n/m)-th power of the rotation; every other
// subgroup name is embedded on the first points of the ground set.
GroupPair builtin_pair(std::string_view spec);

// group { generators = ["(1 2)", "(1 2 3)"] } subgroup { generators = ["(1 2)"] }
GroupPair parse_group_spec(std::string_view text);

}  // namespace pln
