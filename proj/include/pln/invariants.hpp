#pragma once

#include "pln/graph_planar_algebra.hpp"
#include "pln/group.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace pln {

// Orbit-sum basis of P_c(Gamma)^G. For colours >= 1 element b_O is
// sum_{g in G} g(rep_O) (so rep_O has coefficient |Iso(rep_O)|); for 0+/0- it
// is the plain sum over the orbit.
struct InvariantBasis {
  Color color;
  std::vector<Loop> reps;
  std::vector<std::size_t> stabilizer;  // |Iso_G(rep)|
  std::vector<int> orbit_of;            // loop index -> orbit
  std::vector<PAElement> elements;
  std::size_t burnside = 0;

  std::size_t size() const { return reps.size(); }
  // coefficient of rep_O in b_O
  std::size_t weight(std::size_t o) const { return color.is_zero() ? 1 : stabilizer[o]; }
};

struct PredicateRoutes {
  bool group_route = false;
  bool algebra_route = false;
  bool agree() const { return group_route == algebra_route; }
};

struct ModulusRoutes {
  bool group_route = false;  // PF identity A mu^2 = lambda mu^2
  bool algebra_route = false;  // E(I(1)) = delta 1 on both shadings
  Scalar group_value;
  Scalar algebra_value;
  bool agree() const { return group_route == algebra_route && group_value == algebra_value; }
};

class InvariantContext {
 public:
  // Validates the action on the spin graph (throws on failure).
  explicit InvariantContext(std::shared_ptr<const GraphPlanarAlgebra> pa);

  const GraphPlanarAlgebra& algebra() const { return *pa_; }
  std::shared_ptr<const GraphPlanarAlgebra> algebra_ptr() const { return pa_; }
  const GraphAction& action() const { return pa_->spin_graph().action; }
  const FiniteGroup& group() const { return *action().group; }

  Loop act(int g, const Loop& l) const;
  PAElement act(int g, const PAElement& x) const;
  bool is_invariant(const PAElement& x) const;
  PAElement project(const PAElement& x) const;

  const InvariantBasis& basis(Color c) const;
  // Coordinates in basis(c); throws MembershipError if x is not G-invariant.
  std::vector<Scalar> coordinates(const PAElement& x) const;
  PAElement from_coordinates(Color c, const std::vector<Scalar>& coords) const;

  // Rank of the averaging projection on P_c, computed by exact elimination.
  long projection_rank(Color c) const;

  PredicateRoutes connected() const;
  ModulusRoutes modulus() const;
  PredicateRoutes irreducible() const;

 private:
  std::shared_ptr<const GraphPlanarAlgebra> pa_;
  std::vector<int> elements_;
  mutable std::mutex mutex_;
  mutable std::map<Color, std::unique_ptr<InvariantBasis>> bases_;
};

}  // namespace pln
