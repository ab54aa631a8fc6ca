#pragma once

#include "pln/graph_planar_algebra.hpp"
#include "pln/group_spec.hpp"
#include "pln/invariants.hpp"
#include "pln/linalg.hpp"
#include "pln/subfactor_model.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace pln {

// Colour m of the planar algebra sits at N' cap M_{m-1}: colours 0+/0-/1 at
// level 0 (ev), colour 2a at (a, od), colour 2a+1 at (a, ev).
struct Level {
  int level;
  Parity parity;
};
Level level_of(Color c);

struct MatrixElement {
  Color color;
  GroupAlgebraMatrix<Scalar> m;

  friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
    return a.color == b.color && a.m == b.m;
  }
};

// Raw tangle maps of the matrix model, mirroring GraphPlanarAlgebra's interface.
class MatrixTangleModel {
 public:
  using Element = MatrixElement;

  MatrixTangleModel(std::shared_ptr<const SubfactorModel<Scalar>> model, Scalar delta)
      : model_(std::move(model)), delta_(std::move(delta)) {}

  const SubfactorModel<Scalar>& model() const { return *model_; }
  const Scalar& delta() const { return delta_; }

  Element unit(Color c) const;
  Element include(const Element& x) const;
  Element multiply(const Element& x, const Element& y) const;
  Element star(const Element& x) const;
  Element cond_E(const Element& x) const;
  Element cond_E_minus(const Element& x) const;
  Element cond_Eprime(const Element& x) const;
  Element jones(Color c) const;
  Element scale(const Element& x, const Scalar& s) const;
  Scalar trace(const Element& x) const;

 private:
  std::shared_ptr<const SubfactorModel<Scalar>> model_;
  Scalar delta_;
};

// Everything attached to a pair H < G: cosets, the star graph with its
// G-action, both models, orbit bases and the maps phi.
class PairContext {
 public:
  explicit PairContext(GroupPair pair);

  const GroupPair& pair() const { return pair_; }
  const CosetSpace& cosets() const { return *cs_; }
  std::shared_ptr<const CosetSpace> cosets_ptr() const { return cs_; }
  int n() const { return cs_->n(); }
  const Scalar& delta() const { return delta_; }

  const GraphPlanarAlgebra& loops() const { return *pa_; }
  std::shared_ptr<const GraphPlanarAlgebra> loops_ptr() const { return pa_; }
  const InvariantContext& invariants() const { return *inv_; }
  const SubfactorModel<Scalar>& model() const { return *model_; }
  const MatrixTangleModel& matrices() const { return tangles_; }

  const CommutantBasis<Scalar>& commutant_basis(Color c, Flavor f = Flavor::n_prime) const;
  MatrixElement commutant_element(Color c, std::size_t o, Flavor f = Flavor::n_prime) const;
  // Coordinates in commutant_basis(c, f); MembershipError if x is outside the span.
  std::vector<Scalar> matrix_coordinates(const MatrixElement& x, Flavor f = Flavor::n_prime) const;
  MatrixElement matrix_from_coordinates(Color c, const std::vector<Scalar>& coords,
                                        Flavor f = Flavor::n_prime) const;

  // Loop on star_n through the even vertices x_0 .. x_{c-1} (1-based cosets).
  Loop star_loop(const std::vector<int>& even_sequence) const;
  // Image loop of [i, j]: even sequence 1, suffix cosets of i, suffix cosets of j.
  Loop ell(Color c, const Tuple& i, const Tuple& j) const;

  // Column o is the loop-basis coordinate vector of phi(commutant basis o).
  const Mat<Rational>& phi_matrix(Color c) const;
  PAElement phi(const MatrixElement& x) const;

 private:
  GroupPair pair_;
  std::shared_ptr<const CosetSpace> cs_;
  Scalar delta_;
  std::shared_ptr<const GraphPlanarAlgebra> pa_;
  std::shared_ptr<const InvariantContext> inv_;
  std::shared_ptr<const SubfactorModel<Scalar>> model_;
  MatrixTangleModel tangles_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Color, int>, std::unique_ptr<CommutantBasis<Scalar>>> bases_;
  mutable std::map<Color, std::unique_ptr<Mat<Rational>>> phi_;
};

// Rotation by one step onto the flipped graph with coefficient
// mu_{pi_0} mu_{pi_k} / (mu_{pi_1} mu_{pi_{k+1}}); identity on vertices for 0+/0-.
PAElement flip_dual_map(const GraphPlanarAlgebra& from, const GraphPlanarAlgebra& to,
                        const PAElement& x);

// (1/|G|) sum_C |C| (|C cap H| |G| / (|C| |H|))^k
Rational poincare_dimension(const FiniteGroup& g, const std::vector<int>& h, int k);

struct CheckResult {
  std::string tangle;
  std::string color;
  std::size_t basis_size = 0;
  bool passed = true;
  std::string counterexample;
};

struct DimsTable {
  std::vector<int> k;
  std::vector<long long> formula, burnside, matrix_model, loop_model;
  bool agree() const;
};

DimsTable dimension_table(const PairContext& ctx, int depth);

// phi against every generator tangle on full bases up to colour depth.
std::vector<CheckResult> verify_morphism(const PairContext& ctx, int depth, int jobs = 1);

// P(star_n)^{S_n} in P(star_n)^G in P(star_n), per colour <= depth.
std::vector<CheckResult> sandwich_check(const PairContext& ctx, int depth);

// Bijection, G-equivariance and dimension match of the flip dual map.
std::vector<CheckResult> flip_duality_check(const PairContext& ctx, int depth);

}  // namespace pln
