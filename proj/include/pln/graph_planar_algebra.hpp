#pragma once

#include "pln/graph.hpp"
#include "pln/loop.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace pln {

// Graph planar algebra P(Gamma) with the generating tangle maps. Every map
// returns the raw tangle value Z_T; conditional expectations are Z_T / delta.
class GraphPlanarAlgebra {
 public:
  using Element = PAElement;

  // delta defaults to the closed-loop value (A mu^2)_v / mu^2_v at vertex 0.
  explicit GraphPlanarAlgebra(SpinGraph sg, std::optional<Scalar> delta = std::nullopt);

  const SpinGraph& spin_graph() const { return sg_; }
  const BipartiteGraph& graph() const { return sg_.graph; }
  const Scalar& delta() const { return delta_; }

  // pi_0 .. pi_{2k-1}
  std::vector<int> vertices(const Loop& l) const;
  bool is_loop(Color c, const Loop& l) const;

  // All loops of colour c in lexicographic (base, edges) order.
  const std::vector<Loop>& loops(Color c) const;
  // Position of l in loops(c); -1 if absent.
  long index_of(Color c, const Loop& l) const;

  PAElement unit(Color c) const;
  // I: colour k -> k+1 (0+ and 0- both go to 1).
  PAElement include(const PAElement& x) const;
  PAElement multiply(const PAElement& x, const PAElement& y) const;
  PAElement star(const PAElement& x) const;
  // Z of the cap on the right strands: colour k+1 -> k, and 1 -> 0+.
  PAElement cond_E(const PAElement& x) const;
  // Cap onto the shaded side: colour 1 -> 0-.
  PAElement cond_E_minus(const PAElement& x) const;
  // Z of the cap on the left strands, colour k -> k (k >= 1).
  PAElement cond_Eprime(const PAElement& x) const;
  // Z of the Jones tangle applied to 1, colour c >= 2; equals delta * e_{c-1}.
  PAElement jones(Color c) const;
  PAElement scale(const PAElement& x, const Scalar& s) const { return s * x; }

  // delta^{-k} E^{0+} o ... o E(x); colour 0+ (0- for 0- input).
  PAElement trace_vector(const PAElement& x) const;
  // Scalar trace; throws NonScalarTrace unless trace_vector is a multiple of 1.
  Scalar trace(const PAElement& x) const;

 private:
  void check_color(const PAElement& x, const char* op, bool allow_zero) const;
  void walks(int start, int length, std::vector<int>& path, int v,
             std::vector<std::vector<int>>& out) const;

  SpinGraph sg_;
  std::vector<Scalar> mu2_;
  Scalar delta_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Color, std::vector<Loop>> loops_;
  mutable std::map<Color, std::map<Loop, long>> index_;
};

}  // namespace pln
