#pragma once

#include "pln/group.hpp"
#include "pln/scalar.hpp"

#include <Eigen/Core>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pln {

// Bipartite multigraph. Vertex ids: even vertices 0..n_even-1, then odd ones.
// Edges are (even id, odd id) pairs identified by position.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int n_even, int n_odd, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> names = {});

  int n_even() const { return n_even_; }
  int n_odd() const { return n_odd_; }
  int vertex_count() const { return n_even_ + n_odd_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool is_even(int v) const { return v < n_even_; }
  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // edges incident to v, ascending
  const std::vector<int>& edges_at(int v) const { return incident_[v]; }
  int other_end(int e, int v) const;
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int find_vertex(const std::string& name) const;

  bool is_connected() const;
  // Symmetric adjacency over all vertices, entries count parallel edges.
  Eigen::MatrixXi adjacency_matrix() const;

 private:
  int n_even_ = 0;
  int n_odd_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::string> names_;
};

// Group acting on a bipartite graph by parity-preserving vertex and edge permutations.
struct GraphAction {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::vector<int>> vertex_maps;  // [g][v]
  std::vector<std::vector<int>> edge_maps;    // [g][e]

  int vertex(int g, int v) const { return vertex_maps[g][v]; }
  int edge(int g, int e) const { return edge_maps[g][e]; }
  std::vector<int> all_elements() const;

  static GraphAction trivial(const BipartiteGraph& graph);
};

// Graph with spin function mu and a group action.
struct SpinGraph {
  BipartiteGraph graph;
  std::vector<Scalar> mu;
  GraphAction action;

  Scalar mu2(int v) const { return mu[v] * mu[v]; }
};

struct ActionCheck {
  bool ok = true;
  std::string message;
};

// Endpoint compatibility, homomorphism and spin constancy on orbits.
ActionCheck validate_action(const SpinGraph& sg);

// Even vertices H g_1..H g_n, odd vertex *, edge i joins H g_{i+1} to *;
// mu(*) = n^{1/4}, mu(H g_i) = 1; G acts by beta1 on cosets and fixes *.
SpinGraph star_n(const CosetSpace& cs);

// Vertex id in the flipped graph.
int flip_vertex(const BipartiteGraph& g, int v);
BipartiteGraph flip(const BipartiteGraph& g);
// Flip of the graph carrying spins and action along.
SpinGraph flip(const SpinGraph& sg);

struct PfCheck {
  bool ok = false;
  Scalar eigenvalue;  // the candidate norm ||Gamma||
};

// A mu^2 = lambda mu^2 with lambda read off the first vertex. Exact when the
// spins are exact, otherwise to relative tolerance 1e-12.
PfCheck check_pf(const SpinGraph& sg);
// Largest eigenvalue of the adjacency matrix, in double precision.
double spectral_norm(const BipartiteGraph& g);

}  // namespace pln
