#include "pln/graph.hpp"

#include "pln/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace pln {

BipartiteGraph::BipartiteGraph(int n_even, int n_odd, std::vector<std::pair<int, int>> edges,
                               std::vector<std::string> names)
    : n_even_(n_even), n_odd_(n_odd), edges_(std::move(edges)), names_(std::move(names)) {
  if (n_even < 0 || n_odd < 0) throw Error("negative vertex count");
  incident_.resize(static_cast<std::size_t>(vertex_count()));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = edges_[e];
    if (a < 0 || a >= n_even_ || b < n_even_ || b >= vertex_count())
      throw Error("edge " + std::to_string(e) + " does not join an even and an odd vertex");
    incident_[a].push_back(static_cast<int>(e));
    incident_[b].push_back(static_cast<int>(e));
  }
  if (names_.empty()) {
    for (int v = 0; v < vertex_count(); ++v)
      names_.push_back(is_even(v) ? "u" + std::to_string(v) : "w" + std::to_string(v - n_even_));
  }
  if (static_cast<int>(names_.size()) != vertex_count()) throw Error("vertex name count mismatch");
}

int BipartiteGraph::other_end(int e, int v) const {
  const auto& [a, b] = edges_[e];
  if (v == a) return b;
  if (v == b) return a;
  throw Error("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
}

int BipartiteGraph::find_vertex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool BipartiteGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : incident_[v]) {
      int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count();
}

Eigen::MatrixXi BipartiteGraph::adjacency_matrix() const {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(vertex_count(), vertex_count());
  for (auto [u, w] : edges_) {
    ++a(u, w);
    ++a(w, u);
  }
  return a;
}

std::vector<int> GraphAction::all_elements() const {
  std::vector<int> out(group->order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

GraphAction GraphAction::trivial(const BipartiteGraph& graph) {
  GraphAction a;
  a.group = std::make_shared<FiniteGroup>(FiniteGroup::generate({}));
  std::vector<int> v(graph.vertex_count()), e(graph.edge_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(i);
  a.vertex_maps = {v};
  a.edge_maps = {e};
  return a;
}

ActionCheck validate_action(const SpinGraph& sg) {
  const auto& g = sg.graph;
  const auto& act = sg.action;
  const auto& G = *act.group;
  auto fail = [](std::string m) { return ActionCheck{false, std::move(m)}; };
  if (act.vertex_maps.size() != G.order() || act.edge_maps.size() != G.order())
    return fail("action tables do not cover the group");
  for (std::size_t x = 0; x < G.order(); ++x) {
    const auto& vm = act.vertex_maps[x];
    const auto& em = act.edge_maps[x];
    std::vector<int> sv = vm, se = em;
    std::sort(sv.begin(), sv.end());
    std::sort(se.begin(), se.end());
    for (int v = 0; v < g.vertex_count(); ++v)
      if (sv[v] != v) return fail("vertex map is not a bijection");
    for (int e = 0; e < g.edge_count(); ++e)
      if (se[e] != e) return fail("edge map is not a bijection");
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.is_even(v) != g.is_even(vm[v])) return fail("action does not preserve parity");
      if (sg.mu[v] != sg.mu[vm[v]]) return fail("spin is not constant on an orbit");
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edge(e);
      auto [c, d] = g.edge(em[e]);
      if (vm[a] != c || vm[b] != d)
        return fail("g*edge " + std::to_string(e) + " does not join the moved endpoints");
    }
  }
  for (std::size_t x = 0; x < G.order(); ++x)
    for (std::size_t y = 0; y < G.order(); ++y) {
      int xy = G.mul(static_cast<int>(x), static_cast<int>(y));
      for (int v = 0; v < g.vertex_count(); ++v)
        if (act.vertex_maps[xy][v] != act.vertex_maps[x][act.vertex_maps[y][v]])
          return fail("vertex maps are not a left action");
    }
  return {};
}

SpinGraph star_n(const CosetSpace& cs) {
  int n = cs.n();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, n);
    names.push_back("Hg" + std::to_string(i + 1));
  }
  names.push_back("*");
  SpinGraph sg{BipartiteGraph(n, 1, std::move(edges), std::move(names)), {}, {}};
  sg.mu.assign(static_cast<std::size_t>(n), Scalar(1));
  sg.mu.push_back(Scalar::quarter_power(n, 1));
  const auto& G = cs.group();
  sg.action.group = cs.group_ptr();
  for (std::size_t x = 0; x < G.order(); ++x) {
    std::vector<int> vm(static_cast<std::size_t>(n + 1)), em(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      vm[i] = cs.beta1(static_cast<int>(x), i + 1) - 1;
      em[i] = vm[i];
    }
    vm[n] = n;
    sg.action.vertex_maps.push_back(std::move(vm));
    sg.action.edge_maps.push_back(std::move(em));
  }
  return sg;
}

int flip_vertex(const BipartiteGraph& g, int v) {
  return g.is_even(v) ? v + g.n_odd() : v - g.n_even();
}

BipartiteGraph flip(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(flip_vertex(g, b), flip_vertex(g, a));
  std::vector<std::string> names(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) names[flip_vertex(g, v)] = g.name(v);
  return BipartiteGraph(g.n_odd(), g.n_even(), std::move(edges), std::move(names));
}

SpinGraph flip(const SpinGraph& sg) {
  const auto& g = sg.graph;
  SpinGraph out{flip(g), std::vector<Scalar>(sg.mu.size()), {}};
  for (int v = 0; v < g.vertex_count(); ++v) out.mu[flip_vertex(g, v)] = sg.mu[v];
  out.action.group = sg.action.group;
  out.action.edge_maps = sg.action.edge_maps;
  for (const auto& vm : sg.action.vertex_maps) {
    std::vector<int> m(vm.size());
    for (int v = 0; v < g.vertex_count(); ++v) m[flip_vertex(g, v)] = flip_vertex(g, vm[v]);
    out.action.vertex_maps.push_back(std::move(m));
  }
  return out;
}

PfCheck check_pf(const SpinGraph& sg) {
  const auto& g = sg.graph;
  if (!g.is_connected()) throw DisconnectedGraph("graph is not connected");
  std::vector<Scalar> amu(g.vertex_count());
  for (auto [a, b] : g.edges()) {
    amu[a] += sg.mu2(b);
    amu[b] += sg.mu2(a);
  }
  PfCheck out;
  out.eigenvalue = amu[0] / sg.mu2(0);
  out.ok = true;
  bool exact = out.eigenvalue.is_exact();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(sg.mu[v] > Scalar(0))) out.ok = false;
    Scalar rhs = out.eigenvalue * sg.mu2(v);
    if (exact && rhs.is_exact() && amu[v].is_exact()) {
      if (amu[v] != rhs) out.ok = false;
    } else {
      double x = amu[v].to_double(), y = rhs.to_double();
      if (std::abs(x - y) > 1e-12 * std::max({1.0, std::abs(x), std::abs(y)})) out.ok = false;
    }
  }
  return out;
}

double spectral_norm(const BipartiteGraph& g) {
  Eigen::MatrixXd a = g.adjacency_matrix().cast<double>();
  if (a.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace pln
