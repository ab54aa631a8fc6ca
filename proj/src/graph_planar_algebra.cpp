#include "pln/graph_planar_algebra.hpp"

#include "pln/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace pln {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

}  // namespace

GraphPlanarAlgebra::GraphPlanarAlgebra(SpinGraph sg, std::optional<Scalar> delta)
    : sg_(std::move(sg)) {
  const auto& g = sg_.graph;
  if (g.vertex_count() == 0 || g.n_even() == 0) throw Error("graph needs an even vertex");
  for (int v = 0; v < g.vertex_count(); ++v) mu2_.push_back(sg_.mu[v] * sg_.mu[v]);
  if (delta) {
    delta_ = *delta;
  } else {
    Scalar s;
    for (int e : g.edges_at(0)) s += mu2_[g.other_end(e, 0)];
    delta_ = s / mu2_[0];
  }
}

std::vector<int> GraphPlanarAlgebra::vertices(const Loop& l) const {
  std::vector<int> pi{l.base};
  for (std::size_t i = 0; i + 1 < l.edges.size(); ++i)
    pi.push_back(graph().other_end(l.edges[i], pi.back()));
  return pi;
}

bool GraphPlanarAlgebra::is_loop(Color c, const Loop& l) const {
  const auto& g = graph();
  if (c.is_zero()) {
    if (!l.edges.empty() || l.base < 0 || l.base >= g.vertex_count()) return false;
    return g.is_even(l.base) != c.minus;
  }
  if (l.edges.size() != static_cast<std::size_t>(2 * c.k)) return false;
  if (l.base < 0 || l.base >= g.n_even()) return false;
  int v = l.base;
  for (int e : l.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    auto [a, b] = g.edge(e);
    if (v != a && v != b) return false;
    v = g.other_end(e, v);
  }
  return v == l.base;
}

void GraphPlanarAlgebra::walks(int start, int length, std::vector<int>& path, int v,
                               std::vector<std::vector<int>>& out) const {
  if (static_cast<int>(path.size()) == length) {
    if (start < 0 || v == start) out.push_back(path);
    return;
  }
  for (int e : graph().edges_at(v)) {
    path.push_back(e);
    walks(start, length, path, graph().other_end(e, v), out);
    path.pop_back();
  }
}

const std::vector<Loop>& GraphPlanarAlgebra::loops(Color c) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = loops_.find(c);
  if (it != loops_.end()) return it->second;
  std::vector<Loop> out;
  const auto& g = graph();
  if (c.is_zero()) {
    int lo = c.minus ? g.n_even() : 0, hi = c.minus ? g.vertex_count() : g.n_even();
    for (int v = lo; v < hi; ++v) out.push_back(Loop{v, {}});
  } else {
    for (int u = 0; u < g.n_even(); ++u) {
      std::vector<std::vector<int>> ws;
      std::vector<int> path;
      walks(u, 2 * c.k, path, u, ws);
      for (auto& w : ws) out.push_back(Loop{u, std::move(w)});
    }
  }
  auto& idx = index_[c];
  for (std::size_t i = 0; i < out.size(); ++i) idx.emplace(out[i], static_cast<long>(i));
  return loops_.emplace(c, std::move(out)).first->second;
}

long GraphPlanarAlgebra::index_of(Color c, const Loop& l) const {
  loops(c);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  const auto& idx = index_.at(c);
  auto it = idx.find(l);
  return it == idx.end() ? -1 : it->second;
}

void GraphPlanarAlgebra::check_color(const PAElement& x, const char* op, bool allow_zero) const {
  if (!allow_zero && x.color().is_zero())
    throw ColorMismatch(std::string(op) + " is not defined on colour " + x.color().str());
}

PAElement GraphPlanarAlgebra::unit(Color c) const {
  PAElement out(c);
  const auto& g = graph();
  if (c.is_zero()) {
    for (const auto& l : loops(c)) out.add(l, Scalar(1));
    return out;
  }
  for (int u = 0; u < g.n_even(); ++u) {
    std::vector<std::vector<int>> ws;
    std::vector<int> path;
    walks(-1, c.k, path, u, ws);
    for (auto& w : ws) {
      Loop l{u, w};
      l.edges.insert(l.edges.end(), w.rbegin(), w.rend());
      out.add(l, Scalar(1));
    }
  }
  return out;
}

PAElement GraphPlanarAlgebra::include(const PAElement& x) const {
  const auto& g = graph();
  Color c = x.color();
  PAElement out(Color::of(c.k + 1));
  for (const auto& [l, s] : x.terms()) {
    if (c.is_zero()) {
      for (int e : g.edges_at(l.base)) {
        int u = g.is_even(l.base) ? l.base : g.other_end(e, l.base);
        out.add(Loop{u, {e, e}}, s);
      }
      continue;
    }
    int k = c.k;
    int pk = vertices(l)[k];
    for (int e : g.edges_at(pk)) {
      Loop m{l.base, {}};
      m.edges.reserve(l.edges.size() + 2);
      m.edges.insert(m.edges.end(), l.edges.begin(), l.edges.begin() + k);
      m.edges.push_back(e);
      m.edges.push_back(e);
      m.edges.insert(m.edges.end(), l.edges.begin() + k, l.edges.end());
      out.add(m, s);
    }
  }
  return out;
}

PAElement GraphPlanarAlgebra::multiply(const PAElement& x, const PAElement& y) const {
  if (x.color() != y.color())
    throw ColorMismatch("multiply: colours " + x.color().str() + " and " + y.color().str());
  Color c = x.color();
  PAElement out(c);
  if (c.is_zero()) {
    for (const auto& [l, s] : x.terms()) {
      Scalar t = y.coeff(l);
      if (!t.is_zero()) out.add(l, s * t);
    }
    return out;
  }
  std::size_t k = static_cast<std::size_t>(c.k);
  // y indexed by (base, first half)
  std::unordered_map<std::vector<int>, std::vector<std::pair<const Loop*, const Scalar*>>, KeyHash>
      by_head;
  for (const auto& [l, s] : y.terms()) {
    std::vector<int> key{l.base};
    key.insert(key.end(), l.edges.begin(), l.edges.begin() + k);
    by_head[key].emplace_back(&l, &s);
  }
  for (const auto& [l, s] : x.terms()) {
    std::vector<int> key{l.base};
    key.insert(key.end(), l.edges.rbegin(), l.edges.rbegin() + k);
    auto it = by_head.find(key);
    if (it == by_head.end()) continue;
    for (auto [m, t] : it->second) {
      Loop p{l.base, {}};
      p.edges.insert(p.edges.end(), l.edges.begin(), l.edges.begin() + k);
      p.edges.insert(p.edges.end(), m->edges.begin() + k, m->edges.end());
      out.add(p, s * *t);
    }
  }
  return out;
}

PAElement GraphPlanarAlgebra::star(const PAElement& x) const {
  PAElement out(x.color());
  for (const auto& [l, s] : x.terms()) {
    Loop r{l.base, std::vector<int>(l.edges.rbegin(), l.edges.rend())};
    out.add(r, conj(s));
  }
  return out;
}

PAElement GraphPlanarAlgebra::cond_E(const PAElement& x) const {
  check_color(x, "condE", false);
  Color c = x.color();
  if (c.k == 1) {
    PAElement out(Color::plus0());
    for (const auto& [l, s] : x.terms()) {
      if (l.edges[0] != l.edges[1]) continue;
      int odd = graph().other_end(l.edges[0], l.base);
      out.add(Loop{l.base, {}}, s * mu2_[odd] / mu2_[l.base]);
    }
    return out;
  }
  std::size_t k = static_cast<std::size_t>(c.k - 1);
  PAElement out(Color::of(c.k - 1));
  for (const auto& [l, s] : x.terms()) {
    if (l.edges[k] != l.edges[k + 1]) continue;
    auto pi = vertices(l);
    Loop m{l.base, {}};
    m.edges.insert(m.edges.end(), l.edges.begin(), l.edges.begin() + k);
    m.edges.insert(m.edges.end(), l.edges.begin() + k + 2, l.edges.end());
    out.add(m, s * mu2_[pi[k + 1]] / mu2_[pi[k]]);
  }
  return out;
}

PAElement GraphPlanarAlgebra::cond_E_minus(const PAElement& x) const {
  if (x.color() != Color::of(1)) throw ColorMismatch("condEm needs colour 1");
  PAElement out(Color::minus0());
  for (const auto& [l, s] : x.terms()) {
    if (l.edges[0] != l.edges[1]) continue;
    int odd = graph().other_end(l.edges[0], l.base);
    out.add(Loop{odd, {}}, s * mu2_[l.base] / mu2_[odd]);
  }
  return out;
}

PAElement GraphPlanarAlgebra::cond_Eprime(const PAElement& x) const {
  check_color(x, "condE1", false);
  const auto& g = graph();
  std::size_t two_k = static_cast<std::size_t>(2 * x.color().k);
  PAElement out(x.color());
  for (const auto& [l, s] : x.terms()) {
    if (l.edges[two_k - 1] != l.edges[0]) continue;
    int p1 = g.other_end(l.edges[0], l.base);
    Scalar coeff = s * mu2_[l.base] / mu2_[p1];
    for (int e : g.edges_at(p1)) {
      Loop m{g.other_end(e, p1), {e}};
      m.edges.insert(m.edges.end(), l.edges.begin() + 1, l.edges.end() - 1);
      m.edges.push_back(e);
      out.add(m, coeff);
    }
  }
  return out;
}

PAElement GraphPlanarAlgebra::jones(Color c) const {
  if (c.k < 2) throw ColorMismatch("jones needs colour >= 2, got " + c.str());
  const auto& g = graph();
  int k = c.k - 1;
  PAElement out(c);
  for (int u = 0; u < g.n_even(); ++u) {
    std::vector<std::vector<int>> ws;
    std::vector<int> path;
    walks(-1, k - 1, path, u, ws);
    for (const auto& p : ws) {
      int v = u;
      for (int e : p) v = g.other_end(e, v);
      for (int a : g.edges_at(v)) {
        int pa = g.other_end(a, v);
        for (int b : g.edges_at(v)) {
          int pb = g.other_end(b, v);
          Loop l{u, p};
          l.edges.insert(l.edges.end(), {a, a, b, b});
          l.edges.insert(l.edges.end(), p.rbegin(), p.rend());
          out.add(l, sg_.mu[pa] * sg_.mu[pb] / mu2_[v]);
        }
      }
    }
  }
  return out;
}

PAElement GraphPlanarAlgebra::trace_vector(const PAElement& x) const {
  PAElement y = x;
  Scalar norm(1);
  Scalar dinv = delta_.inverse();
  while (!y.color().is_zero()) {
    y = cond_E(y);
    norm *= dinv;
  }
  return norm * y;
}

Scalar GraphPlanarAlgebra::trace(const PAElement& x) const {
  PAElement v = trace_vector(x);
  const auto& verts = loops(v.color());
  Scalar c = v.coeff(verts.front());
  PAElement expect = c * unit(v.color());
  if (expect != v) {
    std::string desc;
    for (const auto& l : verts) {
      if (!desc.empty()) desc += ", ";
      desc += graph().name(l.base) + ": " + v.coeff(l).to_string();
    }
    throw NonScalarTrace("trace is not a scalar; 0+ vector is [" + desc + "]", desc);
  }
  return c;
}

}  // namespace pln
