#include "pln/invariants.hpp"

#include "pln/error.hpp"
#include "pln/linalg.hpp"

namespace pln {

InvariantContext::InvariantContext(std::shared_ptr<const GraphPlanarAlgebra> pa)
    : pa_(std::move(pa)) {
  auto check = validate_action(pa_->spin_graph());
  if (!check.ok) throw Error("invalid group action: " + check.message);
  elements_ = action().all_elements();
}

Loop InvariantContext::act(int g, const Loop& l) const {
  const auto& a = action();
  Loop out{a.vertex(g, l.base), {}};
  out.edges.reserve(l.edges.size());
  for (int e : l.edges) out.edges.push_back(a.edge(g, e));
  return out;
}

PAElement InvariantContext::act(int g, const PAElement& x) const {
  PAElement out(x.color());
  for (const auto& [l, s] : x.terms()) out.add(act(g, l), s);
  return out;
}

bool InvariantContext::is_invariant(const PAElement& x) const {
  for (int g : elements_)
    if (act(g, x) != x) return false;
  return true;
}

PAElement InvariantContext::project(const PAElement& x) const {
  PAElement out(x.color());
  for (int g : elements_) out += act(g, x);
  out *= Scalar(Rational(1, static_cast<long>(elements_.size())));
  return out;
}

const InvariantBasis& InvariantContext::basis(Color c) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = bases_.find(c);
    if (it != bases_.end()) return *it->second;
  }
  const auto& loops = pa_->loops(c);
  std::size_t nl = loops.size();
  std::vector<std::vector<std::int64_t>> table(group().order());
  for (int g : elements_) {
    auto& row = table[g];
    row.resize(nl);
    for (std::size_t i = 0; i < nl; ++i) row[i] = pa_->index_of(c, act(g, loops[i]));
  }
  ActionFn fn = [&](int g, std::int64_t x) { return table[g][x]; };
  auto part = orbits(elements_, static_cast<std::int64_t>(nl), fn);

  auto b = std::make_unique<InvariantBasis>();
  b->color = c;
  b->orbit_of = part.orbit_of;
  b->burnside = part.burnside;
  for (std::size_t o = 0; o < part.count(); ++o) {
    const Loop& rep = loops[part.reps[o]];
    b->reps.push_back(rep);
    b->stabilizer.push_back(isotropy(elements_, part.reps[o], fn).size());
    PAElement e(c);
    if (c.is_zero()) {
      for (auto m : part.members[o]) e.add(loops[m], Scalar(1));
    } else {
      for (int g : elements_) e.add(act(g, rep), Scalar(1));
    }
    b->elements.push_back(std::move(e));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = bases_.emplace(c, std::move(b));
  return *it->second;
}

std::vector<Scalar> InvariantContext::coordinates(const PAElement& x) const {
  const auto& b = basis(x.color());
  std::vector<Scalar> coords(b.size());
  for (std::size_t o = 0; o < b.size(); ++o)
    coords[o] = x.coeff(b.reps[o]) / Scalar(static_cast<long>(b.weight(o)));
  if (from_coordinates(x.color(), coords) != x)
    throw MembershipError("element of colour " + x.color().str() + " is not G-invariant");
  return coords;
}

PAElement InvariantContext::from_coordinates(Color c, const std::vector<Scalar>& coords) const {
  const auto& b = basis(c);
  if (coords.size() != b.size()) throw Error("coordinate vector has the wrong length");
  PAElement out(c);
  for (std::size_t o = 0; o < b.size(); ++o)
    if (!coords[o].is_zero()) out += coords[o] * b.elements[o];
  return out;
}

long InvariantContext::projection_rank(Color c) const {
  const auto& loops = pa_->loops(c);
  Mat<Scalar> m = Mat<Scalar>::Constant(static_cast<Eigen::Index>(loops.size()),
                                        static_cast<Eigen::Index>(loops.size()), Scalar(0));
  for (std::size_t j = 0; j < loops.size(); ++j) {
    PAElement p = project(PAElement(c, loops[j]));
    for (const auto& [l, s] : p.terms()) m(pa_->index_of(c, l), static_cast<Eigen::Index>(j)) = s;
  }
  return static_cast<long>(rank(m));
}

PredicateRoutes InvariantContext::connected() const {
  const auto& g = pa_->graph();
  PredicateRoutes r;
  ActionFn fn = [&](int x, std::int64_t v) {
    return static_cast<std::int64_t>(action().vertex(x, static_cast<int>(v)));
  };
  auto part = orbits(elements_, g.vertex_count(), fn);
  // parity is preserved, so one orbit per side means exactly two orbits
  r.group_route = g.n_even() > 0 && g.n_odd() > 0 && part.count() == 2;
  r.algebra_route = projection_rank(Color::plus0()) == 1 && projection_rank(Color::minus0()) == 1;
  return r;
}

ModulusRoutes InvariantContext::modulus() const {
  ModulusRoutes r;
  auto pf = check_pf(pa_->spin_graph());
  r.group_route = pf.ok;
  r.group_value = pf.eigenvalue;
  const auto& pa = *pa_;
  PAElement plus = pa.cond_E(pa.include(pa.unit(Color::plus0())));
  PAElement minus = pa.cond_E_minus(pa.include(pa.unit(Color::minus0())));
  r.algebra_value = plus.coeff(pa.loops(Color::plus0()).front());
  r.algebra_route = plus == r.algebra_value * pa.unit(Color::plus0()) &&
                    minus == r.algebra_value * pa.unit(Color::minus0());
  return r;
}

PredicateRoutes InvariantContext::irreducible() const {
  PredicateRoutes r;
  const auto& b = basis(Color::of(1));
  r.group_route = b.size() == 1;
  r.algebra_route = projection_rank(Color::of(1)) == 1;
  return r;
}

}  // namespace pln
