#include "pln/isomorphism.hpp"

#include "pln/error.hpp"
#include "pln/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace pln {

Level level_of(Color c) {
  if (c.k <= 1) return {0, Parity::ev};
  if (c.k % 2 == 0) return {c.k / 2, Parity::od};
  return {c.k / 2, Parity::ev};
}

// ---- matrix tangle model ----

MatrixElement MatrixTangleModel::unit(Color c) const {
  auto [lvl, par] = level_of(c);
  return {c, model_->identity(lvl, par)};
}

MatrixElement MatrixTangleModel::include(const MatrixElement& x) const {
  Color c = x.color;
  if (c.is_zero()) return {Color::of(1), x.m};
  if (c.k % 2 == 0) return {Color::of(c.k + 1), model_->od_to_ev(x.m)};
  return {Color::of(c.k + 1), model_->theta_inclusion(x.m)};
}

MatrixElement MatrixTangleModel::multiply(const MatrixElement& x, const MatrixElement& y) const {
  if (x.color != y.color)
    throw ColorMismatch("multiply: colours " + x.color.str() + " and " + y.color.str());
  return {x.color, model_->matmul(x.m, y.m)};
}

MatrixElement MatrixTangleModel::star(const MatrixElement& x) const {
  return {x.color, model_->adjoint(x.m)};
}

MatrixElement MatrixTangleModel::cond_E(const MatrixElement& x) const {
  Color c = x.color;
  if (c.is_zero()) throw ColorMismatch("condE is not defined on colour " + c.str());
  if (c.k == 1) {
    auto m = model_->identity(0, Parity::ev);
    return {Color::plus0(), model_->scale(m, delta_ * model_->trace(x.m))};
  }
  if (c.k % 2 == 1) return {Color::of(c.k - 1), model_->scale(model_->cond_exp_EN(x.m), delta_)};
  return {Color::of(c.k - 1), model_->scale(model_->cond_exp_EM(x.m), delta_)};
}

MatrixElement MatrixTangleModel::cond_E_minus(const MatrixElement& x) const {
  if (x.color != Color::of(1)) throw ColorMismatch("condEm needs colour 1");
  auto m = model_->identity(0, Parity::ev);
  return {Color::minus0(), model_->scale(m, delta_ * model_->trace(x.m))};
}

MatrixElement MatrixTangleModel::cond_Eprime(const MatrixElement& x) const {
  if (x.color.is_zero()) throw ColorMismatch("condE1 is not defined on colour " + x.color.str());
  return {x.color, model_->scale(model_->cond_exp_Mprime(x.m), delta_)};
}

MatrixElement MatrixTangleModel::jones(Color c) const {
  if (c.k < 2) throw ColorMismatch("jones needs colour >= 2, got " + c.str());
  return {c, model_->scale(model_->jones_projection(c.k - 1), delta_)};
}

MatrixElement MatrixTangleModel::scale(const MatrixElement& x, const Scalar& s) const {
  return {x.color, model_->scale(x.m, s)};
}

Scalar MatrixTangleModel::trace(const MatrixElement& x) const { return model_->trace(x.m); }

// ---- pair context ----

PairContext::PairContext(GroupPair pair)
    : pair_(std::move(pair)),
      cs_(std::make_shared<CosetSpace>(pair_.cosets())),
      delta_(Scalar::quarter_power(cs_->n(), 2)),
      pa_(std::make_shared<GraphPlanarAlgebra>(star_n(*cs_), delta_)),
      inv_(std::make_shared<InvariantContext>(pa_)),
      model_(std::make_shared<SubfactorModel<Scalar>>(cs_)),
      tangles_(model_, delta_) {}

const CommutantBasis<Scalar>& PairContext::commutant_basis(Color c, Flavor f) const {
  auto key = std::make_pair(c, static_cast<int>(f));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = bases_.find(key);
    if (it != bases_.end()) return *it->second;
  }
  auto b = std::make_unique<CommutantBasis<Scalar>>();
  if (c.is_zero()) {
    b->level = 0;
    b->parity = Parity::ev;
    b->flavor = f;
    b->reps.emplace_back(Tuple{}, Tuple{});
    b->stabilizer.push_back(1);
    b->elements.push_back(model_->identity(0, Parity::ev));
    b->burnside = 1;
  } else {
    auto [lvl, par] = level_of(c);
    *b = model_->relative_commutant_basis(lvl, par, f);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = bases_.emplace(key, std::move(b));
  return *it->second;
}

MatrixElement PairContext::commutant_element(Color c, std::size_t o, Flavor f) const {
  return {c, commutant_basis(c, f).elements.at(o)};
}

std::vector<Scalar> PairContext::matrix_coordinates(const MatrixElement& x, Flavor f) const {
  const auto& b = commutant_basis(x.color, f);
  if (x.m.level != b.level)
    throw MembershipError("matrix level does not match colour " + x.color.str());
  std::vector<Scalar> coords(b.size());
  for (std::size_t o = 0; o < b.size(); ++o) {
    const auto& [i, j] = b.reps[o];
    int g = cs_->label(i, j);
    coords[o] = x.m.at(cs_->flat(i), cs_->flat(j)).coeff(g) /
                Scalar(static_cast<long>(b.stabilizer[o]));
  }
  if (matrix_from_coordinates(x.color, coords, f).m != x.m)
    throw MembershipError("matrix of colour " + x.color.str() + " is not in the relative commutant");
  return coords;
}

MatrixElement PairContext::matrix_from_coordinates(Color c, const std::vector<Scalar>& coords,
                                                   Flavor f) const {
  const auto& b = commutant_basis(c, f);
  if (coords.size() != b.size()) throw Error("coordinate vector has the wrong length");
  auto m = model_->zero(b.level, b.parity);
  for (std::size_t o = 0; o < b.size(); ++o)
    if (!coords[o].is_zero()) m = model_->add(m, model_->scale(b.elements[o], coords[o]));
  return {c, m};
}

Loop PairContext::star_loop(const std::vector<int>& seq) const {
  Loop l{seq.front() - 1, {}};
  std::size_t c = seq.size();
  for (std::size_t m = 0; m < c; ++m) {
    l.edges.push_back(seq[m] - 1);
    l.edges.push_back(seq[(m + 1) % c] - 1);
  }
  return l;
}

Loop PairContext::ell(Color c, const Tuple& i, const Tuple& j) const {
  if (c.is_zero()) throw Error("ell is defined for colours >= 1");
  int a = level_of(c).level;
  auto suffix = [&](const Tuple& t, int l) { return cs_->coset_of(cs_->product(t, l - 1)); };
  std::vector<int> seq{1};
  for (int l = a; l >= 1; --l) seq.push_back(suffix(i, l));
  int start = c.k % 2 == 1 ? 1 : 2;
  for (int l = start; l <= a; ++l) seq.push_back(suffix(j, l));
  return star_loop(seq);
}

const Mat<Rational>& PairContext::phi_matrix(Color c) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = phi_.find(c);
    if (it != phi_.end()) return *it->second;
  }
  const auto& lb = inv_->basis(c);
  const auto& mb = commutant_basis(c);
  if (lb.size() != mb.size())
    throw Error("dimension mismatch at colour " + c.str() + ": loop side " +
                std::to_string(lb.size()) + ", matrix side " + std::to_string(mb.size()));
  auto m = std::make_unique<Mat<Rational>>(Mat<Rational>::Zero(
      static_cast<Eigen::Index>(lb.size()), static_cast<Eigen::Index>(mb.size())));
  if (c.is_zero()) {
    (*m)(0, 0) = 1;
  } else {
    std::vector<char> hit(lb.size(), 0);
    for (std::size_t o = 0; o < mb.size(); ++o) {
      const auto& [i, j] = mb.reps[o];
      Loop l = ell(c, i, j);
      long idx = pa_->index_of(c, l);
      if (idx < 0) throw Error("phi produced an invalid loop at colour " + c.str());
      std::size_t target = static_cast<std::size_t>(lb.orbit_of[idx]);
      std::size_t iso = 0;
      for (std::size_t g = 0; g < inv_->group().order(); ++g)
        if (inv_->act(static_cast<int>(g), l) == l) ++iso;
      // sum_h h[i,j] -> sum_g g(l) needs |Iso_G(l)| = |Iso_H(i,j)| to be orbit-faithful
      if (iso != mb.stabilizer[o])
        throw Error("isotropy mismatch for phi at colour " + c.str());
      if (hit[target]) throw Error("phi is not injective on orbit bases at colour " + c.str());
      hit[target] = 1;
      (*m)(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(o)) = 1;
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = phi_.emplace(c, std::move(m));
  return *it->second;
}

PAElement PairContext::phi(const MatrixElement& x) const {
  auto coords = matrix_coordinates(x);
  const auto& m = phi_matrix(x.color);
  std::vector<Scalar> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out[r] += Scalar(m(r, c)) * coords[c];
  return inv_->from_coordinates(x.color, out);
}

// ---- flip ----

PAElement flip_dual_map(const GraphPlanarAlgebra& from, const GraphPlanarAlgebra& to,
                        const PAElement& x) {
  const auto& g = from.graph();
  const auto& mu = from.spin_graph().mu;
  Color c = x.color();
  Color target = c.is_zero() ? Color{0, !c.minus} : c;
  PAElement out(target);
  for (const auto& [l, s] : x.terms()) {
    if (c.is_zero()) {
      out.add(Loop{flip_vertex(g, l.base), {}}, s);
      continue;
    }
    auto pi = from.vertices(l);
    std::size_t k = static_cast<std::size_t>(c.k);
    Scalar coeff = mu[pi[0]] * mu[pi[k]] / (mu[pi[1]] * mu[pi[(k + 1) % pi.size()]]);
    Loop r{flip_vertex(g, pi[1]), std::vector<int>(l.edges.begin() + 1, l.edges.end())};
    r.edges.push_back(l.edges.front());
    out.add(r, s * coeff);
  }
  (void)to;
  return out;
}

Rational poincare_dimension(const FiniteGroup& g, const std::vector<int>& h, int k) {
  Rational total = 0;
  Rational order_g = static_cast<long>(g.order());
  Rational order_h = static_cast<long>(h.size());
  for (const auto& cls : conjugacy_classes(g, h)) {
    Rational size = static_cast<long>(cls.elements.size());
    Rational ratio = Rational(static_cast<long>(cls.meet_subgroup)) * order_g / (size * order_h);
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= ratio;
    total += size * p;
  }
  return total / order_g;
}

bool DimsTable::agree() const {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (formula[i] != burnside[i] || formula[i] != matrix_model[i] || formula[i] != loop_model[i])
      return false;
  return true;
}

DimsTable dimension_table(const PairContext& ctx, int depth) {
  DimsTable t;
  const auto& cs = ctx.cosets();
  const auto& G = cs.group();
  std::vector<int> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  for (int k = 1; k <= depth; ++k) {
    Rational f = poincare_dimension(G, cs.subgroup(), k);
    if (!is_integer(f))
      throw Error("Poincare formula gave the non-integer " + f.str() + " at k = " + std::to_string(k));
    ActionFn act = [&](int g, std::int64_t x) {
      Tuple t = cs.unflat(x, k);
      for (auto& v : t) v = cs.beta1(g, v);
      return cs.flat(t);
    };
    t.k.push_back(k);
    t.formula.push_back(boost::multiprecision::numerator(f).convert_to<long long>());
    t.burnside.push_back(static_cast<long long>(burnside_count(all, cs.power(k), act)));
    t.matrix_model.push_back(static_cast<long long>(ctx.commutant_basis(Color::of(k)).size()));
    t.loop_model.push_back(static_cast<long long>(ctx.invariants().basis(Color::of(k)).size()));
  }
  return t;
}

// ---- morphism verification ----

namespace {

std::vector<Color> colours_up_to(int depth) {
  std::vector<Color> out{Color::plus0(), Color::minus0()};
  for (int k = 1; k <= depth; ++k) out.push_back(Color::of(k));
  return out;
}

std::string describe(const PAElement& x, std::size_t max_terms = 6) {
  std::ostringstream os;
  os << "[colour " << x.color().str() << ": ";
  std::size_t i = 0;
  for (const auto& [l, s] : x.terms()) {
    if (i++ == max_terms) {
      os << " ...";
      break;
    }
    if (i > 1) os << " + ";
    os << "(" << s.to_string() << ")*<" << l.base;
    for (int e : l.edges) os << "," << e;
    os << ">";
  }
  if (x.is_zero()) os << "0";
  os << "]";
  return os.str();
}

// Runs fn on each basis index; the first failure becomes the counterexample.
CheckResult sweep(const std::string& tangle, Color c, std::size_t count,
                  const std::function<std::string(std::size_t)>& fn) {
  CheckResult r{tangle, c.str(), count, true, {}};
  for (std::size_t i = 0; i < count && r.passed; ++i) {
    std::string err;
    try {
      err = fn(i);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      r.passed = false;
      r.counterexample = err;
    }
  }
  return r;
}

std::string compare(const PAElement& via_q, const PAElement& via_p, const std::string& what) {
  if (via_q == via_p) return {};
  return what + ": phi(Z^Q) = " + describe(via_q) + " but Z^P(phi) = " + describe(via_p);
}

}  // namespace

std::vector<CheckResult> verify_morphism(const PairContext& ctx, int depth, int jobs) {
  if (depth < 1) throw Error("depth must be >= 1");
  const auto& P = ctx.loops();
  const auto& Q = ctx.matrices();
  auto colours = colours_up_to(depth);
  auto dim = [&](Color c) { return ctx.commutant_basis(c).size(); };
  auto basis = [&](Color c, std::size_t o) { return ctx.commutant_element(c, o); };
  auto name = [](Color c, std::size_t o) { return "basis " + c.str() + "#" + std::to_string(o); };

  // warm the caches so worker threads only read
  for (Color c : colours) {
    ctx.phi_matrix(c);
    ctx.commutant_basis(c);
  }

  std::vector<std::function<CheckResult()>> tasks;
  for (Color c : colours) {
    tasks.push_back([&, c] {
      return sweep("unit", c, 1, [&](std::size_t) {
        return compare(ctx.phi(Q.unit(c)), P.unit(c), "unit");
      });
    });
    tasks.push_back([&, c] {
      return sweep("star", c, dim(c), [&](std::size_t o) {
        auto b = basis(c, o);
        return compare(ctx.phi(Q.star(b)), P.star(ctx.phi(b)), name(c, o));
      });
    });
    tasks.push_back([&, c] {
      return sweep("trace", c, dim(c), [&](std::size_t o) -> std::string {
        auto b = basis(c, o);
        Scalar q = Q.trace(b), p = P.trace(ctx.phi(b));
        if (q == p) return {};
        return name(c, o) + ": tr_Q = " + q.to_string() + ", tr_P = " + p.to_string();
      });
    });
    tasks.push_back([&, c] {
      std::size_t d = dim(c);
      return sweep("multiply", c, d * d, [&, d](std::size_t idx) {
        auto a = basis(c, idx / d), b = basis(c, idx % d);
        return compare(ctx.phi(Q.multiply(a, b)), P.multiply(ctx.phi(a), ctx.phi(b)),
                       name(c, idx / d) + " * " + name(c, idx % d));
      });
    });
    if (c.k < depth) {
      tasks.push_back([&, c] {
        return sweep("include", c, dim(c), [&](std::size_t o) {
          auto b = basis(c, o);
          return compare(ctx.phi(Q.include(b)), P.include(ctx.phi(b)), name(c, o));
        });
      });
    }
    if (c.k >= 1) {
      tasks.push_back([&, c] {
        return sweep("condE", c, dim(c), [&](std::size_t o) {
          auto b = basis(c, o);
          return compare(ctx.phi(Q.cond_E(b)), P.cond_E(ctx.phi(b)), name(c, o));
        });
      });
      tasks.push_back([&, c] {
        return sweep("condE1", c, dim(c), [&](std::size_t o) {
          auto b = basis(c, o);
          return compare(ctx.phi(Q.cond_Eprime(b)), P.cond_Eprime(ctx.phi(b)), name(c, o));
        });
      });
    }
    if (c.k == 1) {
      tasks.push_back([&, c] {
        return sweep("condEm", c, dim(c), [&](std::size_t o) {
          auto b = basis(c, o);
          return compare(ctx.phi(Q.cond_E_minus(b)), P.cond_E_minus(ctx.phi(b)), name(c, o));
        });
      });
    }
    if (c.k >= 2) {
      tasks.push_back([&, c] {
        return sweep("jones", c, 1, [&](std::size_t) {
          return compare(ctx.phi(Q.jones(c)), P.jones(c), "jones(" + c.str() + ")");
        });
      });
    }
  }
  std::vector<CheckResult> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { results[i] = tasks[i](); });
  return results;
}

// ---- sandwich ----

std::vector<CheckResult> sandwich_check(const PairContext& ctx, int depth) {
  int n = ctx.n();
  auto sym = std::make_shared<FiniteGroup>(
      FiniteGroup::generate(builtin_generators("S" + std::to_string(n))));
  SpinGraph sg = ctx.loops().spin_graph();
  sg.action.group = sym;
  sg.action.vertex_maps.clear();
  sg.action.edge_maps.clear();
  for (const auto& p : sym->elements()) {
    std::vector<int> vm(static_cast<std::size_t>(n + 1)), em(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vm[i] = em[i] = p.extended(static_cast<std::size_t>(n))(i);
    vm[n] = n;
    sg.action.vertex_maps.push_back(std::move(vm));
    sg.action.edge_maps.push_back(std::move(em));
  }
  auto pa = std::make_shared<GraphPlanarAlgebra>(sg, ctx.delta());
  InvariantContext full(pa);
  const auto& mid = ctx.invariants();

  std::vector<CheckResult> out;
  for (Color c : colours_up_to(depth)) {
    const auto& small = full.basis(c);
    const auto& middle = mid.basis(c);
    out.push_back(sweep("sandwich:Sn-in-G", c, small.size(), [&](std::size_t o) -> std::string {
      if (mid.is_invariant(small.elements[o])) return {};
      return "S_n orbit sum " + std::to_string(o) + " is not G-invariant";
    }));
    out.push_back(sweep("sandwich:G-in-P", c, middle.size(), [&](std::size_t o) -> std::string {
      for (const auto& [l, s] : middle.elements[o].terms())
        if (!ctx.loops().is_loop(c, l)) return "G orbit sum " + std::to_string(o) + " has a non-loop";
      return {};
    }));
    std::size_t total = ctx.loops().loops(c).size();
    out.push_back(sweep("sandwich:dims", c, 1, [&](std::size_t) -> std::string {
      if (small.size() <= middle.size() && middle.size() <= total) return {};
      return "dims " + std::to_string(small.size()) + ", " + std::to_string(middle.size()) + ", " +
             std::to_string(total) + " are not monotone";
    }));
  }
  return out;
}

// ---- flip duality ----

std::vector<CheckResult> flip_duality_check(const PairContext& ctx, int depth) {
  const auto& P = ctx.loops();
  auto fpa = std::make_shared<GraphPlanarAlgebra>(flip(P.spin_graph()));
  InvariantContext finv(fpa);
  const auto& inv = ctx.invariants();
  std::vector<CheckResult> out;
  for (Color c : colours_up_to(depth)) {
    Color fc = c.is_zero() ? Color{0, !c.minus} : c;
    const auto& ls = P.loops(c);
    out.push_back(sweep("flip:bijection", c, 1, [&](std::size_t) -> std::string {
      std::set<Loop> images;
      for (const auto& l : ls) {
        PAElement y = flip_dual_map(P, *fpa, PAElement(c, l));
        if (y.size() != 1) return "image of a basis loop is not a single loop";
        const Loop& m = y.terms().begin()->first;
        if (!fpa->is_loop(fc, m)) return "image is not a loop of the flipped graph";
        images.insert(m);
      }
      if (images.size() != ls.size() || images.size() != fpa->loops(fc).size())
        return "loop counts differ: " + std::to_string(ls.size()) + " vs " +
               std::to_string(fpa->loops(fc).size());
      return {};
    }));
    out.push_back(sweep("flip:equivariance", c, ls.size(), [&](std::size_t i) -> std::string {
      PAElement x(c, ls[i]);
      for (std::size_t g = 0; g < inv.group().order(); ++g) {
        int gi = static_cast<int>(g);
        if (flip_dual_map(P, *fpa, inv.act(gi, x)) != finv.act(gi, flip_dual_map(P, *fpa, x)))
          return "g = " + inv.group().element(gi).to_cycle_string() + " breaks equivariance";
      }
      return {};
    }));
    out.push_back(sweep("flip:dims", c, 1, [&](std::size_t) -> std::string {
      std::size_t a = inv.basis(c).size(), b = finv.basis(fc).size();
      if (a == b) return {};
      return "dim " + std::to_string(a) + " vs flipped " + std::to_string(b);
    }));
  }
  return out;
}

}  // namespace pln
