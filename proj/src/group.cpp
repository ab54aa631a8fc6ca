#include "pln/group.hpp"

#include "pln/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace pln {

std::size_t default_max_group_order() {
  if (const char* env = std::getenv("PLN_MAX_GROUP_ORDER")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(std::string("invalid PLN_MAX_GROUP_ORDER '") + env + "'");
  }
  return 10000;
}

FiniteGroup FiniteGroup::generate(const std::vector<Permutation>& generators,
                                  std::size_t max_order) {
  FiniteGroup g;
  for (const auto& p : generators) g.degree_ = std::max(g.degree_, p.degree());
  std::vector<Permutation> gens;
  for (const auto& p : generators) gens.push_back(p.extended(g.degree_));

  std::unordered_map<Permutation, int, PermutationHash> seen;
  std::vector<Permutation> found{Permutation(g.degree_)};
  seen.emplace(found[0], 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = found[head] * s;
      if (seen.count(next)) continue;
      if (found.size() >= max_order)
        throw GroupTooLarge("group too large: order exceeds " + std::to_string(max_order));
      seen.emplace(next, static_cast<int>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  g.elements_ = std::move(found);
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    g.index_.emplace(g.elements_[i], static_cast<int>(i));

  std::size_t n = g.elements_.size();
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverse_[i] = g.index_.at(g.elements_[i].inverse());
  if (n * n <= (std::size_t{1} << 24)) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = g.index_.at(g.elements_[a] * g.elements_[b]);
  }
  return g;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

int FiniteGroup::index_of(const Permutation& p) const {
  Permutation q = p.extended(degree_);
  if (q.degree() > degree_) {
    // points beyond the ground set must be fixed
    for (std::size_t i = degree_; i < q.degree(); ++i)
      if (q(static_cast<int>(i)) != static_cast<int>(i)) return -1;
    q = Permutation(std::vector<int>(q.images().begin(), q.images().begin() + degree_));
  }
  auto it = index_.find(q);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FiniteGroup::closure_of(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> out{identity()};
  in[identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s : gens) {
      int x = mul(out[head], s);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g,
                                              const std::vector<int>& subgroup) {
  std::vector<char> in_h(g.order(), 0);
  for (int h : subgroup) in_h[h] = 1;
  std::vector<char> done(g.order(), 0);
  std::vector<ConjugacyClass> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ConjugacyClass c;
    for (std::size_t y = 0; y < g.order(); ++y) {
      int z = g.mul(g.mul(static_cast<int>(y), static_cast<int>(x)), g.inv(static_cast<int>(y)));
      if (!done[z]) {
        done[z] = 1;
        c.elements.push_back(z);
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    for (int e : c.elements) c.meet_subgroup += in_h[e];
    classes.push_back(std::move(c));
  }
  return classes;
}

OrbitPartition orbits(const std::vector<int>& acting, std::int64_t domain_size,
                      const ActionFn& act) {
  OrbitPartition p;
  p.orbit_of.assign(static_cast<std::size_t>(domain_size), -1);
  for (std::int64_t x = 0; x < domain_size; ++x) {
    if (p.orbit_of[x] >= 0) continue;
    int id = static_cast<int>(p.reps.size());
    p.reps.push_back(x);
    std::vector<std::int64_t> mem;
    for (int g : acting) {
      std::int64_t y = act(g, x);
      if (y < 0 || y >= domain_size) throw Error("domain is not closed under the action");
      if (p.orbit_of[y] < 0) {
        p.orbit_of[y] = id;
        mem.push_back(y);
      } else if (p.orbit_of[y] != id) {
        throw Error("acting set is not a group: orbits overlap");
      }
    }
    std::sort(mem.begin(), mem.end());
    p.members.push_back(std::move(mem));
  }
  p.burnside = burnside_count(acting, domain_size, act);
  return p;
}

std::vector<int> isotropy(const std::vector<int>& acting, std::int64_t x, const ActionFn& act) {
  std::vector<int> out;
  for (int g : acting)
    if (act(g, x) == x) out.push_back(g);
  return out;
}

std::size_t burnside_count(const std::vector<int>& acting, std::int64_t domain_size,
                           const ActionFn& act) {
  std::size_t fixed = 0;
  for (int g : acting)
    for (std::int64_t x = 0; x < domain_size; ++x)
      if (act(g, x) == x) ++fixed;
  if (acting.empty() || fixed % acting.size() != 0)
    throw Error("Burnside average is not an integer");
  return fixed / acting.size();
}

CosetSpace::CosetSpace(std::shared_ptr<const FiniteGroup> group, std::vector<int> subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  const auto& g = *group_;
  std::sort(subgroup_.begin(), subgroup_.end());
  subgroup_.erase(std::unique(subgroup_.begin(), subgroup_.end()), subgroup_.end());
  in_h_.assign(g.order(), 0);
  for (int h : subgroup_) {
    if (h < 0 || static_cast<std::size_t>(h) >= g.order()) throw NotASubgroup("bad element index");
    in_h_[h] = 1;
  }
  if (subgroup_.empty() || !in_h_[g.identity()]) throw NotASubgroup("subgroup lacks the identity");
  for (int a : subgroup_)
    for (int b : subgroup_)
      if (!in_h_[g.mul(a, g.inv(b))]) throw NotASubgroup("subset is not closed under a*b^-1");

  coset_of_.assign(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of_[x] != 0) continue;
    reps_.push_back(static_cast<int>(x));
    int idx = static_cast<int>(reps_.size());
    for (int h : subgroup_) coset_of_[g.mul(h, static_cast<int>(x))] = idx;
  }
  beta1_.resize(g.order() * reps_.size());
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t i = 0; i < reps_.size(); ++i)
      beta1_[e * reps_.size() + i] = coset_of_[g.mul(reps_[i], g.inv(static_cast<int>(e)))];
}

int CosetSpace::beta1(int g, int i) const {
  return beta1_[static_cast<std::size_t>(g) * reps_.size() + (i - 1)];
}

int CosetSpace::product(const Tuple& t, std::size_t from) const {
  int p = group_->identity();
  for (std::size_t l = from; l < t.size(); ++l) p = group_->mul(p, rep(t[l]));
  return p;
}

int CosetSpace::product(const Tuple& t) const { return product(t, 0); }

Tuple CosetSpace::beta_k(int g, const Tuple& t) const {
  const auto& G = *group_;
  std::size_t k = t.size();
  Tuple out(k);
  // suffix cosets of t, moved by g
  std::vector<int> target(k);
  int suffix = G.identity();
  for (std::size_t l = k; l-- > 0;) {
    suffix = G.mul(rep(t[l]), suffix);
    target[l] = beta1(g, coset_of_[suffix]);
  }
  int tail = G.identity();  // g_{i_{l+1}} ... g_{i_k}
  for (std::size_t l = k; l-- > 0;) {
    out[l] = coset_of_[G.mul(rep(target[l]), G.inv(tail))];
    tail = G.mul(rep(out[l]), tail);
  }
  return out;
}

int CosetSpace::label(const Tuple& i, const Tuple& j) const {
  return group_->mul(product(i), group_->inv(product(j)));
}

bool CosetSpace::in_y(const Tuple& i, const Tuple& j) const {
  return coset_of_[product(i)] == coset_of_[product(j)];
}

std::vector<std::pair<Tuple, Tuple>> CosetSpace::y_k(int k) const {
  std::vector<std::pair<Tuple, Tuple>> out;
  std::int64_t m = power(k);
  for (std::int64_t a = 0; a < m; ++a) {
    Tuple i = unflat(a, k);
    for (std::int64_t b = 0; b < m; ++b) {
      Tuple j = unflat(b, k);
      if (in_y(i, j)) out.emplace_back(i, std::move(j));
    }
  }
  return out;
}

std::int64_t CosetSpace::flat(const Tuple& t) const {
  std::int64_t idx = 0;
  for (int v : t) idx = idx * n() + (v - 1);
  return idx;
}

Tuple CosetSpace::unflat(std::int64_t idx, int k) const {
  Tuple t(static_cast<std::size_t>(k));
  for (int l = k; l-- > 0;) {
    t[l] = static_cast<int>(idx % n()) + 1;
    idx /= n();
  }
  return t;
}

std::int64_t CosetSpace::power(int k) const {
  std::int64_t p = 1;
  for (int l = 0; l < k; ++l) p *= n();
  return p;
}

}  // namespace pln
