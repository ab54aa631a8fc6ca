#pragma once

#include "pln/group_algebra.hpp"

#include <memory>
#include <vector>

namespace pln {

enum class Flavor { n_prime, m_prime };

// Orbit-sum basis of a relative commutant: element b_O = sum_{k in K} k[i,j]
// over the acting group K (H for N', G for M'), with multiplicity.
template <typename T>
struct CommutantBasis {
  int level = 0;
  Parity parity = Parity::ev;
  Flavor flavor = Flavor::n_prime;
  std::vector<std::pair<Tuple, Tuple>> reps;
  std::vector<std::size_t> stabilizer;
  std::vector<GroupAlgebraMatrix<T>> elements;
  std::size_t burnside = 0;

  std::size_t size() const { return reps.size(); }
};

// Operator-matrix model of the tower N = R x| H in M = R x| G: level k with
// parity od is M_{I^k}(N), parity ev is M_{I^k}(M). New indices are leading.
template <typename T>
class SubfactorModel {
 public:
  using Matrix = GroupAlgebraMatrix<T>;
  using Elem = GroupAlgElem<T>;

  explicit SubfactorModel(std::shared_ptr<const CosetSpace> cs) : cs_(std::move(cs)) {}

  const CosetSpace& cosets() const { return *cs_; }
  const FiniteGroup& group() const { return cs_->group(); }
  int n() const { return cs_->n(); }

  Matrix zero(int level, Parity p) const {
    Matrix m;
    m.level = level;
    m.parity = p;
    return m;
  }
  Matrix identity(int level, Parity p) const {
    Matrix m = zero(level, p);
    for (std::int64_t i = 0; i < cs_->power(level); ++i) m.add(i, i, Elem::unit(group().identity()));
    return m;
  }

  Matrix basis_ev(const Tuple& i, const Tuple& j) const {
    Matrix m = zero(static_cast<int>(i.size()), Parity::ev);
    m.add(cs_->flat(i), cs_->flat(j), Elem::unit(cs_->label(i, j)));
    return m;
  }
  Matrix basis_od(const Tuple& i, const Tuple& j) const {
    Matrix m = zero(static_cast<int>(i.size()), Parity::od);
    int g = cs_->label(i, j);
    if (cs_->in_subgroup(g)) m.add(cs_->flat(i), cs_->flat(j), Elem::unit(g));
    return m;
  }

  Matrix add(Matrix a, const Matrix& b) const {
    check_same(a, b, "add");
    for (const auto& [ix, x] : b.entries) a.add(ix.first, ix.second, x);
    return a;
  }
  Matrix scale(const Matrix& a, const T& s) const {
    Matrix m = zero(a.level, a.parity);
    if (s == T(0)) return m;
    for (const auto& [ix, x] : a.entries) m.entries.emplace(ix, x.scaled(s));
    return m;
  }

  Matrix matmul(const Matrix& a, const Matrix& b) const {
    check_same(a, b, "matmul");
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, const Elem*>>> rows;
    for (const auto& [ix, y] : b.entries) rows[ix.first].emplace_back(ix.second, &y);
    Matrix m = zero(a.level, a.parity);
    for (const auto& [ix, x] : a.entries) {
      auto it = rows.find(ix.second);
      if (it == rows.end()) continue;
      for (auto [col, y] : it->second) m.add(ix.first, col, x.mul(group(), *y));
    }
    return m;
  }
  Matrix adjoint(const Matrix& a) const {
    Matrix m = zero(a.level, a.parity);
    for (const auto& [ix, x] : a.entries) m.entries.emplace(std::make_pair(ix.second, ix.first), x.star(group()));
    return m;
  }

  // theta_{ij}(u_g) = 1_H(g_i g g_j^-1) u_{g_i g g_j^-1}
  Elem theta_entry(int i, int j, const Elem& x) const {
    const auto& G = group();
    Elem out;
    for (const auto& [g, c] : x.terms()) {
      int y = G.mul(G.mul(cs_->rep(i), g), G.inv(cs_->rep(j)));
      if (cs_->in_subgroup(y)) out.add(y, c);
    }
    return out;
  }
  Matrix theta(const Elem& x) const {
    Matrix m = zero(1, Parity::od);
    for (int i = 1; i <= n(); ++i)
      for (int j = 1; j <= n(); ++j) m.add(i - 1, j - 1, theta_entry(i, j, x));
    return m;
  }
  // Theta: (k, ev) -> (k+1, od), Theta(A)_{(r,u),(s,v)} = theta_{rs}(A_{u,v}).
  Matrix theta_inclusion(const Matrix& a) const {
    require(a, Parity::ev, "Theta");
    Matrix m = zero(a.level + 1, Parity::od);
    std::int64_t block = cs_->power(a.level);
    for (const auto& [ix, x] : a.entries)
      for (int r = 1; r <= n(); ++r)
        for (int s = 1; s <= n(); ++s)
          m.add((r - 1) * block + ix.first, (s - 1) * block + ix.second, theta_entry(r, s, x));
    return m;
  }
  // M_{I^k}(N) inside M_{I^k}(M)
  Matrix od_to_ev(const Matrix& a) const {
    require(a, Parity::od, "od_to_ev");
    Matrix m = a;
    m.parity = Parity::ev;
    return m;
  }

  // theta^(k)(u_g): entry u_{(prod g_beta(j)) g (prod g_j)^-1} at (beta_g(j), j).
  Matrix theta_k(int g, int level, Parity p) const {
    const auto& G = group();
    Matrix m = zero(level, p);
    for (std::int64_t jf = 0; jf < cs_->power(level); ++jf) {
      Tuple j = cs_->unflat(jf, level);
      Tuple i = cs_->beta_k(g, j);
      int x = G.mul(G.mul(cs_->product(i), g), G.inv(cs_->product(j)));
      m.add(cs_->flat(i), jf, Elem::unit(x));
    }
    return m;
  }

  // e_{2k-1} at (k, od) and e_{2k} at (k, ev).
  Matrix jones_projection(int m) const {
    if (m < 1) throw Error("Jones projection index must be >= 1");
    int k = (m + 1) / 2;
    std::int64_t block = cs_->power(k - 1);
    if (m % 2 == 1) {
      Matrix out = zero(k, Parity::od);
      for (std::int64_t rest = 0; rest < block; ++rest) out.add(rest, rest, Elem::unit(group().identity()));
      return out;
    }
    Matrix out = zero(k, Parity::ev);
    T inv_n = T(1) / T(n());
    for (int r = 1; r <= n(); ++r)
      for (int s = 1; s <= n(); ++s)
        for (std::int64_t rest = 0; rest < block; ++rest) {
          Tuple i = cs_->unflat((r - 1) * block + rest, k);
          Tuple j = cs_->unflat((s - 1) * block + rest, k);
          out.add(cs_->flat(i), cs_->flat(j), Elem::unit(cs_->label(i, j), inv_n));
        }
    return out;
  }

  // E_N entrywise: (k, ev) -> (k, od)
  Matrix cond_exp_EN(const Matrix& a) const {
    require(a, Parity::ev, "E_N");
    Matrix m = zero(a.level, Parity::od);
    for (const auto& [ix, x] : a.entries) m.add(ix.first, ix.second, x.restrict_to(*cs_));
    return m;
  }
  // E_M blockwise: (k+1, od) -> (k, ev),
  // E(A)_{u,v} = sum_{r,s} n^-1 u_{g_r^-1} A_{(r,u),(s,v)} u_{g_s}
  Matrix cond_exp_EM(const Matrix& a) const {
    require(a, Parity::od, "E_M");
    if (a.level < 1) throw Error("E_M needs level >= 1");
    const auto& G = group();
    Matrix m = zero(a.level - 1, Parity::ev);
    std::int64_t block = cs_->power(a.level - 1);
    T inv_n = T(1) / T(n());
    for (const auto& [ix, x] : a.entries) {
      int r = static_cast<int>(ix.first / block) + 1, s = static_cast<int>(ix.second / block) + 1;
      Elem left = Elem::unit(G.inv(cs_->rep(r)), inv_n);
      Elem right = Elem::unit(cs_->rep(s));
      m.add(ix.first % block, ix.second % block, left.mul(G, x).mul(G, right));
    }
    return m;
  }
  // E onto M' cap M_k: average of conjugation by theta^(k)(u_g) over G.
  Matrix cond_exp_Mprime(const Matrix& a) const {
    Matrix m = zero(a.level, a.parity);
    for (std::size_t g = 0; g < group().order(); ++g) {
      Matrix t = theta_k(static_cast<int>(g), a.level, a.parity);
      m = add(m, matmul(matmul(t, a), adjoint(t)));
    }
    return scale(m, T(1) / T(static_cast<long>(group().order())));
  }

  // n^{-k} sum_i coefficient of u_e in A_{ii}
  T trace(const Matrix& a) const {
    T s(0);
    for (std::int64_t i = 0; i < cs_->power(a.level); ++i) s = s + a.at(i, i).coeff(group().identity());
    return s / T(static_cast<long>(cs_->power(a.level)));
  }

  bool commutes(const Matrix& a, const Matrix& b) const { return matmul(a, b) == matmul(b, a); }

  // Entries are scalar multiples of u_{label(i,j)}, od entries vanish off Y_k,
  // and the scalars are constant on orbits of the acting group.
  bool is_relative_commutant(const Matrix& a, Flavor f) const {
    const auto& G = group();
    for (const auto& [ix, x] : a.entries) {
      Tuple i = cs_->unflat(ix.first, a.level), j = cs_->unflat(ix.second, a.level);
      int g = cs_->label(i, j);
      if (x.terms().size() != 1 || x.terms().begin()->first != g) return false;
      if (a.parity == Parity::od && !cs_->in_subgroup(g)) return false;
    }
    std::vector<int> acting = f == Flavor::n_prime ? cs_->subgroup() : all_elements();
    for (const auto& [ix, x] : a.entries) {
      Tuple i = cs_->unflat(ix.first, a.level), j = cs_->unflat(ix.second, a.level);
      T c = x.terms().begin()->second;
      for (int h : acting) {
        Tuple hi = cs_->beta_k(h, i), hj = cs_->beta_k(h, j);
        if (a.at(cs_->flat(hi), cs_->flat(hj)).coeff(cs_->label(hi, hj)) != c) return false;
      }
    }
    (void)G;
    return true;
  }

  // Orbit-sum basis of N' cap M_m (flavor n_prime) or M' cap M_m (m_prime)
  // at the given level and parity.
  CommutantBasis<T> relative_commutant_basis(int level, Parity p, Flavor f) const {
    std::vector<int> acting = f == Flavor::n_prime ? cs_->subgroup() : all_elements();
    std::int64_t side = cs_->power(level);
    ActionFn act = [&](int g, std::int64_t x) {
      Tuple i = cs_->unflat(x / side, level), j = cs_->unflat(x % side, level);
      return cs_->flat(cs_->beta_k(g, i)) * side + cs_->flat(cs_->beta_k(g, j));
    };
    // Y_k is beta-invariant, so restricting the partition to it is sound
    auto part = orbits(acting, side * side, act);
    CommutantBasis<T> b;
    b.level = level;
    b.parity = p;
    b.flavor = f;
    b.burnside = 0;
    for (std::size_t o = 0; o < part.count(); ++o) {
      Tuple i = cs_->unflat(part.reps[o] / side, level), j = cs_->unflat(part.reps[o] % side, level);
      if (p == Parity::od && !cs_->in_y(i, j)) continue;
      Matrix m = zero(level, p);
      for (int h : acting) {
        Tuple hi = cs_->beta_k(h, i), hj = cs_->beta_k(h, j);
        m.add(cs_->flat(hi), cs_->flat(hj), Elem::unit(cs_->label(hi, hj)));
      }
      b.reps.emplace_back(i, j);
      b.stabilizer.push_back(isotropy(acting, part.reps[o], act).size());
      b.elements.push_back(std::move(m));
    }
    // independent count of the orbits that survive the parity restriction
    std::size_t fixed = 0;
    for (int h : acting)
      for (std::int64_t x = 0; x < side * side; ++x) {
        if (act(h, x) != x) continue;
        if (p == Parity::od && !cs_->in_y(cs_->unflat(x / side, level), cs_->unflat(x % side, level)))
          continue;
        ++fixed;
      }
    b.burnside = fixed / acting.size();
    return b;
  }

 private:
  std::vector<int> all_elements() const {
    std::vector<int> v(group().order());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
  }
  static void check_same(const Matrix& a, const Matrix& b, const char* op) {
    if (a.level != b.level)
      throw ColorMismatch(std::string(op) + ": level " + std::to_string(a.level) + " vs " +
                          std::to_string(b.level));
  }
  static void require(const Matrix& a, Parity p, const char* op) {
    if (a.parity != p)
      throw ColorMismatch(std::string(op) + " expects parity " + parity_name(p) + ", got " +
                          parity_name(a.parity));
  }

  std::shared_ptr<const CosetSpace> cs_;
};

}  // namespace pln
