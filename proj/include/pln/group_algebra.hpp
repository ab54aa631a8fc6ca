#pragma once

#include "pln/error.hpp"
#include "pln/group.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace pln {

// Finite formal combination sum_g c_g u_g over a group; zero terms are pruned.
template <typename T>
class GroupAlgElem {
 public:
  GroupAlgElem() = default;
  static GroupAlgElem unit(int g, const T& c = T(1)) {
    GroupAlgElem x;
    x.add(g, c);
    return x;
  }

  const std::map<int, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  T coeff(int g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add(int g, const T& c) {
    if (c == T(0)) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == T(0)) terms_.erase(it);
    }
  }
  GroupAlgElem& operator+=(const GroupAlgElem& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  GroupAlgElem scaled(const T& s) const {
    GroupAlgElem out;
    if (s == T(0)) return out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * s);
    return out;
  }

  GroupAlgElem mul(const FiniteGroup& G, const GroupAlgElem& o) const {
    GroupAlgElem out;
    for (const auto& [a, x] : terms_)
      for (const auto& [b, y] : o.terms_) out.add(G.mul(a, b), x * y);
    return out;
  }
  // u_g -> u_{g^-1}; coefficients are real
  GroupAlgElem star(const FiniteGroup& G) const {
    GroupAlgElem out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(G.inv(g), c);
    return out;
  }
  // Keep only the terms supported in H.
  GroupAlgElem restrict_to(const CosetSpace& cs) const {
    GroupAlgElem out;
    for (const auto& [g, c] : terms_)
      if (cs.in_subgroup(g)) out.terms_.emplace(g, c);
    return out;
  }
  bool supported_in(const CosetSpace& cs) const {
    for (const auto& [g, c] : terms_)
      if (!cs.in_subgroup(g)) return false;
    return true;
  }

  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, T> terms_;
};

enum class Parity { ev, od };

inline std::string parity_name(Parity p) { return p == Parity::ev ? "ev" : "od"; }

// Sparse matrix over I^k x I^k (flat tuple indices) with group-algebra entries.
// Parity od models M_{I^k}(N), parity ev models M_{I^k}(M).
template <typename T>
struct GroupAlgebraMatrix {
  using Index = std::pair<std::int64_t, std::int64_t>;

  int level = 0;
  Parity parity = Parity::ev;
  std::map<Index, GroupAlgElem<T>> entries;

  GroupAlgElem<T> at(std::int64_t r, std::int64_t c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? GroupAlgElem<T>() : it->second;
  }
  void add(std::int64_t r, std::int64_t c, const GroupAlgElem<T>& x) {
    if (x.is_zero()) return;
    auto& e = entries[{r, c}];
    e += x;
    if (e.is_zero()) entries.erase({r, c});
  }
  bool is_zero() const { return entries.empty(); }

  friend bool operator==(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
    return a.level == b.level && a.entries == b.entries;
  }
  friend bool operator!=(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
    return !(a == b);
  }
};

}  // namespace pln
