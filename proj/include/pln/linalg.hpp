#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace pln {

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

// Reduced row echelon form by exact Gauss-Jordan elimination. Returns pivot columns.
template <typename T>
std::vector<Eigen::Index> row_reduce(Mat<T>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    T inv = T(1) / m(row, col);
    for (Eigen::Index k = col; k < m.cols(); ++k) m(row, k) = m(row, k) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == T(0)) continue;
      T f = m(r, col);
      for (Eigen::Index k = col; k < m.cols(); ++k) m(r, k) = m(r, k) - f * m(row, k);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
Eigen::Index rank(Mat<T> m) {
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b) {
  Mat<T> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<T> x = Vec<T>::Constant(a.cols(), T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(r, a.cols());
  return x;
}

// Symmetric positive definiteness through the pivots of an unpivoted LDL^T.
template <typename T>
bool is_positive_definite(Mat<T> m) {
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if (!(m(k, k) > T(0))) return false;
    for (Eigen::Index r = k + 1; r < m.rows(); ++r) {
      if (m(r, k) == T(0)) continue;
      T f = m(r, k) / m(k, k);
      for (Eigen::Index c = k; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(k, c);
    }
  }
  return true;
}

}  // namespace pln
