#pragma once

#include "cfhankel/eigen_support.hpp"
#include "cfhankel/error.hpp"
#include "cfhankel/ring.hpp"

#include <cstddef>
#include <future>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfh {

/// (n+1)x(n+1) matrix with entry (i, j) = seq[i + j].
template <ExactRing T>
DenseMatrix<T> hankel_matrix(std::span<const T> seq, std::size_t n) {
  if (seq.size() < 2 * n + 1)
    throw Error(Errc::InsufficientTerms,
                "order " + std::to_string(n) + " needs " + std::to_string(2 * n + 1) + " terms, got " + std::to_string(seq.size()));
  const auto dim = static_cast<Eigen::Index>(n + 1);
  DenseMatrix<T> h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) h(i, j) = seq[static_cast<std::size_t>(i + j)];
  return h;
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact
/// in an integral domain; an inexact one means the ring arithmetic is broken
/// and raises std::logic_error. A zero pivot is replaced by the first nonzero
/// entry below it in the same column (flipping the sign); an all-zero column
/// gives determinant zero.
template <ExactRing T>
T bareiss_determinant(DenseMatrix<T> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return T(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const T cross = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = try_divide(cross, prev);
        if (!q) throw std::logic_error("bareiss_determinant: inexact division " + to_string(cross) + " / " + to_string(prev));
        m(i, j) = *std::move(q);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

template <ExactRing T>
T hankel_det(std::span<const T> seq, std::size_t n) {
  return bareiss_determinant<T>(hankel_matrix(seq, n));
}

/// (h_0, ..., h_maxN). Orders are evaluated concurrently; the result order is
/// fixed by index.
template <ExactRing T>
std::vector<T> hankel_transform(std::span<const T> seq, std::size_t max_n) {
  if (seq.size() < 2 * max_n + 1)
    throw Error(Errc::InsufficientTerms,
                "transform to order " + std::to_string(max_n) + " needs " + std::to_string(2 * max_n + 1) + " terms, got " + std::to_string(seq.size()));
  std::vector<std::future<T>> jobs;
  jobs.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n)
    jobs.push_back(std::async(std::launch::async, [seq, n] { return hankel_det(seq, n); }));
  std::vector<T> h;
  h.reserve(max_n + 1);
  for (auto& job : jobs) h.push_back(job.get());
  return h;
}

template <ExactRing T>
std::vector<T> hankel_transform(const std::vector<T>& seq, std::size_t max_n) {
  return hankel_transform(std::span<const T>(seq), max_n);
}

template <ExactRing T>
T hankel_det(const std::vector<T>& seq, std::size_t n) {
  return hankel_det(std::span<const T>(seq), n);
}

}  // namespace cfh
