#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "entroscope/automaton.hpp"

namespace entroscope {

template <typename Scalar = double>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

/// g(i, j) = number of labels carrying state i to state j. The order is the
/// state count, so the empty-language automaton yields the 1x1 zero matrix.
template <typename Scalar = double>
SparseMatrix<Scalar> adjacency_matrix(const Dfa& d) {
  const auto n = static_cast<Eigen::Index>(d.state_count());
  std::vector<Eigen::Triplet<Scalar>> entries;
  entries.reserve(d.transitions().size());
  for (const Transition& t : d.transitions())
    entries.emplace_back(static_cast<Eigen::Index>(t.from), static_cast<Eigen::Index>(t.to), Scalar{1});
  SparseMatrix<Scalar> g(n, n);
  g.setFromTriplets(entries.begin(), entries.end());  // duplicates are summed
  return g;
}

struct SolverOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 300'000;
};

template <typename Scalar>
struct EigenResult {
  Scalar value{0};
  std::size_t iterations = 0;
  bool converged = false;
  /// Width of the final eigenvalue bracket relative to (1 + upper bound).
  Scalar residual = std::numeric_limits<Scalar>::infinity();
};

namespace detail {

/// Strongly connected components of the graph with `successors[i]` as the
/// out-neighbours of vertex i.
std::vector<std::vector<Eigen::Index>> strongly_connected_components(
    const std::vector<std::vector<Eigen::Index>>& successors);

// Power iteration on (M + I) for an irreducible M. The identity shift makes
// M + I primitive, so periodic matrices (cycles) converge too. The iterate
// stays strictly positive, and min and max of (M x)_i / x_i bracket the
// spectral radius (Collatz-Wielandt); the loop stops once the bracket is
// narrow enough.
template <typename Scalar>
EigenResult<Scalar> irreducible_power_iteration(const SparseMatrix<Scalar>& m, SolverOptions options) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const auto tol = static_cast<Scalar>(options.tolerance);
  EigenResult<Scalar> result;
  Vector x = Vector::Ones(m.rows());
  Vector mx(m.rows());
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    mx.noalias() = m * x;
    const Vector ratio = mx.cwiseQuotient(x);
    const Scalar hi = ratio.maxCoeff();
    result.value = mx.sum() / x.sum();
    result.iterations = it;
    result.residual = (hi - ratio.minCoeff()) / (hi + Scalar{1});
    if (result.residual <= tol) {
      result.converged = true;
      break;
    }
    x += mx;
    x /= x.maxCoeff();
  }
  return result;
}

// The spectrum of a reducible matrix is the union of the spectra of its
// irreducible diagonal blocks, so each strongly connected component is
// solved on its own and the largest value wins.
template <typename Scalar>
EigenResult<Scalar> spectral_radius(const SparseMatrix<Scalar>& m, SolverOptions options) {
  const Eigen::Index n = m.rows();
  std::vector<std::vector<Eigen::Index>> successors(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (typename SparseMatrix<Scalar>::InnerIterator it(m, i); it; ++it)
      if (it.value() != Scalar{0}) successors[static_cast<std::size_t>(i)].push_back(it.col());
  const auto components = strongly_connected_components(successors);
  if (components.size() == 1) return irreducible_power_iteration(m, options);

  EigenResult<Scalar> result;
  result.converged = true;
  result.residual = Scalar{0};
  std::vector<Eigen::Index> local(static_cast<std::size_t>(n), -1);
  for (const auto& component : components) {
    const auto k = static_cast<Eigen::Index>(component.size());
    for (Eigen::Index i = 0; i < k; ++i) local[static_cast<std::size_t>(component[i])] = i;
    std::vector<Eigen::Triplet<Scalar>> entries;
    for (Eigen::Index from : component)
      for (typename SparseMatrix<Scalar>::InnerIterator it(m, from); it; ++it)
        if (it.value() != Scalar{0} && local[static_cast<std::size_t>(it.col())] >= 0)
          entries.emplace_back(local[static_cast<std::size_t>(from)],
                               local[static_cast<std::size_t>(it.col())], it.value());
    for (Eigen::Index from : component) local[static_cast<std::size_t>(from)] = -1;
    if (entries.empty()) continue;  // single vertex without a loop
    SparseMatrix<Scalar> block(k, k);
    block.setFromTriplets(entries.begin(), entries.end());
    const EigenResult<Scalar> r = irreducible_power_iteration(block, options);
    result.iterations += r.iterations;
    result.converged = result.converged && r.converged;
    result.residual = std::max(result.residual, r.residual);
    result.value = std::max(result.value, r.value);
  }
  return result;
}

}  // namespace detail

/// Spectral radius of a non-negative square matrix. Non-convergence within
/// `max_iterations` is reported through `converged`, with the last estimate.
template <typename Derived>
EigenResult<typename Derived::Scalar> perron_frobenius(const Eigen::SparseMatrixBase<Derived>& m,
                                                       SolverOptions options = {}) {
  using Scalar = typename Derived::Scalar;
  return detail::spectral_radius<Scalar>(SparseMatrix<Scalar>(m.derived()), options);
}

template <typename Derived>
EigenResult<typename Derived::Scalar> perron_frobenius(const Eigen::MatrixBase<Derived>& m,
                                                       SolverOptions options = {}) {
  using Scalar = typename Derived::Scalar;
  return detail::spectral_radius<Scalar>(SparseMatrix<Scalar>(m.derived().sparseView()), options);
}

/// log2 of the Perron-Frobenius eigenvalue of an ergodic automaton.
/// Throws DomainError for non-ergodic input or an empty language.
double entropy(const Dfa& d, SolverOptions options = {});

}  // namespace entroscope
