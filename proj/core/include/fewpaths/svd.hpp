#pragma once

#include <cstddef>
#include <vector>

#include "fewpaths/dense_matrix.hpp"

namespace fewpaths {

// M = U * diag(sigma) * V^T with sigma non-increasing. For an r x c input,
// k = min(r, c); U is r x k and V is c x k, both with orthonormal columns.
//
// Sign convention: the first component of each v_j whose magnitude exceeds
// 1e-12 is positive (u_j flipped along with it). Within a cluster of equal
// singular values the individual vectors are not unique; only the spanned
// subspace is.
struct SvdDecomposition {
  std::vector<double> sigma;
  DenseMatrix u;
  DenseMatrix v;
  std::size_t sweeps = 0;

  std::size_t size() const noexcept { return sigma.size(); }
  double sigma_max() const noexcept { return sigma.empty() ? 0.0 : sigma.front(); }
  double sigma_min() const noexcept { return sigma.empty() ? 0.0 : sigma.back(); }

  DenseMatrix reconstruct() const;
};

struct SvdOptions {
  // A pair of columns counts as orthogonal once
  // |<w_p, w_q>| <= tolerance * |w_p| |w_q|. Zero means rows * epsilon.
  double tolerance = 0.0;
  std::size_t max_sweeps = 100;
};

// One-sided (Hestenes) Jacobi SVD with a fixed cyclic pair order, so the
// output bits depend only on the input bits. Throws NumericalFailure if a
// sweep still rotates after max_sweeps sweeps, or on non-finite input.
SvdDecomposition svd(const DenseMatrix &m, const SvdOptions &options = {});

} // namespace fewpaths
