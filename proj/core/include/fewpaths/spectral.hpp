#pragma once

#include "fewpaths/dense_matrix.hpp"
#include "fewpaths/graph.hpp"

namespace fewpaths {

// 0/1 adjacency matrix A with A(i,j) = 1 iff i -> j.
DenseMatrix adjacency_matrix(const DirectedGraph &g);

// L = I - A. For an acyclic graph L is invertible and L^-1(i,j) = N(i,j).
DenseMatrix counting_laplacian(const DirectedGraph &g);

// The symmetric 2n x 2n block matrix [[0, M^T], [M, 0]]. Its eigenpairs are
// (+-sigma_j, (v_j, +-u_j)/sqrt(2)), so the top-right block of its
// pseudoinverse is M^+.
DenseMatrix hermitian_embedding(const DenseMatrix &m);

// Certified bounds on the spectral norm of a square n x n matrix:
// max|m_ij| <= sigma_1(m) <= n * max|m_ij|.
struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;
};

NormBounds max_norm_bounds(const DenseMatrix &m);

} // namespace fewpaths
