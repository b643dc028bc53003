#include "fewpaths/spectral.hpp"

#include <stdexcept>

namespace fewpaths {

DenseMatrix adjacency_matrix(const DirectedGraph &g) {
  DenseMatrix a(g.size(), g.size());
  for (const auto &e : g.edges()) {
    a(e.from, e.to) = 1.0;
  }
  return a;
}

DenseMatrix counting_laplacian(const DirectedGraph &g) {
  DenseMatrix l = DenseMatrix::identity(g.size());
  for (const auto &e : g.edges()) {
    l(e.from, e.to) -= 1.0;
  }
  return l;
}

DenseMatrix hermitian_embedding(const DenseMatrix &m) {
  if (!m.is_square()) {
    throw std::invalid_argument("hermitian_embedding: matrix must be square");
  }
  const std::size_t n = m.rows();
  DenseMatrix h(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, n + j) = m(j, i);
      h(n + i, j) = m(i, j);
    }
  }
  return h;
}

NormBounds max_norm_bounds(const DenseMatrix &m) {
  if (!m.is_square()) {
    throw std::invalid_argument("max_norm_bounds: matrix must be square");
  }
  const double mx = m.max_abs();
  return {mx, static_cast<double>(m.rows()) * mx};
}

} // namespace fewpaths
