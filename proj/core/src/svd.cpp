#include "fewpaths/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fewpaths/errors.hpp"

namespace fewpaths {

namespace {

// Column-major scratch matrix: column j occupies [j*rows, (j+1)*rows).
struct Columns {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  double *col(std::size_t j) { return data.data() + j * rows; }
  const double *col(std::size_t j) const { return data.data() + j * rows; }
};

double dot(const double *a, const double *b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

void rotate(double *p, double *q, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = p[i];
    const double y = q[i];
    p[i] = c * x - s * y;
    q[i] = s * x + c * y;
  }
}

// Singular values below this are treated as exact zeros whose left vectors
// must be completed to an orthonormal basis.
constexpr double kNullSigma = 1e-290;

// Extends the orthonormal columns of `u` at positions != `slot` with a unit
// vector orthogonal to all of them, written into column `slot`.
void complete_column(Columns &u, std::size_t slot, const std::vector<bool> &filled) {
  std::vector<double> cand(u.rows);
  for (std::size_t e = 0; e < u.rows; ++e) {
    std::fill(cand.begin(), cand.end(), 0.0);
    cand[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < u.cols; ++j) {
        if (!filled[j]) {
          continue;
        }
        const double proj = dot(u.col(j), cand.data(), u.rows);
        for (std::size_t i = 0; i < u.rows; ++i) {
          cand[i] -= proj * u.col(j)[i];
        }
      }
    }
    const double norm = std::sqrt(dot(cand.data(), cand.data(), u.rows));
    if (norm > 0.5) {
      for (std::size_t i = 0; i < u.rows; ++i) {
        u.col(slot)[i] = cand[i] / norm;
      }
      return;
    }
  }
  throw NumericalFailure("svd: could not complete the left singular basis");
}

SvdDecomposition jacobi_tall(const DenseMatrix &m, const SvdOptions &options) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const double tol = options.tolerance > 0.0
                         ? options.tolerance
                         : static_cast<double>(std::max<std::size_t>(rows, 1)) *
                               std::numeric_limits<double>::epsilon();

  Columns w{rows, cols, std::vector<double>(rows * cols)};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      w.col(c)[r] = m(r, c);
    }
  }
  Columns v{cols, cols, std::vector<double>(cols * cols, 0.0)};
  for (std::size_t j = 0; j < cols; ++j) {
    v.col(j)[j] = 1.0;
  }

  std::vector<double> norm2(cols);
  std::size_t sweep = 0;
  bool converged = cols < 2;
  while (!converged) {
    if (sweep == options.max_sweeps) {
      throw NumericalFailure("svd: no convergence after " + std::to_string(sweep) + " sweeps");
    }
    ++sweep;
    for (std::size_t j = 0; j < cols; ++j) {
      norm2[j] = dot(w.col(j), w.col(j), rows);
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double alpha = norm2[p];
        const double beta = norm2[q];
        const double gamma = dot(w.col(p), w.col(q), rows);
        if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::abs(zeta) > 1e150
                             ? 0.5 / zeta
                             : std::copysign(1.0, zeta) /
                                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(w.col(p), w.col(q), rows, c, s);
        rotate(v.col(p), v.col(q), cols, c, s);
        norm2[p] = std::max(alpha - t * gamma, 0.0);
        norm2[q] = std::max(beta + t * gamma, 0.0);
      }
    }
    converged = !rotated;
  }

  std::vector<double> raw_sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    raw_sigma[j] = std::sqrt(dot(w.col(j), w.col(j), rows));
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw_sigma[a] > raw_sigma[b]; });

  Columns u{rows, cols, std::vector<double>(rows * cols, 0.0)};
  std::vector<bool> filled(cols, false);
  SvdDecomposition out;
  out.sweeps = sweep;
  out.sigma.resize(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    const std::size_t j = order[k];
    const double s = raw_sigma[j];
    out.sigma[k] = s < kNullSigma ? 0.0 : s;
    if (s >= kNullSigma) {
      for (std::size_t i = 0; i < rows; ++i) {
        u.col(k)[i] = w.col(j)[i] / s;
      }
      filled[k] = true;
    }
  }
  for (std::size_t k = 0; k < cols; ++k) {
    if (!filled[k]) {
      complete_column(u, k, filled);
      filled[k] = true;
    }
  }

  out.u = DenseMatrix(rows, cols);
  out.v = DenseMatrix(cols, cols);
  for (std::size_t k = 0; k < cols; ++k) {
    const double *vk = v.col(order[k]);
    double sign = 1.0;
    for (std::size_t i = 0; i < cols; ++i) {
      if (std::abs(vk[i]) > 1e-12) {
        sign = vk[i] < 0.0 ? -1.0 : 1.0;
        break;
      }
    }
    for (std::size_t i = 0; i < cols; ++i) {
      out.v(i, k) = sign * vk[i];
    }
    for (std::size_t i = 0; i < rows; ++i) {
      out.u(i, k) = sign * u.col(k)[i];
    }
  }
  return out;
}

} // namespace

DenseMatrix SvdDecomposition::reconstruct() const {
  DenseMatrix out(u.rows(), v.rows());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < v.rows(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        acc += u(i, k) * sigma[k] * v(j, k);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

SvdDecomposition svd(const DenseMatrix &m, const SvdOptions &options) {
  if (!m.all_finite()) {
    throw NumericalFailure("svd: input has non-finite entries");
  }
  if (m.rows() >= m.cols()) {
    return jacobi_tall(m, options);
  }
  // Wide input: decompose the transpose and swap the factors. The sign
  // convention is then re-applied to the new V.
  auto t = jacobi_tall(m.transposed(), options);
  SvdDecomposition out;
  out.sigma = std::move(t.sigma);
  out.sweeps = t.sweeps;
  out.u = std::move(t.v);
  out.v = std::move(t.u);
  for (std::size_t k = 0; k < out.sigma.size(); ++k) {
    for (std::size_t i = 0; i < out.v.rows(); ++i) {
      if (std::abs(out.v(i, k)) > 1e-12) {
        if (out.v(i, k) < 0.0) {
          for (std::size_t r = 0; r < out.v.rows(); ++r) {
            out.v(r, k) = -out.v(r, k);
          }
          for (std::size_t r = 0; r < out.u.rows(); ++r) {
            out.u(r, k) = -out.u(r, k);
          }
        }
        break;
      }
    }
  }
  return out;
}

} // namespace fewpaths
