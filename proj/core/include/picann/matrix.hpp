#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace picann {

// Dense row-major matrix of doubles.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // size rows*cols, a[r*cols + c]

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dims");
  }
  Matrix(int r, int c, std::vector<double> data) : rows(r), cols(c), a(std::move(data)) {
    if (a.size() != static_cast<size_t>(r) * c)
      throw std::invalid_argument("matrix data size mismatch");
  }

  double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  size_t nonzeros() const {
    size_t nz = 0;
    for (double v : a)
      if (v != 0.0) ++nz;
    return nz;
  }
};

// C = A * B
Matrix matmul(const Matrix& A, const Matrix& B);

// y = A*x + b
std::vector<double> affine_apply(const Matrix& A, const std::vector<double>& b,
                                 const std::vector<double>& x);

// Copies `src` into `dst` with its top-left corner at (r0, c0).
void place_block(Matrix& dst, const Matrix& src, int r0, int c0);

}  // namespace picann
