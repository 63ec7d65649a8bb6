#pragma once

#include <cstddef>
#include <vector>

namespace powctl {

// Dense row-major matrix of doubles.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::size_t size() const { return a.size(); }
  bool operator==(const Mat&) const = default;
};

// C = A * B^T   (A: m x k, B: n x k, C: m x n)
void mul_nt(const Mat& A, const Mat& B, Mat& C);
// C = A * B     (A: m x k, B: k x n, C: m x n)
void mul_nn(const Mat& A, const Mat& B, Mat& C);
// C = A^T * B   (A: k x m, B: k x n, C: m x n)
void mul_tn(const Mat& A, const Mat& B, Mat& C);

// Pins the BLAS backend to one thread. Called lazily by the products; safe to
// call more than once.
void init_blas();

// Horizontal concatenation [A | B].
Mat hcat(const Mat& A, const Mat& B);

}  // namespace powctl
