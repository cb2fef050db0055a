#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace triweight {

// Dense matrix over the prime field F_p. Entries are stored reduced to [0, p).
// Small by construction (dimensions bounded by 2e <= 16 in this project), so
// everything is plain Gaussian elimination.
struct FpMat {
  int rows = 0;
  int cols = 0;
  int p = 0;
  std::vector<int> a;  // row-major

  FpMat() = default;
  FpMat(int r, int c, int p_) : rows(r), cols(c), p(p_), a(static_cast<size_t>(r) * c, 0) {}

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static FpMat identity(int n, int p);

  bool operator==(const FpMat& o) const = default;
};

int fp_inv(int a, int p);  // inverse in F_p, a != 0 mod p

FpMat fp_mul(const FpMat& x, const FpMat& y);
FpMat fp_transpose(const FpMat& x);

// In-place reduced row echelon form; returns the rank and records pivot
// columns if requested.
int fp_rref(FpMat& m, std::vector<int>* pivot_cols = nullptr);

int fp_rank(FpMat m);

// Basis of the right kernel {v : m v^T = 0}, rows of the returned matrix.
FpMat fp_kernel(const FpMat& m);

// Inverse of a square matrix; throws std::domain_error when singular.
FpMat fp_inverse(const FpMat& m);

// Solve m x^T = b for one solution; returns false when inconsistent.
bool fp_solve(const FpMat& m, const std::vector<int>& b, std::vector<int>& x);

}  // namespace triweight
