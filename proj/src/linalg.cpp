#include "triweight/linalg.hpp"

namespace triweight {

FpMat FpMat::identity(int n, int p) {
  FpMat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int fp_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
  // p is tiny; Fermat is plenty
  int r = 1;
  int b = a;
  int k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

FpMat fp_mul(const FpMat& x, const FpMat& y) {
  if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("fp_mul: shape mismatch");
  FpMat out(x.rows, y.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        out.at(i, j) = (out.at(i, j) + v * y.at(k, j)) % x.p;
    }
  return out;
}

FpMat fp_transpose(const FpMat& x) {
  FpMat out(x.cols, x.rows, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

int fp_rref(FpMat& m, std::vector<int>* pivot_cols) {
  const int p = m.p;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pr = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(rank, c));
    const int ip = fp_inv(m.at(rank, col), p);
    for (int c = 0; c < m.cols; ++c) m.at(rank, c) = m.at(rank, c) * ip % p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const int f = m.at(r, col);
      if (!f) continue;
      for (int c = 0; c < m.cols; ++c) {
        int v = (m.at(r, c) - f * m.at(rank, c)) % p;
        m.at(r, c) = v < 0 ? v + p : v;
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

int fp_rank(FpMat m) { return fp_rref(m); }

FpMat fp_kernel(const FpMat& m) {
  FpMat r = m;
  std::vector<int> piv;
  const int rank = fp_rref(r, &piv);
  const int p = m.p;
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  FpMat out(m.cols - rank, m.cols, p);
  int row = 0;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_piv[fc]) continue;
    out.at(row, fc) = 1;
    for (int i = 0; i < rank; ++i) {
      int v = (p - r.at(i, fc)) % p;
      out.at(row, piv[i]) = v;
    }
    ++row;
  }
  return out;
}

FpMat fp_inverse(const FpMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("fp_inverse: not square");
  const int n = m.rows;
  FpMat aug(n, 2 * n, m.p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (fp_rref(aug) != n) throw std::domain_error("fp_inverse: singular matrix");
  FpMat out(n, n, m.p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

bool fp_solve(const FpMat& m, const std::vector<int>& b, std::vector<int>& x) {
  if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("fp_solve: rhs size");
  FpMat aug(m.rows, m.cols + 1, m.p);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = ((b[i] % m.p) + m.p) % m.p;
  }
  std::vector<int> piv;
  const int rank = fp_rref(aug, &piv);
  for (int i = 0; i < rank; ++i)
    if (piv[i] == m.cols) return false;  // 0 = nonzero row
  x.assign(m.cols, 0);
  for (int i = 0; i < rank; ++i) x[piv[i]] = aug.at(i, m.cols);
  return true;
}

}  // namespace triweight
