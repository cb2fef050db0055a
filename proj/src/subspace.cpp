#include "triweight/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace triweight {

bool Subspace::lex_less(const Subspace& o) const {
  if (dim != o.dim) return dim < o.dim;
  return basis.a < o.basis.a;
}

std::string Subspace::to_json() const {
  std::ostringstream os;
  os << "{\"m\":" << ambient << ",\"r\":" << dim << ",\"basis\":[";
  for (int i = 0; i < dim; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < ambient; ++j) os << (j ? "," : "") << basis.at(i, j);
    os << "]";
  }
  os << "]}";
  return os.str();
}

Subspace make_subspace(int ambient, int p, const std::vector<std::vector<int>>& rows) {
  FpMat m(static_cast<int>(rows.size()), ambient, p);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != ambient)
      throw std::invalid_argument("make_subspace: row length != ambient dimension");
    for (int j = 0; j < ambient; ++j) {
      int v = rows[i][j] % p;
      m.at(static_cast<int>(i), j) = v < 0 ? v + p : v;
    }
  }
  const int rank = fp_rref(m);
  FpMat b(rank, ambient, p);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < ambient; ++j) b.at(i, j) = m.at(i, j);
  return Subspace{ambient, rank, std::move(b)};
}

std::uint64_t gaussian_binomial(int p, int m, int r) {
  if (r < 0 || r > m) return 0;
  auto ppow = [&](int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v *= p;
    return v;
  };
  // Each prefix of the interleaved product is itself a Gaussian binomial,
  // so every division below is exact.
  __int128 acc = 1;
  for (int i = 0; i < r; ++i) {
    acc *= ppow(m - i) - 1;
    acc /= ppow(i + 1) - 1;
  }
  if (acc > static_cast<__int128>(UINT64_MAX))
    throw std::overflow_error("gaussian_binomial: count exceeds 64 bits");
  return static_cast<std::uint64_t>(acc);
}

SubspaceEnumerator::SubspaceEnumerator(int p, int m, int r) : p_(p), m_(m), r_(r) {
  if (r < 0 || r > m) throw std::invalid_argument("subspace enumeration: need 0 <= r <= m");
  total_ = gaussian_binomial(p, m, r);
  pivots_.resize(r);
  for (int i = 0; i < r; ++i) pivots_[i] = i;
  load_pivots();
}

void SubspaceEnumerator::load_pivots() {
  free_.clear();
  for (int i = 0; i < r_; ++i) {
    for (int j = pivots_[i] + 1; j < m_; ++j) {
      if (!std::binary_search(pivots_.begin(), pivots_.end(), j)) free_.emplace_back(i, j);
    }
  }
  digits_.assign(free_.size(), 0);
  fresh_block_ = true;
}

bool SubspaceEnumerator::next(Subspace& out) {
  if (done_) return false;
  if (r_ == 0) {
    out = Subspace::zero(m_, p_);
    done_ = true;
    return true;
  }
  if (!fresh_block_) {
    // advance the free-entry odometer; on overflow move to the next pivot set
    size_t i = 0;
    for (; i < digits_.size(); ++i) {
      if (++digits_[i] < p_) break;
      digits_[i] = 0;
    }
    if (i == digits_.size()) {
      // next combination of pivot columns (lexicographic)
      int k = r_ - 1;
      while (k >= 0 && pivots_[k] == m_ - r_ + k) --k;
      if (k < 0) {
        done_ = true;
        return false;
      }
      ++pivots_[k];
      for (int j = k + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      load_pivots();
    }
  }
  fresh_block_ = false;
  FpMat b(r_, m_, p_);
  for (int i = 0; i < r_; ++i) b.at(i, pivots_[i]) = 1;
  for (size_t k = 0; k < free_.size(); ++k) b.at(free_[k].first, free_[k].second) = digits_[k];
  out = Subspace{m_, r_, std::move(b)};
  return true;
}

void for_each_element(const Subspace& s, int p,
                      const std::function<void(const std::vector<int>&)>& fn) {
  const int m = s.ambient, r = s.dim;
  std::vector<int> v(m, 0);
  std::vector<int> digits(r, 0);
  fn(v);
  if (r == 0) return;
  std::uint64_t count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  auto add_row = [&](int row) {
    for (int j = 0; j < m; ++j) {
      int t = v[j] + s.basis.at(row, j);
      v[j] = t >= p ? t - p : t;
    }
  };
  for (std::uint64_t k = 1; k < count; ++k) {
    // base-p increment; a digit rolling p-1 -> 0 is the same as adding the
    // row once (since -(p-1) == 1 mod p), so every touched digit adds once
    int i = 0;
    while (digits[i] == p - 1) {
      digits[i] = 0;
      add_row(i);
      ++i;
    }
    ++digits[i];
    add_row(i);
    fn(v);
  }
}

Subspace dual_subspace(const Subspace& s, const FpMat& pairing) {
  if (pairing.rows != s.ambient || pairing.cols != s.ambient)
    throw std::invalid_argument("dual_subspace: pairing must be ambient x ambient");
  if (s.dim == 0) return Subspace::full(s.ambient, pairing.p);
  FpMat bg = fp_mul(s.basis, pairing);
  FpMat ker = fp_kernel(bg);
  fp_rref(ker);
  return Subspace{s.ambient, ker.rows, std::move(ker)};
}

bool subspace_contains(const Subspace& s, int p, const std::vector<int>& v) {
  FpMat m(s.dim + 1, s.ambient, p);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.ambient; ++j) m.at(i, j) = s.basis.at(i, j);
  for (int j = 0; j < s.ambient; ++j) {
    int c = v[j] % p;
    m.at(s.dim, j) = c < 0 ? c + p : c;
  }
  return fp_rank(std::move(m)) == s.dim;
}

}  // namespace triweight
