#include "triweight/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace triweight {

namespace {

long long ppow(int p, int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return v;
}

// Tr(u x) for all u, x as a dense q x q byte table.
std::vector<std::int8_t> trace_mul_table(const Field& f) {
  const long long q = f.q();
  std::vector<std::int8_t> t(q * q);
  for (long long u = 0; u < q; ++u)
    for (long long x = 0; x < q; ++x)
      t[u * q + x] = static_cast<std::int8_t>(f.trace(f.mul(f.from_code(u), f.from_code(x))));
  return t;
}

// Defining set as two parallel index arrays.
void materialize_defining(const Field& f, const Code& c, std::vector<std::int32_t>& dx,
                          std::vector<std::int32_t>& dy) {
  dx.clear();
  dy.clear();
  dx.reserve(c.length);
  dy.reserve(c.length);
  const int p = f.p();
  for (long long x = 0; x < f.q(); ++x) {
    const int fx = c.profile.fval[x];
    for (long long y = 0; y < f.q(); ++y) {
      if (x == 0 && y == 0) continue;
      const int s = fx + c.tr_alpha[y];
      if (s == 0 || s == p) {
        dx.push_back(static_cast<std::int32_t>(x));
        dy.push_back(static_cast<std::int32_t>(y));
      }
    }
  }
}

long long histogram_row(const Field& f, const Code& c, const std::vector<std::int8_t>& trmul,
                        const std::vector<std::int32_t>& dx, const std::vector<std::int32_t>& dy,
                        long long u, long long v) {
  const int p = f.p();
  const long long q = f.q();
  const std::int8_t* tru = trmul.data() + u * q;
  const std::int8_t* trv = trmul.data() + v * q;
  long long w = 0;
  const size_t n = dx.size();
  for (size_t i = 0; i < n; ++i) {
    const int t = tru[dx[i]] + trv[dy[i]];
    w += (t != 0) & (t != p);
  }
  return w;
}

}  // namespace

std::vector<long long> weight_histogram_serial(const Field& f, const Code& c) {
  const long long q = f.q();
  const auto trmul = trace_mul_table(f);
  std::vector<std::int32_t> dx, dy;
  materialize_defining(f, c, dx, dy);
  std::vector<long long> hist(c.length + 1, 0);
  for (long long u = 0; u < q; ++u)
    for (long long v = 0; v < q; ++v) {
      if (u == 0 && v == 0) continue;
      ++hist[histogram_row(f, c, trmul, dx, dy, u, v)];
    }
  return hist;
}

std::vector<long long> weight_histogram_parallel(const Field& f, const Code& c, int threads) {
  const long long q = f.q();
  const auto trmul = trace_mul_table(f);
  std::vector<std::int32_t> dx, dy;
  materialize_defining(f, c, dx, dy);
  std::vector<long long> hist(c.length + 1, 0);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
#pragma omp parallel
  {
    std::vector<long long> local(c.length + 1, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (long long u = 0; u < q; ++u)
      for (long long v = 0; v < q; ++v) {
        if (u == 0 && v == 0) continue;
        ++local[histogram_row(f, c, trmul, dx, dy, u, v)];
      }
#pragma omp critical(triweight_hist_merge)
    for (size_t i = 0; i < local.size(); ++i) hist[i] += local[i];
  }
  return hist;
}

std::vector<long long> weight_histogram(const Field& f, const Code& c, const ExecPolicy& pol) {
  const std::uint64_t cost =
      static_cast<std::uint64_t>(f.q()) * f.q() * static_cast<std::uint64_t>(c.length);
  if (cost > pol.budget)
    throw BudgetExceeded(cost, pol.budget,
                         "weight enumeration needs " + std::to_string(cost) +
                             " work units, budget is " + std::to_string(pol.budget));
  return pol.parallel ? weight_histogram_parallel(f, c, pol.threads)
                      : weight_histogram_serial(f, c);
}

namespace {

// Per-thread scratch for one subspace scan: packed (x, y) element codes,
// rolled with the q x q addition table.
struct ScanContext {
  const std::int32_t* addq;
  const std::int8_t* fval;
  const std::int8_t* tr_alpha;
  long long q;
  int p;

  // rows packed as x-part / y-part codes
  long long hits(const std::int32_t* rx, const std::int32_t* ry, int s,
                 std::vector<int>& digits) const {
    std::fill(digits.begin(), digits.begin() + s, 0);
    long long x = 0, y = 0;
    long long cnt = 0;
    const int t0 = fval[0] + tr_alpha[0];
    cnt += (t0 == 0) | (t0 == p);
    long long total = 1;
    for (int i = 0; i < s; ++i) total *= p;
    for (long long k = 1; k < total; ++k) {
      // base-p odometer; every digit touched adds its row once, because a
      // roll p-1 -> 0 is the same as +1 mod p
      int i = 0;
      while (digits[i] == p - 1) {
        digits[i] = 0;
        x = addq[x * q + rx[i]];
        y = addq[y * q + ry[i]];
        ++i;
      }
      ++digits[i];
      x = addq[x * q + rx[i]];
      y = addq[y * q + ry[i]];
      const int t = fval[x] + tr_alpha[y];
      cnt += (t == 0) | (t == p);
    }
    return cnt;
  }
};

struct PivotBlock {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free_pos;  // (row, col)
  long long combos = 1;                       // p^{#free}
};

std::vector<PivotBlock> pivot_blocks(int p, int m, int s) {
  std::vector<PivotBlock> blocks;
  if (s == 0) {
    blocks.push_back(PivotBlock{{}, {}, 1});
    return blocks;
  }
  std::vector<int> piv(s);
  for (int i = 0; i < s; ++i) piv[i] = i;
  for (;;) {
    PivotBlock b;
    b.pivots = piv;
    for (int i = 0; i < s; ++i)
      for (int j = piv[i] + 1; j < m; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) b.free_pos.emplace_back(i, j);
    b.combos = 1;
    for (size_t k = 0; k < b.free_pos.size(); ++k) b.combos *= p;
    blocks.push_back(std::move(b));
    int k = s - 1;
    while (k >= 0 && piv[k] == m - s + k) --k;
    if (k < 0) break;
    ++piv[k];
    for (int j = k + 1; j < s; ++j) piv[j] = piv[j - 1] + 1;
  }
  return blocks;
}

// Build the RREF basis for (block, odometer index) and pack the rows.
void build_rows(const PivotBlock& b, int p, int e, long long odo, FpMat& basis,
                std::vector<std::int32_t>& rx, std::vector<std::int32_t>& ry) {
  const int s = static_cast<int>(b.pivots.size());
  const int m = 2 * e;
  std::fill(basis.a.begin(), basis.a.end(), 0);
  for (int i = 0; i < s; ++i) basis.at(i, b.pivots[i]) = 1;
  long long t = odo;
  for (const auto& [row, col] : b.free_pos) {
    basis.at(row, col) = static_cast<int>(t % p);
    t /= p;
  }
  for (int i = 0; i < s; ++i) {
    long long x = 0, y = 0, base = 1;
    for (int j = 0; j < e; ++j) {
      x += basis.at(i, j) * base;
      y += basis.at(i, e + j) * base;
      base *= p;
    }
    rx[i] = static_cast<std::int32_t>(x);
    ry[i] = static_cast<std::int32_t>(y);
  }
}

struct BlockBest {
  long long best = -1;
  bool has_witness = false;
  FpMat witness;
};

void consider(BlockBest& acc, long long cnt, const FpMat& basis) {
  if (cnt > acc.best || (cnt == acc.best && acc.has_witness && basis.a < acc.witness.a)) {
    acc.best = cnt;
    acc.witness = basis;
    acc.has_witness = true;
  }
}

void merge(BlockBest& into, const BlockBest& from) {
  if (!from.has_witness) return;
  if (from.best > into.best ||
      (from.best == into.best && into.has_witness && from.witness.a < into.witness.a) ||
      !into.has_witness) {
    into = from;
  }
}

MaxIntersection finish(const Field& f, BlockBest acc, int s, std::uint64_t scanned) {
  MaxIntersection out;
  out.best = acc.best;
  out.scanned = scanned;
  out.witness = Subspace{2 * f.e(), s, std::move(acc.witness)};
  return out;
}

}  // namespace

long long defining_hits(const Field& f, const Code& c, const Subspace& s) {
  if (s.ambient != 2 * f.e())
    throw std::invalid_argument("defining_hits: subspace of F_p^{2e} expected");
  const long long q = f.q();
  ScanContext ctx{f.add_table().data(), c.profile.fval.data(), c.tr_alpha.data(), q, f.p()};
  if (f.add_table().empty())
    throw std::logic_error("defining_hits: field too large for the packed scanner");
  std::vector<std::int32_t> rx(std::max(1, s.dim)), ry(std::max(1, s.dim));
  const int e = f.e(), p = f.p();
  for (int i = 0; i < s.dim; ++i) {
    long long x = 0, y = 0, base = 1;
    for (int j = 0; j < e; ++j) {
      x += s.basis.at(i, j) * base;
      y += s.basis.at(i, e + j) * base;
      base *= p;
    }
    rx[i] = static_cast<std::int32_t>(x);
    ry[i] = static_cast<std::int32_t>(y);
  }
  std::vector<int> digits(std::max(1, s.dim), 0);
  return ctx.hits(rx.data(), ry.data(), s.dim, digits);
}

std::uint64_t max_intersection_cost(int p, int e, int s) {
  const std::uint64_t count = gaussian_binomial(p, 2 * e, s);
  std::uint64_t per = 1;
  for (int i = 0; i < s; ++i) per *= p;
  if (count > UINT64_MAX / per) throw std::overflow_error("max_intersection_cost overflow");
  return count * per;
}

MaxIntersection max_defining_intersection_serial(const Field& f, const Code& c, int s) {
  const int p = f.p(), e = f.e(), m = 2 * e;
  if (s < 0 || s > m) throw std::invalid_argument("max_defining_intersection: bad dimension");
  ScanContext ctx{f.add_table().data(), c.profile.fval.data(), c.tr_alpha.data(), f.q(), p};
  if (f.add_table().empty())
    throw std::logic_error("max_defining_intersection: field too large for the packed scanner");
  const auto blocks = pivot_blocks(p, m, s);
  BlockBest acc;
  std::uint64_t scanned = 0;
  FpMat basis(s, m, p);
  std::vector<std::int32_t> rx(std::max(1, s)), ry(std::max(1, s));
  std::vector<int> digits(std::max(1, s), 0);
  for (const auto& b : blocks) {
    for (long long odo = 0; odo < b.combos; ++odo) {
      build_rows(b, p, e, odo, basis, rx, ry);
      const long long cnt = ctx.hits(rx.data(), ry.data(), s, digits) - 1;  // drop the origin
      consider(acc, cnt, basis);
      ++scanned;
    }
  }
  return finish(f, std::move(acc), s, scanned);
}

MaxIntersection max_defining_intersection_parallel(const Field& f, const Code& c, int s,
                                                   int threads) {
  const int p = f.p(), e = f.e(), m = 2 * e;
  if (s < 0 || s > m) throw std::invalid_argument("max_defining_intersection: bad dimension");
  ScanContext ctx{f.add_table().data(), c.profile.fval.data(), c.tr_alpha.data(), f.q(), p};
  if (f.add_table().empty())
    throw std::logic_error("max_defining_intersection: field too large for the packed scanner");
  const auto blocks = pivot_blocks(p, m, s);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  BlockBest acc;
  std::uint64_t scanned = 0;
  for (const auto& b : blocks) {
#pragma omp parallel
    {
      BlockBest local;
      FpMat basis(s, m, p);
      std::vector<std::int32_t> rx(std::max(1, s)), ry(std::max(1, s));
      std::vector<int> digits(std::max(1, s), 0);
#pragma omp for schedule(dynamic, 64) nowait
      for (long long odo = 0; odo < b.combos; ++odo) {
        build_rows(b, p, e, odo, basis, rx, ry);
        const long long cnt = ctx.hits(rx.data(), ry.data(), s, digits) - 1;
        consider(local, cnt, basis);
      }
#pragma omp critical(triweight_scan_merge)
      merge(acc, local);
    }
    scanned += static_cast<std::uint64_t>(b.combos);
  }
  return finish(f, std::move(acc), s, scanned);
}

MaxIntersection max_defining_intersection(const Field& f, const Code& c, int s,
                                          const ExecPolicy& pol) {
  const std::uint64_t cost = max_intersection_cost(f.p(), f.e(), s);
  if (cost > pol.budget)
    throw BudgetExceeded(cost, pol.budget,
                         "subspace scan at dimension " + std::to_string(s) + " needs " +
                             std::to_string(cost) + " work units, budget is " +
                             std::to_string(pol.budget));
  return pol.parallel ? max_defining_intersection_parallel(f, c, s, pol.threads)
                      : max_defining_intersection_serial(f, c, s);
}

}  // namespace triweight
