#pragma once

#include <cstdint>
#include <vector>

#include "triweight/code.hpp"
#include "triweight/field.hpp"
#include "triweight/subspace.hpp"

namespace triweight {

// Execution policy for the enumeration kernels. `budget` caps projected
// work in subspace-element units; exceeding it raises BudgetExceeded before
// any scanning starts.
struct ExecPolicy {
  bool parallel = true;
  int threads = 0;  // 0 = runtime default
  std::uint64_t budget = 100'000'000;
};

// Histogram of codeword weights over all p^{2e} - 1 nonzero (u, v):
// hist[w] = number of codewords of weight w. Serial and OpenMP variants
// compute identical results; the parallel one shards the u-loop and merges
// per-thread histograms.
std::vector<long long> weight_histogram_serial(const Field& f, const Code& c);
std::vector<long long> weight_histogram_parallel(const Field& f, const Code& c, int threads);
std::vector<long long> weight_histogram(const Field& f, const Code& c, const ExecPolicy& pol);

// Number of defining-set positions inside a subspace of F_p^{2e}, counting
// the zero vector as a hit (the zero pair satisfies the defining equation).
long long defining_hits(const Field& f, const Code& c, const Subspace& s);

struct MaxIntersection {
  long long best = -1;          // max |K ∩ D| over all K of the requested dimension
  Subspace witness;             // lexicographically smallest maximizer
  std::uint64_t scanned = 0;    // number of subspaces visited
};

// Maximum of |K ∩ D| over every s-dimensional subspace K of F_p^{2e}.
// The parallel variant shards the free-entry odometer inside each
// pivot-column block; merging keeps the lexicographically smallest
// maximizing basis, so results are scheduling-independent.
MaxIntersection max_defining_intersection_serial(const Field& f, const Code& c, int s);
MaxIntersection max_defining_intersection_parallel(const Field& f, const Code& c, int s,
                                                   int threads);
MaxIntersection max_defining_intersection(const Field& f, const Code& c, int s,
                                          const ExecPolicy& pol);

// Projected work of the scan above, in subspace-element units.
std::uint64_t max_intersection_cost(int p, int e, int s);

}  // namespace triweight
