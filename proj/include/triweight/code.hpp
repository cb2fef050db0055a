#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "triweight/field.hpp"
#include "triweight/qform.hpp"

namespace triweight {

// The two-variable code: positions are the pairs (x, y) != (0, 0) in F_q^2
// with f(x) + Tr(alpha y) = 0, codewords are (Tr(ux + vy)) over those
// positions, indexed by (u, v) in F_q^2.
struct Code {
  int p = 0;
  FormSpec form;
  FormProfile profile;
  Elem alpha;
  long long length = 0;               // p^{2e-1} - 1
  std::vector<std::int8_t> tr_alpha;  // q entries: Tr(alpha * y)
};

// Validates alpha != 0 and non-degeneracy (rank e) before building tables.
Code make_code(const Field& f, FormSpec form, Elem alpha);

// O(1) membership predicate; the table entries live in [0, p), so the sum
// is divisible by p exactly when it is 0 or p.
inline bool in_defining_set(const Code& c, Elem x, Elem y) {
  if (x.code == 0 && y.code == 0) return false;
  const int s = c.profile.fval[x.code] + c.tr_alpha[y.code];
  return s == 0 || s == c.p;
}

long long defining_set_size_formula(const Field& f);

// Streams the defining set in ascending (x, then y) code order.
void for_each_defining(const Field& f, const Code& c,
                       const std::function<void(Elem, Elem)>& fn);

enum class WeightMethod { kFormula, kEnumerate };

// Hamming weight of the codeword indexed by (u, v) != (0, 0).
long long codeword_weight(const Field& f, const Code& c, Elem u, Elem v, WeightMethod method);

struct WeightDistribution {
  long long length = 0;
  int dimension = 0;
  // (weight, multiplicity), ascending by weight, starting with (0, 1)
  std::vector<std::pair<long long, long long>> entries;

  long long min_nonzero_weight() const;
  long long max_nonzero_weight() const;
  bool operator==(const WeightDistribution& o) const = default;
  std::string to_json() const;
};

WeightDistribution weight_distribution_formula(const Field& f, const Code& c);

struct PlessReport {
  long long mult_sum = 0;
  long long mult_expected = 0;
  long long first_moment = 0;
  long long first_moment_expected = 0;
  bool pass = false;
};

// First two power-moment identities: the multiplicities sum to p^k - 1 and
// sum of w*A_w equals n (p-1) p^{k-1} (dual distance >= 2).
PlessReport pless_check(int p, const WeightDistribution& wd);

// Literal guard: scans positions and searches for a functional that is
// nonzero there; false iff some position is annihilated by every (u, v).
bool dual_distance_at_least_2(const Field& f, const Code& c);
bool positions_support_dual_distance_2(const Field& f,
                                       const std::vector<std::pair<Elem, Elem>>& positions);

struct RatioReport {
  long long w_min = 0;
  long long w_max = 0;
  bool ok = false;  // p * w_min > (p-1) * w_max, exact integers
};

RatioReport secret_sharing_ratio(int p, const WeightDistribution& wd);

}  // namespace triweight
