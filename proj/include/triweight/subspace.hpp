#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triweight/linalg.hpp"

namespace triweight {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::uint64_t projected_, std::uint64_t cap_, const std::string& what_arg)
      : std::runtime_error(what_arg), projected(projected_), cap(cap_) {}
  std::uint64_t projected;
  std::uint64_t cap;
};

// r-dimensional F_p-subspace of F_p^m held as a reduced-row-echelon basis.
// RREF makes the representation canonical: equal row spaces have equal
// basis matrices, so operator== is subspace equality.
struct Subspace {
  int ambient = 0;  // m
  int dim = 0;      // r
  FpMat basis;      // dim x ambient, RREF

  static Subspace zero(int m, int p) { return Subspace{m, 0, FpMat(0, m, p)}; }
  static Subspace full(int m, int p) { return Subspace{m, m, FpMat::identity(m, p)}; }

  bool operator==(const Subspace& o) const = default;
  // Row-major lexicographic order on (dim, basis entries); used to pick
  // deterministic witnesses out of parallel scans.
  bool lex_less(const Subspace& o) const;

  std::string to_json() const;
};

// Canonicalize a spanning set (rows) into a Subspace.
Subspace make_subspace(int ambient, int p, const std::vector<std::vector<int>>& rows);

// Number of r-dimensional subspaces of F_p^m. Throws std::overflow_error
// if the count does not fit in 64 bits.
std::uint64_t gaussian_binomial(int p, int m, int r);

// Streams every r-dimensional subspace of F_p^m exactly once, in a fixed
// deterministic order: pivot-column sets ascending lexicographically, then
// the free entries as an ascending base-p odometer. Never materializes the
// full list.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int p, int m, int r);

  // Fills `out` and returns true, or returns false when exhausted.
  bool next(Subspace& out);

  std::uint64_t total() const { return total_; }

 private:
  void load_pivots();

  int p_, m_, r_;
  std::uint64_t total_;
  std::vector<int> pivots_;                  // current pivot-column set
  std::vector<std::pair<int, int>> free_;    // free (row, col) positions
  std::vector<int> digits_;                  // odometer over free positions
  bool fresh_block_ = true;
  bool done_ = false;
};

// Visits all p^dim vectors of the subspace (including zero) as coordinate
// vectors over F_p.
void for_each_element(const Subspace& s, int p,
                      const std::function<void(const std::vector<int>&)>& fn);

// Annihilator of s under the symmetric pairing (x, y) -> x G y^T:
// {y : basis G y^T = 0}, returned in canonical RREF form.
Subspace dual_subspace(const Subspace& s, const FpMat& pairing);

// True when v (coordinate vector) lies in the row space of s.
bool subspace_contains(const Subspace& s, int p, const std::vector<int>& v);

}  // namespace triweight
