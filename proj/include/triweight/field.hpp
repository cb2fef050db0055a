#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace triweight {

// Element of F_{p^e}, packed as the base-p integer whose digits are the
// coordinates in the polynomial basis 1, t, ..., t^{e-1} (constant digit
// least significant). The zero code is the additive identity.
struct Elem {
  std::uint32_t code = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t c) : code(c) {}
  friend constexpr bool operator==(Elem a, Elem b) { return a.code == b.code; }
  friend constexpr bool operator<(Elem a, Elem b) { return a.code < b.code; }
};

// Quadratic character of F_p extended by 0 -> 0.
int quadratic_character(long long a, int p);

bool is_prime(long long n);

std::vector<long long> prime_factors(long long n);  // distinct, ascending

// Exact model of F_q with q = p^e, p an odd prime. Immutable after
// construction and freely shareable across threads; all mutating work
// (table construction) happens in the constructor.
//
// The default constructor picks the lexicographically smallest monic
// irreducible modulus (coefficient tuples scanned as ascending base-p
// integers, constant term least significant) and the least element code
// that generates the multiplicative group, so two builds of the same
// (p, e) agree bit for bit.
class Field {
 public:
  static constexpr long long kSoftCap = 10'000'000;     // q beyond this is refused
  static constexpr long long kLogTableCap = 1 << 20;    // discrete-log tables
  static constexpr long long kAddTableCap = 1 << 10;    // q*q addition table

  Field(int p, int e);
  Field(int p, int e, std::vector<int> modulus);  // validated user-supplied modulus

  int p() const { return p_; }
  int e() const { return e_; }
  long long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem primitive() const { return primitive_; }

  Elem from_code(long long code) const;
  Elem from_coords(const std::vector<int>& coords) const;
  Elem from_prime_subfield(int c) const;  // constant c mod p
  std::vector<int> coords(Elem x) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;  // throws std::domain_error on zero
  Elem pow(Elem x, long long k) const;
  Elem scalar_mul(int c, Elem x) const;  // c in F_p

  Elem frobenius(Elem x, int i) const;  // x^{p^i}, 0 <= i < e
  int trace(Elem x) const;              // element of F_p

  bool in_prime_subfield(Elem x) const { return x.code < static_cast<std::uint32_t>(p_); }

  long long multiplicative_order(Elem x) const;  // x != 0

  // Raw tables for hot loops. add_table is empty when q > kAddTableCap;
  // trace_table always has q entries.
  const std::vector<std::int32_t>& add_table() const { return add_table_; }
  const std::vector<std::int8_t>& trace_table() const { return trace_table_; }

  std::string to_json() const;

 private:
  void validate_and_finish();
  Elem mul_poly(Elem x, Elem y) const;  // modulus reduction, no tables
  void build_tables();
  void find_primitive();

  int p_ = 0;
  int e_ = 0;
  long long q_ = 0;
  std::vector<int> modulus_;  // length e+1, monic, constant first
  Elem primitive_;
  std::vector<std::int32_t> exp_;   // exp_[k] = primitive^k, k in [0, q-1)
  std::vector<std::int32_t> log_;   // log_[x.code], log_[0] = -1
  std::vector<std::int32_t> add_table_;
  std::vector<std::int8_t> trace_table_;
};

// Polynomial-over-F_p helpers used by the modulus search; exposed for tests.
bool poly_is_irreducible(const std::vector<int>& poly, int p);  // monic input

}  // namespace triweight
