#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triweight/field.hpp"
#include "triweight/qform.hpp"

namespace triweight {

// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity, on the
// power basis zeta^0..zeta^{p-2}. The relation 1 + zeta + ... + zeta^{p-1} = 0
// eliminates the top coordinate, so equal algebraic numbers have equal
// coefficient vectors and operator== is exact equality.
class CycInt {
 public:
  explicit CycInt(int p) : p_(p), c_(p - 1, 0) {
    if (p < 3) throw std::invalid_argument("cyclotomic: p must be an odd prime >= 3");
  }
  static CycInt rational(int p, long long v) {
    CycInt x(p);
    x.c_[0] = v;
    return x;
  }
  static CycInt root_power(int p, long long k);  // zeta^k

  int p() const { return p_; }
  const std::vector<long long>& coeffs() const { return c_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& scale(long long v);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  CycInt pow(unsigned k) const;
  CycInt galois(long long z) const;  // sigma_z: zeta -> zeta^z, gcd(z, p) = 1

  bool is_zero() const;
  std::string str() const;

 private:
  void check_same(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("cyclotomic: mixed root orders");
  }
  static void check_magnitude(long long v);

  int p_;
  std::vector<long long> c_;
};

// Quadratic Gauss sum g = sum_{t=1}^{p-1} eta(t) zeta^t. Satisfies
// g^2 = (-1)^{(p-1)/2} p exactly.
CycInt gauss_sum(int p);

// sum_{x in F_q} zeta^{f(x) - Tr(bx)}, computed exhaustively. This is the
// oracle side of the closed-form identity below.
CycInt weil_sum(const Field& f, const FormSpec& spec, Elem b);

// The exact closed form of the same sum:
//   eps_f * p^{e - R_f} * g^{R_f} * zeta^{-f(x_b)}   when L_f(x) = -b/2 is solvable,
//   0                                                 otherwise.
// Everything stays in Z[zeta_p]; no fractional powers appear.
CycInt weil_sum_closed(const Field& f, const FormSpec& spec, const FormProfile& prof, Elem b);

// Galois-orbit sums, in cleared form (both sides multiplied by g^r so they
// live in Z[zeta_p]):
//   lhs = sum_{y in F_p^*} eta(y)^r zeta^{y z}   (z = 0 encodes the no-root case)
CycInt orbit_sum_cleared(int p, int r, int z);
// rhs: r odd, z = 0 -> 0;   r even, z = 0 -> p - 1;
//      r odd, z != 0 -> eta(z) g;   r even, z != 0 -> -1.
CycInt orbit_sum_expected(int p, int r, int z);

}  // namespace triweight
