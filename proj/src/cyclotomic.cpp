#include "triweight/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace triweight {

namespace {
constexpr long long kMagnitudeCap = 1LL << 40;  // coefficients stay ~q*p at desk scale
}

void CycInt::check_magnitude(long long v) {
  if (v > kMagnitudeCap || v < -kMagnitudeCap)
    throw std::overflow_error("cyclotomic: coefficient magnitude exceeded the asserted bound");
}

CycInt CycInt::root_power(int p, long long k) {
  CycInt x(p);
  k %= p;
  if (k < 0) k += p;
  if (k == p - 1) {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (auto& c : x.c_) c = -1;
  } else {
    x.c_[k] = 1;
  }
  return x;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (int i = 0; i < p_ - 1; ++i) {
    c_[i] += o.c_[i];
    check_magnitude(c_[i]);
  }
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (int i = 0; i < p_ - 1; ++i) {
    c_[i] -= o.c_[i];
    check_magnitude(c_[i]);
  }
  return *this;
}

CycInt& CycInt::scale(long long v) {
  for (auto& c : c_) {
    c *= v;
    check_magnitude(c);
  }
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  check_same(o);
  // convolution with exponents folded mod p, then the zeta^{p-1} relation
  std::vector<long long> acc(p_, 0);
  for (int i = 0; i < p_ - 1; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; j < p_ - 1; ++j) {
      if (!o.c_[j]) continue;
      int k = i + j;
      if (k >= p_) k -= p_;
      acc[k] += c_[i] * o.c_[j];
      check_magnitude(acc[k]);
    }
  }
  const long long top = acc[p_ - 1];
  for (int i = 0; i < p_ - 1; ++i) {
    c_[i] = acc[i] - top;
    check_magnitude(c_[i]);
  }
  return *this;
}

CycInt CycInt::pow(unsigned k) const {
  CycInt r = rational(p_, 1);
  CycInt b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

CycInt CycInt::galois(long long z) const {
  z %= p_;
  if (z < 0) z += p_;
  if (z == 0) throw std::invalid_argument("galois: z must be a unit mod p");
  CycInt out(p_);
  for (int i = 0; i < p_ - 1; ++i) {
    if (!c_[i]) continue;
    const int k = static_cast<int>(static_cast<long long>(i) * z % p_);
    if (k == p_ - 1) {
      for (auto& c : out.c_) c -= c_[i];
    } else {
      out.c_[k] += c_[i];
    }
  }
  for (auto c : out.c_) check_magnitude(c);
  return out;
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long c) { return c == 0; });
}

std::string CycInt::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < p_ - 1; ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

CycInt gauss_sum(int p) {
  CycInt g(p);
  for (int t = 1; t < p; ++t) {
    CycInt term = CycInt::root_power(p, t);
    term.scale(quadratic_character(t, p));
    g += term;
  }
  return g;
}

CycInt weil_sum(const Field& f, const FormSpec& spec, Elem b) {
  const int p = f.p();
  CycInt s(p);
  for (long long xc = 0; xc < f.q(); ++xc) {
    const Elem x = f.from_code(xc);
    const int ex = (eval_form(f, spec, x) - f.trace(f.mul(b, x)) % p + p) % p;
    s += CycInt::root_power(p, ex);
  }
  return s;
}

CycInt weil_sum_closed(const Field& f, const FormSpec& spec, const FormProfile& prof, Elem b) {
  const int p = f.p(), e = f.e();
  // solve L_f(x) = -b/2 (any solution; f(x) is constant on the solution coset)
  const Elem rhs = f.mul(f.from_prime_subfield(fp_inv(2, p)), f.neg(b));
  std::vector<int> bb = f.coords(rhs);
  std::vector<int> xc;
  if (!fp_solve(prof.lf, bb, xc)) return CycInt(p);  // b outside the image: sum vanishes
  const int fxb = eval_form(f, spec, f.from_coords(xc));
  long long scalar = prof.sign;
  for (int i = 0; i < e - prof.rank; ++i) scalar *= p;
  CycInt out = gauss_sum(p).pow(static_cast<unsigned>(prof.rank));
  out.scale(scalar);
  out *= CycInt::root_power(p, -fxb);
  return out;
}

CycInt orbit_sum_cleared(int p, int r, int z) {
  CycInt s(p);
  for (int y = 1; y < p; ++y) {
    const int eta_r = (r % 2 == 0) ? 1 : quadratic_character(y, p);
    CycInt term = CycInt::root_power(p, static_cast<long long>(y) * z);
    term.scale(eta_r);
    s += term;
  }
  return s;
}

CycInt orbit_sum_expected(int p, int r, int z) {
  if (z % p == 0) {
    if (r % 2) return CycInt(p);
    return CycInt::rational(p, p - 1);
  }
  if (r % 2) {
    CycInt g = gauss_sum(p);
    g.scale(quadratic_character(z, p));
    return g;
  }
  return CycInt::rational(p, -1);
}

}  // namespace triweight
