#include "triweight/field.hpp"

#include <algorithm>
#include <sstream>

namespace triweight {

int quadratic_character(long long a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long r = 1, b = a;
  int k = (p - 1) / 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r == 1 ? 1 : -1;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<int>;  // coefficients, constant first

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
  const int e = static_cast<int>(m.size()) - 1;
  std::vector<int> res(2 * e, 0);
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
      res[i + j] = (res[i + j] + a[i] * b[j]) % p;
  }
  for (int k = 2 * e - 1; k >= e; --k) {
    const int c = res[k];
    if (!c) continue;
    res[k] = 0;
    for (int j = 0; j <= e; ++j) {
      int v = (res[k - e + j] - c * m[j]) % p;
      res[k - e + j] = v < 0 ? v + p : v;
    }
  }
  res.resize(e);
  return res;
}

Poly poly_pow_mod(Poly base, long long k, const Poly& m, int p) {
  Poly r(m.size() - 1, 0);
  r[0] = 1;
  while (k) {
    if (k & 1) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  const int d = static_cast<int>(m.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
    const int c = a[k];
    if (!c) continue;
    // m is monic
    for (int j = 0; j <= d; ++j) {
      int v = (a[k - d + j] - c * m[j]) % p;
      a[k - d + j] = v < 0 ? v + p : v;
    }
  }
  a.resize(std::max<size_t>(1, std::min(a.size(), static_cast<size_t>(d))));
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

Poly poly_gcd(Poly a, Poly b, int p) {
  auto deg = [](const Poly& x) {
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i)
      if (x[i]) return i;
    return -1;
  };
  while (!poly_is_zero(b)) {
    // a mod (b made monic)
    int db = deg(b);
    Poly bm(b.begin(), b.begin() + db + 1);
    int li = 1;
    {
      int base = bm[db], k = p - 2, r = 1;
      while (k) {
        if (k & 1) r = r * base % p;
        base = base * base % p;
        k >>= 1;
      }
      li = r;
    }
    for (auto& c : bm) c = c * li % p;
    Poly rem = poly_mod(a, bm, p);
    a = b;
    b = rem;
  }
  return a;
}

}  // namespace

bool poly_is_irreducible(const std::vector<int>& poly, int p) {
  const int e = static_cast<int>(poly.size()) - 1;
  if (e <= 0) return false;
  if (poly[e] != 1) return false;  // monic required
  if (e == 1) return true;
  // Rabin: x^{p^e} == x (mod f) and gcd(x^{p^{e/l}} - x, f) == 1 for primes l | e
  Poly x(e, 0);
  if (e >= 2) x[1] = 1;
  auto frob_power = [&](int k) {  // x^{p^k} mod poly
    Poly r = x;
    for (int i = 0; i < k; ++i) r = poly_pow_mod(r, p, poly, p);
    return r;
  };
  Poly xq = frob_power(e);
  if (xq != x) return false;
  for (long long l : prime_factors(e)) {
    Poly xm = frob_power(static_cast<int>(e / l));
    // xm - x
    Poly diff = xm;
    diff[1] = (diff[1] - 1 % p + p) % p;
    if (poly_is_zero(diff)) return false;
    Poly g = poly_gcd(poly, diff, p);
    int dg = -1;
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i)
      if (g[i]) {
        dg = i;
        break;
      }
    if (dg != 0) return false;
  }
  return true;
}

Field::Field(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw std::invalid_argument("field: characteristic must be odd");
  if (e < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kSoftCap)
      throw std::invalid_argument("field: p^e exceeds the supported size cap " +
                                  std::to_string(kSoftCap));
  }
  // Lexicographically smallest monic irreducible: scan constant-first
  // coefficient tuples as ascending base-p integers.
  for (long long n = 0; n < q_; ++n) {
    std::vector<int> m(e + 1, 0);
    long long t = n;
    for (int i = 0; i < e; ++i) {
      m[i] = static_cast<int>(t % p);
      t /= p;
    }
    m[e] = 1;
    if (poly_is_irreducible(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }
  validate_and_finish();
}

Field::Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw std::invalid_argument("field: characteristic must be odd");
  if (e < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kSoftCap)
      throw std::invalid_argument("field: p^e exceeds the supported size cap " +
                                  std::to_string(kSoftCap));
  }
  if (static_cast<int>(modulus_.size()) != e + 1)
    throw std::invalid_argument("field: modulus must have degree e (e+1 coefficients)");
  for (auto& c : modulus_) {
    c %= p;
    if (c < 0) c += p;
  }
  if (modulus_[e] != 1) throw std::invalid_argument("field: modulus must be monic");
  if (!poly_is_irreducible(modulus_, p))
    throw std::invalid_argument("field: modulus is reducible over F_p");
  validate_and_finish();
}

void Field::validate_and_finish() {
  if (modulus_.empty()) throw std::logic_error("field: no irreducible modulus found");
  build_tables();
}

Elem Field::from_code(long long code) const {
  if (code < 0 || code >= q_) throw std::invalid_argument("element code out of range");
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::from_coords(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != e_)
    throw std::invalid_argument("element needs exactly e coordinates");
  long long code = 0;
  long long base = 1;
  for (int i = 0; i < e_; ++i) {
    int c = coords[i] % p_;
    if (c < 0) c += p_;
    code += c * base;
    base *= p_;
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::from_prime_subfield(int c) const {
  c %= p_;
  if (c < 0) c += p_;
  return Elem{static_cast<std::uint32_t>(c)};
}

std::vector<int> Field::coords(Elem x) const {
  std::vector<int> out(e_);
  long long c = x.code;
  for (int i = 0; i < e_; ++i) {
    out[i] = static_cast<int>(c % p_);
    c /= p_;
  }
  return out;
}

Elem Field::add(Elem x, Elem y) const {
  if (!add_table_.empty())
    return Elem{static_cast<std::uint32_t>(add_table_[x.code * q_ + y.code])};
  long long a = x.code, b = y.code, out = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    int s = static_cast<int>(a % p_ + b % p_);
    if (s >= p_) s -= p_;
    out += s * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::neg(Elem x) const {
  long long a = x.code, out = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    int d = static_cast<int>(a % p_);
    out += (d ? p_ - d : 0) * base;
    a /= p_;
    base *= p_;
  }
  return Elem{static_cast<std::uint32_t>(out)};
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::mul_poly(Elem x, Elem y) const {
  Poly a = coords(x), b = coords(y);
  return from_coords(poly_mul_mod(a, b, modulus_, p_));
}

Elem Field::mul(Elem x, Elem y) const {
  if (!exp_.empty()) {
    if (x.code == 0 || y.code == 0) return Elem{0};
    long long k = log_[x.code] + log_[y.code];
    if (k >= q_ - 1) k -= q_ - 1;
    return Elem{static_cast<std::uint32_t>(exp_[k])};
  }
  return mul_poly(x, y);
}

Elem Field::inv(Elem x) const {
  if (x.code == 0) throw std::domain_error("field: division by zero");
  if (!exp_.empty()) {
    long long k = (q_ - 1 - log_[x.code]) % (q_ - 1);
    return Elem{static_cast<std::uint32_t>(exp_[k])};
  }
  return pow(x, q_ - 2);
}

Elem Field::pow(Elem x, long long k) const {
  if (x.code == 0) {
    if (k == 0) return one();
    if (k < 0) throw std::domain_error("field: division by zero");
    return zero();
  }
  const long long ord = q_ - 1;
  k %= ord;
  if (k < 0) k += ord;
  if (!exp_.empty()) {
    // log < q <= 1e7 and k < q, so the product stays well inside int64
    const long long lg = static_cast<long long>(log_[x.code]) * k % ord;
    return Elem{static_cast<std::uint32_t>(exp_[lg])};
  }
  Elem r = one(), b = x;
  while (k) {
    if (k & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    k >>= 1;
  }
  return r;
}

Elem Field::scalar_mul(int c, Elem x) const {
  c %= p_;
  if (c < 0) c += p_;
  return mul(from_prime_subfield(c), x);
}

Elem Field::frobenius(Elem x, int i) const {
  if (i < 0 || i >= e_) throw std::invalid_argument("frobenius: exponent must be in [0, e)");
  long long pi = 1;
  for (int k = 0; k < i; ++k) pi *= p_;
  return pow(x, pi);
}

int Field::trace(Elem x) const {
  if (!trace_table_.empty()) return trace_table_[x.code];
  Elem t = zero(), y = x;
  for (int i = 0; i < e_; ++i) {
    t = add(t, y);
    y = pow(y, p_);
  }
  return static_cast<int>(t.code);  // element of the prime subfield
}

long long Field::multiplicative_order(Elem x) const {
  if (x.code == 0) throw std::domain_error("order of zero is undefined");
  long long ord = q_ - 1;
  for (long long l : prime_factors(q_ - 1))
    while (ord % l == 0 && pow(x, ord / l) == one()) ord /= l;
  return ord;
}

void Field::find_primitive() {
  const auto factors = prime_factors(q_ - 1);
  for (long long c = 1; c < q_; ++c) {
    Elem cand{static_cast<std::uint32_t>(c)};
    bool ok = true;
    for (long long l : factors) {
      if (pow(cand, (q_ - 1) / l) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = cand;
      return;
    }
  }
  throw std::logic_error("field: no primitive element found");
}

void Field::build_tables() {
  find_primitive();  // uses the slow polynomial path
  if (q_ <= kLogTableCap) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    Elem cur = one();
    for (long long k = 0; k < q_ - 1; ++k) {
      exp_[k] = static_cast<std::int32_t>(cur.code);
      log_[cur.code] = static_cast<std::int32_t>(k);
      cur = mul_poly(cur, primitive_);
    }
    if (!(cur == one())) throw std::logic_error("field: primitive element order mismatch");
  }
  trace_table_.assign(q_, 0);
  for (long long x = 0; x < q_; ++x) {
    Elem t = zero();
    Elem y{static_cast<std::uint32_t>(x)};
    for (int i = 0; i < e_; ++i) {
      t = add(t, y);
      y = pow(y, p_);
    }
    if (t.code >= static_cast<std::uint32_t>(p_)) throw std::logic_error("trace left prime field");
    trace_table_[x] = static_cast<std::int8_t>(t.code);
  }
  if (q_ <= kAddTableCap) {
    add_table_.assign(q_ * q_, 0);
    for (long long x = 0; x < q_; ++x) {
      for (long long y = 0; y < q_; ++y) {
        long long a = x, b = y, out = 0, base = 1;
        for (int i = 0; i < e_; ++i) {
          int s = static_cast<int>(a % p_ + b % p_);
          if (s >= p_) s -= p_;
          out += s * base;
          a /= p_;
          b /= p_;
          base *= p_;
        }
        add_table_[x * q_ + y] = static_cast<std::int32_t>(out);
      }
    }
  }
}

std::string Field::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p_ << ",\"e\":" << e_ << ",\"modulus\":[";
  for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "],\"primitive\":[";
  const auto pc = coords(primitive_);
  for (size_t i = 0; i < pc.size(); ++i) os << (i ? "," : "") << pc[i];
  os << "]}";
  return os.str();
}

}  // namespace triweight
