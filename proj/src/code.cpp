#include "triweight/code.hpp"

#include <algorithm>
#include <sstream>

namespace triweight {

namespace {
long long ppow(int p, int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return v;
}
}  // namespace

Code make_code(const Field& f, FormSpec form, Elem alpha) {
  if (alpha.code == 0) throw std::invalid_argument("code: alpha must be nonzero");
  Code c;
  c.p = f.p();
  c.profile = analyze_form(f, form);
  if (!c.profile.nondegenerate(f))
    throw std::invalid_argument("code: the quadratic form must be non-degenerate (rank " +
                                std::to_string(c.profile.rank) + " < e = " +
                                std::to_string(f.e()) + ")");
  c.form = std::move(form);
  c.alpha = alpha;
  c.length = defining_set_size_formula(f);
  c.tr_alpha.assign(f.q(), 0);
  for (long long y = 0; y < f.q(); ++y)
    c.tr_alpha[y] = static_cast<std::int8_t>(f.trace(f.mul(alpha, f.from_code(y))));
  return c;
}

long long defining_set_size_formula(const Field& f) { return ppow(f.p(), 2 * f.e() - 1) - 1; }

void for_each_defining(const Field& f, const Code& c,
                       const std::function<void(Elem, Elem)>& fn) {
  for (long long x = 0; x < f.q(); ++x)
    for (long long y = 0; y < f.q(); ++y) {
      const Elem ex{static_cast<std::uint32_t>(x)}, ey{static_cast<std::uint32_t>(y)};
      if (in_defining_set(c, ex, ey)) fn(ex, ey);
    }
}

long long codeword_weight(const Field& f, const Code& c, Elem u, Elem v, WeightMethod method) {
  if (u.code == 0 && v.code == 0)
    throw std::invalid_argument("codeword_weight: (0,0) does not index a codeword");
  const int p = f.p(), e = f.e();
  if (method == WeightMethod::kEnumerate) {
    // Tr(u x) and Tr(v y) rows, then a scan over the defining set
    std::vector<std::int8_t> tru(f.q()), trv(f.q());
    for (long long t = 0; t < f.q(); ++t) {
      tru[t] = static_cast<std::int8_t>(f.trace(f.mul(u, f.from_code(t))));
      trv[t] = static_cast<std::int8_t>(f.trace(f.mul(v, f.from_code(t))));
    }
    long long w = 0;
    for (long long x = 0; x < f.q(); ++x) {
      const int fx = c.profile.fval[x];
      for (long long y = 0; y < f.q(); ++y) {
        if (x == 0 && y == 0) continue;
        const int s = fx + c.tr_alpha[y];
        if (s != 0 && s != p) continue;
        const int t = tru[x] + trv[y];
        if (t != 0 && t != p) ++w;
      }
    }
    return w;
  }

  const long long w_plain = static_cast<long long>(p - 1) * ppow(p, 2 * e - 2);
  // is v a prime-subfield multiple of alpha?
  bool v_in_orbit = false;
  if (v.code != 0) {
    const Elem ratio = f.mul(v, f.inv(c.alpha));
    v_in_orbit = f.in_prime_subfield(ratio) && ratio.code != 0;
  }
  if (!v_in_orbit) return w_plain;

  const int fxu = u.code == 0 ? 0 : c.profile.fxb[u.code];
  if (e % 2 == 1) {
    if (u.code == 0 || fxu == 0) return w_plain;
    const int sgn0 = ((p - 1) * (e - 1) / 4) % 2 ? -1 : 1;
    const int s = c.profile.sign * quadratic_character(fxu, p) * sgn0;
    return w_plain - s * ppow(p, (3 * e - 3) / 2);
  }
  const int eps = c.profile.sign * ((e * (p - 1) / 4) % 2 ? -1 : 1);
  if (u.code == 0 || fxu == 0) return w_plain - static_cast<long long>(eps) * (p - 1) * ppow(p, (3 * e - 4) / 2);
  return w_plain + static_cast<long long>(eps) * ppow(p, (3 * e - 4) / 2);
}

long long WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, m] : entries)
    if (w > 0) return w;
  return 0;
}

long long WeightDistribution::max_nonzero_weight() const {
  return entries.empty() ? 0 : entries.back().first;
}

std::string WeightDistribution::to_json() const {
  std::ostringstream os;
  os << "{\"length\":" << length << ",\"dimension\":" << dimension << ",\"weights\":[";
  for (size_t i = 0; i < entries.size(); ++i)
    os << (i ? ",[" : "[") << entries[i].first << "," << entries[i].second << "]";
  os << "]}";
  return os.str();
}

WeightDistribution weight_distribution_formula(const Field& f, const Code& c) {
  const int p = f.p(), e = f.e();
  if (e < 2)
    throw std::invalid_argument("weight_distribution_formula: needs e >= 2");
  WeightDistribution wd;
  wd.length = c.length;
  wd.dimension = 2 * e;
  const long long w1 = static_cast<long long>(p - 1) * ppow(p, 2 * e - 2);
  long long w2, w3, a1, a2, a3;
  if (e % 2 == 1) {
    const long long gap = ppow(p, (3 * e - 3) / 2);
    w2 = w1 - gap;
    w3 = w1 + gap;
    a1 = ppow(p, 2 * e) - static_cast<long long>(p - 1) * (p - 1) * ppow(p, e - 1) - 1;
    a2 = static_cast<long long>(p - 1) * (p - 1) * (ppow(p, e - 1) + ppow(p, (e - 1) / 2)) / 2;
    a3 = static_cast<long long>(p - 1) * (p - 1) * (ppow(p, e - 1) - ppow(p, (e - 1) / 2)) / 2;
  } else {
    const int eps = c.profile.sign * ((e * (p - 1) / 4) % 2 ? -1 : 1);
    w2 = ppow(p, (3 * e - 4) / 2) * (p - 1) * (ppow(p, e / 2) - eps);
    w3 = ppow(p, (3 * e - 4) / 2) * (static_cast<long long>(p - 1) * ppow(p, e / 2) + eps);
    a1 = ppow(p, 2 * e) - static_cast<long long>(p - 1) * ppow(p, e) - 1;
    a2 = ppow(p, (e - 2) / 2) * (p - 1) * (ppow(p, e / 2) + static_cast<long long>(eps) * (p - 1));
    a3 = ppow(p, (e - 2) / 2) * static_cast<long long>(p - 1) * (p - 1) * (ppow(p, e / 2) - eps);
  }
  wd.entries = {{0, 1}, {w1, a1}, {w2, a2}, {w3, a3}};
  std::sort(wd.entries.begin(), wd.entries.end());
  return wd;
}

PlessReport pless_check(int p, const WeightDistribution& wd) {
  PlessReport r;
  long long pk = 1;
  for (int i = 0; i < wd.dimension; ++i) pk *= p;
  for (const auto& [w, m] : wd.entries) {
    if (w == 0) continue;
    r.mult_sum += m;
    r.first_moment += w * m;
  }
  r.mult_expected = pk - 1;
  r.first_moment_expected = wd.length * (p - 1) * (pk / p);
  if (wd.dimension == 0) r.first_moment_expected = 0;
  r.pass = r.mult_sum == r.mult_expected && r.first_moment == r.first_moment_expected;
  return r;
}

bool positions_support_dual_distance_2(const Field& f,
                                       const std::vector<std::pair<Elem, Elem>>& positions) {
  for (const auto& [x, y] : positions) {
    bool witness = false;
    for (long long u = 0; u < f.q() && !witness; ++u)
      for (long long v = 0; v < f.q(); ++v) {
        const int t =
            f.trace(f.mul(f.from_code(u), x)) + f.trace(f.mul(f.from_code(v), y));
        if (t % f.p() != 0) {
          witness = true;
          break;
        }
      }
    if (!witness) return false;  // a coordinate every codeword kills
  }
  return true;
}

bool dual_distance_at_least_2(const Field& f, const Code& c) {
  std::vector<std::pair<Elem, Elem>> pos;
  pos.reserve(c.length);
  for_each_defining(f, c, [&](Elem x, Elem y) { pos.emplace_back(x, y); });
  return positions_support_dual_distance_2(f, pos);
}

RatioReport secret_sharing_ratio(int p, const WeightDistribution& wd) {
  RatioReport r;
  r.w_min = wd.min_nonzero_weight();
  r.w_max = wd.max_nonzero_weight();
  r.ok = static_cast<long long>(p) * r.w_min > static_cast<long long>(p - 1) * r.w_max;
  return r;
}

}  // namespace triweight
