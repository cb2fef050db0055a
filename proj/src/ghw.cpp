#include "triweight/ghw.hpp"

#include <algorithm>

namespace triweight {

namespace {

long long ppow(int p, int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return v;
}

// p^a + coef * p^b with possibly negative exponents, asserting the result
// is a nonnegative integer (it always is for the closed forms here).
long long combine_p_powers(int p, int a, long long coef, int b) {
  const int k = std::max(0, -std::min(a, b));
  __int128 num = static_cast<__int128>(ppow(p, a + k)) +
                 static_cast<__int128>(coef) * ppow(p, b + k);
  const long long den = ppow(p, k);
  if (num % den != 0) throw std::logic_error("combine_p_powers: non-integral value");
  const __int128 v = num / den;
  if (v < 0) throw std::logic_error("combine_p_powers: negative count");
  return static_cast<long long>(v);
}

// Is alpha in the span of the second components of h's basis rows?
bool alpha_in_second_projection(const Field& f, const Subspace& h, Elem alpha) {
  const int e = f.e(), p = f.p();
  FpMat m(h.dim + 1, e, p);
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < e; ++j) m.at(i, j) = h.basis.at(i, e + j);
  const auto ac = f.coords(alpha);
  for (int j = 0; j < e; ++j) m.at(h.dim, j) = ac[j];
  FpMat proj(h.dim, e, p);
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < e; ++j) proj.at(i, j) = h.basis.at(i, e + j);
  return fp_rank(std::move(m)) == fp_rank(std::move(proj));
}

}  // namespace

long long n_of_subspace(const Field& f, const Code& c, const Subspace& h, NMethod method) {
  const int p = f.p(), e = f.e(), m = 2 * e;
  if (h.ambient != m) throw std::invalid_argument("n_of_subspace: subspace of F_p^{2e} expected");
  if (method == NMethod::kCount) {
    const Subspace dual = dual_subspace(h, trace_pairing_2(f));
    return defining_hits(f, c, dual);  // zero vector included = the +1
  }
  const int r = h.dim;
  if (!alpha_in_second_projection(f, h, c.alpha)) return ppow(p, m - r - 1);
  // walk the fiber {(y1, -alpha) in H} and accumulate the square-class /
  // zero-test statistic of f at the preimages under L_f(x) = -y1/2
  const Elem neg_alpha = f.neg(c.alpha);
  long long stat = 0;
  for_each_element(h, p, [&](const std::vector<int>& v) {
    long long y1 = 0, y2 = 0, base = 1;
    for (int j = 0; j < e; ++j) {
      y1 += v[j] * base;
      y2 += v[e + j] * base;
      base *= p;
    }
    if (y2 != neg_alpha.code) return;
    const int fx = c.profile.fxb[y1];
    if (e % 2 == 1) {
      stat += quadratic_character(fx, p);
    } else {
      stat += fx == 0 ? p - 1 : -1;
    }
  });
  if (e % 2 == 1) {
    const int sgn = c.profile.sign * (((p - 1) * (e - 1) / 4) % 2 ? -1 : 1);
    return combine_p_powers(p, m - r - 1, sgn * stat, (3 * e - 2 * r - 1) / 2);
  }
  const int eps = c.profile.sign * ((e * (p - 1) / 4) % 2 ? -1 : 1);
  return combine_p_powers(p, m - r - 1, eps * stat, (3 * e - 2 * r - 2) / 2);
}

int hierarchy_split_dim(const Field& f, const FormProfile& prof) {
  const int p = f.p(), e = f.e();
  if (e % 2 == 1) return (e - 1) / 2;
  const int match = (e * (p - 1) / 4) % 2 ? -1 : 1;
  return prof.sign == match ? e / 2 : (e - 2) / 2;
}

GhwEntry ghw_brute(const Field& f, const Code& c, int r, const ExecPolicy& pol) {
  const int e = f.e();
  if (r < 1 || r > 2 * e)
    throw std::invalid_argument("ghw: r must lie in [1, 2e]");
  const int s = 2 * e - r;
  const MaxIntersection mi = max_defining_intersection(f, c, s, pol);
  GhwEntry out;
  out.r = r;
  out.d = c.length - mi.best;
  out.method = "brute";
  out.witness = mi.witness;
  return out;
}

long long ghw_formula(const Field& f, const Code& c, int r) {
  const int p = f.p(), e = f.e();
  if (e < 3) throw std::invalid_argument("ghw_formula: closed form needs e >= 3");
  if (r < 1 || r > 2 * e) throw std::invalid_argument("ghw: r must lie in [1, 2e]");
  const int e0 = hierarchy_split_dim(f, c.profile);
  if (r >= e - e0 + 1) return ppow(p, 2 * e - 1) - ppow(p, 2 * e - r);
  const long long head = ppow(p, 2 * e - 1) - ppow(p, 2 * e - r - 1);
  if (e % 2 == 1) return head - ppow(p, (3 * e - 3) / 2);
  const int match = (e * (p - 1) / 4) % 2 ? -1 : 1;
  if (c.profile.sign == match) return head - static_cast<long long>(p - 1) * ppow(p, (3 * e - 4) / 2);
  return head - ppow(p, (3 * e - 4) / 2);
}

long long level_set_size(const Field& f, const FormProfile& prof, int a) {
  const int p = f.p(), e = f.e();
  a = (a % p + p) % p;
  // |{x : f(x) = a}| for the non-degenerate form, from the full-space count
  const int va = a == 0 ? p - 1 : -1;
  if (e % 2 == 0) {
    const int eta = quadratic_character(e / 2 % 2 ? p - 1 : 1, p);
    return ppow(p, e - 1) + static_cast<long long>(va) * eta * prof.sign * ppow(p, e / 2 - 1);
  }
  long long arg = a;
  if ((e - 1) / 2 % 2) arg = static_cast<long long>(p - 1) * a % p;
  return ppow(p, e - 1) +
         static_cast<long long>(quadratic_character(arg, p)) * prof.sign * ppow(p, (e - 1) / 2);
}

long long ghw_reference_level_set(const Field& f, const FormProfile& prof, int a, int r) {
  const int p = f.p(), e = f.e();
  a = (a % p + p) % p;
  if (a == 0)
    throw std::invalid_argument("reference hierarchy: the level must be nonzero (a in F_p^*)");
  if (!prof.lf_inv)
    throw std::invalid_argument("reference hierarchy: form must be non-degenerate");
  if (r < 1 || r > e) throw std::invalid_argument("reference hierarchy: r must lie in [1, e]");
  if (e % 2 == 0) {
    if (e <= 2) throw std::invalid_argument("reference hierarchy: even e needs e > 2");
    const int eps = prof.sign * ((e * (p - 1) / 4) % 2 ? -1 : 1);
    if (r == e) return ppow(p, e - 1) - static_cast<long long>(eps) * ppow(p, (e - 2) / 2);
    if (2 * r <= e)
      return ppow(p, e - 1) - ppow(p, e - r - 1) -
             static_cast<long long>(eps + 1) * ppow(p, (e - 2) / 2);
    return ppow(p, e - 1) - 2 * ppow(p, e - r - 1) - static_cast<long long>(eps) * ppow(p, (e - 2) / 2);
  }
  if (e < 3) throw std::invalid_argument("reference hierarchy: odd e needs e >= 3");
  const int want = (((p - 1) * (e - 1) / 4) % 2 ? -1 : 1) * prof.sign;
  if (quadratic_character(a, p) != want)
    throw std::invalid_argument(
        "reference hierarchy: level class not covered (need eta(a) = " + std::to_string(want) +
        " for odd e; the complementary class has no closed form here)");
  if (r == e) return ppow(p, e - 1) + ppow(p, (e - 1) / 2);
  if (2 * r < e) return ppow(p, e - 1) - ppow(p, e - r - 1);
  return ppow(p, e - 1) + ppow(p, (e - 1) / 2) - 2 * ppow(p, e - r - 1);
}

namespace {

// Scan a subspace for an element with a prescribed property, skipping the
// span of `avoid`.
std::optional<Elem> find_in_subspace(const Field& f, const Subspace& w,
                                     const std::function<bool(Elem)>& pred) {
  std::optional<Elem> out;
  for_each_element(w, f.p(), [&](const std::vector<int>& v) {
    if (out) return;
    const Elem x = f.from_coords(v);
    if (x.code == 0) return;
    if (pred(x)) out = x;
  });
  return out;
}

std::vector<int> elem_coords(const Field& f, Elem x) { return f.coords(x); }

}  // namespace

Subspace hierarchy_witness(const Field& f, const Code& c, int r) {
  const int p = f.p(), e = f.e();
  if (e < 3) throw std::invalid_argument("hierarchy witness: needs e >= 3");
  const int e0 = hierarchy_split_dim(f, c.profile);
  if (r < 1 || r > e - e0)
    throw std::invalid_argument("hierarchy witness: constructive range is 1 <= r <= " +
                                std::to_string(e - e0));
  const int match = (e % 2 == 0) ? ((e * (p - 1) / 4) % 2 ? -1 : 1) : 0;
  const int eps = e % 2 == 0 ? c.profile.sign * match : 0;

  // Pick U (dimension r-1) and a shift w with f constant-class on w + U.
  std::vector<std::vector<int>> u_rows;
  Elem shift = f.zero();
  if (e % 2 == 1) {
    const Subspace u = find_isotropic(f, c.form, c.profile, r - 1);
    for (int i = 0; i < u.dim; ++i) {
      std::vector<int> row(e);
      for (int j = 0; j < e; ++j) row[j] = u.basis.at(i, j);
      u_rows.push_back(row);
    }
    const Subspace w = dual_subspace(u.dim ? u : Subspace::zero(e, p), c.profile.gram);
    const int target = c.profile.sign * (((p - 1) * (e - 1) / 4) % 2 ? -1 : 1);
    const auto found = find_in_subspace(f, w, [&](Elem x) {
      return quadratic_character(c.profile.fval[x.code], p) == target;
    });
    if (!found) throw std::logic_error("hierarchy witness: no shift in the favorable class");
    shift = *found;
  } else if (eps == 1) {
    const Subspace j = find_isotropic(f, c.form, c.profile, r);
    for (int i = 0; i + 1 < j.dim; ++i) {
      std::vector<int> row(e);
      for (int k = 0; k < e; ++k) row[k] = j.basis.at(i, k);
      u_rows.push_back(row);
    }
    std::vector<int> last(e);
    for (int k = 0; k < e; ++k) last[k] = j.basis.at(j.dim - 1, k);
    shift = f.from_coords(last);
  } else if (2 * r <= e) {
    const Subspace u = find_isotropic(f, c.form, c.profile, r - 1);
    for (int i = 0; i < u.dim; ++i) {
      std::vector<int> row(e);
      for (int j = 0; j < e; ++j) row[j] = u.basis.at(i, j);
      u_rows.push_back(row);
    }
    const Subspace w = dual_subspace(u.dim ? u : Subspace::zero(e, p), c.profile.gram);
    const auto found =
        find_in_subspace(f, w, [&](Elem x) { return c.profile.fval[x.code] != 0; });
    if (!found) throw std::logic_error("hierarchy witness: no anisotropic shift found");
    shift = *found;
  } else {
    // r = e/2 + 1 with the mismatched sign: extend an isotropic subspace of
    // dimension r-2 by a pair (g1, g2) whose affine line c g1 + g2 avoids
    // the zero set of f entirely
    const Subspace u0 = find_isotropic(f, c.form, c.profile, r - 2);
    std::vector<std::vector<int>> base_rows;
    for (int i = 0; i < u0.dim; ++i) {
      std::vector<int> row(e);
      for (int j = 0; j < e; ++j) row[j] = u0.basis.at(i, j);
      base_rows.push_back(row);
    }
    const Subspace w = dual_subspace(u0.dim ? u0 : Subspace::zero(e, p), c.profile.gram);
    bool done = false;
    std::vector<int> g1c, g2c;
    for_each_element(w, p, [&](const std::vector<int>& v1) {
      if (done) return;
      const Elem g1 = f.from_coords(v1);
      if (g1.code == 0 || subspace_contains(u0, p, v1)) return;
      for_each_element(w, p, [&](const std::vector<int>& v2) {
        if (done) return;
        auto rows = base_rows;
        rows.push_back(v1);
        const Subspace span1 = make_subspace(e, p, rows);
        if (subspace_contains(span1, p, v2)) return;
        for (int cc = 0; cc < p; ++cc) {
          Elem m = f.from_coords(v2);
          m = f.add(m, f.scalar_mul(cc, f.from_coords(v1)));
          if (c.profile.fval[m.code] == 0) return;
        }
        g1c = v1;
        g2c = v2;
        done = true;
      });
    });
    if (!done) throw std::logic_error("hierarchy witness: no anisotropic affine line found");
    u_rows = base_rows;
    u_rows.push_back(g1c);
    shift = f.from_coords(g2c);
  }

  // mu_i = u_i + shift (i < r), mu_r = shift; rows (L_f(mu_i), -alpha)
  const Elem neg_alpha = f.neg(c.alpha);
  std::vector<std::vector<int>> rows;
  auto push_row = [&](Elem mu) {
    const Elem lf = eval_lf(f, c.profile, mu);
    std::vector<int> row(2 * e);
    const auto a = elem_coords(f, lf);
    const auto b = elem_coords(f, neg_alpha);
    for (int j = 0; j < e; ++j) {
      row[j] = a[j];
      row[e + j] = b[j];
    }
    rows.push_back(std::move(row));
  };
  for (const auto& ur : u_rows) push_row(f.add(f.from_coords(ur), shift));
  push_row(shift);
  const Subspace h = make_subspace(2 * e, p, rows);
  if (h.dim != r) throw std::logic_error("hierarchy witness: construction degenerated");
  return h;
}

long long hierarchy_witness_target(const Field& f, const Code& c, int r) {
  const int p = f.p(), e = f.e();
  if (e % 2 == 1) return ppow(p, 2 * e - r - 1) + ppow(p, (3 * e - 3) / 2);
  const int match = (e * (p - 1) / 4) % 2 ? -1 : 1;
  if (c.profile.sign == match)
    return ppow(p, 2 * e - r - 1) + static_cast<long long>(p - 1) * ppow(p, (3 * e - 4) / 2);
  return ppow(p, 2 * e - r - 1) + ppow(p, (3 * e - 4) / 2);
}

}  // namespace triweight
