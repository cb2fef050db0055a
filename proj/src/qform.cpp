#include "triweight/qform.hpp"

#include <algorithm>
#include <sstream>

namespace triweight {

FormSpec FormSpec::tr_x2(const Field& f) {
  FormSpec s;
  s.coeffs.assign(f.e(), f.zero());
  s.coeffs[0] = f.one();
  return s;
}

FormSpec FormSpec::tr_theta_x2(const Field& f) {
  FormSpec s;
  s.coeffs.assign(f.e(), f.zero());
  s.coeffs[0] = f.primitive();
  return s;
}

std::string FormSpec::to_json(const Field& f) const {
  std::ostringstream os;
  os << "{\"a\":[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    os << (i ? ",[" : "[");
    const auto c = f.coords(coeffs[i]);
    for (size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::string FormProfile::to_json() const {
  std::ostringstream os;
  os << "{\"gram\":[";
  for (int i = 0; i < gram.rows; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < gram.cols; ++j) os << (j ? "," : "") << gram.at(i, j);
    os << "]";
  }
  os << "],\"rank\":" << rank << ",\"sign\":" << sign << ",\"diag\":[";
  for (size_t i = 0; i < diag.size(); ++i) os << (i ? "," : "") << diag[i];
  os << "],\"lf\":[";
  for (int i = 0; i < lf.rows; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < lf.cols; ++j) os << (j ? "," : "") << lf.at(i, j);
    os << "]";
  }
  os << "]}";
  return os.str();
}

DiagResult diagonalize_congruent(const FpMat& sym) {
  const int n = sym.rows, p = sym.p;
  FpMat a = sym;
  FpMat m = FpMat::identity(n, p);
  auto add_row_col = [&](int dst, int src, int c) {
    // v_dst += c * v_src  (row and column together, and track the transform)
    for (int k = 0; k < n; ++k) a.at(dst, k) = (a.at(dst, k) + c * a.at(src, k)) % p;
    for (int k = 0; k < n; ++k) a.at(k, dst) = (a.at(k, dst) + c * a.at(k, src)) % p;
    for (int k = 0; k < n; ++k) m.at(dst, k) = (m.at(dst, k) + c * m.at(src, k)) % p;
  };
  auto swap_row_col = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
  };
  DiagResult out;
  for (int i = 0; i < n; ++i) {
    if (a.at(i, i) == 0) {
      int sw = -1;
      for (int j = i + 1; j < n; ++j)
        if (a.at(j, j) != 0) {
          sw = j;
          break;
        }
      if (sw >= 0) {
        swap_row_col(i, sw);
      } else {
        int jj = -1;
        for (int j = i + 1; j < n; ++j)
          if (a.at(i, j) != 0) {
            jj = j;
            break;
          }
        if (jj < 0) continue;  // row is zero in the trailing block
        // both diagonals zero here, so the new pivot is 2 a_ij != 0 (p odd)
        add_row_col(i, jj, 1);
      }
    }
    const int piv = a.at(i, i);
    const int ipiv = fp_inv(piv, p);
    for (int j = i + 1; j < n; ++j) {
      const int c = a.at(j, i);
      if (c) add_row_col(j, i, p - c * ipiv % p);
    }
    out.diag.push_back(piv);
  }
  out.rank = static_cast<int>(out.diag.size());
  long long prod = 1;
  for (int l : out.diag) prod = prod * l % p;
  out.sign = quadratic_character(out.rank ? prod : 1, p);
  out.transform = std::move(m);
  return out;
}

int eval_form(const Field& f, const FormSpec& spec, Elem x) {
  const int p = f.p();
  long long pi = 1;
  int s = 0;
  for (size_t i = 0; i < spec.coeffs.size(); ++i) {
    if (spec.coeffs[i].code) s += f.trace(f.mul(spec.coeffs[i], f.pow(x, pi + 1)));
    pi *= p;
  }
  return s % p;
}

FormProfile analyze_form(const Field& f, const FormSpec& spec) {
  const int p = f.p(), e = f.e();
  if (static_cast<int>(spec.coeffs.size()) != e)
    throw std::invalid_argument("form: needs exactly e coefficients");
  const int inv2 = fp_inv(2, p);
  FormProfile prof;

  // Gram: B_jk = (1/2) sum_i [ Tr(a_i v_j^{p^i} v_k) + Tr(a_i v_j v_k^{p^i}) ]
  prof.gram = FpMat(e, e, p);
  std::vector<Elem> basis(e);
  for (int j = 0; j < e; ++j) {
    long long c = 1;
    for (int k = 0; k < j; ++k) c *= p;
    basis[j] = f.from_code(c);
  }
  for (int j = 0; j < e; ++j) {
    for (int k = j; k < e; ++k) {
      int s = 0;
      for (int i = 0; i < e; ++i) {
        if (!spec.coeffs[i].code) continue;
        const Elem vj_pi = f.frobenius(basis[j], i);
        const Elem vk_pi = f.frobenius(basis[k], i);
        s += f.trace(f.mul(spec.coeffs[i], f.mul(vj_pi, basis[k])));
        s += f.trace(f.mul(spec.coeffs[i], f.mul(basis[j], vk_pi)));
      }
      const int v = s % p * inv2 % p;
      prof.gram.at(j, k) = v;
      prof.gram.at(k, j) = v;
    }
  }

  auto d = diagonalize_congruent(prof.gram);
  prof.rank = d.rank;
  prof.sign = d.sign;
  prof.diag = std::move(d.diag);

  // L_f(x) = b_0 x + sum_{i>=1} b_i x^{p^i},  b_0 = a_0,
  // b_i = (a_i + a_{e-i}^{p^i}) / 2
  std::vector<Elem> b(e);
  b[0] = spec.coeffs[0];
  const Elem half = f.from_prime_subfield(inv2);
  for (int i = 1; i < e; ++i)
    b[i] = f.mul(half, f.add(spec.coeffs[i], f.frobenius(spec.coeffs[e - i], i)));
  prof.lf = FpMat(e, e, p);
  for (int j = 0; j < e; ++j) {
    Elem y = f.zero();
    for (int i = 0; i < e; ++i)
      if (b[i].code) y = f.add(y, f.mul(b[i], f.frobenius(basis[j], i)));
    const auto yc = f.coords(y);
    for (int i = 0; i < e; ++i) prof.lf.at(i, j) = yc[i];
  }
  if (prof.rank == e) prof.lf_inv = fp_inverse(prof.lf);

  // value tables
  const long long q = f.q();
  if (q <= Field::kLogTableCap) {
    prof.fval.assign(q, 0);
    for (long long x = 0; x < q; ++x)
      prof.fval[x] = static_cast<std::int8_t>(eval_form(f, spec, f.from_code(x)));
    if (prof.rank == e) {
      prof.xb.assign(q, 0);
      prof.fxb.assign(q, 0);
      const auto& li = *prof.lf_inv;
      for (long long bcode = 0; bcode < q; ++bcode) {
        // x_b = L_f^{-1}(-b/2)
        const Elem t = f.mul(half, f.neg(f.from_code(bcode)));
        const auto tc = f.coords(t);
        std::vector<int> xc(e, 0);
        for (int i = 0; i < e; ++i) {
          int s = 0;
          for (int j = 0; j < e; ++j) s += li.at(i, j) * tc[j];
          xc[i] = s % p;
        }
        const Elem x = f.from_coords(xc);
        prof.xb[bcode] = static_cast<std::int32_t>(x.code);
        prof.fxb[bcode] = prof.fval[x.code];
      }
    }
  }
  return prof;
}

int bilinear(const Field& f, const FormSpec& spec, Elem x, Elem y) {
  const int p = f.p();
  const int v = eval_form(f, spec, f.add(x, y)) - eval_form(f, spec, x) - eval_form(f, spec, y);
  return (v % p + p) % p * fp_inv(2, p) % p;
}

Elem eval_lf(const Field& f, const FormProfile& prof, Elem x) {
  const int p = f.p(), e = f.e();
  const auto xc = f.coords(x);
  std::vector<int> out(e, 0);
  for (int i = 0; i < e; ++i) {
    int s = 0;
    for (int j = 0; j < e; ++j) s += prof.lf.at(i, j) * xc[j];
    out[i] = s % p;
  }
  return f.from_coords(out);
}

Elem solve_xb(const Field& f, const FormProfile& prof, Elem b) {
  if (!prof.lf_inv)
    throw std::domain_error("solve_xb: form is degenerate, solution not unique");
  if (!prof.xb.empty()) return f.from_code(prof.xb[b.code]);
  const int p = f.p(), e = f.e();
  const Elem t = f.mul(f.from_prime_subfield(fp_inv(2, p)), f.neg(b));
  const auto tc = f.coords(t);
  std::vector<int> xc(e, 0);
  for (int i = 0; i < e; ++i) {
    int s = 0;
    for (int j = 0; j < e; ++j) s += prof.lf_inv->at(i, j) * tc[j];
    xc[i] = s % p;
  }
  return f.from_coords(xc);
}

RestrictedForm restrict_form(const Field& f, const FormSpec& spec, const Subspace& h) {
  const int p = f.p();
  if (h.ambient != f.e()) throw std::invalid_argument("restrict_form: subspace of F_p^e expected");
  FpMat g(h.dim, h.dim, p);
  std::vector<Elem> rows(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    std::vector<int> c(h.ambient);
    for (int j = 0; j < h.ambient; ++j) c[j] = h.basis.at(i, j);
    rows[i] = f.from_coords(c);
  }
  for (int i = 0; i < h.dim; ++i)
    for (int j = i; j < h.dim; ++j) {
      const int v = i == j ? eval_form(f, spec, rows[i]) : bilinear(f, spec, rows[i], rows[j]);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  auto d = diagonalize_congruent(g);
  return RestrictedForm{d.rank, d.sign};
}

long long count_on_subspace(const Field& f, const FormSpec& spec, const FormProfile& prof,
                            const Subspace& h, int a, CountMethod method) {
  const int p = f.p();
  a = (a % p + p) % p;
  if (method == CountMethod::kOracle) {
    long long cnt = 0;
    for_each_element(h, p, [&](const std::vector<int>& v) {
      if (!prof.fval.empty()) {
        long long code = 0, base = 1;
        for (int i = 0; i < h.ambient; ++i) {
          code += v[i] * base;
          base *= p;
        }
        if (prof.fval[code] == a) ++cnt;
      } else if (eval_form(f, spec, f.from_coords(v)) == a) {
        ++cnt;
      }
    });
    return cnt;
  }
  if (!prof.nondegenerate(f))
    throw std::domain_error("count_on_subspace: closed form needs a non-degenerate ambient form");
  const int r = h.dim;
  if (r == 0) return a == 0 ? 1 : 0;
  const auto rf = restrict_form(f, spec, h);
  const int va = a == 0 ? p - 1 : -1;
  auto ppow = [&](int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v *= p;
    return v;
  };
  if (rf.rank % 2 == 0) {
    const int eta = quadratic_character(rf.rank / 2 % 2 ? p - 1 : 1, p);  // η((-1)^{R/2})
    // p^{r-1} + v(a) η((-1)^{R/2}) ε p^{r-1-R/2}
    return ppow(r - 1) + static_cast<long long>(va) * eta * rf.sign * ppow(r - 1 - rf.rank / 2);
  }
  // p^{r-1} + η((-1)^{(R-1)/2} a) ε p^{r-(R+1)/2}
  long long arg = a;
  if ((rf.rank - 1) / 2 % 2) arg = (p - 1LL) * a % p;
  return ppow(r - 1) +
         static_cast<long long>(quadratic_character(arg, p)) * rf.sign * ppow(r - (rf.rank + 1) / 2);
}

namespace {

// Orthogonal complement (under the polarized bilinear form) of the span of
// the given vectors, as a subspace of F_p^e.
Subspace form_orthogonal(const Field& f, const FormProfile& prof,
                         const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return Subspace::full(f.e(), f.p());
  const Subspace s = make_subspace(f.e(), f.p(), rows);
  return dual_subspace(s, prof.gram);
}

}  // namespace

int isotropy_bound(const Field& f, const FormSpec& spec, const FormProfile& prof) {
  // grow a totally isotropic chain greedily; for non-degenerate forms a
  // maximal chain always has the maximal length (Witt index)
  std::vector<std::vector<int>> chain;
  const int p = f.p();
  for (;;) {
    const Subspace w = form_orthogonal(f, prof, chain);
    const Subspace cur = chain.empty() ? Subspace::zero(f.e(), p) : make_subspace(f.e(), p, chain);
    std::vector<int> found;
    bool ok = false;
    for_each_element(w, p, [&](const std::vector<int>& v) {
      if (ok) return;
      bool zero = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
      if (zero || subspace_contains(cur, p, v)) return;
      if (eval_form(f, spec, f.from_coords(v)) == 0) {
        found = v;
        ok = true;
      }
    });
    if (!ok) break;
    chain.push_back(found);
  }
  return static_cast<int>(chain.size());
}

Subspace find_isotropic(const Field& f, const FormSpec& spec, const FormProfile& prof, int r) {
  if (!prof.nondegenerate(f))
    throw std::domain_error("find_isotropic: form must be non-degenerate");
  if (r < 0 || r > f.e()) throw std::invalid_argument("find_isotropic: bad dimension");
  const int p = f.p();
  if (r == 0) return Subspace::zero(f.e(), p);
  std::vector<std::vector<int>> chain;
  while (static_cast<int>(chain.size()) < r) {
    const Subspace w = form_orthogonal(f, prof, chain);
    const Subspace cur = chain.empty() ? Subspace::zero(f.e(), p) : make_subspace(f.e(), p, chain);
    std::vector<int> found;
    bool ok = false;
    for_each_element(w, p, [&](const std::vector<int>& v) {
      if (ok) return;
      bool zero = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
      if (zero || subspace_contains(cur, p, v)) return;
      if (eval_form(f, spec, f.from_coords(v)) == 0) {
        found = v;
        ok = true;
      }
    });
    if (!ok)
      throw std::domain_error(
          "find_isotropic: no totally isotropic subspace of dimension " + std::to_string(r) +
          " exists (the form vanishes on no subspace beyond dimension " +
          std::to_string(chain.size()) + ")");
    chain.push_back(found);
  }
  const Subspace out = make_subspace(f.e(), p, chain);
  // paranoia: verify exhaustively before returning
  bool all_zero = true;
  for_each_element(out, p, [&](const std::vector<int>& v) {
    if (eval_form(f, spec, f.from_coords(v)) != 0) all_zero = false;
  });
  if (!all_zero || out.dim != r) throw std::logic_error("find_isotropic: construction failed");
  return out;
}

FpMat trace_pairing(const Field& f) {
  const int e = f.e();
  FpMat g(e, e, f.p());
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      long long ci = 1, cj = 1;
      for (int k = 0; k < i; ++k) ci *= f.p();
      for (int k = 0; k < j; ++k) cj *= f.p();
      g.at(i, j) = f.trace(f.mul(f.from_code(ci), f.from_code(cj)));
    }
  return g;
}

FpMat trace_pairing_2(const Field& f) {
  const FpMat t = trace_pairing(f);
  const int e = f.e();
  FpMat g(2 * e, 2 * e, f.p());
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      g.at(i, j) = t.at(i, j);
      g.at(e + i, e + j) = t.at(i, j);
    }
  return g;
}

}  // namespace triweight
