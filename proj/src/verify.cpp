#include "triweight/verify.hpp"

#include <algorithm>
#include <sstream>

namespace triweight {

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

int VerifyReport::failures() const {
  return static_cast<int>(
      std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; }));
}

namespace {

CheckResult ok(std::string name) { return CheckResult{std::move(name), true, ""}; }

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

long long ppow(int p, int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return v;
}

WeightDistribution histogram_to_distribution(const Field& f, const Code& c,
                                             const std::vector<long long>& hist) {
  WeightDistribution wd;
  wd.length = c.length;
  wd.dimension = 2 * f.e();
  wd.entries.emplace_back(0, 1);
  for (long long w = 1; w < static_cast<long long>(hist.size()); ++w)
    if (hist[w]) wd.entries.emplace_back(w, hist[w]);
  return wd;
}

}  // namespace

std::vector<CheckResult> check_gauss_sum_laws(const std::vector<int>& primes) {
  std::vector<CheckResult> out;
  for (int p : primes) {
    const CycInt g = gauss_sum(p);
    const long long pstar = ((p - 1) / 2) % 2 ? -static_cast<long long>(p) : p;
    if (g * g == CycInt::rational(p, pstar))
      out.push_back(ok("gauss sum square p=" + std::to_string(p)));
    else
      out.push_back(fail("gauss sum square p=" + std::to_string(p),
                         "g^2 = " + (g * g).str() + " != " + std::to_string(pstar)));
    bool conj_ok = true;
    for (int z = 1; z < p && conj_ok; ++z) {
      CycInt lhs = g.galois(z);
      CycInt rhs = g;
      rhs.scale(quadratic_character(z, p));
      conj_ok = lhs == rhs;
    }
    out.push_back(conj_ok ? ok("gauss sum conjugates p=" + std::to_string(p))
                          : fail("gauss sum conjugates p=" + std::to_string(p),
                                 "sigma_z(g) != eta(z) g for some z"));
  }
  return out;
}

CheckResult check_weil_identities(const Field& f, const FormSpec& spec, const FormProfile& prof,
                                  const std::string& label) {
  const std::string name = "weil closed form " + label;
  for (long long b = 0; b < f.q(); ++b) {
    const Elem eb = f.from_code(b);
    if (!(weil_sum(f, spec, eb) == weil_sum_closed(f, spec, prof, eb)))
      return fail(name, "mismatch at b=" + std::to_string(b));
  }
  return ok(name);
}

std::vector<CheckResult> check_orbit_sums(const std::vector<int>& primes, int rmax) {
  std::vector<CheckResult> out;
  for (int p : primes) {
    bool all = true;
    std::string first;
    for (int r = 1; r <= rmax && all; ++r) {
      for (int z = 0; z < p && all; ++z) {
        if (!(orbit_sum_cleared(p, r, z) == orbit_sum_expected(p, r, z))) {
          all = false;
          first = "r=" + std::to_string(r) + " z=" + std::to_string(z);
        }
      }
    }
    out.push_back(all ? ok("orbit sums p=" + std::to_string(p))
                      : fail("orbit sums p=" + std::to_string(p), "first mismatch at " + first));
  }
  return out;
}

CheckResult check_intersection_counts(const Field& f, const FormSpec& spec,
                                      const FormProfile& prof, int maxdim,
                                      const std::string& label) {
  const std::string name = "level-set counts " + label;
  for (int r = 0; r <= maxdim; ++r) {
    SubspaceEnumerator en(f.p(), f.e(), r);
    Subspace h;
    while (en.next(h)) {
      for (int a = 0; a < f.p(); ++a) {
        const long long lhs = count_on_subspace(f, spec, prof, h, a, CountMethod::kFormula);
        const long long rhs = count_on_subspace(f, spec, prof, h, a, CountMethod::kOracle);
        if (lhs != rhs)
          return fail(name, "dim=" + std::to_string(r) + " a=" + std::to_string(a) +
                                " formula=" + std::to_string(lhs) +
                                " oracle=" + std::to_string(rhs));
      }
    }
  }
  return ok(name);
}

CheckResult check_length(const Field& f, const Code& c, const std::string& label) {
  const std::string name = "defining set size " + label;
  long long n = 0;
  for_each_defining(f, c, [&](Elem, Elem) { ++n; });
  if (n != c.length)
    return fail(name, "counted " + std::to_string(n) + ", closed form " +
                          std::to_string(c.length));
  return ok(name);
}

CheckResult check_weights_exhaustive(const Field& f, const Code& c, const std::string& label) {
  const std::string name = "codeword weights " + label;
  for (long long u = 0; u < f.q(); ++u)
    for (long long v = 0; v < f.q(); ++v) {
      if (u == 0 && v == 0) continue;
      const Elem eu = f.from_code(u), ev = f.from_code(v);
      const long long a = codeword_weight(f, c, eu, ev, WeightMethod::kFormula);
      const long long b = codeword_weight(f, c, eu, ev, WeightMethod::kEnumerate);
      if (a != b)
        return fail(name, "(u,v)=(" + std::to_string(u) + "," + std::to_string(v) +
                              "): formula=" + std::to_string(a) + " enumerate=" +
                              std::to_string(b));
    }
  return ok(name);
}

CheckResult check_distribution(const Field& f, const Code& c, const ExecPolicy& pol,
                               const std::string& label) {
  const std::string name = "weight distribution " + label;
  const WeightDistribution formula = weight_distribution_formula(f, c);
  const auto hist = weight_histogram(f, c, pol);
  const WeightDistribution enumd = histogram_to_distribution(f, c, hist);
  if (!(formula == enumd)) {
    std::ostringstream os;
    os << "formula " << formula.to_json() << " vs enumeration " << enumd.to_json();
    return fail(name, os.str());
  }
  if (hist[0] != 0) return fail(name, "a nonzero functional has weight 0");
  int nonzero = 0;
  for (const auto& [w, m] : enumd.entries)
    if (w > 0) ++nonzero;
  if (f.e() >= 2 && nonzero != 3)
    return fail(name, "expected exactly 3 nonzero weights, found " + std::to_string(nonzero));
  const PlessReport pr = pless_check(f.p(), enumd);
  if (!pr.pass)
    return fail(name, "power moments: " + std::to_string(pr.mult_sum) + "/" +
                          std::to_string(pr.mult_expected) + ", " +
                          std::to_string(pr.first_moment) + "/" +
                          std::to_string(pr.first_moment_expected));
  return ok(name);
}

CheckResult check_dual_distance(const Field& f, const Code& c, const std::string& label) {
  const std::string name = "dual distance " + label;
  return dual_distance_at_least_2(f, c) ? ok(name)
                                        : fail(name, "a coordinate is identically zero");
}

CheckResult check_ratio(const Field& f, const Code& c, const std::string& label) {
  const std::string name = "weight ratio " + label;
  const auto wd = weight_distribution_formula(f, c);
  const auto rr = secret_sharing_ratio(f.p(), wd);
  if (!rr.ok)
    return fail(name, std::to_string(f.p()) + "*" + std::to_string(rr.w_min) +
                          " <= " + std::to_string(f.p() - 1) + "*" + std::to_string(rr.w_max));
  return ok(name);
}

CheckResult check_n_sweep(const Field& f, const Code& c, int maxdim, const std::string& label) {
  const std::string name = "annihilator counts " + label;
  for (int r = 0; r <= maxdim; ++r) {
    SubspaceEnumerator en(f.p(), 2 * f.e(), r);
    Subspace h;
    while (en.next(h)) {
      const long long a = n_of_subspace(f, c, h, NMethod::kCount);
      const long long b = n_of_subspace(f, c, h, NMethod::kCharSum);
      if (a != b)
        return fail(name, "dim=" + std::to_string(r) + ": count=" + std::to_string(a) +
                              " charsum=" + std::to_string(b) + " basis=" + h.to_json());
    }
  }
  return ok(name);
}

CheckResult check_hierarchy(const Field& f, const Code& c, const std::vector<int>& rs,
                            const ExecPolicy& pol, const std::string& label,
                            std::vector<std::string>* skipped) {
  const std::string name = "weight hierarchy " + label;
  const long long d1 = ghw_formula(f, c, 1);
  const auto wd = weight_distribution_formula(f, c);
  if (d1 != wd.min_nonzero_weight())
    return fail(name, "d_1 = " + std::to_string(d1) + " != minimum weight " +
                          std::to_string(wd.min_nonzero_weight()));
  if (ghw_formula(f, c, 2 * f.e()) != c.length)
    return fail(name, "d_{2e} != n");
  long long prev = 0;
  for (int r = 1; r <= 2 * f.e(); ++r) {
    const long long d = ghw_formula(f, c, r);
    if (d <= prev)
      return fail(name, "monotonicity broken at r=" + std::to_string(r));
    prev = d;
  }
  for (int r : rs) {
    if (skipped && max_intersection_cost(f.p(), f.e(), 2 * f.e() - r) > pol.budget) {
      skipped->push_back(name + ": r=" + std::to_string(r) + " over budget");
      continue;
    }
    const GhwEntry brute = ghw_brute(f, c, r, pol);
    const long long form = ghw_formula(f, c, r);
    if (brute.d != form)
      return fail(name, "r=" + std::to_string(r) + ": brute=" + std::to_string(brute.d) +
                            " formula=" + std::to_string(form));
    if (brute.witness) {
      const long long recount = defining_hits(f, c, *brute.witness) - 1;
      if (recount != c.length - brute.d)
        return fail(name, "witness recount mismatch at r=" + std::to_string(r));
    }
  }
  return ok(name);
}

CheckResult check_alpha_invariance(const Field& f, const FormSpec& spec,
                                   const std::vector<Elem>& alphas, const ExecPolicy& pol,
                                   const std::string& label) {
  const std::string name = "alpha invariance " + label;
  std::optional<WeightDistribution> base;
  std::optional<std::vector<long long>> base_hier;
  for (const Elem a : alphas) {
    const Code c = make_code(f, spec, a);
    const auto wd_f = weight_distribution_formula(f, c);
    const auto wd_e = histogram_to_distribution(f, c, weight_histogram(f, c, pol));
    if (!(wd_f == wd_e))
      return fail(name, "methods disagree at alpha=" + std::to_string(a.code));
    if (!base) {
      base = wd_f;
    } else if (!(*base == wd_f)) {
      return fail(name, "distribution changed at alpha=" + std::to_string(a.code));
    }
    std::vector<long long> hier;
    for (int r = 1; r <= 2 * f.e(); ++r) {
      const auto cost = max_intersection_cost(f.p(), f.e(), 2 * f.e() - r);
      if (cost > pol.budget) {
        hier.push_back(ghw_formula(f, c, r));
      } else {
        hier.push_back(ghw_brute(f, c, r, pol).d);
      }
    }
    if (!base_hier) {
      base_hier = hier;
    } else if (*base_hier != hier) {
      return fail(name, "hierarchy changed at alpha=" + std::to_string(a.code));
    }
  }
  return ok(name);
}

CheckResult check_witness_construction(const Field& f, const Code& c, const std::string& label) {
  const std::string name = "constructive maximizers " + label;
  const int e0 = hierarchy_split_dim(f, c.profile);
  for (int r = 1; r <= f.e() - e0; ++r) {
    Subspace h;
    try {
      h = hierarchy_witness(f, c, r);
    } catch (const std::exception& ex) {
      return fail(name, "r=" + std::to_string(r) + ": " + ex.what());
    }
    const long long n_count = n_of_subspace(f, c, h, NMethod::kCount);
    const long long target = hierarchy_witness_target(f, c, r);
    if (n_count != target)
      return fail(name, "r=" + std::to_string(r) + ": reached " + std::to_string(n_count) +
                            ", target " + std::to_string(target));
    if (c.length + 1 - n_count != ghw_formula(f, c, r))
      return fail(name, "r=" + std::to_string(r) + ": N inconsistent with closed-form d_r");
  }
  return ok(name);
}

CheckResult check_reference_hierarchy(const Field& f, const FormSpec& spec,
                                      const FormProfile& prof, const std::string& label) {
  const std::string name = "reference hierarchy " + label;
  const int p = f.p(), e = f.e();
  std::vector<int> levels;
  if (e % 2 == 1) {
    const int want = (((p - 1) * (e - 1) / 4) % 2 ? -1 : 1) * prof.sign;
    for (int a = 1; a < p; ++a)
      if (quadratic_character(a, p) == want) levels.push_back(a);
  } else {
    for (int a = 1; a < p; ++a) levels.push_back(a);
  }
  for (int a : levels) {
    const long long na = level_set_size(f, prof, a);
    {
      long long cnt = 0;
      for (long long x = 1; x < f.q(); ++x)
        if (eval_form(f, spec, f.from_code(x)) == a) ++cnt;
      if (cnt != na)
        return fail(name, "level size a=" + std::to_string(a) + ": closed form " +
                              std::to_string(na) + ", counted " + std::to_string(cnt));
    }
    for (int r = 1; r <= e; ++r) {
      // exhaustive max |level set ∩ H| over (e-r)-dimensional subspaces
      long long best = -1;
      SubspaceEnumerator en(p, e, e - r);
      Subspace h;
      while (en.next(h)) {
        const long long cnt = count_on_subspace(f, spec, prof, h, a, CountMethod::kOracle);
        best = std::max(best, cnt);
      }
      const long long brute = na - best;
      const long long closed = ghw_reference_level_set(f, prof, a, r);
      if (brute != closed)
        return fail(name, "a=" + std::to_string(a) + " r=" + std::to_string(r) + ": brute " +
                              std::to_string(brute) + ", closed form " + std::to_string(closed));
    }
  }
  return ok(name);
}

CheckResult control_sign_flip(const Field& f, const FormSpec& spec) {
  FormProfile prof = analyze_form(f, spec);
  prof.sign = -prof.sign;
  const CheckResult sweep = check_weil_identities(f, spec, prof, "(sign flipped)");
  return sweep.pass ? fail("negative control: sign flip", "flipped sign went undetected")
                    : ok("negative control: sign flip");
}

CheckResult control_zero_position(const Field& f, const Code& c) {
  std::vector<std::pair<Elem, Elem>> pos;
  pos.emplace_back(f.zero(), f.zero());
  for_each_defining(f, c, [&](Elem x, Elem y) {
    if (pos.size() < 32) pos.emplace_back(x, y);
  });
  return positions_support_dual_distance_2(f, pos)
             ? fail("negative control: zero position", "injected zero position went undetected")
             : ok("negative control: zero position");
}

CheckResult control_corrupted_distribution(const Field& f, const Code& c) {
  WeightDistribution wd = weight_distribution_formula(f, c);
  wd.entries.back().second += 1;  // corrupt one multiplicity
  const PlessReport pr = pless_check(f.p(), wd);
  return pr.pass ? fail("negative control: corrupted distribution",
                        "corrupted multiplicity went undetected")
                 : ok("negative control: corrupted distribution");
}

const std::vector<GoldenExample>& golden_examples() {
  static const std::vector<GoldenExample> table = {
      {"q125_alpha1_trx2", 5, 3, "1", "tr_x2", 3124, 6, 2375,
       {{0, 1}, {2375, 240}, {2500, 15224}, {2625, 160}}},
      {"q81_alpha1_trthetax2", 3, 4, "1", "tr_theta_x2", 2186, 8, 1296,
       {{0, 1}, {1296, 66}, {1458, 6398}, {1539, 96}}},
      {"q81_alphatheta_trx2", 3, 4, "theta", "tr_x2", 2186, 8, 1377,
       {{0, 1}, {1377, 120}, {1458, 6398}, {1620, 42}}},
  };
  return table;
}

CheckResult check_golden_example(const GoldenExample& g, const ExecPolicy& pol) {
  const std::string name = "golden " + g.name;
  const Field f(g.p, g.e);
  const FormSpec spec = g.form == "tr_x2" ? FormSpec::tr_x2(f) : FormSpec::tr_theta_x2(f);
  const Elem alpha = g.alpha == "theta" ? f.primitive() : f.one();
  const Code c = make_code(f, spec, alpha);
  if (c.length != g.length)
    return fail(name, "length " + std::to_string(c.length) + " != " + std::to_string(g.length));
  const WeightDistribution formula = weight_distribution_formula(f, c);
  const WeightDistribution enumd =
      histogram_to_distribution(f, c, weight_histogram(f, c, pol));
  for (const WeightDistribution* wd : {&formula, &enumd}) {
    if (wd->dimension != g.dimension)
      return fail(name, "dimension " + std::to_string(wd->dimension) + " != " +
                            std::to_string(g.dimension));
    if (wd->entries != g.weights) {
      for (size_t i = 0; i < std::max(wd->entries.size(), g.weights.size()); ++i) {
        const auto got = i < wd->entries.size() ? wd->entries[i] : std::pair<long long, long long>{-1, -1};
        const auto want = i < g.weights.size() ? g.weights[i] : std::pair<long long, long long>{-1, -1};
        if (got != want)
          return fail(name, "weight row " + std::to_string(i) + ": got (" +
                                std::to_string(got.first) + "," + std::to_string(got.second) +
                                "), expected (" + std::to_string(want.first) + "," +
                                std::to_string(want.second) + ")");
      }
    }
  }
  if (formula.min_nonzero_weight() != g.min_distance)
    return fail(name, "minimum distance mismatch");
  if (ghw_formula(f, c, 1) != g.min_distance)
    return fail(name, "d_1 inconsistent with the minimum distance");
  return ok(name);
}

VerifyReport verify_battery(VerifyLevel level, const ExecPolicy& pol) {
  VerifyReport rep;
  auto add = [&](CheckResult r) { rep.results.push_back(std::move(r)); };
  auto add_all = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) rep.results.push_back(std::move(r));
  };

  add_all(check_gauss_sum_laws({3, 5, 7, 11}));
  add_all(check_orbit_sums({3, 5, 7}, 6));

  struct Config {
    int p, e;
    const char* form;
    const char* alpha;
    int count_dim;  // level-set sweep depth
    int n_dim;      // annihilator sweep depth
    std::vector<int> rs;
  };
  std::vector<Config> configs = {
      {3, 3, "tr_x2", "1", 3, 2, {1, 2, 3, 4, 5, 6}},
  };
  if (level == VerifyLevel::kFull) {
    configs.push_back({5, 3, "tr_x2", "1", 3, 1, {1, 2, 5, 6}});
    configs.push_back({3, 4, "tr_theta_x2", "1", 2, 1, {1, 2, 6, 7, 8}});
    configs.push_back({3, 4, "tr_x2", "theta", 2, 1, {1, 2, 6, 7, 8}});
  }

  for (const auto& cfg : configs) {
    const Field f(cfg.p, cfg.e);
    const FormSpec spec =
        std::string(cfg.form) == "tr_x2" ? FormSpec::tr_x2(f) : FormSpec::tr_theta_x2(f);
    const Elem alpha = std::string(cfg.alpha) == "theta" ? f.primitive() : f.one();
    const Code c = make_code(f, spec, alpha);
    std::ostringstream lbl;
    lbl << "(" << cfg.p << "," << cfg.e << ") " << cfg.form << " alpha=" << cfg.alpha;
    const std::string label = lbl.str();

    add(check_weil_identities(f, spec, c.profile, label));
    add(check_intersection_counts(f, spec, c.profile, cfg.count_dim, label));
    add(check_length(f, c, label));
    add(check_weights_exhaustive(f, c, label));
    try {
      add(check_distribution(f, c, pol, label));
    } catch (const BudgetExceeded& ex) {
      rep.skipped.push_back("weight distribution " + label + ": " + ex.what());
    }
    add(check_dual_distance(f, c, label));
    add(check_ratio(f, c, label));
    add(check_n_sweep(f, c, cfg.n_dim, label));
    try {
      add(check_hierarchy(f, c, cfg.rs, pol, label));
    } catch (const BudgetExceeded& ex) {
      rep.skipped.push_back("weight hierarchy " + label + ": " + ex.what());
    }
    add(check_witness_construction(f, c, label));
    if (cfg.p == 3 && cfg.e == 3) {
      add(check_reference_hierarchy(f, spec, c.profile, label));
      try {
        add(check_alpha_invariance(
            f, spec, {f.one(), f.primitive(), f.mul(f.primitive(), f.primitive())}, pol, label));
      } catch (const BudgetExceeded& ex) {
        rep.skipped.push_back("alpha invariance " + label + ": " + ex.what());
      }
    }
  }
  return rep;
}

}  // namespace triweight
