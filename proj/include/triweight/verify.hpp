#pragma once

#include <string>
#include <vector>

#include "triweight/code.hpp"
#include "triweight/cyclotomic.hpp"
#include "triweight/ghw.hpp"
#include "triweight/kernels.hpp"

namespace triweight {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing, diff summary when not
};

struct VerifyReport {
  std::vector<CheckResult> results;
  std::vector<std::string> skipped;  // items dropped for budget reasons

  bool all_passed() const;
  int failures() const;
};

// --- character-sum machinery ---------------------------------------------

// g^2 = (-1)^{(p-1)/2} p and sigma_z(g) = eta(z) g for each prime.
std::vector<CheckResult> check_gauss_sum_laws(const std::vector<int>& primes);

// Exhaustive sum vs closed form for every b in F_q.
CheckResult check_weil_identities(const Field& f, const FormSpec& spec, const FormProfile& prof,
                                  const std::string& label);

// Orbit sums: both parities, with and without the root factor.
std::vector<CheckResult> check_orbit_sums(const std::vector<int>& primes, int rmax);

// --- quadratic form -------------------------------------------------------

// Level-set counts: closed form vs oracle for every subspace of dimension
// <= maxdim and every level a in F_p.
CheckResult check_intersection_counts(const Field& f, const FormSpec& spec,
                                      const FormProfile& prof, int maxdim,
                                      const std::string& label);

// --- code -----------------------------------------------------------------

CheckResult check_length(const Field& f, const Code& c, const std::string& label);

// codeword_weight closed form == enumeration for every nonzero (u, v).
CheckResult check_weights_exhaustive(const Field& f, const Code& c, const std::string& label);

// Distribution via Table closed form == histogram enumeration, plus the
// power moments, the three-weight shape, and codeword injectivity.
CheckResult check_distribution(const Field& f, const Code& c, const ExecPolicy& pol,
                               const std::string& label);

CheckResult check_dual_distance(const Field& f, const Code& c, const std::string& label);

CheckResult check_ratio(const Field& f, const Code& c, const std::string& label);

// N(H): annihilator count == character-sum closed form for all subspaces of
// dimension <= maxdim.
CheckResult check_n_sweep(const Field& f, const Code& c, int maxdim, const std::string& label);

// brute == formula for the listed ranks, plus monotonicity, d_1 = minimum
// weight and d_{2e} = n. Ranks whose projected cost exceeds the budget are
// appended to `skipped` (when given) instead of failing the check.
CheckResult check_hierarchy(const Field& f, const Code& c, const std::vector<int>& rs,
                            const ExecPolicy& pol, const std::string& label,
                            std::vector<std::string>* skipped = nullptr);

// Distribution and brute hierarchy are unchanged across the listed alphas.
CheckResult check_alpha_invariance(const Field& f, const FormSpec& spec,
                                   const std::vector<Elem>& alphas, const ExecPolicy& pol,
                                   const std::string& label);

// The constructive maximizer reaches its target N, and N is consistent with
// the closed-form d_r.
CheckResult check_witness_construction(const Field& f, const Code& c, const std::string& label);

// Reference (one-variable) hierarchy closed forms vs exhaustive subspace
// search; feasible for small fields only.
CheckResult check_reference_hierarchy(const Field& f, const FormSpec& spec,
                                      const FormProfile& prof, const std::string& label);

// --- negative controls ----------------------------------------------------

// Each returns pass = true when the corrupted input IS detected.
CheckResult control_sign_flip(const Field& f, const FormSpec& spec);
CheckResult control_zero_position(const Field& f, const Code& c);
CheckResult control_corrupted_distribution(const Field& f, const Code& c);

// --- batteries ------------------------------------------------------------

enum class VerifyLevel { kQuick, kFull };

VerifyReport verify_battery(VerifyLevel level, const ExecPolicy& pol);

// The three reference configurations with golden parameters.
struct GoldenExample {
  std::string name;
  int p;
  int e;
  std::string alpha;  // "1" or "theta"
  std::string form;   // "tr_x2" or "tr_theta_x2"
  long long length;
  int dimension;
  long long min_distance;
  std::vector<std::pair<long long, long long>> weights;  // (weight, multiplicity) incl. (0,1)
};

const std::vector<GoldenExample>& golden_examples();

// Runs one golden configuration with both methods; mismatch details name
// the first differing weight row.
CheckResult check_golden_example(const GoldenExample& g, const ExecPolicy& pol);

}  // namespace triweight
