#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triweight/code.hpp"
#include "triweight/kernels.hpp"
#include "triweight/subspace.hpp"

namespace triweight {

enum class NMethod { kCount, kCharSum };

// N(H) = number of defining-set positions annihilated by every functional
// in H, plus the zero position; equals |D ∩ H^⊥| + 1 with H^⊥ taken under
// the trace pairing on F_q^2. The count route walks the annihilator; the
// character-sum route evaluates the closed form (projection case split,
// then the parity-reduced correction term).
long long n_of_subspace(const Field& f, const Code& c, const Subspace& h, NMethod method);

// Split dimension of the hierarchy formula: largest dimension of a totally
// isotropic subspace of the form. (e-1)/2 for odd e; e/2 or (e-2)/2 for
// even e depending on whether the sign matches (-1)^{e(p-1)/4}.
int hierarchy_split_dim(const Field& f, const FormProfile& prof);

struct GhwEntry {
  int r = 0;
  long long d = 0;
  std::string method;            // "formula" or "brute"
  std::optional<Subspace> witness;  // maximizing subspace from brute runs
};

// Exact d_r by scanning every (2e - r)-dimensional subspace for the largest
// defining-set intersection. Budget-checked; the witness is deterministic
// (lexicographically smallest maximizer).
GhwEntry ghw_brute(const Field& f, const Code& c, int r, const ExecPolicy& pol);

// Closed-form d_r; requires e >= 3.
long long ghw_formula(const Field& f, const Code& c, int r);

// Closed-form hierarchy of the one-variable reference code whose defining
// set is a nonzero level set {x : f(x) = a}, a != 0. Odd e covers only the
// square class eta(a) = (-1)^{(e-1)(p-1)/4} eps; anything else throws.
long long ghw_reference_level_set(const Field& f, const FormProfile& prof, int a, int r);

// Length of that reference code (|{x : f(x) = a}|) from the closed form.
long long level_set_size(const Field& f, const FormProfile& prof, int a);

// The explicit maximizing subspace for d_r in the constructive range
// 1 <= r <= e - e_0 (e >= 3): rows (L_f(mu_i), -alpha) for a shifted basis
// mu of a subspace on which the form takes a single favorable value class.
Subspace hierarchy_witness(const Field& f, const Code& c, int r);

// The N value that construction is expected to reach.
long long hierarchy_witness_target(const Field& f, const Code& c, int r);

}  // namespace triweight
