#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triweight/field.hpp"
#include "triweight/linalg.hpp"
#include "triweight/subspace.hpp"

namespace triweight {

// Coefficients a_0..a_{e-1} of the quadratic form
//   f(x) = sum_i Tr(a_i x^{p^i + 1}).
struct FormSpec {
  std::vector<Elem> coeffs;

  static FormSpec tr_x2(const Field& f);        // f(x) = Tr(x^2)
  static FormSpec tr_theta_x2(const Field& f);  // f(x) = Tr(theta x^2)
  std::string to_json(const Field& f) const;
};

// Everything derived from a FormSpec: the Gram matrix in the polynomial
// basis, rank and sign from congruent diagonalization, the matrix of the
// associated linear map L_f (the one with F(x,y) = Tr(y L_f(x))), and the
// value tables used by hot loops.
struct FormProfile {
  FpMat gram;             // e x e symmetric
  int rank = 0;
  int sign = +1;          // quadratic character of the diagonal product; +1 when rank 0
  std::vector<int> diag;  // nonzero diagonal entries after reduction
  FpMat lf;               // e x e matrix of L_f (column j = coords of L_f(t^j))
  std::optional<FpMat> lf_inv;  // present iff rank == e

  // value tables, all of size q
  std::vector<std::int8_t> fval;     // f(x)
  std::vector<std::int32_t> xb;      // solution of L_f(x) = -b/2 (rank == e only)
  std::vector<std::int8_t> fxb;      // f(xb[b]) (rank == e only)

  bool nondegenerate(const Field& f) const { return rank == f.e(); }
  std::string to_json() const;
};

struct RestrictedForm {
  int rank = 0;
  int sign = +1;
};

struct DiagResult {
  std::vector<int> diag;  // nonzero entries
  int rank = 0;
  int sign = +1;
  FpMat transform;  // M with M A M^T diagonal
};

// Symmetric congruent diagonalization over F_p, p odd. Deterministic pivot
// choice (first usable in scan order).
DiagResult diagonalize_congruent(const FpMat& sym);

int eval_form(const Field& f, const FormSpec& spec, Elem x);

FormProfile analyze_form(const Field& f, const FormSpec& spec);

// F(x, y) = (f(x+y) - f(x) - f(y)) / 2
int bilinear(const Field& f, const FormSpec& spec, Elem x, Elem y);

Elem eval_lf(const Field& f, const FormProfile& prof, Elem x);

// Unique x with L_f(x) = -b/2; requires a non-degenerate profile.
Elem solve_xb(const Field& f, const FormProfile& prof, Elem b);

// Rank and sign of the form restricted to a subspace of F_p^e.
RestrictedForm restrict_form(const Field& f, const FormSpec& spec, const Subspace& h);

enum class CountMethod { kFormula, kOracle };

// |{x in H : f(x) = a}| for a in F_p. The formula route uses the
// two-parity closed form driven by the restricted rank/sign and requires a
// non-degenerate ambient form; the oracle route just walks H.
long long count_on_subspace(const Field& f, const FormSpec& spec, const FormProfile& prof,
                            const Subspace& h, int a, CountMethod method);

// Largest dimension of a subspace on which the form vanishes identically
// (computed greedily; exact for non-degenerate forms).
int isotropy_bound(const Field& f, const FormSpec& spec, const FormProfile& prof);

// r-dimensional subspace J with f|_J = 0, verified exhaustively before
// returning. Throws std::domain_error naming the obstruction when no such
// subspace exists.
Subspace find_isotropic(const Field& f, const FormSpec& spec, const FormProfile& prof, int r);

// Gram matrix of the trace pairing (x, y) -> Tr(xy) on F_p^e.
FpMat trace_pairing(const Field& f);

// Block-diagonal trace pairing on F_q^2 viewed as F_p^{2e}.
FpMat trace_pairing_2(const Field& f);

// Gram in the bilinear sense: F(x, y) = X B Y^T, so the dual of a subspace
// under the form pairing is its annihilator under gram.
}  // namespace triweight
