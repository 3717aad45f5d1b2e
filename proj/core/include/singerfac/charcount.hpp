#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "singerfac/group.hpp"
#include "singerfac/int_polynomial.hpp"
#include "singerfac/partition.hpp"

namespace singerfac {

// Label of a primary irreducible character that survives on irreducible
// elements: the Frobenius-orbit size d (a divisor of n) together with the
// hook parameter k, indexing the partition <n/d - k, 1^k> of n/d.
struct CharIndex {
  int d = 1;
  int k = 0;

  Partition hook_shape(int n) const;  // <n/d - k, 1^k>
  void validate(int n) const;         // d | n, 0 <= k < n/d
};

std::vector<CharIndex> primary_char_indices(int n);

// chi^{phi,lambda}(1) = eps^{d a(lambda') + n(n-1)/2} * f^{d,lambda}(eps q)
// with f^{d,mu}(z) = z^{d a(mu)} prod_{i<=d|mu|}(z^i - 1) / prod_{cells}(z^{d h} - 1).
mpz_class primary_degree(const CharIndex& idx, const GroupParams& params);

// Sum of chi^{phi,lambda} over all transvections of GL^eps_n.
mpz_class transvection_sum(const CharIndex& idx, const GroupParams& params);

// Sum over the semisimple reflections of G_X; zero for d > 1, and split by
// whether the orbit character restricts trivially to X.  Requires x > 1.
mpz_class semisimple_sum(const CharIndex& idx, const GroupParams& params,
                         bool theta_trivial_on_x);

// Sum of chi^{phi,lambda}(c) over all orbits phi of size d, c a Singer cycle:
// the Moebius-weighted closed form when x = 1, and 0 when x > 1.
mpz_class singer_orbit_sum(const CharIndex& idx, const GroupParams& params);

// Per-character Singer value for the x > 1 pipeline (d = 1, theta trivial on
// X); there are (q - eps)/x characters of this kind.
mpz_class singer_character_value(const CharIndex& idx, const GroupParams& params);

// Factorization counts assembled through the Frobenius character-sum formula
// from the pieces above — no closed-form shortcut.
mpz_class frobenius_count(const GroupParams& params, int length);
// The x > 1 count restricted to exactly m transvection factors.
mpz_class frobenius_count_refined(const GroupParams& params, int length, int m);

// Closed forms.  All counts are evaluations of a single polynomial in the
// variable z = eps*q, which is what makes Ennola duality visible.
IntPolynomial closed_form_slu_poly(int n, int length);
mpz_class closed_form_slu(int n, int64_t eps_q, int length);

IntPolynomial closed_form_gx_poly(int n, int length, const mpz_class& x);
mpz_class closed_form_gx(int n, int64_t eps_q, const mpz_class& x, int length);

// Shared polynomial of the refined count: [n]_z^{l-1} sum_i (-1)^i C(m,i) qbin(l-i-1, n-1)_z.
IntPolynomial refined_count_poly(int n, int length, int m);
mpz_class closed_form_refined(int n, int64_t eps_q, const mpz_class& x, int length, int m);

// Per-route result bundle.
struct CountReport {
  std::string group;
  int n = 0;
  uint64_t q = 0;
  int epsilon = +1;
  uint64_t x = 1;
  int ell = 0;
  int m = -1;  // -1: not refined
  std::optional<mpz_class> closed_form;
  std::optional<mpz_class> character_pipeline;
  std::optional<mpz_class> brute_force;
  bool agree = true;
};

enum class EnnolaScope {
  Special,  // SL_n(q) at +q against SU_n(q) at -q, any length (x = 1)
  Full,     // GL_n(q) against GU_n(q) (x = q - eps), shared per-m polynomials
};

struct EnnolaSide {
  std::string group;
  mpz_class formula_value;
  std::optional<mpz_class> brute_force;
  bool rejected_no_singer = false;  // the SU_3(2) exception
  bool agree = true;
};

struct EnnolaReport {
  int n = 0;
  uint64_t q = 0;
  int ell = 0;
  EnnolaScope scope = EnnolaScope::Special;
  // Coefficients (ascending) of the shared polynomial(s) in z = eps*q.  The
  // Special scope has one; the Full scope lists the per-m polynomials.
  std::vector<IntPolynomial> shared_polynomials;
  EnnolaSide linear, unitary;
  bool agree = true;
};

// Evaluates the one-polynomial (or per-m shared-polynomial) pair at +q and
// -q and, when the groups fit under the size cap, compares both against the
// brute-force convolution.  Throws NoSingerCycle only on configuration error
// (e.g. even n); the SU_3(2) rejection is recorded in the report.
EnnolaReport ennola_check(int n, uint64_t q, int length, EnnolaScope scope,
                          uint64_t brute_cap = uint64_t(1) << 21);

// Eigenvalue-refined conjecture checker: compares determinant-prescribed
// brute-force counts against the conjectured formula.  Disagreement is a
// finding in the report, never an error.
struct ConjectureFinding {
  std::vector<std::string> dets;  // serialized entry-field elements
  int m = 0;                      // number of prescribed 1s
  mpz_class brute_force;
  mpz_class conjecture;
  bool agree = true;
};

struct ConjectureReport {
  std::string group;
  int ell = 0;
  bool exhaustive = false;
  std::vector<ConjectureFinding> findings;
  size_t agreements = 0;
  size_t disagreements = 0;
};

// trials = 0 or trials >= (#valid sequences) runs the exhaustive scan;
// otherwise `trials` deterministic pseudo-random sequences are drawn.
ConjectureReport conjecture_eigenvalue_check(const GroupTable& table, int length,
                                             size_t trials, uint64_t seed = 0x5eed);

}  // namespace singerfac
