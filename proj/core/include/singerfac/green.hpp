#pragma once

#include <gmpxx.h>

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "singerfac/int_polynomial.hpp"
#include "singerfac/partition.hpp"

namespace singerfac {

// Green polynomials Q^lambda_rho(q) of symmetric-function theory, computed
// through the Hall-Littlewood transition: the power sum p_rho is expanded in
// the Hall-Littlewood P-basis in |lambda| variables with parameter t, the
// coefficient X^lambda_rho(t) is read off by back-substitution (the P-basis
// is unitriangular against monomials in dominance order), and
//   Q^lambda_rho(q) = q^{a(lambda)} * X^lambda_rho(1/q)
// is cleared to a polynomial.  All arithmetic is exact over Z[t].
class GreenTable {
 public:
  explicit GreenTable(int size_bound = 12) : bound_(size_bound) {}

  // Q^lambda_rho as an exact integer polynomial in q; |lambda| = |rho| <= bound.
  IntPolynomial green_polynomial(const Partition& lambda, const Partition& rho);

  // Transition coefficient X^lambda_rho(t) itself (X(0) is the symmetric-group
  // character, X(1) the monomial coefficient of p_rho).
  IntPolynomial transition_coefficient(const Partition& lambda, const Partition& rho);

  // Coefficient of the monomial basis element m_nu in the Hall-Littlewood
  // polynomial P_lambda(x_1..x_k; t) with k = |lambda| variables.
  IntPolynomial hall_littlewood_monomial_coefficient(const Partition& lambda,
                                                     const Partition& nu);

  // Monomial expansion of the power sum p_rho in |rho| variables.
  std::map<Partition, mpz_class> power_sum_monomials(const Partition& rho);

  int size_bound() const { return bound_; }

  // Debug dump of every memoized entry: "lambda|rho" -> coefficient list.
  std::string dump_json() const;

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  const std::map<Partition, IntPolynomial>& expansion_column(const Partition& rho);

  int bound_;
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, std::map<Partition, IntPolynomial>> columns_;  // by rho
  std::map<Key, IntPolynomial> hl_cache_;  // (lambda, padded nu) -> coeff
};

// Process-wide table with the default bound.
GreenTable& green_table();

inline IntPolynomial green_polynomial(const Partition& lambda, const Partition& rho) {
  return green_table().green_polynomial(lambda, rho);
}

// One factor per diagonal block of a Levi subgroup: the block field lives over
// s^d, so the Green polynomial for that block is evaluated at s^d.
struct LeviBlock {
  int d;
  Partition mu;
  Partition gamma;
};

// prod_i Q^{mu_i}_{gamma_i}(s^{d_i}), evaluated exactly at integer s.
mpz_class green_value_levi(const std::vector<LeviBlock>& blocks, const mpz_class& s);

}  // namespace singerfac
