#pragma once

#include <gmpxx.h>

#include "singerfac/int_polynomial.hpp"
#include "singerfac/partition.hpp"

namespace singerfac {

// q-analog [n]_q = 1 + z + ... + z^{n-1}; [0]_q is the zero polynomial.
IntPolynomial q_int(int n);

// [n]!_q = [n]_q [n-1]_q ... [1]_q.
IntPolynomial q_factorial(int n);

// Gaussian binomial [n choose k]_q as an exact polynomial; requires 0 <= k <= n.
IntPolynomial q_binomial(int n, int k);

// q-Pochhammer (a; z)_n = prod_{i=0}^{n-1} (1 - a * z^i), a itself a polynomial in z.
IntPolynomial q_pochhammer(const IntPolynomial& a, int n);

// Classical Moebius function; rejects d < 1.
int mobius(long long d);

// Ordinary binomial coefficient.
mpz_class binomial(long n, long k);

// Symmetric-group character omega^lambda(gamma) by the Murnaghan-Nakayama
// border-strip recursion (memoized).  Indexing: the one-row partition (n) is
// the trivial character.  Requires |lambda| = |gamma|.
long long mn_character(const Partition& lambda, const Partition& gamma);

// N-th q-difference of z^a evaluated at z = 1, as an exact polynomial in q:
// the falling product [a-N+1]_q [a-N+2]_q ... [a]_q, which is 0 when
// 0 <= a < N and 1 when N = 0.
IntPolynomial q_difference_power(int a, int N);

}  // namespace singerfac
