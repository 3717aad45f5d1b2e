#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "singerfac/group.hpp"

namespace singerfac {

// Exhaustive factorization counts by group-algebra convolution over the
// dense element index: v_0 = indicator of the identity, and each step sends
// v[g] into v[g*r] for every reflection r.  Exact (arbitrary-precision)
// counts; the independent oracle for the closed forms and the character
// pipeline.

// Number of ordered tuples of `length` reflections of G_X multiplying to
// `target`.  Throws TargetNotInGroup.
mpz_class fac_count(const GroupTable& table, const Matrix& target, int length);

// Same, partitioned by the number m of transvection factors; keys m = 0..length.
std::map<int, mpz_class> fac_count_by_transvections(const GroupTable& table,
                                                    const Matrix& target, int length);

// Number of tuples whose i-th factor has the prescribed determinant dets[i]
// (entry-field elements, each required to lie in X).  Throws DeterminantNotInX.
mpz_class fac_count_by_det_sequence(const GroupTable& table, const Matrix& target,
                                    const std::vector<Fe>& dets);

// Memory knob: the shared product table is only materialized when it has at
// most this many entries (4 bytes each); above it the convolution multiplies
// matrices on the fly at the same asymptotic cost.
size_t& product_table_entry_cap();

}  // namespace singerfac
