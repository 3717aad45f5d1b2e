#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace singerfac {

// Element of a finite field in discrete-log form: ZERO, or an exponent of
// the field's fixed multiplicative generator, always reduced mod p^e - 1.
struct Fe {
  static constexpr int32_t kZero = -1;
  int32_t v = kZero;

  bool is_zero() const { return v == kZero; }
  bool operator==(const Fe&) const = default;
};

inline Fe fe_zero() { return Fe{}; }
inline Fe fe_exp(int32_t e) { return Fe{e}; }

// GF(p^e) with a deterministic modulus and generator and a precomputed Zech
// logarithm table, so multiplication and addition are both exponent
// arithmetic.  Immutable after construction; safe for concurrent reads.
class Field {
 public:
  static constexpr uint64_t kMaxSize = uint64_t(1) << 22;

  // Deterministic construction: lexicographically least irreducible monic
  // modulus (coefficient tuples read from the z^{e-1} coefficient down),
  // least primitive generator.  Throws NotPrime / FieldTooLarge.
  static std::shared_ptr<const Field> make(uint64_t p, unsigned e);

  uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  uint64_t size() const { return size_; }          // p^e
  uint64_t unit_order() const { return size_ - 1; }

  Fe zero() const { return fe_zero(); }
  Fe one() const { return fe_exp(0); }
  Fe generator() const { return fe_exp(size_ == 2 ? 0 : 1); }

  Fe add(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, uint64_t k) const;
  // x -> x^q for q a power of p (the characteristic); ZERO stays ZERO.
  Fe frobenius(Fe a, uint64_t q) const;

  // Multiplicative order; rejects ZERO.
  uint64_t element_order(Fe a) const;

  // Least k >= 1 with a = generator^k ... the exponent itself; utility for
  // deterministic tie-breaking and serialization.
  int32_t log(Fe a) const { return a.v; }

  // Element from / to coefficient coordinates over GF(p) (index = power of
  // the residue class of z); used for matrix I/O and characteristic
  // polynomials.
  Fe from_coords(const std::vector<uint64_t>& coords) const;
  std::vector<uint64_t> to_coords(Fe a) const;

  // Serialization: "g^<decimal exponent>", or "0" for ZERO.
  std::string to_string(Fe a) const;
  Fe from_string(const std::string& s) const;

  // Monic modulus coefficients c_0..c_e (c_e = 1).
  const std::vector<uint64_t>& modulus() const { return modulus_; }

  // Context serialization: "(p, e, [c_0, ..., c_e])".
  std::string context_repr() const;

  // True iff a lies in the subfield of order `sub` (sub - 1 must divide p^e - 1).
  bool in_subfield(Fe a, uint64_t sub) const;

 private:
  Field() = default;

  uint64_t p_ = 0;
  unsigned e_ = 0;
  uint64_t size_ = 0;
  std::vector<uint64_t> modulus_;       // degree-e monic irreducible over GF(p)
  std::vector<uint32_t> antilog_;       // exponent -> packed coordinates
  std::vector<int32_t> log_;            // packed coordinates -> exponent
  std::vector<int32_t> zech_;           // zech_[i] = log(1 + g^i), -1 when 1 + g^i = 0
};

using FieldPtr = std::shared_ptr<const Field>;

// Deterministic memoized construction (fields are immutable and shareable).
FieldPtr build_field(uint64_t p, unsigned e);

// x^{q-1} inside GF(q^2): lands in the multiplicative subgroup of order q + 1
// (the determinant group of the unitary family).  Rejects ZERO.
Fe norm_to_unit_subgroup(Fe x, uint64_t q, const Field& fq2);

// Trial-division primality check for small p.
bool is_prime_u64(uint64_t n);

// Factor n into (prime, multiplicity) pairs by trial division.
std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n);

}  // namespace singerfac
