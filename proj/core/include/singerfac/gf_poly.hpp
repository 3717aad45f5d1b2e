#pragma once

#include <gmpxx.h>

#include "singerfac/gf.hpp"

namespace singerfac {

// Dense polynomial over a Field, coefficient index = exponent.  Only the
// operations the group machinery needs: reduction, gcd, modular powers, and
// irreducibility testing of characteristic polynomials and moduli.
class FieldPoly {
 public:
  FieldPoly() = default;
  FieldPoly(FieldPtr field, std::vector<Fe> coeffs);
  static FieldPoly zero(FieldPtr field) { return FieldPoly(std::move(field), {}); }
  static FieldPoly constant(FieldPtr field, Fe c);
  static FieldPoly variable(FieldPtr field);  // the polynomial z

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Fe coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : fe_zero(); }
  const std::vector<Fe>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator*(const FieldPoly& o) const;
  bool operator==(const FieldPoly& o) const { return coeffs_ == o.coeffs_; }

  FieldPoly make_monic() const;
  FieldPoly mod(const FieldPoly& m) const;
  Fe eval(Fe point) const;

  std::string to_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Fe> coeffs_;
};

FieldPoly poly_gcd(FieldPoly a, FieldPoly b);
FieldPoly poly_powmod(FieldPoly base, const mpz_class& k, const FieldPoly& m);

// True iff f (degree >= 1) is irreducible over its coefficient field.
bool is_irreducible(const FieldPoly& f);

// Least monic irreducible polynomial of the given degree over the field,
// ordering coefficient tuples by packed exponent value (top coefficient most
// significant); deterministic.
FieldPoly least_irreducible(FieldPtr field, int degree);

// The quotient ring F[w]/(W) for monic irreducible W: a field of order
// |F|^deg(W) in coefficient form over F.  This gives exact arithmetic in the
// splitting field of characteristic polynomials without building a Zech
// table for it.
class ExtField {
 public:
  explicit ExtField(FieldPoly modulus);

  const Field& base() const { return modulus_.field(); }
  const FieldPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  mpz_class size() const;  // |F|^degree

  using Elt = FieldPoly;  // reduced representative, degree < degree()

  Elt from_base(Fe c) const { return FieldPoly::constant(modulus_.field_ptr(), c); }
  Elt generator_candidate(uint64_t packed) const;  // coefficient tuple by index
  Elt zero() const { return FieldPoly::zero(modulus_.field_ptr()); }
  Elt one() const { return from_base(modulus_.field().one()); }

  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return (a * b).mod(modulus_); }
  Elt pow(const Elt& a, const mpz_class& k) const { return poly_powmod(a, k, modulus_); }

  // Least primitive element (full multiplicative order |F|^deg - 1) by
  // packed-coordinate order; the order test factors |F|^deg - 1, which must
  // fit in 64 bits.
  Elt least_primitive() const;

 private:
  FieldPoly modulus_;
};

}  // namespace singerfac
