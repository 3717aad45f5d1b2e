#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singerfac/gf.hpp"
#include "singerfac/gf_poly.hpp"

namespace singerfac {

// Square matrix over a Field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, int n);
  static Matrix identity(FieldPtr field, int n);

  int n() const { return n_; }
  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }

  Fe at(int i, int j) const { return a_[i * n_ + j]; }
  Fe& at(int i, int j) { return a_[i * n_ + j]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return a_ == o.a_; }

  Matrix inverse() const;
  Fe determinant() const;
  Matrix pow(uint64_t k) const;
  bool is_identity() const;

  // Entrywise x -> x^q, then transpose (the unitary adjoint when entries
  // live in GF(q^2)).
  Matrix conjugate_transpose(uint64_t q) const;

  // det(zI - g) as a monic polynomial over the entry field.
  FieldPoly characteristic_polynomial() const;

  // Canonical byte encoding: row-major field-element exponents (ZERO -> 0,
  // exponent k -> k+1) as fixed-width little-endian bytes.
  std::string encode() const;
  static Matrix decode(FieldPtr field, int n, const std::string& bytes);
  static int encoded_width(const Field& field);

 private:
  FieldPtr field_;
  int n_ = 0;
  std::vector<Fe> a_;
};

// Exact multiplicative order computed against a known multiple of the order
// (usually the ambient group order): peel prime factors of the bound.
uint64_t element_order(const Matrix& g, uint64_t order_multiple);

// True iff the characteristic polynomial is irreducible over the entry
// field, i.e. g stabilizes no nontrivial subspace.
bool is_irreducible_element(const Matrix& g);

}  // namespace singerfac
