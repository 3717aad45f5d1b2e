#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace singerfac {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coeff(i) is the coefficient of z^i.  The zero polynomial has no stored
// coefficients and degree() == -1.  All evaluation is exact.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(mpz_class constant);
  IntPolynomial(std::initializer_list<long> coeffs);
  static IntPolynomial from_coeffs(std::vector<mpz_class> coeffs);

  // z^k with coefficient c
  static IntPolynomial monomial(mpz_class c, int k);
  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial(mpz_class(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class eval(const mpz_class& point) const;
  mpz_class eval(long point) const { return eval(mpz_class(point)); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
  IntPolynomial operator*(const mpz_class& c) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  // Exact quotient; throws InvalidArgument if the division leaves a remainder.
  // Division is synthetic so a transcription error in a formula surfaces
  // immediately rather than as a silently wrong polynomial.
  IntPolynomial div_exact(const IntPolynomial& divisor) const;
  IntPolynomial div_exact(const mpz_class& c) const;

  IntPolynomial pow(unsigned e) const;

  std::string to_string() const;  // human-readable, e.g. "z^2 + z + 1"

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace singerfac
