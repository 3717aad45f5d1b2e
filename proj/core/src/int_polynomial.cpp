#include "singerfac/int_polynomial.hpp"

#include <sstream>

#include "singerfac/error.hpp"

namespace singerfac {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ScanTooLarge: return "ScanTooLarge";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::ClosureMismatch: return "ClosureMismatch";
    case Errc::NotReflectionGroup: return "NotReflectionGroup";
    case Errc::NoSingerCycle: return "NoSingerCycle";
    case Errc::TargetNotInGroup: return "TargetNotInGroup";
    case Errc::DeterminantNotInX: return "DeterminantNotInX";
    case Errc::XTrivial: return "XTrivial";
  }
  return "Error";
}

IntPolynomial::IntPolynomial(mpz_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<mpz_class> coeffs) {
  IntPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::monomial(mpz_class c, int k) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, mpz_class(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int i) const {
  static const mpz_class kZero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

mpz_class IntPolynomial::eval(const mpz_class& point) const {
  mpz_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= point;
    acc += *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> out(coeffs_);
  for (auto& c : out) c = -c;
  return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& c) const {
  if (c == 0) return IntPolynomial();
  std::vector<mpz_class> out(coeffs_);
  for (auto& x : out) x *= c;
  return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) fail(Errc::InvalidArgument, "polynomial division by zero");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree())
    fail(Errc::InvalidArgument, "inexact polynomial division (degree)");
  std::vector<mpz_class> rem(coeffs_);
  std::vector<mpz_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1, mpz_class(0));
  const mpz_class& lead = divisor.coeffs_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    mpz_class& top = rem[i + divisor.degree()];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) fail(Errc::InvalidArgument, "inexact polynomial division (coefficient)");
    quot[i] = q;
    for (size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[i + j] -= q * divisor.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) fail(Errc::InvalidArgument, "inexact polynomial division (remainder)");
  return from_coeffs(std::move(quot));
}

IntPolynomial IntPolynomial::div_exact(const mpz_class& c) const {
  if (c == 0) fail(Errc::InvalidArgument, "division by zero");
  std::vector<mpz_class> out(coeffs_);
  for (auto& x : out) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (r != 0) fail(Errc::InvalidArgument, "inexact scalar division");
    x = q;
  }
  return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = one();
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace singerfac
