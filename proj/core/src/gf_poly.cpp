#include "singerfac/gf_poly.hpp"

#include <sstream>

#include "singerfac/error.hpp"

namespace singerfac {

FieldPoly::FieldPoly(FieldPtr field, std::vector<Fe> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

FieldPoly FieldPoly::constant(FieldPtr field, Fe c) {
  std::vector<Fe> coeffs;
  if (!c.is_zero()) coeffs.push_back(c);
  return FieldPoly(std::move(field), std::move(coeffs));
}

FieldPoly FieldPoly::variable(FieldPtr field) {
  return FieldPoly(std::move(field), {fe_zero(), fe_exp(0)});
}

void FieldPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool FieldPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == field_->one();
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  std::vector<Fe> out(std::max(coeffs_.size(), o.coeffs_.size()), fe_zero());
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), o.coeff(i));
  return FieldPoly(field_, std::move(out));
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
  std::vector<Fe> out(std::max(coeffs_.size(), o.coeffs_.size()), fe_zero());
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), o.coeff(i));
  return FieldPoly(field_, std::move(out));
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const {
  if (is_zero() || o.is_zero()) return FieldPoly(field_, {});
  std::vector<Fe> out(coeffs_.size() + o.coeffs_.size() - 1, fe_zero());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  }
  return FieldPoly(field_, std::move(out));
}

FieldPoly FieldPoly::make_monic() const {
  if (is_zero()) return *this;
  Fe inv = field_->inv(coeffs_.back());
  std::vector<Fe> out(coeffs_);
  for (Fe& c : out) c = field_->mul(c, inv);
  return FieldPoly(field_, std::move(out));
}

FieldPoly FieldPoly::mod(const FieldPoly& m) const {
  if (m.is_zero()) fail(Errc::InvalidArgument, "polynomial modulus is zero");
  FieldPoly monic = m.is_monic() ? m : m.make_monic();
  std::vector<Fe> rem(coeffs_);
  while (static_cast<int>(rem.size()) - 1 >= monic.degree()) {
    Fe lead = rem.back();
    if (!lead.is_zero()) {
      size_t shift = rem.size() - monic.coeffs_.size();
      for (size_t j = 0; j < monic.coeffs_.size(); ++j)
        rem[shift + j] = field_->sub(rem[shift + j], field_->mul(lead, monic.coeffs_[j]));
    }
    rem.pop_back();
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  return FieldPoly(field_, std::move(rem));
}

Fe FieldPoly::eval(Fe point) const {
  Fe acc = fe_zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_->add(field_->mul(acc, point), *it);
  return acc;
}

std::string FieldPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    os << field_->to_string(coeffs_[i]);
    if (i) os << "*z^" << i << " + ";
  }
  return os.str();
}

FieldPoly poly_gcd(FieldPoly a, FieldPoly b) {
  while (!b.is_zero()) {
    FieldPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.make_monic();
}

FieldPoly poly_powmod(FieldPoly base, const mpz_class& k, const FieldPoly& m) {
  FieldPoly result = FieldPoly::constant(base.field_ptr(), base.field().one());
  base = base.mod(m);
  mpz_class e(k);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const FieldPoly& f) {
  int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  mpz_class q(static_cast<unsigned long>(F.size()));
  FieldPoly z = FieldPoly::variable(f.field_ptr());
  // z^{q^n} == z mod f, and gcd(z^{q^{n/r}} - z, f) = 1 for prime r | n
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  if (!(poly_powmod(z, qn, f) - z.mod(f)).is_zero()) return false;
  for (auto [r, mult] : factorize_u64(static_cast<uint64_t>(n))) {
    (void)mult;
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), n / static_cast<int>(r));
    FieldPoly g = poly_powmod(z, qd, f) - z.mod(f);
    if (poly_gcd(f, g).degree() > 0) return false;
  }
  return true;
}

FieldPoly least_irreducible(FieldPtr field, int degree) {
  if (degree < 1) fail(Errc::InvalidArgument, "degree must be positive");
  uint64_t q = field->size();
  uint64_t span = 1;
  for (int i = 0; i < degree; ++i) {
    if (span > (uint64_t(1) << 40) / q) fail(Errc::FieldTooLarge, "modulus search space too large");
    span *= q;
  }
  for (uint64_t m = 0; m < span; ++m) {
    std::vector<Fe> coeffs(degree + 1, fe_zero());
    uint64_t rest = m;
    for (int i = 0; i < degree; ++i) {
      uint64_t digit = rest % q;
      rest /= q;
      coeffs[i] = digit == 0 ? fe_zero() : fe_exp(static_cast<int32_t>(digit - 1));
    }
    coeffs[degree] = field->one();
    FieldPoly f(field, std::move(coeffs));
    if (is_irreducible(f)) return f;
  }
  fail(Errc::InvalidArgument, "no irreducible polynomial found");
}

ExtField::ExtField(FieldPoly modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1)
    fail(Errc::InvalidArgument, "extension modulus must be monic of positive degree");
}

mpz_class ExtField::size() const {
  mpz_class q(static_cast<unsigned long>(base().size()));
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), degree());
  return out;
}

ExtField::Elt ExtField::generator_candidate(uint64_t packed) const {
  uint64_t q = base().size();
  std::vector<Fe> coeffs(degree(), fe_zero());
  for (int i = 0; i < degree(); ++i) {
    uint64_t digit = packed % q;
    packed /= q;
    coeffs[i] = digit == 0 ? fe_zero() : fe_exp(static_cast<int32_t>(digit - 1));
  }
  return FieldPoly(modulus_.field_ptr(), std::move(coeffs));
}

ExtField::Elt ExtField::least_primitive() const {
  mpz_class order = size() - 1;
  if (!order.fits_ulong_p()) fail(Errc::FieldTooLarge, "extension too large for a primitive search");
  uint64_t n = order.get_ui();
  auto factors = factorize_u64(n);
  for (uint64_t cand = 1;; ++cand) {
    mpz_class bound(static_cast<unsigned long>(cand));
    if (bound >= size()) break;
    Elt g = generator_candidate(cand);
    bool primitive = true;
    for (auto [r, mult] : factors) {
      (void)mult;
      if (pow(g, mpz_class(static_cast<unsigned long>(n / r))) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive && pow(g, mpz_class(static_cast<unsigned long>(n))) == one()) return g;
  }
  fail(Errc::InvalidArgument, "no primitive element found");
}

}  // namespace singerfac
