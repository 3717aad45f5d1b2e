#include "singerfac/matrix.hpp"

#include <algorithm>
#include <utility>

#include "singerfac/error.hpp"

namespace singerfac {

Matrix::Matrix(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (n < 1) fail(Errc::InvalidArgument, "matrix dimension must be positive");
  a_.assign(static_cast<size_t>(n) * n, fe_zero());
}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(field, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix out(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Fe aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        out.at(i, j) = field_->add(out.at(i, j), field_->mul(aik, o.at(k, j)));
    }
  return out;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(at(i, j) == (i == j ? field_->one() : fe_zero()))) return false;
  return true;
}

namespace {

// Gauss-Jordan over the field; returns false if singular.
bool row_reduce(Matrix& m, Matrix* companion, Fe* det) {
  const Field& F = m.field();
  int n = m.n();
  Fe d = F.one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        if (companion) std::swap(companion->at(pivot, j), companion->at(col, j));
      }
      d = F.neg(d);
    }
    Fe inv = F.inv(m.at(col, col));
    d = F.mul(d, m.at(col, col));
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = F.mul(m.at(col, j), inv);
      if (companion) companion->at(col, j) = F.mul(companion->at(col, j), inv);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      Fe factor = m.at(row, col);
      if (factor.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m.at(row, j) = F.sub(m.at(row, j), F.mul(factor, m.at(col, j)));
        if (companion)
          companion->at(row, j) = F.sub(companion->at(row, j), F.mul(factor, companion->at(col, j)));
      }
    }
  }
  if (det) *det = d;
  return true;
}

}  // namespace

Fe Matrix::determinant() const {
  Matrix work(*this);
  Fe det = field_->zero();
  if (!row_reduce(work, nullptr, &det)) return fe_zero();
  return det;
}

Matrix Matrix::inverse() const {
  Matrix work(*this);
  Matrix inv = identity(field_, n_);
  if (!row_reduce(work, &inv, nullptr)) fail(Errc::InvalidArgument, "matrix not invertible");
  return inv;
}

Matrix Matrix::pow(uint64_t k) const {
  Matrix result = identity(field_, n_);
  Matrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Matrix Matrix::conjugate_transpose(uint64_t q) const {
  Matrix out(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = field_->frobenius(at(j, i), q);
  return out;
}

FieldPoly Matrix::characteristic_polynomial() const {
  // Samuelson-Berkowitz: division-free, valid over any commutative ring, so
  // no pivoting concerns; cost O(n^4) is irrelevant at these sizes.
  const Field& F = *field_;
  std::vector<Fe> c{F.one()};  // char poly of the empty matrix
  for (int k = 1; k <= n_; ++k) {
    // principal k x k leading submatrix: row r = a_{k-1,*}, column s, block M
    std::vector<Fe> toeplitz(k + 1);
    toeplitz[0] = F.one();  // coefficient convention: column vector of c_i
    // t_i = - r M^{i-1} s for i >= 1, with t_1 = -a_{k-1,k-1}
    std::vector<Fe> vec(k - 1);
    for (int i = 0; i < k - 1; ++i) vec[i] = at(i, k - 1);
    toeplitz[1] = F.neg(at(k - 1, k - 1));
    for (int i = 2; i <= k; ++i) {
      // vec <- M vec, then t_i = - row . vec
      std::vector<Fe> next(k - 1, fe_zero());
      for (int r = 0; r < k - 1; ++r)
        for (int s = 0; s < k - 1; ++s) next[r] = F.add(next[r], F.mul(at(r, s), vec[s]));
      Fe dot = fe_zero();
      for (int s = 0; s < k - 1; ++s) dot = F.add(dot, F.mul(at(k - 1, s), vec[s]));
      toeplitz[i] = F.neg(dot);
      if (i < k) vec = std::move(next);
    }
    // c_new (length k+1) = lower-triangular Toeplitz(toeplitz) * c
    std::vector<Fe> next(k + 1, fe_zero());
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j < static_cast<int>(c.size()); ++j)
        if (i - j >= 0 && i - j <= k)
          next[i] = F.add(next[i], F.mul(toeplitz[i - j], c[j]));
    c = std::move(next);
  }
  // c holds the characteristic polynomial coefficients with c[0] the leading
  // term of det(zI - g); flip to index-by-exponent form
  std::vector<Fe> coeffs(n_ + 1);
  for (int i = 0; i <= n_; ++i) coeffs[n_ - i] = c[i];
  return FieldPoly(field_, std::move(coeffs));
}

int Matrix::encoded_width(const Field& field) {
  uint64_t max_value = field.size() - 1;  // largest exponent, shifted by one
  int width = 0;
  while (max_value) {
    ++width;
    max_value >>= 8;
  }
  return std::max(width, 1);
}

std::string Matrix::encode() const {
  int width = encoded_width(*field_);
  std::string out;
  out.reserve(static_cast<size_t>(n_) * n_ * width);
  for (Fe x : a_) {
    uint64_t value = x.is_zero() ? 0 : static_cast<uint64_t>(x.v) + 1;
    for (int b = 0; b < width; ++b) {
      out.push_back(static_cast<char>(value & 0xff));
      value >>= 8;
    }
  }
  return out;
}

Matrix Matrix::decode(FieldPtr field, int n, const std::string& bytes) {
  int width = encoded_width(*field);
  if (bytes.size() != static_cast<size_t>(n) * n * width)
    fail(Errc::InvalidArgument, "encoded matrix has the wrong length");
  Matrix m(field, n);
  size_t pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      uint64_t value = 0;
      for (int b = width - 1; b >= 0; --b)
        value = (value << 8) | static_cast<uint8_t>(bytes[pos + b]);
      pos += width;
      m.at(i, j) = value == 0 ? fe_zero() : fe_exp(static_cast<int32_t>(value - 1));
    }
  return m;
}

uint64_t element_order(const Matrix& g, uint64_t order_multiple) {
  if (!g.pow(order_multiple).is_identity())
    fail(Errc::InvalidArgument, "order bound is not a multiple of the element order");
  uint64_t order = order_multiple;
  for (auto [p, mult] : factorize_u64(order_multiple)) {
    (void)mult;
    while (order % p == 0 && g.pow(order / p).is_identity()) order /= p;
  }
  return order;
}

bool is_irreducible_element(const Matrix& g) {
  return is_irreducible(g.characteristic_polynomial());
}

}  // namespace singerfac
