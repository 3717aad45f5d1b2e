#include "singerfac/group.hpp"

#include <algorithm>
#include <sstream>

#include "singerfac/combinat.hpp"
#include "singerfac/error.hpp"

namespace singerfac {

GroupParams GroupParams::make(int n, Sign eps, uint64_t q, uint64_t x) {
  if (n < 1) fail(Errc::InvalidArgument, "dimension must be positive");
  if (q < 2) fail(Errc::InvalidArgument, "q must be a prime power");
  auto factors = factorize_u64(q);
  if (factors.size() != 1) fail(Errc::InvalidArgument, "q must be a prime power");
  GroupParams params;
  params.n = n;
  params.eps = eps;
  params.q = q;
  params.x = x;
  params.p = factors[0].first;
  params.e = factors[0].second;
  uint64_t det_order = params.det_group_order();
  if (x < 1 || det_order % x != 0)
    fail(Errc::InvalidArgument, "x must divide q - eps");
  return params;
}

uint64_t GroupParams::det_group_order() const {
  return eps == Sign::Linear ? q - 1 : q + 1;
}

FieldPtr GroupParams::entry_field() const {
  return eps == Sign::Linear ? build_field(p, e) : build_field(p, 2 * e);
}

mpz_class GroupParams::full_group_order() const {
  mpz_class qz(static_cast<unsigned long>(q));
  mpz_class acc;
  mpz_pow_ui(acc.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n) * (n - 1) / 2);
  int eps_i = sign_value(eps);
  for (int i = 1; i <= n; ++i) {
    mpz_class qi;
    mpz_pow_ui(qi.get_mpz_t(), qz.get_mpz_t(), i);
    int sign_i = (eps_i == 1 || i % 2 == 0) ? 1 : -1;
    acc *= qi - sign_i;
  }
  return acc;
}

mpz_class GroupParams::expected_order() const {
  mpz_class full = full_group_order();
  mpz_class sl = full / static_cast<unsigned long>(det_group_order());
  return sl * static_cast<unsigned long>(x);
}

mpz_class GroupParams::singer_order() const {
  mpz_class z(eps_q());
  mpz_class zn;
  mpz_pow_ui(zn.get_mpz_t(), z.get_mpz_t(), n);
  mpz_class core = (zn - 1) / (z - 1);
  return core * static_cast<unsigned long>(x);
}

bool GroupParams::has_singer_cycle() const {
  if (eps == Sign::Unitary && n % 2 == 0) return false;
  if (is_su32()) return false;
  return true;
}

bool GroupParams::det_in_x(Fe d, const Field& entry) const {
  if (d.is_zero()) return false;
  // X is the unique subgroup of order x of the cyclic determinant group.
  uint64_t unit = entry.unit_order();
  uint64_t det_order = det_group_order();
  // membership in the determinant group first (automatic for eps = +)
  if (unit % det_order != 0) fail(Errc::InvalidArgument, "bad determinant group");
  uint64_t stride = unit / det_order;
  if (static_cast<uint64_t>(d.v) % stride != 0) return false;
  uint64_t pos = static_cast<uint64_t>(d.v) / stride;  // position inside Z/(q - eps)
  return pos % (det_order / x) == 0;
}

std::string GroupParams::name() const {
  std::ostringstream os;
  uint64_t det_order = det_group_order();
  if (x == 1)
    os << (eps == Sign::Linear ? "SL" : "SU");
  else if (x == det_order)
    os << (eps == Sign::Linear ? "GL" : "GU");
  else
    os << (eps == Sign::Linear ? "G{x=" : "GU{x=") << x << "}";
  os << "_" << n << "(" << q << ")";
  return os.str();
}

mpz_class transvection_count(int n, int64_t eps_q) {
  mpz_class z(static_cast<long>(eps_q));
  mpz_class zn, zn1;
  mpz_pow_ui(zn.get_mpz_t(), z.get_mpz_t(), n);
  mpz_pow_ui(zn1.get_mpz_t(), z.get_mpz_t(), n - 1);
  return (zn - 1) * (zn1 - 1) / (z - 1);
}

mpz_class semisimple_count_per_det(int n, int64_t eps_q) {
  mpz_class z(static_cast<long>(eps_q));
  mpz_class zn, zn1;
  mpz_pow_ui(zn.get_mpz_t(), z.get_mpz_t(), n);
  mpz_pow_ui(zn1.get_mpz_t(), z.get_mpz_t(), n - 1);
  return zn1 * (zn - 1) / (z - 1);
}

std::vector<Reflection> enumerate_reflections(const GroupParams& params, uint64_t scan_cap) {
  FieldPtr field = params.entry_field();
  const Field& F = *field;
  int n = params.n;
  uint64_t fsize = F.size();

  // count of nonzero vectors and of v-normalizations
  mpz_class vectors = 0;
  {
    mpz_class fn;
    mpz_class fz(static_cast<unsigned long>(fsize));
    mpz_pow_ui(fn.get_mpz_t(), fz.get_mpz_t(), n);
    vectors = fn - 1;
  }
  mpz_class pairs = vectors * vectors / static_cast<long>(fsize - 1);
  if (pairs > static_cast<unsigned long>(scan_cap))
    fail(Errc::ScanTooLarge, "reflection scan exceeds the candidate cap");

  uint64_t vn = 1;
  for (int i = 0; i < n; ++i) vn *= fsize;

  auto decode_vec = [&](uint64_t code) {
    std::vector<Fe> v(n);
    for (int i = 0; i < n; ++i) {
      uint64_t digit = code % fsize;
      code /= fsize;
      v[i] = digit == 0 ? fe_zero() : fe_exp(static_cast<int32_t>(digit - 1));
    }
    return v;
  };

  std::vector<Reflection> out;
  Matrix id = Matrix::identity(field, n);
  for (uint64_t vcode = 1; vcode < vn; ++vcode) {
    std::vector<Fe> v = decode_vec(vcode);
    // normalize: first nonzero coordinate must be 1, so each reflection is
    // produced by exactly one (u, v) pair
    int first = 0;
    while (v[first].is_zero()) ++first;
    if (!(v[first] == F.one())) continue;
    for (uint64_t ucode = 1; ucode < vn; ++ucode) {
      std::vector<Fe> u = decode_vec(ucode);
      // det(I + u v^T) = 1 + v . u
      Fe dot = fe_zero();
      for (int i = 0; i < n; ++i) dot = F.add(dot, F.mul(v[i], u[i]));
      Fe det = F.add(F.one(), dot);
      if (det.is_zero()) continue;
      if (!params.det_in_x(det, F)) continue;
      Matrix m = id;
      for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(u[i], v[j]));
      }
      if (params.eps == Sign::Unitary) {
        Matrix adj = m.conjugate_transpose(params.q);
        if (!(m * adj).is_identity()) continue;
      }
      out.push_back(Reflection{std::move(m), det, det == F.one()});
    }
  }

  // sanity against the closed-form class sizes
  mpz_class transvections = 0, semisimple = 0;
  for (const auto& r : out) (r.transvection ? transvections : semisimple) += 1;
  if (transvections != transvection_count(n, params.eps_q()))
    fail(Errc::ClosureMismatch, "transvection count does not match the closed form");
  if (semisimple != semisimple_count_per_det(n, params.eps_q()) * static_cast<long>(params.x - 1))
    fail(Errc::ClosureMismatch, "semisimple reflection count does not match the closed form");
  return out;
}

void GroupTable::index_elements(std::vector<Matrix> elements) {
  std::sort(elements.begin(), elements.end(),
            [](const Matrix& a, const Matrix& b) { return a.encode() < b.encode(); });
  elements_ = std::move(elements);
  index_.reserve(elements_.size() * 2);
  for (uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].encode(), i);
  identity_index_ = *index_of(Matrix::identity(elements_[0].field_ptr(), params_.n));
  reflection_index_.clear();
  for (const auto& r : reflections_) reflection_index_.push_back(*index_of(r.matrix));
}

GroupTable GroupTable::generate(const GroupParams& params, uint64_t size_cap) {
  GroupTable table;
  table.params_ = params;
  mpz_class expected = params.expected_order();
  if (expected > static_cast<unsigned long>(size_cap))
    fail(Errc::GroupTooLarge, params.name() + " exceeds the group size cap");
  table.reflections_ = enumerate_reflections(params);

  FieldPtr field = params.entry_field();
  std::vector<Matrix> elements;
  std::unordered_map<std::string, uint32_t> seen;
  Matrix id = Matrix::identity(field, params.n);
  elements.push_back(id);
  seen.emplace(id.encode(), 0);
  for (size_t head = 0; head < elements.size(); ++head) {
    Matrix current = elements[head];  // copy: elements may reallocate
    for (const auto& r : table.reflections_) {
      Matrix next = current * r.matrix;
      std::string key = next.encode();
      if (seen.emplace(std::move(key), static_cast<uint32_t>(elements.size())).second) {
        if (elements.size() >= size_cap)
          fail(Errc::GroupTooLarge, params.name() + " closure exceeds the size cap");
        elements.push_back(std::move(next));
      }
    }
  }

  if (mpz_class(static_cast<unsigned long>(elements.size())) != expected) {
    if (params.is_su32())
      fail(Errc::NotReflectionGroup,
           "SU_3(2) is not generated by its reflections (closure order " +
               std::to_string(elements.size()) + " of 216)");
    fail(Errc::ClosureMismatch, params.name() + " closure order " +
                                    std::to_string(elements.size()) +
                                    " does not match the cardinality formula " +
                                    expected.get_str());
  }
  table.index_elements(std::move(elements));
  return table;
}

std::optional<uint32_t> GroupTable::index_of(const Matrix& m) const {
  auto it = index_.find(m.encode());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<uint32_t>& GroupTable::reflection_products() const {
  std::lock_guard<std::mutex> lock(*products_mutex_);
  if (products_.empty() && !elements_.empty() && !reflections_.empty()) {
    std::vector<uint32_t> products;
    products.resize(elements_.size() * reflections_.size());
    for (size_t i = 0; i < elements_.size(); ++i)
      for (size_t r = 0; r < reflections_.size(); ++r) {
        auto idx = index_of(elements_[i] * reflections_[r].matrix);
        if (!idx) fail(Errc::ClosureMismatch, "product left the table");
        products[i * reflections_.size() + r] = *idx;
      }
    products_ = std::move(products);
  }
  return products_;
}

SingerElement GroupTable::find_singer() const {
  if (!params_.has_singer_cycle())
    fail(Errc::NoSingerCycle, params_.name() + " contains no Singer cycle");
  {
    std::lock_guard<std::mutex> lock(*products_mutex_);
    if (singer_) return *singer_;
  }
  mpz_class target_z = params_.singer_order();
  if (!target_z.fits_ulong_p()) fail(Errc::GroupTooLarge, "Singer order does not fit");
  uint64_t target = target_z.get_ui();
  mpz_class bound_z = params_.full_group_order();
  if (!bound_z.fits_ulong_p()) fail(Errc::GroupTooLarge, "group exponent bound does not fit");
  uint64_t bound = bound_z.get_ui();

  for (const Matrix& m : elements_) {  // sorted: first hit has least encoding
    if (element_order(m, bound) != target) continue;
    if (!is_irreducible_element(m)) continue;
    SingerElement s;
    s.matrix = m;
    s.order = target;
    // eigenvalue exponent: locate a root of the characteristic polynomial in
    // the splitting field, as a power of its least primitive element
    FieldPoly chi = m.characteristic_polynomial();
    ExtField splitting(least_irreducible(m.field_ptr(), params_.n));
    ExtField::Elt eta = splitting.least_primitive();
    mpz_class ext_units = splitting.size() - 1;
    if (ext_units.fits_ulong_p()) {
      uint64_t units = ext_units.get_ui();
      ExtField::Elt power = splitting.one();
      for (uint64_t j = 0; j < units; ++j) {
        if (j > 0) power = splitting.mul(power, eta);
        // evaluate chi at power by Horner over the extension
        ExtField::Elt acc = splitting.zero();
        for (int c = chi.degree(); c >= 0; --c)
          acc = splitting.add(splitting.mul(acc, power), splitting.from_base(chi.coeff(c)));
        if (acc.is_zero()) {
          s.eigen_exponent = j;
          break;
        }
      }
    }
    std::lock_guard<std::mutex> lock(*products_mutex_);
    if (!singer_) singer_ = s;
    return *singer_;
  }
  fail(Errc::NoSingerCycle, params_.name() + " contains no Singer cycle");
}

SingerElement companion_singer(int n, uint64_t q) {
  if (n < 1) fail(Errc::InvalidArgument, "dimension must be positive");
  auto factors = factorize_u64(q);
  if (q < 2 || factors.size() != 1) fail(Errc::InvalidArgument, "q must be a prime power");
  // the splitting field GF(q^n) must respect the field size cap
  mpz_class qn;
  mpz_class qz(static_cast<unsigned long>(q));
  mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), n);
  if (qn > static_cast<unsigned long>(Field::kMaxSize))
    fail(Errc::FieldTooLarge, "GF(q^n) exceeds the field size cap");

  FieldPtr base = build_field(factors[0].first, factors[0].second);
  SingerElement out;
  if (n == 1) {
    Matrix m(base, 1);
    m.at(0, 0) = base->generator();
    out.matrix = m;
    out.order = q - 1;
    out.eigen_exponent = 1;
    if (q == 2) out.eigen_exponent = 0;  // GF(2)^x is trivial
    return out;
  }

  ExtField ext(least_irreducible(base, n));
  ExtField::Elt eta = ext.least_primitive();
  // minimal polynomial over GF(q): prod_{i=0}^{n-1} (z - eta^{q^i}); its
  // coefficients are Frobenius-fixed, hence constants of the extension
  std::vector<ExtField::Elt> roots;
  ExtField::Elt root = eta;
  for (int i = 0; i < n; ++i) {
    roots.push_back(root);
    root = ext.pow(root, mpz_class(static_cast<unsigned long>(q)));
  }
  // multiply out with coefficients in the extension
  std::vector<ExtField::Elt> poly{ext.one()};
  for (const auto& r : roots) {
    std::vector<ExtField::Elt> next(poly.size() + 1, ext.zero());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = ext.add(next[i + 1], poly[i]);
      next[i] = ext.sub(next[i], ext.mul(poly[i], r));
    }
    poly = std::move(next);
  }
  std::vector<Fe> min_poly(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (poly[i].degree() > 0)
      fail(Errc::InvalidArgument, "minimal polynomial coefficient left the base field");
    min_poly[i] = poly[i].coeff(0);
  }

  // companion matrix of z^n - a_1 z^{n-1} - ... - a_n: subdiagonal ones,
  // last column (a_n, ..., a_1) with a_i = -min_poly[n - i]
  Matrix m(base, n);
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = base->one();
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = base->neg(min_poly[i]);
  out.matrix = m;
  out.order = qn.get_ui() - 1;
  out.eigen_exponent = 1;
  return out;
}

}  // namespace singerfac
