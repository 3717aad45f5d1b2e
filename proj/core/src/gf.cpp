#include "singerfac/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "singerfac/error.hpp"

namespace singerfac {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    out.emplace_back(d, mult);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// Polynomials over GF(p) in plain coefficient form, used only during field
// construction (before any Field exists).
using ModpPoly = std::vector<uint64_t>;

void modp_trim(ModpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModpPoly modp_mul(const ModpPoly& a, const ModpPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  modp_trim(out);
  return out;
}

ModpPoly modp_mod(ModpPoly a, const ModpPoly& m, uint64_t p) {
  modp_trim(a);
  while (a.size() >= m.size()) {
    uint64_t lead = a.back();  // m is monic
    size_t shift = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j)
      a[shift + j] = (a[shift + j] + (p - lead % p) * m[j]) % p;
    modp_trim(a);
  }
  return a;
}

ModpPoly modp_powmod(ModpPoly base, uint64_t k, const ModpPoly& m, uint64_t p) {
  ModpPoly result{1};
  base = modp_mod(std::move(base), m, p);
  while (k) {
    if (k & 1) result = modp_mod(modp_mul(result, base, p), m, p);
    base = modp_mod(modp_mul(base, base, p), m, p);
    k >>= 1;
  }
  return result;
}

ModpPoly modp_gcd(ModpPoly a, ModpPoly b, uint64_t p) {
  modp_trim(a);
  modp_trim(b);
  while (!b.empty()) {
    // make b monic, then reduce
    uint64_t lead = b.back();
    if (lead != 1) {
      // inverse of lead mod p by Fermat
      uint64_t inv = 1, base = lead, k = p - 2;
      while (k) {
        if (k & 1) inv = inv * base % p;
        base = base * base % p;
        k >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    ModpPoly r = modp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree e: irreducible over GF(p) iff z^{p^e} = z mod f and
// gcd(z^{p^{e/r}} - z, f) = 1 for every prime r | e.
bool modp_irreducible(const ModpPoly& f, uint64_t p) {
  unsigned e = static_cast<unsigned>(f.size()) - 1;
  if (e == 0) return false;
  auto frob_power = [&](unsigned k) {
    // z^{p^k} mod f via repeated p-th powers
    ModpPoly acc{0, 1};
    for (unsigned i = 0; i < k; ++i) acc = modp_powmod(std::move(acc), p, f, p);
    return acc;
  };
  ModpPoly zq = frob_power(e);
  ModpPoly z{0, 1};
  if (modp_mod(zq, f, p) != modp_mod(z, f, p)) return false;
  for (auto [r, mult] : factorize_u64(e)) {
    (void)mult;
    ModpPoly g = frob_power(e / static_cast<unsigned>(r));
    // g - z
    ModpPoly diff = g;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    modp_trim(diff);
    ModpPoly common = modp_gcd(f, diff, p);
    if (common.size() > 1) return false;
  }
  return true;
}

uint32_t pack_coords(const ModpPoly& f, uint64_t p, unsigned e) {
  uint64_t acc = 0;
  for (unsigned i = e; i-- > 0;) acc = acc * p + (i < f.size() ? f[i] : 0);
  return static_cast<uint32_t>(acc);
}

ModpPoly unpack_coords(uint64_t packed, uint64_t p, unsigned e) {
  ModpPoly f(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    f[i] = packed % p;
    packed /= p;
  }
  modp_trim(f);
  return f;
}

}  // namespace

std::shared_ptr<const Field> Field::make(uint64_t p, unsigned e) {
  if (!is_prime_u64(p)) fail(Errc::NotPrime, "field characteristic must be prime");
  if (e < 1) fail(Errc::InvalidArgument, "extension degree must be positive");
  uint64_t size = 1;
  for (unsigned i = 0; i < e; ++i) {
    size *= p;
    if (size > kMaxSize) fail(Errc::FieldTooLarge, "field exceeds the 2^22 size cap");
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->e_ = e;
  field->size_ = size;

  // Least irreducible monic modulus of degree e, ordering coefficient tuples
  // by their base-p integer value (z^{e-1} coefficient most significant).
  if (e == 1) {
    field->modulus_ = {0, 1};  // GF(p) itself: the quotient by (z)
  } else {
    uint64_t span = 1;
    for (unsigned i = 0; i < e; ++i) span *= p;
    bool found = false;
    for (uint64_t m = 0; m < span; ++m) {
      ModpPoly f = unpack_coords(m, p, e);
      f.resize(e + 1, 0);
      f[e] = 1;
      if (modp_irreducible(f, p)) {
        field->modulus_ = f;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::InvalidArgument, "no irreducible modulus found");
  }

  // Least primitive element, by packed-coordinate value.
  uint64_t n = size - 1;
  auto factors = factorize_u64(n);
  ModpPoly generator;
  for (uint64_t cand = 1; cand < size; ++cand) {
    ModpPoly g = unpack_coords(cand, p, e);
    bool primitive = n == 1;
    if (n > 1) {
      primitive = true;
      for (auto [r, mult] : factors) {
        (void)mult;
        ModpPoly pow = modp_powmod(g, n / r, field->modulus_, p);
        if (pow == ModpPoly{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive && modp_powmod(g, n, field->modulus_, p) != ModpPoly{1}) primitive = false;
    }
    if (primitive) {
      generator = g;
      break;
    }
  }

  field->antilog_.resize(n);
  field->log_.assign(size, -1);
  ModpPoly acc{1};
  for (uint64_t i = 0; i < n; ++i) {
    uint32_t packed = pack_coords(acc, p, e);
    field->antilog_[i] = packed;
    field->log_[packed] = static_cast<int32_t>(i);
    acc = modp_mod(modp_mul(acc, generator, p), field->modulus_, p);
  }
  if (acc != ModpPoly{1}) fail(Errc::InvalidArgument, "generator order verification failed");

  // zech_[i] = log(1 + g^i); -1 marks 1 + g^i = 0.
  field->zech_.assign(n, -1);
  for (uint64_t i = 0; i < n; ++i) {
    ModpPoly v = unpack_coords(field->antilog_[i], p, e);
    if (v.empty())
      v = {1};
    else
      v[0] = (v[0] + 1) % p;
    modp_trim(v);
    field->zech_[i] = field->log_[pack_coords(v, p, e)];
  }
  return field;
}

Fe Field::add(Fe a, Fe b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  uint64_t n = unit_order();
  int64_t diff = (b.v - a.v) % static_cast<int64_t>(n);
  if (diff < 0) diff += n;
  int32_t z = zech_[diff];
  if (z < 0) return fe_zero();
  return fe_exp(static_cast<int32_t>((a.v + z) % static_cast<int64_t>(n)));
}

Fe Field::neg(Fe a) const {
  if (a.is_zero()) return a;
  if (p_ == 2) return a;
  uint64_t n = unit_order();
  return fe_exp(static_cast<int32_t>((a.v + n / 2) % n));
}

Fe Field::mul(Fe a, Fe b) const {
  if (a.is_zero() || b.is_zero()) return fe_zero();
  return fe_exp(static_cast<int32_t>((static_cast<int64_t>(a.v) + b.v) % static_cast<int64_t>(unit_order())));
}

Fe Field::inv(Fe a) const {
  if (a.is_zero()) fail(Errc::ZeroInput, "inverse of zero");
  uint64_t n = unit_order();
  return fe_exp(static_cast<int32_t>((n - a.v) % n));
}

Fe Field::pow(Fe a, uint64_t k) const {
  if (a.is_zero()) {
    if (k == 0) return one();
    return a;
  }
  uint64_t n = unit_order();
  __uint128_t wide = static_cast<__uint128_t>(a.v) * (k % n);
  return fe_exp(static_cast<int32_t>(static_cast<uint64_t>(wide % n)));
}

Fe Field::frobenius(Fe a, uint64_t q) const {
  // q must be a power of the characteristic
  uint64_t check = q;
  while (check > 1) {
    if (check % p_) fail(Errc::InvalidArgument, "frobenius exponent must be a power of p");
    check /= p_;
  }
  if (q == 0) fail(Errc::InvalidArgument, "frobenius exponent must be positive");
  return pow(a, q);
}

uint64_t Field::element_order(Fe a) const {
  if (a.is_zero()) fail(Errc::ZeroInput, "order of zero");
  uint64_t n = unit_order();
  return n / std::gcd(static_cast<uint64_t>(a.v), n);
}

Fe Field::from_coords(const std::vector<uint64_t>& coords) const {
  ModpPoly f;
  f.reserve(coords.size());
  for (uint64_t c : coords) f.push_back(c % p_);
  modp_trim(f);
  if (f.size() > e_) fail(Errc::InvalidArgument, "coordinate vector too long");
  if (f.empty()) return fe_zero();
  return fe_exp(log_[pack_coords(f, p_, e_)]);
}

std::vector<uint64_t> Field::to_coords(Fe a) const {
  std::vector<uint64_t> out(e_, 0);
  if (a.is_zero()) return out;
  ModpPoly f = unpack_coords(antilog_[a.v], p_, e_);
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  return out;
}

std::string Field::to_string(Fe a) const {
  // "g^<decimal exponent>" keeps the exponent-0 element distinct from zero
  if (a.is_zero()) return "0";
  return "g^" + std::to_string(a.v);
}

Fe Field::from_string(const std::string& s) const {
  if (s == "0") return fe_zero();
  if (s.size() < 3 || s[0] != 'g' || s[1] != '^')
    fail(Errc::InvalidArgument, "bad field element literal");
  long v = std::stol(s.substr(2));
  if (v < 0 || static_cast<uint64_t>(v) >= unit_order())
    fail(Errc::InvalidArgument, "exponent out of range");
  return fe_exp(static_cast<int32_t>(v));
}

std::string Field::context_repr() const {
  std::string out = "(" + std::to_string(p_) + ", " + std::to_string(e_) + ", [";
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(modulus_[i]);
  }
  return out + "])";
}

bool Field::in_subfield(Fe a, uint64_t sub) const {
  if (sub < 2 || (unit_order() % (sub - 1)) != 0)
    fail(Errc::InvalidArgument, "not a subfield order");
  if (a.is_zero()) return true;
  uint64_t stride = unit_order() / (sub - 1);
  return a.v % stride == 0;
}

FieldPtr build_field(uint64_t p, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr field = Field::make(p, e);
  cache[key] = field;
  return field;
}

Fe norm_to_unit_subgroup(Fe x, uint64_t q, const Field& fq2) {
  if (x.is_zero()) fail(Errc::ZeroInput, "norm of zero");
  if (fq2.size() != q * q) fail(Errc::InvalidArgument, "context is not GF(q^2)");
  return fq2.pow(x, q - 1);
}

}  // namespace singerfac
