#include "singerfac/charcount.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "singerfac/bruteforce.hpp"
#include "singerfac/combinat.hpp"
#include "singerfac/error.hpp"
#include "singerfac/green.hpp"

namespace singerfac {

namespace {

// (-1)^e
int minus_one_pow(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }
// eps^e, with the sign identified with +-1
int eps_pow(Sign eps, long e) { return eps == Sign::Linear ? 1 : minus_one_pow(e); }

mpz_class mpz_of(int64_t v) { return mpz_class(static_cast<long>(v)); }

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// f^{d,mu}(z) = z^{d a(mu)} prod_{i=1}^{d|mu|} (z^i - 1) / prod_{y in mu} (z^{d h(y)} - 1)
IntPolynomial degree_poly(int d, const Partition& mu) {
  IntPolynomial num = IntPolynomial::monomial(1, static_cast<int>(d * a_stat(mu)));
  for (int i = 1; i <= d * mu.size(); ++i)
    num *= IntPolynomial::monomial(1, i) - IntPolynomial::one();
  for (int h : hook_lengths(mu))
    num = num.div_exact(IntPolynomial::monomial(1, d * h) - IntPolynomial::one());
  return num;
}

// Accumulates sum_gamma (coeff_gamma / z_gamma) * poly_gamma as an exact
// fraction (numerator polynomial, integer denominator).
struct PolyFraction {
  IntPolynomial num;
  mpz_class den{1};

  void add(const IntPolynomial& poly, long long numerator, long long denominator) {
    mpz_class nd(static_cast<long>(denominator));
    num = num * nd + poly * (den * static_cast<long>(numerator));
    den *= nd;
  }
  IntPolynomial resolve_times(const IntPolynomial& prefix) const {
    return (num * prefix).div_exact(den);
  }
};

// R_{n,lambda}(z): transvection-class polynomial.
IntPolynomial transvection_sum_poly(int n, int d, const Partition& lambda) {
  if (n == 1) return IntPolynomial::zero();
  Partition transvection_shape = Partition::hook(2, n - 2);
  PolyFraction sum;
  for (const Partition& gamma : partitions_of(n / d)) {
    long long chi = mn_character(lambda, gamma);
    if (chi == 0) continue;
    sum.add(green_polynomial(transvection_shape, gamma.scaled(d)), chi, z_centralizer(gamma));
  }
  // class size (z^n - 1)(z^{n-1} - 1)/(z - 1) = [n]_z (z^{n-1} - 1)
  IntPolynomial prefix = q_int(n) * (IntPolynomial::monomial(1, n - 1) - IntPolynomial::one());
  return sum.resolve_times(prefix);
}

// S_lambda(z): semisimple-reflection polynomial (d = 1, lambda |- n).
IntPolynomial semisimple_sum_poly(int n, const Partition& lambda) {
  Partition column = Partition::single_column(n - 1);
  Partition one_box = Partition::hook(1, 0);
  IntPolynomial q11 = green_polynomial(one_box, one_box);
  PolyFraction sum;
  for (const Partition& gamma : partitions_of(n)) {
    int m1 = gamma.multiplicity(1);
    if (m1 == 0) continue;
    long long chi = mn_character(lambda, gamma);
    if (chi == 0) continue;
    Partition reduced = gamma.remove_part(1);
    sum.add(green_polynomial(column, reduced) * q11, chi * m1, z_centralizer(gamma));
  }
  // z^{n-1} (z^n - 1)/(z - 1) = z^{n-1} [n]_z
  IntPolynomial prefix = IntPolynomial::monomial(1, n - 1) * q_int(n);
  return sum.resolve_times(prefix);
}

mpz_class q11_at_eps_q_to_n(const GroupParams& params) {
  Partition one_box = Partition::hook(1, 0);
  mpz_class point = mpz_pow(mpz_class(static_cast<long>(params.eps_q())), params.n);
  return green_polynomial(one_box, one_box).eval(point);
}

mpz_class q_minus_eps(const GroupParams& params) {
  return mpz_class(static_cast<long>(params.det_group_order()));
}

}  // namespace

Partition CharIndex::hook_shape(int n) const {
  validate(n);
  return Partition::hook(n / d - k, k);
}

void CharIndex::validate(int n) const {
  if (d < 1 || n % d != 0 || k < 0 || k >= n / d)
    fail(Errc::InvalidArgument, "invalid primary character index");
}

std::vector<CharIndex> primary_char_indices(int n) {
  std::vector<CharIndex> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    for (int k = 0; k < n / d; ++k) out.push_back(CharIndex{d, k});
  }
  return out;
}

mpz_class primary_degree(const CharIndex& idx, const GroupParams& params) {
  idx.validate(params.n);
  Partition lambda = idx.hook_shape(params.n);
  long n = params.n;
  mpz_class value = degree_poly(idx.d, lambda).eval(static_cast<long>(params.eps_q()));
  value *= eps_pow(params.eps, idx.d * a_stat(lambda.transpose()) + n * (n - 1) / 2);
  if (value <= 0) fail(Errc::InvalidArgument, "character degree must be positive");
  return value;
}

mpz_class transvection_sum(const CharIndex& idx, const GroupParams& params) {
  idx.validate(params.n);
  Partition lambda = idx.hook_shape(params.n);
  int n = params.n;
  mpz_class value = transvection_sum_poly(n, idx.d, lambda).eval(static_cast<long>(params.eps_q()));
  value *= minus_one_pow(n + n / idx.d);
  value *= eps_pow(params.eps, idx.d * a_stat(lambda.transpose()) + n / 2);
  return value;
}

mpz_class semisimple_sum(const CharIndex& idx, const GroupParams& params,
                         bool theta_trivial_on_x) {
  idx.validate(params.n);
  if (params.x == 1) fail(Errc::XTrivial, "G_X has no semisimple reflections when x = 1");
  if (idx.d > 1) return 0;
  Partition lambda = idx.hook_shape(params.n);
  mpz_class value =
      semisimple_sum_poly(params.n, lambda).eval(static_cast<long>(params.eps_q()));
  value *= eps_pow(params.eps, a_stat(lambda.transpose()) + params.n / 2);
  if (theta_trivial_on_x)
    value *= mpz_class(static_cast<unsigned long>(params.x)) - 1;
  else
    value = -value;
  return value;
}

mpz_class singer_orbit_sum(const CharIndex& idx, const GroupParams& params) {
  idx.validate(params.n);
  if (!params.has_singer_cycle())
    fail(Errc::NoSingerCycle, params.name() + " contains no Singer cycle");
  if (params.x > 1) return 0;
  int n = params.n;
  mpz_class value = q11_at_eps_q_to_n(params) * q_minus_eps(params) * mobius(idx.d);
  value *= minus_one_pow(idx.k + n + n / idx.d);
  Partition lambda = idx.hook_shape(n);
  value *= eps_pow(params.eps, idx.d * a_stat(lambda.transpose()) + n / 2);
  return value;
}

mpz_class singer_character_value(const CharIndex& idx, const GroupParams& params) {
  idx.validate(params.n);
  if (idx.d != 1)
    fail(Errc::InvalidArgument, "per-character Singer values are used only for d = 1");
  if (!params.has_singer_cycle())
    fail(Errc::NoSingerCycle, params.name() + " contains no Singer cycle");
  Partition lambda = idx.hook_shape(params.n);
  mpz_class value = q11_at_eps_q_to_n(params);
  value *= minus_one_pow(idx.k);
  value *= eps_pow(params.eps, a_stat(lambda.transpose()) + params.n / 2);
  return value;
}

mpz_class frobenius_count(const GroupParams& params, int length) {
  if (length < 0) fail(Errc::InvalidArgument, "length must be nonnegative");
  if (!params.has_singer_cycle())
    fail(Errc::NoSingerCycle, params.name() + " contains no Singer cycle");
  if (params.x > 1) {
    mpz_class total = 0;
    for (int m = 0; m < length; ++m) total += frobenius_count_refined(params, length, m);
    return total;
  }

  // x = 1: only transvections are reflections; sum over all primary hooks.
  mpq_class total = 0;
  for (const CharIndex& idx : primary_char_indices(params.n)) {
    mpz_class orbit = singer_orbit_sum(idx, params);
    if (orbit == 0) continue;
    mpz_class tsum = transvection_sum(idx, params);
    if (tsum == 0 && length > 0) continue;
    mpz_class deg = primary_degree(idx, params);
    // deg^{1-l}: one net power of deg in the numerator at l = 0
    mpq_class term = length == 0 ? mpq_class(orbit * deg)
                                 : mpq_class(mpz_pow(tsum, length) * orbit,
                                             mpz_pow(deg, length - 1));
    term.canonicalize();
    total += term;
  }
  total /= mpq_class(params.full_group_order());
  total.canonicalize();
  if (total.get_den() != 1)
    fail(Errc::InvalidArgument, "character pipeline produced a non-integer count");
  return total.get_num();
}

mpz_class frobenius_count_refined(const GroupParams& params, int length, int m) {
  if (params.x == 1) fail(Errc::XTrivial, "refined counts require x > 1");
  if (m < 0 || m >= length) fail(Errc::InvalidArgument, "need 0 <= m < length");
  if (!params.has_singer_cycle())
    fail(Errc::NoSingerCycle, params.name() + " contains no Singer cycle");

  mpq_class sub = 0;
  for (int k = 0; k < params.n; ++k) {
    CharIndex idx{1, k};
    mpz_class deg = primary_degree(idx, params);
    mpz_class tsum = transvection_sum(idx, params);
    if (tsum == 0 && m > 0) continue;
    mpz_class ss_trivial = semisimple_sum(idx, params, true);
    mpz_class ss_other = semisimple_sum(idx, params, false);
    mpz_class value = singer_character_value(idx, params);
    mpz_class piece = value * mpz_pow(tsum, m) *
                      (mpz_pow(ss_trivial, length - m) - mpz_pow(ss_other, length - m));
    mpq_class term(piece, mpz_pow(deg, length - 1));
    term.canonicalize();
    sub += term;
  }
  mpz_class theta_count = q_minus_eps(params) / static_cast<unsigned long>(params.x);
  mpq_class total = sub * mpq_class(binomial(length, m) * theta_count);
  total /= mpq_class(params.full_group_order());
  total.canonicalize();
  if (total.get_den() != 1)
    fail(Errc::InvalidArgument, "character pipeline produced a non-integer count");
  return total.get_num();
}

IntPolynomial closed_form_slu_poly(int n, int length) {
  return closed_form_gx_poly(n, length, 1);
}

mpz_class closed_form_slu(int n, int64_t eps_q, int length) {
  if (n <= 1) fail(Errc::InvalidArgument, "closed_form_slu needs n > 1");
  return closed_form_slu_poly(n, length).eval(mpz_of(eps_q));
}

IntPolynomial closed_form_gx_poly(int n, int length, const mpz_class& x) {
  if (n < 1 || length < 0) fail(Errc::InvalidArgument, "bad (n, length)");
  if (length < n) return IntPolynomial::zero();
  IntPolynomial sum;
  for (int i = 0; i <= length - n; ++i) {
    IntPolynomial term = q_binomial(length - i - 1, n - 1);
    mpz_class coeff = binomial(length, i) * mpz_pow(x, length - i - 1);
    if (i % 2) coeff = -coeff;
    sum += term * coeff;
  }
  return q_int(n).pow(length - 1) * sum;
}

mpz_class closed_form_gx(int n, int64_t eps_q, const mpz_class& x, int length) {
  if (x < 1) fail(Errc::InvalidArgument, "x must be >= 1");
  return closed_form_gx_poly(n, length, x).eval(mpz_of(eps_q));
}

IntPolynomial refined_count_poly(int n, int length, int m) {
  if (n < 1 || length < 0 || m < 0) fail(Errc::InvalidArgument, "bad (n, length, m)");
  IntPolynomial sum;
  for (int i = 0; i <= std::min(m, length - n); ++i) {
    IntPolynomial term = q_binomial(length - i - 1, n - 1);
    mpz_class coeff = binomial(m, i);
    if (i % 2) coeff = -coeff;
    sum += term * coeff;
  }
  if (sum.is_zero()) return sum;
  return q_int(n).pow(length - 1) * sum;
}

mpz_class closed_form_refined(int n, int64_t eps_q, const mpz_class& x, int length, int m) {
  if (x <= 1) fail(Errc::XTrivial, "refined counts require x > 1");
  if (m < 0 || m >= length) fail(Errc::InvalidArgument, "need 0 <= m < length");
  mpz_class weight = mpz_pow(x - 1, length - m) - minus_one_pow(length - m);
  weight /= x;  // always exact
  return binomial(length, m) * weight * refined_count_poly(n, length, m).eval(mpz_of(eps_q));
}

namespace {

// Sequences of j non-identity elements of X multiplying to det(c): det(c)
// generates X, so the product target is non-identity exactly when x > 1.
mpz_class det_sequence_weight(int j, const mpz_class& x) {
  if (x == 1) return j == 0 ? 1 : 0;
  mpz_class w = mpz_pow(x - 1, j) - minus_one_pow(j);
  w /= x;
  return w;
}

// Ennola checks revisit the same groups for every length; keep the built
// tables (and their product tables) for the lifetime of the process.
std::shared_ptr<const GroupTable> shared_table(const GroupParams& params, uint64_t cap) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const GroupTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(params.name());
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const GroupTable>(GroupTable::generate(params, cap));
  cache.emplace(params.name(), table);
  return table;
}

EnnolaSide ennola_side(int n, uint64_t q, Sign eps, uint64_t x, int length,
                       const mpz_class& formula_value, uint64_t brute_cap) {
  EnnolaSide side;
  GroupParams params = GroupParams::make(n, eps, q, x);
  side.group = params.name();
  side.formula_value = formula_value;
  if (!params.has_singer_cycle()) {
    side.rejected_no_singer = true;
    return side;
  }
  if (params.expected_order() > static_cast<unsigned long>(brute_cap)) return side;
  auto table = shared_table(params, brute_cap);
  SingerElement singer = table->find_singer();
  side.brute_force = fac_count(*table, singer.matrix, length);
  side.agree = (*side.brute_force == side.formula_value);
  return side;
}

}  // namespace

EnnolaReport ennola_check(int n, uint64_t q, int length, EnnolaScope scope, uint64_t brute_cap) {
  if (n % 2 == 0)
    fail(Errc::NoSingerCycle, "the unitary family has no Singer cycles for even n");
  if (n < 2 || length < n) fail(Errc::InvalidArgument, "need n >= 2 and length >= n");
  EnnolaReport report;
  report.n = n;
  report.q = q;
  report.ell = length;
  report.scope = scope;

  if (scope == EnnolaScope::Special) {
    IntPolynomial poly = closed_form_slu_poly(n, length);
    report.shared_polynomials.push_back(poly);
    mpz_class plus = poly.eval(static_cast<long>(q));
    mpz_class minus = poly.eval(-static_cast<long>(q));
    report.linear = ennola_side(n, q, Sign::Linear, 1, length, plus, brute_cap);
    report.unitary = ennola_side(n, q, Sign::Unitary, 1, length, minus, brute_cap);
  } else {
    // GL against GU: the per-m polynomials are shared; the |X|-dependent
    // placement weights stay outside and use each side's own x = q - eps.
    std::vector<IntPolynomial> polys;
    for (int m = 0; m <= length; ++m) polys.push_back(refined_count_poly(n, length, m));
    auto assemble = [&](int64_t eps_q, const mpz_class& x) {
      mpz_class total = 0;
      for (int m = 0; m <= length; ++m)
        total += binomial(length, m) * det_sequence_weight(length - m, x) *
                 polys[m].eval(mpz_of(eps_q));
      return total;
    };
    mpz_class x_plus(static_cast<unsigned long>(q - 1));
    mpz_class x_minus(static_cast<unsigned long>(q + 1));
    mpz_class plus = assemble(static_cast<int64_t>(q), x_plus);
    mpz_class minus = assemble(-static_cast<int64_t>(q), x_minus);
    // consistency with the direct closed form
    if (plus != closed_form_gx(n, static_cast<int64_t>(q), x_plus, length) ||
        minus != closed_form_gx(n, -static_cast<int64_t>(q), x_minus, length))
      fail(Errc::InvalidArgument, "shared-polynomial assembly disagrees with the closed form");
    if (length == n) {
      // at minimum length the pair collapses to a single polynomial
      // ((z - 1) [n]_z)^{n-1}, since h = (q - eps) [n]_{eps q} and n - 1 is even
      IntPolynomial single =
          ((IntPolynomial::monomial(1, 1) - IntPolynomial::one()) * q_int(n)).pow(n - 1);
      if (single.eval(mpz_of(static_cast<int64_t>(q))) != plus ||
          single.eval(mpz_of(-static_cast<int64_t>(q))) != minus)
        fail(Errc::InvalidArgument, "minimal-length Ennola polynomial mismatch");
      report.shared_polynomials.push_back(single);
    }
    for (auto& p : polys) report.shared_polynomials.push_back(std::move(p));
    report.linear = ennola_side(n, q, Sign::Linear, q - 1, length, plus, brute_cap);
    report.unitary = ennola_side(n, q, Sign::Unitary, q + 1, length, minus, brute_cap);
  }
  report.agree = report.linear.agree && report.unitary.agree;
  return report;
}

ConjectureReport conjecture_eigenvalue_check(const GroupTable& table, int length,
                                             size_t trials, uint64_t seed) {
  const GroupParams& params = table.params();
  if (length < params.n) fail(Errc::InvalidArgument, "need length >= n");
  SingerElement singer = table.find_singer();
  const Field& F = table.element(0).field();
  Fe target_det = singer.matrix.determinant();

  // X as explicit entry-field elements
  uint64_t x = params.x;
  uint64_t unit = F.unit_order();
  std::vector<Fe> subgroup;
  for (uint64_t j = 0; j < x; ++j)
    subgroup.push_back(j == 0 ? F.one() : fe_exp(static_cast<int32_t>(j * (unit / x))));

  ConjectureReport report;
  report.group = params.name();
  report.ell = length;

  mpz_class sequences = mpz_pow(mpz_class(static_cast<unsigned long>(x)), length - 1);
  bool exhaustive = trials == 0 || sequences <= static_cast<unsigned long>(trials);
  report.exhaustive = exhaustive;

  auto run_one = [&](const std::vector<Fe>& dets) {
    ConjectureFinding finding;
    int m = 0;
    for (Fe d : dets) {
      finding.dets.push_back(F.to_string(d));
      if (d == F.one()) ++m;
    }
    finding.m = m;
    finding.brute_force = fac_count_by_det_sequence(table, singer.matrix, dets);
    finding.conjecture =
        refined_count_poly(params.n, length, m).eval(mpz_of(params.eps_q()));
    finding.agree = finding.brute_force == finding.conjecture;
    (finding.agree ? report.agreements : report.disagreements) += 1;
    report.findings.push_back(std::move(finding));
  };

  auto complete_sequence = [&](std::vector<Fe> prefix) {
    // the last determinant is forced by the product constraint
    Fe acc = F.one();
    for (Fe d : prefix) acc = F.mul(acc, d);
    prefix.push_back(F.mul(target_det, F.inv(acc)));
    return prefix;
  };

  if (exhaustive) {
    std::vector<uint64_t> digits(length - 1, 0);
    while (true) {
      std::vector<Fe> prefix;
      for (uint64_t digit : digits) prefix.push_back(subgroup[digit]);
      run_one(complete_sequence(std::move(prefix)));
      int pos = static_cast<int>(digits.size()) - 1;
      while (pos >= 0 && ++digits[pos] == x) digits[pos--] = 0;
      if (pos < 0) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(0, x - 1);
    for (size_t t = 0; t < trials; ++t) {
      std::vector<Fe> prefix;
      for (int i = 0; i + 1 < length; ++i) prefix.push_back(subgroup[pick(rng)]);
      run_one(complete_sequence(std::move(prefix)));
    }
  }
  return report;
}

}  // namespace singerfac
