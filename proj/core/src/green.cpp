#include "singerfac/green.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <nlohmann/json.hpp>

#include "singerfac/error.hpp"

namespace singerfac {

namespace {

// Horizontal strips mu of lambda with |lambda| - |mu| = r: interlacing
// lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
void horizontal_strips(const Partition& lambda, int r, std::vector<Partition>& out) {
  out.clear();
  const auto& lp = lambda.parts();
  int want = lambda.size() - r;
  if (want < 0) return;
  // depth-first over rows
  std::vector<int> stack;
  std::function<void(size_t, int)> rec = [&](size_t row, int acc) {
    if (acc > want) return;
    if (row == lp.size()) {
      if (acc != want) return;
      std::vector<int> parts;
      for (int v : stack)
        if (v > 0) parts.push_back(v);
      out.emplace_back(std::move(parts));
      return;
    }
    int hi = lp[row];
    int lo = row + 1 < lp.size() ? lp[row + 1] : 0;
    for (int v = hi; v >= lo; --v) {
      stack.push_back(v);
      rec(row + 1, acc + v);
      stack.pop_back();
    }
  };
  rec(0, 0);
}

// psi_{lambda/mu}(t) = prod over i with m_i(mu) = m_i(lambda) + 1 of (1 - t^{m_i(mu)}).
IntPolynomial psi_factor(const Partition& lambda, const Partition& mu) {
  IntPolynomial acc = IntPolynomial::one();
  int max_part = lambda.empty() ? 0 : lambda.parts()[0];
  for (int i = 1; i <= max_part; ++i) {
    int mm = mu.multiplicity(i);
    if (mm == lambda.multiplicity(i) + 1)
      acc *= IntPolynomial::one() - IntPolynomial::monomial(1, mm);
  }
  return acc;
}

}  // namespace

IntPolynomial GreenTable::hall_littlewood_monomial_coefficient(const Partition& lambda,
                                                               const Partition& nu) {
  if (lambda.size() != nu.size())
    fail(Errc::InvalidArgument, "hall_littlewood coefficient needs |lambda| = |nu|");
  int nvars = lambda.size();
  std::vector<int> padded(nvars, 0);
  for (size_t i = 0; i < nu.num_parts(); ++i) padded[i] = nu.parts()[i];
  if (static_cast<int>(nu.num_parts()) > nvars)
    return IntPolynomial::zero();

  // Peels the last variable: the branching rule expresses P_lambda(x_1..x_k)
  // through P_mu(x_1..x_{k-1}) over horizontal strips lambda/mu.
  std::function<IntPolynomial(const Partition&, std::vector<int>&)> rec =
      [&](const Partition& shape, std::vector<int>& exps) -> IntPolynomial {
    if (exps.empty()) return shape.empty() ? IntPolynomial::one() : IntPolynomial::zero();
    Key key{shape.parts(), exps};
    {
      std::shared_lock lock(mutex_);
      auto it = hl_cache_.find(key);
      if (it != hl_cache_.end()) return it->second;
    }
    int r = exps.back();
    exps.pop_back();
    IntPolynomial total;
    std::vector<Partition> strips;
    horizontal_strips(shape, r, strips);
    for (const Partition& mu : strips) total += psi_factor(shape, mu) * rec(mu, exps);
    exps.push_back(r);
    std::unique_lock lock(mutex_);
    hl_cache_[key] = total;
    return total;
  };
  return rec(lambda, padded);
}

std::map<Partition, mpz_class> GreenTable::power_sum_monomials(const Partition& rho) {
  int nvars = rho.size();
  std::map<Partition, mpz_class> cur;
  cur[Partition()] = 1;
  int total = 0;
  for (int r : rho.parts()) {
    total += r;
    std::map<Partition, mpz_class> next;
    for (const Partition& target : partitions_of(total)) {
      if (static_cast<int>(target.num_parts()) > nvars) continue;
      // coefficient of m_target in (previous expansion) * p_r: count the
      // padded positions of target from which r can be subtracted
      std::vector<int> padded(nvars, 0);
      for (size_t i = 0; i < target.num_parts(); ++i) padded[i] = target.parts()[i];
      mpz_class acc(0);
      for (int i = 0; i < nvars; ++i) {
        if (padded[i] < r) continue;
        std::vector<int> reduced(padded);
        reduced[i] -= r;
        std::sort(reduced.begin(), reduced.end(), std::greater<int>());
        while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
        auto it = cur.find(Partition(std::move(reduced)));
        if (it != cur.end()) acc += it->second;
      }
      if (acc != 0) next[target] = acc;
    }
    cur = std::move(next);
  }
  return cur;
}

const std::map<Partition, IntPolynomial>& GreenTable::expansion_column(const Partition& rho) {
  {
    std::shared_lock lock(mutex_);
    auto it = columns_.find(rho.parts());
    if (it != columns_.end()) return it->second;
  }
  int n = rho.size();
  // remainder of p_rho in the monomial basis, coefficients in Z[t]
  std::map<Partition, IntPolynomial> remainder;
  for (auto& [nu, c] : power_sum_monomials(rho)) remainder[nu] = IntPolynomial(c);

  std::map<Partition, IntPolynomial> column;
  // Descending lex refines dominance, so each step eliminates the leading
  // monomial exactly (P_lambda = m_lambda + dominance-lower terms).
  for (const Partition& lambda : partitions_of(n)) {
    IntPolynomial x;
    auto it = remainder.find(lambda);
    if (it != remainder.end()) {
      x = it->second;
      remainder.erase(it);
    }
    column[lambda] = x;
    if (x.is_zero()) continue;
    for (const Partition& nu : partitions_of(n)) {
      if (nu == lambda) continue;
      IntPolynomial c = hall_littlewood_monomial_coefficient(lambda, nu);
      if (c.is_zero()) continue;
      remainder[nu] -= x * c;
      if (remainder[nu].is_zero()) remainder.erase(nu);
    }
  }
  if (!remainder.empty())
    fail(Errc::InvalidArgument, "Hall-Littlewood back-substitution left a remainder");

  std::unique_lock lock(mutex_);
  return columns_.emplace(rho.parts(), std::move(column)).first->second;
}

IntPolynomial GreenTable::transition_coefficient(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    fail(Errc::InvalidArgument, "transition coefficient needs |lambda| = |rho|");
  if (lambda.size() > bound_)
    fail(Errc::InvalidArgument, "partition size exceeds the Green table bound");
  if (lambda.empty()) return IntPolynomial::one();
  const auto& column = expansion_column(rho);
  auto it = column.find(lambda);
  return it == column.end() ? IntPolynomial::zero() : it->second;
}

IntPolynomial GreenTable::green_polynomial(const Partition& lambda, const Partition& rho) {
  IntPolynomial x = transition_coefficient(lambda, rho);
  long twist = a_stat(lambda);
  if (x.degree() > twist)
    fail(Errc::InvalidArgument, "transition coefficient exceeds the a-statistic degree");
  // q^{a(lambda)} X(1/q): reverse the coefficients against the twist offset
  std::vector<mpz_class> coeffs(twist + 1, mpz_class(0));
  for (int i = 0; i <= x.degree(); ++i) coeffs[twist - i] = x.coeff(i);
  return IntPolynomial::from_coeffs(std::move(coeffs));
}

std::string GreenTable::dump_json() const {
  std::shared_lock lock(mutex_);
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [rho_parts, column] : columns_) {
    Partition rho(rho_parts);
    for (const auto& [lambda, x] : column) {
      IntPolynomial q;
      {
        // re-twist without going through the locked accessor
        long twist = a_stat(lambda);
        std::vector<mpz_class> coeffs(twist + 1, mpz_class(0));
        for (int i = 0; i <= x.degree(); ++i) coeffs[twist - i] = x.coeff(i);
        q = IntPolynomial::from_coeffs(std::move(coeffs));
      }
      nlohmann::json list = nlohmann::json::array();
      for (const auto& c : q.coeffs()) list.push_back(c.get_str());
      out[lambda.to_string() + "|" + rho.to_string()] = list;
    }
  }
  return out.dump(2);
}

GreenTable& green_table() {
  static GreenTable table;
  return table;
}

mpz_class green_value_levi(const std::vector<LeviBlock>& blocks, const mpz_class& s) {
  mpz_class acc(1);
  for (const auto& block : blocks) {
    if (block.d < 1) fail(Errc::InvalidArgument, "Levi block degree must be positive");
    mpz_class point;
    mpz_pow_ui(point.get_mpz_t(), s.get_mpz_t(), block.d);
    acc *= green_polynomial(block.mu, block.gamma).eval(point);
  }
  return acc;
}

}  // namespace singerfac
