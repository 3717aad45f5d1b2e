#include "singerfac/combinat.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "singerfac/error.hpp"

namespace singerfac {

IntPolynomial q_int(int n) {
  if (n < 0) fail(Errc::InvalidArgument, "q_int needs n >= 0");
  std::vector<mpz_class> coeffs(n, mpz_class(1));
  return IntPolynomial::from_coeffs(std::move(coeffs));
}

IntPolynomial q_factorial(int n) {
  if (n < 0) fail(Errc::InvalidArgument, "q_factorial needs n >= 0");
  IntPolynomial acc = IntPolynomial::one();
  for (int i = 2; i <= n; ++i) acc *= q_int(i);
  return acc;
}

IntPolynomial q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) fail(Errc::InvalidArgument, "q_binomial needs 0 <= k <= n");
  // Build via the q-Pascal recurrence rather than factorial quotients; the
  // intermediate degrees stay minimal and no division is needed.
  std::vector<IntPolynomial> row(k + 1);
  row[0] = IntPolynomial::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      // [i, j] = [i-1, j-1] + z^j [i-1, j]
      row[j] = row[j - 1] + row[j] * IntPolynomial::monomial(1, j);
    }
  }
  return row[k];
}

IntPolynomial q_pochhammer(const IntPolynomial& a, int n) {
  if (n < 0) fail(Errc::InvalidArgument, "q_pochhammer needs n >= 0");
  IntPolynomial acc = IntPolynomial::one();
  for (int i = 0; i < n; ++i)
    acc *= IntPolynomial::one() - a * IntPolynomial::monomial(1, i);
  return acc;
}

int mobius(long long d) {
  if (d < 1) fail(Errc::InvalidArgument, "mobius needs d >= 1");
  int factors = 0;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    ++factors;
  }
  if (d > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

namespace {

// First-column hook lengths (beta numbers) of lambda padded to `rows` rows.
std::vector<int> beta_set(const Partition& lambda, int rows) {
  std::vector<int> beta(rows, 0);
  for (int i = 0; i < rows; ++i) beta[i] = lambda.part(i) + (rows - 1 - i);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  std::vector<int> parts;
  int rows = static_cast<int>(beta.size());
  for (int i = 0; i < rows; ++i) {
    int part = beta[i] - (rows - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long long mn_recurse(const Partition& lambda, const Partition& gamma, size_t gi,
                     std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
  if (gi == gamma.num_parts()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda.parts(), gi);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // Strip removal on the beta-set: removing a border strip of size r is
  // replacing some beta number b by b - r (when b - r is unoccupied); the
  // height parity is the number of occupied values strictly between them.
  int r = gamma.parts()[gi];
  int rows = static_cast<int>(lambda.num_parts());
  std::vector<int> beta = beta_set(lambda, rows);
  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    int b = beta[i];
    if (b < r) continue;
    int target = b - r;
    bool occupied = false;
    int between = 0;
    for (int j = 0; j < rows; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = target;
    long long sub = mn_recurse(partition_from_beta(std::move(next)), gamma, gi + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& gamma) {
  if (lambda.size() != gamma.size())
    fail(Errc::InvalidArgument, "mn_character needs |lambda| = |gamma|");
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({lambda.parts(), gamma.parts()});
    if (it != cache.end()) return it->second;
  }
  std::map<std::pair<std::vector<int>, size_t>, long long> memo;
  long long value = mn_recurse(lambda, gamma, 0, memo);
  std::lock_guard<std::mutex> lock(mu);
  cache[{lambda.parts(), gamma.parts()}] = value;
  return value;
}

IntPolynomial q_difference_power(int a, int N) {
  if (a < 0 || N < 0) fail(Errc::InvalidArgument, "q_difference_power needs a, N >= 0");
  if (a < N) return IntPolynomial::zero();
  IntPolynomial acc = IntPolynomial::one();
  for (int j = a - N + 1; j <= a; ++j) acc *= q_int(j);
  return acc;
}

}  // namespace singerfac
