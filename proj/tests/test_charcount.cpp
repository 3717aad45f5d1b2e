#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singerfac/bruteforce.hpp"
#include "singerfac/charcount.hpp"
#include "singerfac/combinat.hpp"
#include "singerfac/error.hpp"
#include "singerfac/green.hpp"

using namespace singerfac;

namespace {
mpz_class pow_z(long base, unsigned e) {
  mpz_class out;
  mpz_class b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}
}  // namespace

TEST_CASE("primary character indices") {
  auto idx6 = primary_char_indices(6);
  // d in {1,2,3,6}, k < 6/d: 6 + 3 + 2 + 1
  CHECK(idx6.size() == 12);
  CharIndex bad_d{4, 0}, bad_k{1, 6}, mid{2, 1};
  CHECK_THROWS_AS(bad_d.validate(6), Error);
  CHECK_THROWS_AS(bad_k.validate(6), Error);
  CHECK(mid.hook_shape(6) == Partition({2, 1}));
}

TEST_CASE("primary degrees") {
  SUBCASE("trivial character has degree 1") {
    for (auto params : {GroupParams::make(4, Sign::Linear, 3, 1),
                        GroupParams::make(5, Sign::Unitary, 2, 1)})
      CHECK(primary_degree(CharIndex{1, 0}, params) == 1);
  }
  SUBCASE("one-column hook is the Steinberg degree q^{n(n-1)/2}") {
    for (int n : {2, 3, 4})
      for (uint64_t q : {2, 3}) {
        auto params = GroupParams::make(n, Sign::Linear, q, 1);
        CHECK(primary_degree(CharIndex{1, n - 1}, params) ==
              pow_z(static_cast<long>(q), n * (n - 1) / 2));
      }
  }
  SUBCASE("d = n, lambda = (1): prod_{i=1}^{n-1} (q^i - 1)") {
    auto params = GroupParams::make(2, Sign::Linear, 2, 1);
    CHECK(primary_degree(CharIndex{2, 0}, params) == 1);
    auto params32 = GroupParams::make(3, Sign::Linear, 2, 1);
    CHECK(primary_degree(CharIndex{3, 0}, params32) == (2 - 1) * (4 - 1));
  }
  SUBCASE("degrees are positive in the unitary family too") {
    auto params = GroupParams::make(3, Sign::Unitary, 2, 3);
    for (const auto& idx : primary_char_indices(3)) CHECK(primary_degree(idx, params) > 0);
  }
  SUBCASE("degree-squared sum is bounded by the group order") {
    for (auto params : {GroupParams::make(3, Sign::Linear, 3, 1),
                        GroupParams::make(3, Sign::Unitary, 3, 4),
                        GroupParams::make(4, Sign::Linear, 2, 1)}) {
      // number of orbits of size exactly d among the q - eps characters of
      // each T_d: sum_{m | d} mu(d/m) (q^m - eps^m), divided by d
      mpz_class total = 0;
      for (const auto& idx : primary_char_indices(params.n)) {
        // |T_m| = q^m - eps^m characters are fixed by the m-th Frobenius power
        mpz_class fixed = 0;
        for (int m = 1; m <= idx.d; ++m) {
          if (idx.d % m) continue;
          int eps_m = (params.eps == Sign::Unitary && m % 2) ? -1 : 1;
          fixed += mobius(idx.d / m) * (pow_z(static_cast<long>(params.q), m) - eps_m);
        }
        mpz_class orbits = fixed / idx.d;
        mpz_class deg = primary_degree(idx, params);
        total += orbits * deg * deg;
      }
      CHECK(total <= params.full_group_order());
      CHECK(total > 0);
    }
  }
}

TEST_CASE("transvection sums") {
  SUBCASE("trivial character sums the class size") {
    for (auto params : {GroupParams::make(2, Sign::Linear, 3, 2),
                        GroupParams::make(3, Sign::Linear, 2, 1),
                        GroupParams::make(3, Sign::Unitary, 2, 3),
                        GroupParams::make(3, Sign::Unitary, 3, 4)})
      CHECK(transvection_sum(CharIndex{1, 0}, params) ==
            transvection_count(params.n, params.eps_q()));
  }
  SUBCASE("linear case matches deg * [n]_q * (q^{n-k-1} - 1) for d = 1") {
    for (int n : {2, 3, 4})
      for (uint64_t q : {2, 3}) {
        auto params = GroupParams::make(n, Sign::Linear, q, 1);
        for (int k = 0; k < n; ++k) {
          CharIndex idx{1, k};
          mpz_class expected = primary_degree(idx, params) *
                               q_int(n).eval(static_cast<long>(q)) *
                               (pow_z(static_cast<long>(q), n - k - 1) - 1);
          CHECK(transvection_sum(idx, params) == expected);
        }
      }
  }
  SUBCASE("linear case matches deg * [n]_q * (-1) for d > 1") {
    for (int n : {2, 3, 4})
      for (uint64_t q : {2, 3}) {
        auto params = GroupParams::make(n, Sign::Linear, q, 1);
        for (const auto& idx : primary_char_indices(n)) {
          if (idx.d == 1) continue;
          mpz_class expected =
              -primary_degree(idx, params) * q_int(n).eval(static_cast<long>(q));
          CHECK(transvection_sum(idx, params) == expected);
        }
      }
  }
}

TEST_CASE("semisimple sums") {
  auto gu32 = GroupParams::make(3, Sign::Unitary, 2, 3);
  SUBCASE("d > 1 vanishes") {
    CHECK(semisimple_sum(CharIndex{3, 0}, gu32, true) == 0);
    CHECK(semisimple_sum(CharIndex{3, 0}, gu32, false) == 0);
  }
  SUBCASE("trivial character with trivial restriction counts the set") {
    CHECK(semisimple_sum(CharIndex{1, 0}, gu32, true) == 24);
    auto gl23 = GroupParams::make(2, Sign::Linear, 3, 2);
    CHECK(semisimple_sum(CharIndex{1, 0}, gl23, true) ==
          semisimple_count_per_det(2, 3) * 1);
    auto gu33 = GroupParams::make(3, Sign::Unitary, 3, 4);
    CHECK(semisimple_sum(CharIndex{1, 0}, gu33, true) ==
          semisimple_count_per_det(3, -3) * 3);
  }
  SUBCASE("x = 1 is rejected") {
    auto sl23 = GroupParams::make(2, Sign::Linear, 3, 1);
    CHECK_THROWS_AS(semisimple_sum(CharIndex{1, 0}, sl23, true), Error);
  }
}

TEST_CASE("Singer orbit sums") {
  SUBCASE("x = 1, d = 1, k = 0 gives q - eps") {
    auto sl = GroupParams::make(3, Sign::Linear, 3, 1);
    CHECK(singer_orbit_sum(CharIndex{1, 0}, sl) == 2);  // (q-1) mu(1), positive sign
    auto su = GroupParams::make(3, Sign::Unitary, 3, 1);
    // |q - eps| = 4; the overall sign depends on the eps powers
    mpz_class v = singer_orbit_sum(CharIndex{1, 0}, su);
    CHECK(abs(v) == 4);
  }
  SUBCASE("squared prime factor in d kills the orbit sum") {
    auto sl = GroupParams::make(4, Sign::Linear, 2, 1);
    CHECK(singer_orbit_sum(CharIndex{4, 0}, sl) == 0);  // mu(4) = 0
  }
  SUBCASE("x > 1 gives 0") {
    auto gu = GroupParams::make(3, Sign::Unitary, 2, 3);
    for (const auto& idx : primary_char_indices(3))
      CHECK(singer_orbit_sum(idx, gu) == 0);
  }
  SUBCASE("per-character value for the x > 1 pipeline") {
    auto gu = GroupParams::make(3, Sign::Unitary, 2, 3);
    // (-1)^k eps^{C(n-k,2) + 1} Q(1) with Q^{(1)}_{(1)} = 1
    CHECK(abs(singer_character_value(CharIndex{1, 0}, gu)) == 1);
    CHECK_THROWS_AS(singer_character_value(CharIndex{3, 0}, gu), Error);
  }
}

TEST_CASE("closed forms: frozen values") {
  CHECK(closed_form_slu(3, 2, 3) == 49);
  CHECK(closed_form_slu(3, 2, 4) == 1029);
  CHECK(closed_form_slu(3, -3, 3) == 49);   // Ennola partner of SL_3(3)
  CHECK(closed_form_slu(3, 3, 3) == 169);   // [3]_3^2
  CHECK(closed_form_slu(3, 2, 2) == 0);     // below the reflection length
  CHECK(closed_form_gx(3, -2, 3, 3) == 81);
  CHECK(closed_form_gx(3, -2, 3, 2) == 0);
  CHECK(closed_form_gx(2, 3, 2, 2) == 8);  // (x [2]_3)^{n-1} = 8^1
}

TEST_CASE("minimal-length collapse: closed_form_gx(n, eq, x, n) = (x [n]_eq)^{n-1}") {
  for (int n = 2; n <= 9; ++n)
    for (long eq : {-9L, -7L, -5L, -4L, -3L, -2L, 2L, 3L, 4L, 5L, 7L, 8L, 9L})
      for (long x : {1L, 2L, 3L, 5L}) {
        mpz_class h = mpz_class(x) * q_int(n).eval(eq);
        mpz_class expected;
        mpz_class base = h;
        mpz_pow_ui(expected.get_mpz_t(), base.get_mpz_t(), n - 1);
        CHECK(closed_form_gx(n, eq, x, n) == expected);
      }
}

TEST_CASE("refined closed form sums to the total") {
  for (auto [n, eq, x] : std::vector<std::tuple<int, long, long>>{
           {2, 3, 2}, {3, -2, 3}, {3, 3, 2}, {3, -3, 4}, {4, 2, 1}}) {
    for (int len = n; len <= n + 3; ++len) {
      mpz_class total = 0;
      if (x == 1) {
        total = closed_form_slu(n, eq, len);
      } else {
        for (int m = 0; m < len; ++m) total += closed_form_refined(n, eq, x, len, m);
      }
      CHECK(total == closed_form_gx(n, eq, x, len));
    }
  }
}

TEST_CASE("character pipeline: x = 1 groups") {
  CHECK(frobenius_count(GroupParams::make(2, Sign::Linear, 3, 1), 2) == 4);
  CHECK(frobenius_count(GroupParams::make(3, Sign::Linear, 2, 1), 3) == 49);
  CHECK(frobenius_count(GroupParams::make(3, Sign::Linear, 2, 1), 4) == 1029);
  CHECK(frobenius_count(GroupParams::make(3, Sign::Unitary, 3, 1), 3) == 49);
}

TEST_CASE("character pipeline: x > 1 groups") {
  CHECK(frobenius_count(GroupParams::make(3, Sign::Unitary, 2, 3), 3) == 81);
  CHECK(frobenius_count(GroupParams::make(2, Sign::Linear, 3, 2), 2) == 8);
  CHECK(frobenius_count_refined(GroupParams::make(3, Sign::Unitary, 2, 3), 3, 3 - 1) ==
        closed_form_refined(3, -2, 3, 3, 2));
}

TEST_CASE("pipeline equals closed form across the desk grid") {
  for (auto params : {GroupParams::make(2, Sign::Linear, 2, 1),
                      GroupParams::make(2, Sign::Linear, 3, 1),
                      GroupParams::make(2, Sign::Linear, 3, 2),
                      GroupParams::make(2, Sign::Linear, 4, 1),
                      GroupParams::make(2, Sign::Linear, 4, 3),
                      GroupParams::make(2, Sign::Linear, 5, 2),
                      GroupParams::make(3, Sign::Linear, 2, 1),
                      GroupParams::make(3, Sign::Linear, 3, 1),
                      GroupParams::make(3, Sign::Linear, 3, 2),
                      GroupParams::make(3, Sign::Unitary, 2, 3),
                      GroupParams::make(3, Sign::Unitary, 3, 1),
                      GroupParams::make(3, Sign::Unitary, 3, 2),
                      GroupParams::make(3, Sign::Unitary, 3, 4),
                      GroupParams::make(4, Sign::Linear, 2, 1),
                      GroupParams::make(4, Sign::Linear, 3, 2),
                      GroupParams::make(5, Sign::Unitary, 2, 3)}) {
    mpz_class x(static_cast<unsigned long>(params.x));
    for (int len = params.n; len <= params.n + 3; ++len) {
      CHECK(frobenius_count(params, len) ==
            closed_form_gx(params.n, params.eps_q(), x, len));
    }
    // below the minimum length everything vanishes
    for (int len = 0; len < params.n; ++len) CHECK(frobenius_count(params, len) == 0);
  }
}

TEST_CASE("refined pipeline equals the refined closed form") {
  for (auto params : {GroupParams::make(2, Sign::Linear, 3, 2),
                      GroupParams::make(3, Sign::Unitary, 2, 3),
                      GroupParams::make(3, Sign::Unitary, 3, 4),
                      GroupParams::make(3, Sign::Linear, 3, 2)}) {
    mpz_class x(static_cast<unsigned long>(params.x));
    for (int len = params.n; len <= params.n + 2; ++len)
      for (int m = 0; m < len; ++m)
        CHECK(frobenius_count_refined(params, len, m) ==
              closed_form_refined(params.n, params.eps_q(), x, len, m));
  }
}

TEST_CASE("degenerate n = 1: counting tuples of non-identity elements of X") {
  // all non-identity elements of GL^eps_1 are reflections; the Singer cycle
  // is a cyclic generator
  for (auto params : {GroupParams::make(1, Sign::Linear, 4, 3),
                      GroupParams::make(1, Sign::Unitary, 3, 4),
                      GroupParams::make(1, Sign::Linear, 5, 2)}) {
    GroupTable table = GroupTable::generate(params);
    SingerElement singer = table.find_singer();
    mpz_class x(static_cast<unsigned long>(params.x));
    for (int len = 0; len <= 4; ++len) {
      mpz_class closed = closed_form_gx(1, params.eps_q(), x, len);
      CHECK(closed == frobenius_count(params, len));
      CHECK(closed == fac_count(table, singer.matrix, len));
    }
  }
}

TEST_CASE("pipeline handles composite n (all orbit sizes d | 6)") {
  auto params = GroupParams::make(6, Sign::Linear, 2, 1);
  for (int len = 6; len <= 8; ++len)
    CHECK(frobenius_count(params, len) == closed_form_slu(6, 2, len));
  CHECK(frobenius_count(params, 6) == mpz_class("992436543"));  // 63^5
}

TEST_CASE("pipeline rejections") {
  CHECK_THROWS_AS(frobenius_count(GroupParams::make(2, Sign::Unitary, 3, 4), 2), Error);
  CHECK_THROWS_AS(frobenius_count(GroupParams::make(3, Sign::Unitary, 2, 1), 3), Error);
  CHECK_THROWS_AS(frobenius_count_refined(GroupParams::make(2, Sign::Linear, 3, 1), 3, 1),
                  Error);
  CHECK_THROWS_AS(closed_form_refined(2, 3, 1, 3, 1), Error);
  CHECK_THROWS_AS(closed_form_slu(1, 3, 2), Error);
}

TEST_CASE("ennola_check: special pair SL_3(3) / SU_3(3)") {
  EnnolaReport report = ennola_check(3, 3, 3, EnnolaScope::Special);
  CHECK(report.linear.formula_value == 169);
  CHECK(report.unitary.formula_value == 49);
  REQUIRE(report.shared_polynomials.size() == 1);
  CHECK(report.shared_polynomials[0].eval(3) == 169);
  CHECK(report.shared_polynomials[0].eval(-3) == 49);
  CHECK(report.linear.brute_force.has_value());
  CHECK(report.unitary.brute_force.has_value());
  CHECK(report.agree);
}

TEST_CASE("ennola_check: full pair GL_3(2) / GU_3(2)") {
  EnnolaReport report = ennola_check(3, 2, 3, EnnolaScope::Full);
  CHECK(report.linear.formula_value == 49);   // GL_3(2) = SL_3(2)
  CHECK(report.unitary.formula_value == 81);  // GU_3(2)
  CHECK(report.agree);
  // at minimum length the report leads with the one-polynomial form
  REQUIRE(!report.shared_polynomials.empty());
  CHECK(report.shared_polynomials[0].eval(2) == 49);
  CHECK(report.shared_polynomials[0].eval(-2) == 81);
  CHECK(report.shared_polynomials[0].eval(3) == 676);   // GL_3(3)
  CHECK(report.shared_polynomials[0].eval(-3) == 784);  // GU_3(3)
}

TEST_CASE("ennola_check: SU_3(2) is rejected with NoSingerCycle") {
  EnnolaReport report = ennola_check(3, 2, 3, EnnolaScope::Special);
  CHECK(report.unitary.rejected_no_singer);
  CHECK_FALSE(report.unitary.brute_force.has_value());
  CHECK(report.linear.brute_force.has_value());
  CHECK(report.linear.formula_value == 49);
  CHECK(report.agree);
}

TEST_CASE("ennola_check rejects even n") {
  CHECK_THROWS_AS(ennola_check(2, 3, 2, EnnolaScope::Special), Error);
}

TEST_CASE("conjecture checker: exhaustive scan on GU_3(2)") {
  GroupTable table = GroupTable::generate(GroupParams::make(3, Sign::Unitary, 2, 3));
  ConjectureReport report = conjecture_eigenvalue_check(table, 3, 0);
  CHECK(report.exhaustive);
  CHECK(report.findings.size() == 9);  // x^{l-1} = 3^2
  CHECK(report.disagreements == 0);
  mpz_class total = 0;
  for (const auto& f : report.findings) total += f.brute_force;
  CHECK(total == 81);
}

TEST_CASE("conjecture checker agrees on the linear side too") {
  // the determinant-refined statement is a theorem in the linear family
  GroupTable table = GroupTable::generate(GroupParams::make(2, Sign::Linear, 3, 2));
  for (int ell : {2, 3, 4}) {
    ConjectureReport report = conjecture_eigenvalue_check(table, ell, 0);
    CHECK(report.exhaustive);
    CHECK(report.disagreements == 0);
  }
}

TEST_CASE("conjecture checker: sampled trials are deterministic") {
  GroupTable table = GroupTable::generate(GroupParams::make(3, Sign::Unitary, 2, 3));
  ConjectureReport a = conjecture_eigenvalue_check(table, 4, 5, 99);
  ConjectureReport b = conjecture_eigenvalue_check(table, 4, 5, 99);
  REQUIRE(a.findings.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(a.findings[i].dets == b.findings[i].dets);
    CHECK(a.findings[i].brute_force == b.findings[i].brute_force);
  }
}
