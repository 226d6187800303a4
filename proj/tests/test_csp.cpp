#include <doctest.h>

#include "crystal_sieve/csp.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace crystal_sieve;

namespace {

using BMap = std::map<std::uint64_t, BigInt>;
const IntPoly gl3_poly{1, 1, 2, 2, 3, 2, 2, 1, 1};

Partition P(const char* s) { return Partition::parse(s); }

}  // namespace

TEST_CASE("csp_check examples") {
  CHECK(csp_check(P("3,3"), 3, Action::C).verdict);
  CHECK_FALSE(csp_check(P("2,1"), 3, Action::C).verdict);
  CHECK(csp_check(P("2,2"), 3, Action::Promotion).verdict);

  const auto r = csp_check(P("4"), 4, Action::C);
  CHECK(r.n == 4);
  CHECK(r.per_exponent.size() == 4);
  REQUIRE(r.predicted_a.has_value());
}

TEST_CASE("csp_check compares fixed points with a brute-force count") {
  // fixed points of c^j counted directly on the enumerated crystal
  for (int m = 2; m <= 4; ++m) {
    for (const char* s : {"2", "3", "2,1", "2,2", "3,1"}) {
      const Partition lambda = P(s);
      if (lambda.length() > m) continue;
      const auto report = csp_check(lambda, m, Action::C);
      const auto all = enumerate_ssyt(lambda, m);
      for (const auto& row : report.per_exponent) {
        std::uint64_t fixed = 0;
        for (const auto& t : all) {
          Tableau x = t;
          for (std::uint64_t k = 0; k < row.j; ++k) x = c_action(x);
          fixed += x == t;
        }
        CHECK(fixed == row.fixed_count);
      }
    }
  }
}

TEST_CASE("order override") {
  const auto r = csp_check(P("2"), 2, Action::C, std::nullopt, 4);
  CHECK(r.n == 4);
  // f(i) = i is not a rational integer
  CHECK(r.non_rational);
  CHECK_FALSE(r.verdict);
  CHECK(code_of([] { csp_check(P("2"), 2, Action::C, std::nullopt, 3); }) == Errc::InvalidArgument);
}

TEST_CASE("aa criterion") {
  CHECK(aa_criterion(IntPoly{1, 1, 1, 1}, 4).exists);
  const auto g = aa_criterion(gl3_poly, 4);
  CHECK(g.exists);
  // sum_{j|k} mu(k/j) f(omega^j) = k a_k with a = (1, 1, 3)
  CHECK(g.mobius_sums == BMap{{1, 1}, {2, 2}, {4, 12}});
  CHECK_FALSE(aa_criterion(IntPoly{0, 2}, 2).exists);
  CHECK_FALSE(aa_criterion(IntPoly{0, 1}, 3).exists);
}

TEST_CASE("census against a_d") {
  auto r = census_vs_a(P("3"), 3, Action::C);
  CHECK(r.census_matches_a);
  CHECK(r.csp_verdict);
  CHECK(r.congruence.a == BMap{{1, 1}, {3, 3}});

  // SST_2((2,2)) is the single tableau 11/22
  r = census_vs_a(P("2,2"), 2, Action::C);
  CHECK(r.census.by_size == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
  CHECK(r.congruence.a == BMap{{1, 1}, {2, 0}});
  CHECK(r.census_matches_a == r.csp_verdict);
  CHECK(r.csp_verdict);

  CHECK(code_of([] { census_vs_a(P("2,1"), 3, Action::C); }) == Errc::ConditionViolated);
}

TEST_CASE("orbit formula") {
  for (std::uint64_t a = 0; a <= 8; ++a) {
    CHECK(orbit_formula(a, 2) == a);
    CHECK(2 * orbit_formula(a, 3) == 3 * a * (a + 1));
  }
  CHECK(orbit_formula(1, 1) == 1);
  CHECK(orbit_formula(1, 3) == 3);
}

TEST_CASE("rectangular characterization") {
  auto r = rect_characterization(P("3"), 3);
  CHECK((r.csp && r.predicted && r.agree));
  r = rect_characterization(P("2,1"), 3);
  CHECK((!r.csp && !r.predicted && r.agree));
  r = rect_characterization(P("6"), 3);
  CHECK((r.csp && r.predicted && r.agree));
  CHECK(code_of([] { rect_characterization(P("2"), 3); }) == Errc::HypothesisViolated);
  CHECK(code_of([] { rect_characterization(P("1,1,1"), 3); }) == Errc::HypothesisViolated);
  CHECK(is_csp_shape(Partition{}, 3));
  CHECK(is_csp_shape(P("3,3"), 3));
  CHECK_FALSE(is_csp_shape(P("3,3,3"), 3));
}

TEST_CASE("prime scan") {
  auto r = script_A_and_prime_p(P("2,1"), 2, 3);
  CHECK_FALSE(r.in_A);
  CHECK_FALSE(r.phi_p_divides);
  r = script_A_and_prime_p(P("3"), 3, 3);
  CHECK_FALSE(r.in_A);
  r = script_A_and_prime_p(P("2,2"), 3, 3);
  CHECK(r.in_A);
  CHECK(r.phi_p_divides);
  r = script_A_and_prime_p(Partition{}, 3, 3);
  CHECK_FALSE(r.in_A);
  CHECK(r.exists_action);
  CHECK(code_of([] { script_A_and_prime_p(P("1"), 2, 4); }) == Errc::NotPrime);
  CHECK(code_of([] { script_A_and_prime_p(P("1"), 5, 3); }) == Errc::PTooSmall);
  CHECK(code_of([] { script_A_and_prime_p(P("1,1,1"), 2, 3); }) == Errc::ShapeTooLong);
}

TEST_CASE("congruence scan matches cyclotomic divisibility") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (int m = 1; m <= static_cast<int>(p) && m <= 4; ++m) {
      for (int size = 0; size <= 6; ++size) {
        for (const auto& lambda : partitions_of(size, m)) {
          const auto r = script_A_and_prime_p(lambda, m, p);
          CAPTURE(lambda.to_string());
          CHECK(r.in_A == r.phi_p_divides);
        }
      }
    }
  }
}
