#include <doctest.h>

#include "crystal_sieve/errors.hpp"
#include "crystal_sieve/qpoly.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace crystal_sieve;

namespace {

const IntPoly gl3_poly{1, 1, 2, 2, 3, 2, 2, 1, 1};

IntPoly from_oracle(const oracle::Poly& p) { return IntPoly(std::vector<BigInt>(p.begin(), p.end())); }

}  // namespace

TEST_CASE("multiplication") {
  CHECK(IntPoly{1, 1} * IntPoly{1, -1} == IntPoly{1, 0, -1});
  CHECK((IntPoly{1, 1} * IntPoly{}).is_zero());
  CHECK(IntPoly{1, 1, 1} * IntPoly{1, 0, 0, 1} == IntPoly{1, 1, 1, 1, 1, 1});
}

TEST_CASE("exact division") {
  CHECK(poly_divexact(IntPoly{1, 0, 0, 0, 0, 0, -1}, IntPoly{1, 0, -1}) == IntPoly{1, 0, 1, 0, 1});
  CHECK(poly_divexact(IntPoly{-1, 0, 0, 0, 1}, IntPoly{-1, 0, 1}) == IntPoly{1, 0, 1});
  CHECK(code_of([] { poly_divexact(IntPoly{1, 0, 0, 0, 0, 0, 0, -1}, IntPoly{1, 0, 0, -1}); }) ==
        Errc::InexactDivision);

  IntPoly f{1};
  f.mul_one_minus_q_pow(6);
  f.div_one_minus_q_pow(2);
  CHECK(f == IntPoly{1, 0, 1, 0, 1});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  for (std::uint64_t d = 1; d <= 60; ++d) {
    CAPTURE(d);
    CHECK(cyclotomic(d) == from_oracle(oracle::cyclotomic(d)));
  }
}

TEST_CASE("q^n - 1 is the product of Phi_d over d | n") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    IntPoly prod{1};
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    CHECK(prod == IntPoly::q_pow_minus_one(n));
  }
}

TEST_CASE("remainders") {
  CHECK(rem_mod(gl3_poly, IntPoly::q_pow_minus_one(4)) == IntPoly{5, 3, 4, 3});
  CHECK(fold_mod(gl3_poly, 4) == IntPoly{5, 3, 4, 3});
  CHECK(rem_mod(IntPoly::monomial(1, 5), IntPoly::q_pow_minus_one(5)) == IntPoly{1});
  const IntPoly b2{1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1};
  CHECK(fold_mod(b2, 2) == IntPoly{10, 4});
  CHECK(code_of([] { rem_mod(IntPoly{1, 2}, IntPoly{1, 2}); }) == Errc::NotMonic);
}

TEST_CASE("fold agrees with division remainder") {
  for (std::uint64_t n = 1; n <= 7; ++n) {
    IntPoly f = gl3_poly * gl3_poly + IntPoly{3, -2, 0, 5};
    CHECK(fold_mod(f, n) == rem_mod(f, IntPoly::q_pow_minus_one(n)));
  }
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(30) == -1);
  for (std::uint64_t k = 1; k <= 200; ++k) CHECK(mobius(k) == oracle::mobius(k));
  for (std::uint64_t n = 2; n <= 200; ++n) {
    int sum = 0;
    for (auto d : divisors(n)) sum += mobius(d);
    CHECK(sum == 0);
  }
}

TEST_CASE("evaluation at roots of unity") {
  CHECK(eval_root_of_unity(gl3_poly, 4, 2) == BigInt(3));
  CHECK(eval_root_of_unity(gl3_poly, 4, 1) == BigInt(1));
  CHECK(eval_root_of_unity(gl3_poly, 4, 4) == BigInt(15));
  CHECK(eval_root_of_unity(IntPoly{1, 1}, 2, 1) == BigInt(0));
  CHECK_FALSE(eval_root_of_unity(IntPoly{0, 1}, 3, 1).has_value());
}

TEST_CASE("exact evaluation agrees with floating point") {
  const std::vector<IntPoly> polys{gl3_poly, IntPoly{1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1}, IntPoly{0, 1},
                                   IntPoly{2, -1, 0, 4, 1}};
  for (const auto& f : polys) {
    oracle::Poly of(f.coeffs().begin(), f.coeffs().end());
    for (std::uint64_t n = 1; n <= 8; ++n) {
      for (std::uint64_t j = 1; j <= n; ++j) {
        const auto exact = eval_root_of_unity(f, n, static_cast<std::int64_t>(j));
        const auto z = oracle::eval_complex(of, n, j);
        const bool rational = std::abs(z.imag()) < 1e-9 && std::abs(z.real() - std::round(z.real())) < 1e-9;
        CAPTURE(to_string(f));
        CAPTURE(n);
        CAPTURE(j);
        REQUIRE(exact.has_value() == rational);
        if (exact) CHECK(exact->get_d() == doctest::Approx(static_cast<double>(z.real())));
      }
    }
  }
}

TEST_CASE("orbit basis decomposition") {
  auto d = orbit_basis_decompose(IntPoly{5, 3, 4, 3}, 4);
  REQUIRE(d.has_value());
  CHECK(d->coeffs == std::map<std::uint64_t, BigInt>{{1, 1}, {2, 1}, {4, 3}});
  CHECK(d->reconstruct() == IntPoly{5, 3, 4, 3});

  auto one = orbit_basis_decompose(IntPoly{1}, 6);
  REQUIRE(one.has_value());
  CHECK(one->coeffs.at(1) == 1);
  for (auto [k, v] : one->coeffs)
    if (k != 1) CHECK(v == 0);

  auto neg = orbit_basis_decompose(IntPoly{0, 1}, 2);
  REQUIRE(neg.has_value());
  CHECK(neg->coeffs == std::map<std::uint64_t, BigInt>{{1, -1}, {2, 1}});

  CHECK_FALSE(orbit_basis_decompose(IntPoly{0, 1}, 3).has_value());
}

TEST_CASE("orbit basis elements") {
  CHECK(orbit_basis_element(4, 1) == IntPoly{1});
  CHECK(orbit_basis_element(4, 2) == IntPoly{1, 0, 1});
  CHECK(orbit_basis_element(4, 4) == IntPoly{1, 1, 1, 1});
}

TEST_CASE("binomial and cyclotomic products agree") {
  std::map<std::uint64_t, std::int64_t> bin{{6, 1}, {4, 1}, {3, -1}, {2, -1}};
  std::map<std::uint64_t, std::int64_t> cyc;
  for (auto [k, e] : bin)
    for (auto d : divisors(k)) cyc[d] += e;
  CHECK(binomial_product(bin) == cyclotomic_power_product(cyc));
}

TEST_CASE("text round trip") {
  CHECK(to_string(IntPoly{1, 1, 2, 0, -1}) == "1 + q + 2*q^2 - q^4");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(parse_poly("1 + q + 2*q^2 - q^4") == IntPoly{1, 1, 2, 0, -1});
  CHECK(parse_poly("q^3+q^3") == IntPoly{0, 0, 0, 2});
  CHECK(parse_poly(to_string(gl3_poly)) == gl3_poly);
  CHECK(code_of([] { parse_poly("1 + x"); }) == Errc::ParseError);

  IntPoly big{1};
  big *= BigInt("123456789012345678901234567890");
  CHECK(from_decimal_strings(to_decimal_strings(big)) == big);
}
