#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace crystal_sieve {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Index i holds the coefficient of q^i; trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t exponent);
  /// q^n - 1
  static IntPoly q_pow_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of q^i (zero past the degree).
  BigInt coeff(std::size_t i) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;
  BigInt eval_at_one() const;
  bool is_palindromic() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  /// In-place multiplication by (1 - q^k), k >= 1.
  void mul_one_minus_q_pow(std::size_t k);
  /// In-place exact division by (1 - q^k), k >= 1. Throws InexactDivision.
  void div_one_minus_q_pow(std::size_t k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly poly_add(const IntPoly& f, const IntPoly& g);
IntPoly poly_sub(const IntPoly& f, const IntPoly& g);
IntPoly poly_mul(const IntPoly& f, const IntPoly& g);

/// h with f = g*h. Throws InexactDivision on a nonzero remainder (or when
/// the quotient would leave the integers) and InvalidArgument for g = 0.
IntPoly poly_divexact(const IntPoly& f, const IntPoly& g);

/// Remainder of f modulo a monic g with deg g >= 1. Throws NotMonic.
IntPoly rem_mod(const IntPoly& f, const IntPoly& g);

/// Remainder of f modulo q^n - 1 by folding exponents; n >= 1.
IntPoly fold_mod(const IntPoly& f, std::uint64_t n);

/// Phi_d(q). Memoized for the life of the process; safe to call from
/// several threads.
const IntPoly& cyclotomic(std::uint64_t d);

int mobius(std::uint64_t k);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// f(omega_n^j) when that value is a rational integer, std::nullopt
/// otherwise. j is reduced mod n; j = 0 gives f(1).
std::optional<BigInt> eval_root_of_unity(const IntPoly& f, std::uint64_t n, std::int64_t j);

/// Product over k of (1 - q^k)^{exponents[k]}, which must be a polynomial.
/// Positive powers are multiplied out before any division, so every
/// intermediate stays in Z[q]. Throws InexactDivision otherwise.
IntPoly binomial_product(const std::map<std::uint64_t, std::int64_t>& exponents);

/// prod_d Phi_d(q)^{powers[d]} for nonnegative powers, evaluated through the
/// Mobius expansion Phi_d = prod_{e|d} (1 - q^e)^{mu(d/e)} (up to the sign of
/// Phi_1) so only sparse binomial passes are needed.
IntPoly cyclotomic_power_product(const std::map<std::uint64_t, std::int64_t>& powers);

/// q^shift * f
IntPoly shift_up(const IntPoly& f, std::size_t shift);

/// (q^n - 1)/(q^{n/d} - 1) = 1 + q^{n/d} + ... + q^{(d-1)n/d}.
IntPoly orbit_basis_element(std::uint64_t n, std::uint64_t d);

struct OrbitDecomposition {
  std::uint64_t n = 1;
  /// a_d for every divisor d of n (zeros included), ascending d.
  std::map<std::uint64_t, BigInt> coeffs;

  IntPoly reconstruct() const;
};

/// Unique integers a_d with r = sum_{d|n} a_d (q^n-1)/(q^{n/d}-1), or
/// std::nullopt when r is not in the span. Requires deg r < n. Negative
/// a_d are returned as-is.
std::optional<OrbitDecomposition> orbit_basis_decompose(const IntPoly& r, std::uint64_t n);

/// Text form "c0 + c1*q + c2*q^2 + ..."; zero terms are omitted and unit
/// coefficients are written as a bare power ("q^2", "- q").
std::string to_string(const IntPoly& f);
/// Parses the text form (any term order, repeated powers are summed).
IntPoly parse_poly(std::string_view text);

std::vector<std::string> to_decimal_strings(const IntPoly& f);
IntPoly from_decimal_strings(const std::vector<std::string>& coeffs);

BigInt parse_bigint(std::string_view text);

}  // namespace crystal_sieve
