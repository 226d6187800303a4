#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "crystal_sieve/partition.hpp"
#include "crystal_sieve/qdim.hpp"
#include "crystal_sieve/qpoly.hpp"
#include "crystal_sieve/tableaux.hpp"

namespace crystal_sieve {

struct ExponentCheck {
  std::uint64_t j = 0;
  std::uint64_t fixed_count = 0;
  /// f(omega_n^j); std::nullopt when it is not a rational integer.
  std::optional<BigInt> evaluation;
  bool match = false;
};

struct CspReport {
  std::uint64_t n = 1;
  Action action = Action::C;
  std::vector<ExponentCheck> per_exponent;
  bool verdict = false;
  /// Some evaluation was irrational; the verdict is then false.
  bool non_rational = false;
  OrbitCensus census;
  std::optional<std::map<std::uint64_t, BigInt>> predicted_a;
};

/// Compares #fixed(g^j) with f(omega_n^j) for every j = 1..n, where g is the
/// chosen action on SST_m(lambda). n defaults to the order of the action
/// (m for c); an override must be a multiple of that order. f defaults to
/// the principal specialization. When the divisibility condition holds for
/// n, predicted_a carries the a_d from the q-dimension congruence.
CspReport csp_check(const Partition& lambda, int m, Action action, const std::optional<IntPoly>& f = std::nullopt,
                    std::optional<std::uint64_t> n_override = std::nullopt,
                    std::size_t cap = default_enumeration_cap(), unsigned jobs = 1);

/// Verdict from a precomputed census (no enumeration).
CspReport csp_from_census(const OrbitCensus& census, Action action, const IntPoly& f, std::uint64_t n);

struct AaResult {
  bool exists = false;
  /// Some f(omega_n^j) was not a nonnegative integer.
  bool evaluation_failure = false;
  std::vector<std::uint64_t> failures;
  /// k -> sum_{j|k} mu(k/j) f(omega_n^j), for every k | n where defined.
  std::map<std::uint64_t, BigInt> mobius_sums;
};

/// Whether some cyclic action of order n on a set of size f(1) sieves
/// with f: every f(omega_n^j) is in N and every Mobius sum is >= 0.
AaResult aa_criterion(const IntPoly& f, std::uint64_t n);

struct CensusComparison {
  bool census_matches_a = false;
  bool csp_verdict = false;
  CongruenceResult congruence;
  OrbitCensus census;
};

/// Orbit census of the action against a_d from the congruence of
/// qdim B(Lambda) with Lambda = gl_weight(lambda, m) and n = m, alongside the
/// independent CSP verdict. Throws ConditionViolated when m does not
/// divide every lambda_i - lambda_j.
CensusComparison census_vs_a(const Partition& lambda, int m, Action action,
                             std::size_t cap = default_enumeration_cap());

/// (1/d) sum_{e|d} mu(d/e) prod_{1<=k<e} (a e / k + 1). Throws NonInteger.
BigInt orbit_formula(std::uint64_t a, std::uint64_t d);

struct RectCharacterization {
  bool csp = false;
  bool predicted = false;
  bool agree = false;
};

/// Brute-force CSP verdict for c against the shape test lambda = (am) or
/// ((am)^{m-1}). Throws HypothesisViolated unless l(lambda) < m and m
/// divides |lambda|.
RectCharacterization rect_characterization(const Partition& lambda, int m,
                                           std::size_t cap = default_enumeration_cap());

/// lambda = (am) or ((am)^{m-1}) for some a >= 0.
bool is_csp_shape(const Partition& lambda, int m);

struct PrimeCheck {
  bool in_A = false;
  bool phi_p_divides = false;
  /// aa_criterion(s_lambda(1, q, ..., q^{m-1}), p).exists
  bool exists_action = false;
};

/// Congruence scan lambda_i - i == lambda_j - j (mod p), divisibility of
/// s_lambda(1, ..., q^{m-1}) by Phi_p, and the existence certificate at
/// order p. Throws NotPrime, PTooSmall (p < m) and ShapeTooLong.
PrimeCheck script_A_and_prime_p(const Partition& lambda, int m, std::uint64_t p);

}  // namespace crystal_sieve
