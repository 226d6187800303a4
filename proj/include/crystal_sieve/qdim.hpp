#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "crystal_sieve/cartan.hpp"
#include "crystal_sieve/partition.hpp"
#include "crystal_sieve/qpoly.hpp"

namespace crystal_sieve {

/// Selects the specialization: Standard uses (beta, .), Dual uses
/// <beta^vee, .>. Both go through the same code paths.
enum class PairingKind { Standard, Dual };

/// Exponent multisets of prod_beta (1 - q^{num_k}) / (1 - q^{den_k}).
struct QdimFactorization {
  std::vector<std::int64_t> numerator_exponents;
  std::vector<std::int64_t> denominator_exponents;

  /// Net power of Phi_d over the whole quotient, for every d that occurs.
  std::map<std::uint64_t, std::int64_t> cyclotomic_exponents() const;
};

QdimFactorization qdim_factorization(const CartanDatum& datum, const Weight& lambda,
                                     PairingKind kind = PairingKind::Standard);

/// The q-dimension polynomial. Throws NotDominant, and
/// InternalNegativeExponent if some Phi_d ends with a negative power.
IntPoly qdim(const CartanDatum& datum, const Weight& lambda, PairingKind kind = PairingKind::Standard);
IntPoly qdim_dual(const CartanDatum& datum, const Weight& lambda);

/// prod_beta (beta, Lambda + rho) / (beta, rho). Throws NotDominant.
BigInt weyl_dim(const CartanDatum& datum, const Weight& lambda);

/// n divides (beta, Lambda) (or <beta^vee, Lambda>) for every positive root.
bool divisibility_condition(const CartanDatum& datum, const Weight& lambda, std::uint64_t n,
                            PairingKind kind = PairingKind::Standard);

/// Positive roots whose rho-pairing is divisible by d.
std::vector<Root> positive_roots_divisible(const CartanDatum& datum, std::uint64_t d,
                                           PairingKind kind = PairingKind::Standard);

struct CongruenceResult {
  std::uint64_t n = 1;
  PairingKind kind = PairingKind::Standard;
  /// Keyed by every divisor d of n.
  std::map<std::uint64_t, BigInt> b;
  std::map<std::uint64_t, BigInt> a;
  /// qdim mod q^n - 1.
  IntPoly residue;
};

/// b_d as the exact product over roots with n/d | rho-pairing.
/// Throws NonIntegerB if the product is not an integer.
std::map<std::uint64_t, BigInt> congruence_b(const CartanDatum& datum, const Weight& lambda, std::uint64_t n,
                                             PairingKind kind = PairingKind::Standard);

/// a_d = (1/d) sum_{e|d} mu(d/e) b_e. Throws CongruenceMismatch when a
/// quotient is inexact.
std::map<std::uint64_t, BigInt> mobius_invert(const std::map<std::uint64_t, BigInt>& b);

/// Residue of qdim modulo q^n - 1 together with b_d and a_d, checked
/// against each other. Throws ConditionViolated when the divisibility
/// condition fails; CongruenceMismatch if the residue does not decompose
/// as predicted or some a_d is negative.
CongruenceResult congruence(const CartanDatum& datum, const Weight& lambda, std::uint64_t n,
                            PairingKind kind = PairingKind::Standard);

/// q^{-kappa(lambda)} s_lambda(1, q, ..., q^{m-1}) from the product of
/// (1 - q^{(lambda_i - i) - (lambda_j - j)}) / (1 - q^{j - i}) over
/// 1 <= i < j <= m. Throws ShapeTooLong.
IntPoly principal_specialization(const Partition& lambda, int m);

/// s_lambda(1, q, ..., q^{m-1}) itself (the above shifted by q^kappa).
IntPoly schur_specialization(const Partition& lambda, int m);

}  // namespace crystal_sieve
