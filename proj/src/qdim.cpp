#include "crystal_sieve/qdim.hpp"

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

namespace {

void require_dominant(const CartanDatum& datum, const Weight& lambda) {
  if (static_cast<int>(lambda.fund_coords.size()) != datum.rank()) {
    throw Error(Errc::DimensionMismatch, "weight has " + std::to_string(lambda.fund_coords.size()) +
                                             " coordinates, rank is " + std::to_string(datum.rank()));
  }
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, lambda.to_string());
}

std::int64_t lambda_pairing(const CartanDatum& datum, const Root& beta, const Weight& lambda, PairingKind kind) {
  return kind == PairingKind::Standard ? pairing(datum, beta, lambda) : copairing(datum, beta, lambda);
}

std::int64_t rho_value(const CartanDatum& datum, const Root& beta, PairingKind kind) {
  return kind == PairingKind::Standard ? datum.rho_pairing(beta) : datum.corho_pairing(beta);
}

}  // namespace

std::map<std::uint64_t, std::int64_t> QdimFactorization::cyclotomic_exponents() const {
  std::map<std::uint64_t, std::int64_t> out;
  for (auto k : numerator_exponents) {
    for (auto d : divisors(static_cast<std::uint64_t>(k))) ++out[d];
  }
  for (auto k : denominator_exponents) {
    for (auto d : divisors(static_cast<std::uint64_t>(k))) --out[d];
  }
  return out;
}

QdimFactorization qdim_factorization(const CartanDatum& datum, const Weight& lambda, PairingKind kind) {
  require_dominant(datum, lambda);
  QdimFactorization f;
  for (const Root& beta : datum.positive_roots()) {
    const std::int64_t rho = rho_value(datum, beta, kind);
    f.numerator_exponents.push_back(lambda_pairing(datum, beta, lambda, kind) + rho);
    f.denominator_exponents.push_back(rho);
  }
  return f;
}

IntPoly qdim(const CartanDatum& datum, const Weight& lambda, PairingKind kind) {
  const auto exps = qdim_factorization(datum, lambda, kind).cyclotomic_exponents();
  for (const auto& [d, e] : exps) {
    if (e < 0) {
      throw Error(Errc::InternalNegativeExponent,
                  "Phi_" + std::to_string(d) + " has power " + std::to_string(e) + " in qdim of " + lambda.to_string());
    }
  }
  return cyclotomic_power_product(exps);
}

IntPoly qdim_dual(const CartanDatum& datum, const Weight& lambda) { return qdim(datum, lambda, PairingKind::Dual); }

BigInt weyl_dim(const CartanDatum& datum, const Weight& lambda) {
  require_dominant(datum, lambda);
  BigInt num = 1, den = 1;
  for (const Root& beta : datum.positive_roots()) {
    const std::int64_t rho = datum.rho_pairing(beta);
    num *= static_cast<long>(pairing(datum, beta, lambda) + rho);
    den *= static_cast<long>(rho);
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw Error(Errc::NonInteger, "Weyl dimension not integral");
  return num / den;
}

bool divisibility_condition(const CartanDatum& datum, const Weight& lambda, std::uint64_t n, PairingKind kind) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  for (const Root& beta : datum.positive_roots()) {
    if (lambda_pairing(datum, beta, lambda, kind) % sn != 0) return false;
  }
  return true;
}

std::vector<Root> positive_roots_divisible(const CartanDatum& datum, std::uint64_t d, PairingKind kind) {
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be positive");
  std::vector<Root> out;
  for (const Root& beta : datum.positive_roots()) {
    if (rho_value(datum, beta, kind) % static_cast<std::int64_t>(d) == 0) out.push_back(beta);
  }
  return out;
}

std::map<std::uint64_t, BigInt> congruence_b(const CartanDatum& datum, const Weight& lambda, std::uint64_t n,
                                             PairingKind kind) {
  require_dominant(datum, lambda);
  std::map<std::uint64_t, BigInt> b;
  for (std::uint64_t d : divisors(n)) {
    // Individual factors need not be integers; only the product must be.
    BigRational prod = 1;
    for (const Root& beta : positive_roots_divisible(datum, n / d, kind)) {
      BigRational factor(static_cast<long>(lambda_pairing(datum, beta, lambda, kind)),
                         static_cast<long>(rho_value(datum, beta, kind)));
      factor.canonicalize();
      prod *= factor + 1;
    }
    if (prod.get_den() != 1) {
      throw Error(Errc::NonIntegerB, "b_" + std::to_string(d) + " = " + prod.get_str() + " is not an integer");
    }
    b[d] = prod.get_num();
  }
  return b;
}

std::map<std::uint64_t, BigInt> mobius_invert(const std::map<std::uint64_t, BigInt>& b) {
  std::map<std::uint64_t, BigInt> a;
  for (const auto& [d, bd] : b) {
    BigInt sum = 0;
    for (std::uint64_t e : divisors(d)) {
      const int mu = mobius(d / e);
      if (mu == 0) continue;
      auto it = b.find(e);
      if (it == b.end()) throw Error(Errc::InvalidArgument, "b is missing divisor " + std::to_string(e));
      sum += mu * it->second;
    }
    BigInt dd = static_cast<unsigned long>(d);
    if (!mpz_divisible_p(sum.get_mpz_t(), dd.get_mpz_t())) {
      throw Error(Errc::CongruenceMismatch, "a_" + std::to_string(d) + " is not an integer");
    }
    a[d] = sum / dd;
  }
  return a;
}

CongruenceResult congruence(const CartanDatum& datum, const Weight& lambda, std::uint64_t n, PairingKind kind) {
  require_dominant(datum, lambda);
  if (!divisibility_condition(datum, lambda, n, kind)) {
    throw Error(Errc::ConditionViolated, "n = " + std::to_string(n) + " does not divide every " +
                                             (kind == PairingKind::Dual ? "<beta^vee, Lambda>" : "(beta, Lambda)") +
                                             " for Lambda = " + lambda.to_string());
  }
  CongruenceResult out;
  out.n = n;
  out.kind = kind;
  out.b = congruence_b(datum, lambda, n, kind);
  out.a = mobius_invert(out.b);
  out.residue = fold_mod(qdim(datum, lambda, kind), n);

  const auto decomposition = orbit_basis_decompose(out.residue, n);
  if (!decomposition) throw Error(Errc::CongruenceMismatch, "residue is not in the orbit basis span");
  if (decomposition->coeffs != out.a) throw Error(Errc::CongruenceMismatch, "residue decomposition disagrees with a_d");
  for (const auto& [d, ad] : out.a) {
    if (ad < 0) throw Error(Errc::CongruenceMismatch, "a_" + std::to_string(d) + " is negative");
  }
  return out;
}

IntPoly principal_specialization(const Partition& lambda, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  const auto parts = lambda.padded(m);
  std::map<std::uint64_t, std::int64_t> exps;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const int num = (parts[i - 1] - i) - (parts[j - 1] - j);
      ++exps[static_cast<std::uint64_t>(num)];
      --exps[static_cast<std::uint64_t>(j - i)];
    }
  }
  return binomial_product(exps);
}

IntPoly schur_specialization(const Partition& lambda, int m) {
  return shift_up(principal_specialization(lambda, m), static_cast<std::size_t>(kappa(lambda)));
}

}  // namespace crystal_sieve
