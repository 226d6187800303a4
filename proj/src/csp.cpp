#include "crystal_sieve/csp.hpp"

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

CspReport csp_from_census(const OrbitCensus& census, Action action, const IntPoly& f, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "group order must be positive");
  CspReport report;
  report.n = n;
  report.action = action;
  report.census = census;
  report.verdict = true;
  for (std::uint64_t j = 1; j <= n; ++j) {
    ExponentCheck row;
    row.j = j;
    row.fixed_count = census.fixed_by_power(j);
    row.evaluation = eval_root_of_unity(f, n, static_cast<std::int64_t>(j));
    if (!row.evaluation) report.non_rational = true;
    row.match = row.evaluation && *row.evaluation == static_cast<unsigned long>(row.fixed_count);
    report.verdict = report.verdict && row.match;
    report.per_exponent.push_back(std::move(row));
  }
  return report;
}

CspReport csp_check(const Partition& lambda, int m, Action action, const std::optional<IntPoly>& f,
                    std::optional<std::uint64_t> n_override, std::size_t cap, unsigned jobs) {
  const OrbitCensus census = orbit_census(lambda, m, action, cap, jobs);
  const std::uint64_t natural = action == Action::C ? static_cast<std::uint64_t>(m) : census.order();
  if (natural % census.order() != 0) {
    throw Error(Errc::InternalNull, "c has an orbit whose size does not divide m");
  }
  std::uint64_t n = natural;
  if (n_override) {
    if (*n_override == 0 || *n_override % census.order() != 0) {
      throw Error(Errc::InvalidArgument, "order " + std::to_string(*n_override) + " is not a multiple of the action order " +
                                             std::to_string(census.order()));
    }
    n = *n_override;
  }
  const IntPoly poly = f ? *f : principal_specialization(lambda, m);
  CspReport report = csp_from_census(census, action, poly, n);
  if (m >= 2) {
    const CartanDatum datum(CartanType{Family::A, m - 1});
    const Weight weight = gl_weight(lambda, m);
    if (divisibility_condition(datum, weight, n)) report.predicted_a = congruence(datum, weight, n).a;
  }
  return report;
}

AaResult aa_criterion(const IntPoly& f, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  AaResult out;
  std::map<std::uint64_t, BigInt> values;
  for (std::uint64_t j = 1; j <= n; ++j) {
    auto v = eval_root_of_unity(f, n, static_cast<std::int64_t>(j));
    if (!v || *v < 0) {
      out.evaluation_failure = true;
    }
    if (v) values[j] = std::move(*v);
  }
  for (std::uint64_t k : divisors(n)) {
    BigInt sum = 0;
    bool defined = true;
    for (std::uint64_t j : divisors(k)) {
      auto it = values.find(j);
      if (it == values.end()) {
        defined = false;
        break;
      }
      sum += mobius(k / j) * it->second;
    }
    if (!defined) continue;
    if (sum < 0) out.failures.push_back(k);
    out.mobius_sums[k] = std::move(sum);
  }
  out.exists = !out.evaluation_failure && out.failures.empty();
  return out;
}

CensusComparison census_vs_a(const Partition& lambda, int m, Action action, std::size_t cap) {
  if (m < 2) throw Error(Errc::InvalidArgument, "m must be at least 2");
  const CartanDatum datum(CartanType{Family::A, m - 1});
  const Weight weight = gl_weight(lambda, m);
  const auto n = static_cast<std::uint64_t>(m);
  if (!divisibility_condition(datum, weight, n)) {
    throw Error(Errc::ConditionViolated, std::to_string(m) + " does not divide every lambda_i - lambda_j for " +
                                             lambda.to_string());
  }
  CensusComparison out;
  out.congruence = congruence(datum, weight, n);
  out.census = orbit_census(lambda, m, action, cap);
  out.census_matches_a = true;
  for (const auto& [size, count] : out.census.by_size) {
    if (n % size != 0) out.census_matches_a = false;
  }
  for (const auto& [d, ad] : out.congruence.a) {
    if (ad != static_cast<unsigned long>(out.census.orbits_of_size(d))) out.census_matches_a = false;
  }
  out.csp_verdict = csp_from_census(out.census, action, principal_specialization(lambda, m), n).verdict;
  return out;
}

BigInt orbit_formula(std::uint64_t a, std::uint64_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "d must be positive");
  BigInt sum = 0;
  for (std::uint64_t e : divisors(d)) {
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    BigRational b = 1;
    for (std::uint64_t k = 1; k < e; ++k) {
      BigRational factor(static_cast<unsigned long>(a * e), static_cast<unsigned long>(k));
      factor.canonicalize();
      b *= factor + 1;
    }
    if (b.get_den() != 1) throw Error(Errc::NonInteger, "orbit product for e = " + std::to_string(e) + " is " + b.get_str());
    sum += mu * b.get_num();
  }
  const BigInt dd = static_cast<unsigned long>(d);
  if (!mpz_divisible_p(sum.get_mpz_t(), dd.get_mpz_t())) {
    throw Error(Errc::NonInteger, "Mobius sum " + sum.get_str() + " not divisible by " + std::to_string(d));
  }
  return sum / dd;
}

bool is_csp_shape(const Partition& lambda, int m) {
  if (lambda.empty()) return true;
  if (lambda.part(1) % m != 0) return false;
  if (lambda.length() == 1) return true;
  return lambda.length() == m - 1 && lambda.is_rectangle();
}

RectCharacterization rect_characterization(const Partition& lambda, int m, std::size_t cap) {
  if (m < 2) throw Error(Errc::HypothesisViolated, "m must be at least 2");
  if (lambda.length() >= m) throw Error(Errc::HypothesisViolated, "need l(lambda) < m for " + lambda.to_string());
  if (lambda.size() % m != 0) {
    throw Error(Errc::HypothesisViolated, std::to_string(m) + " does not divide |" + lambda.to_string() + "|");
  }
  RectCharacterization out;
  out.csp = csp_check(lambda, m, Action::C, std::nullopt, std::nullopt, cap).verdict;
  out.predicted = is_csp_shape(lambda, m);
  out.agree = out.csp == out.predicted;
  return out;
}

PrimeCheck script_A_and_prime_p(const Partition& lambda, int m, std::uint64_t p) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  if (p < static_cast<std::uint64_t>(m)) throw Error(Errc::PTooSmall, "p = " + std::to_string(p) + " < m = " + std::to_string(m));
  if (lambda.length() > m) throw Error(Errc::ShapeTooLong, lambda.to_string());
  const auto sp = static_cast<std::int64_t>(p);
  PrimeCheck out;
  for (int i = 1; i <= m && !out.in_A; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const std::int64_t diff = (lambda.part(i) - i) - (lambda.part(j) - j);
      if (diff % sp == 0) {
        out.in_A = true;
        break;
      }
    }
  }
  const IntPoly s = schur_specialization(lambda, m);
  out.phi_p_divides = rem_mod(s, cyclotomic(p)).is_zero();
  out.exists_action = aa_criterion(s, p).exists;
  return out;
}

}  // namespace crystal_sieve
