// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic
// throughout, wall-clock budget enforced per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "crystal_sieve/cartan.hpp"
#include "crystal_sieve/csp.hpp"
#include "crystal_sieve/errors.hpp"
#include "crystal_sieve/qdim.hpp"
#include "crystal_sieve/qpoly.hpp"
#include "crystal_sieve/tableaux.hpp"

using namespace crystal_sieve;

namespace {

using BMap = std::map<std::uint64_t, BigInt>;

// Collects the first few failures of a criterion.
class Failures {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++count_;
    if (count_ <= 5) out_ << "\n    " << what;
  }
  std::size_t checks() const { return checks_; }
  std::string report() const {
    if (count_ == 0) return {};
    return std::to_string(count_) + " of " + std::to_string(checks_) + " checks failed:" + out_.str();
  }

 private:
  std::size_t checks_ = 0, count_ = 0;
  std::ostringstream out_;
};

std::vector<Partition> shapes(int max_size, int m) {
  std::vector<Partition> out;
  for (int size = 0; size <= max_size; ++size)
    for (auto& p : partitions_of(size, m)) out.push_back(p);
  return out;
}

std::string where(const Partition& lambda, int m) { return "lambda=(" + lambda.to_string() + ") m=" + std::to_string(m); }

CartanDatum type_a(int m) { return CartanDatum(CartanType{Family::A, m - 1}); }

void criterion1(Failures& f) {
  const IntPoly expected{1, 1, 2, 2, 3, 2, 2, 1, 1};
  const Partition lambda = Partition::parse("4");
  f.check(principal_specialization(lambda, 3) == expected, "principal specialization of (4), m=3");
  f.check(qdim(type_a(3), gl_weight(lambda, 3)) == expected, "qdim A2 (4,0)");
  const auto r = congruence(type_a(3), gl_weight(lambda, 3), 4);
  f.check(r.b == BMap{{1, 1}, {2, 3}, {4, 15}}, "b = (1,3,15)");
  f.check(r.a == BMap{{1, 1}, {2, 1}, {4, 3}}, "a = (1,1,3)");
  const IntPoly orbit_sum = IntPoly{1} + IntPoly{1, 0, 1} + IntPoly{1, 1, 1, 1} * BigInt(3);
  f.check(r.residue == orbit_sum, "residue 1 + (1+q^2) + 3(1+q+q^2+q^3), got " + to_string(r.residue));
}

void criterion2(Failures& f) {
  const CartanDatum b2(CartanType::parse("B2"));
  const Weight w{{2, 0}};
  f.check(qdim(b2, w) == IntPoly{1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1}, "qdim B2 2w1");
  f.check(qdim_dual(b2, w) == IntPoly{1, 1, 2, 2, 2, 2, 2, 1, 1}, "dual qdim B2 2w1");
  const auto r = congruence(b2, w, 2);
  f.check(r.residue == IntPoly{10, 4}, "residue 10+4q");
  f.check(r.b == BMap{{1, 6}, {2, 14}}, "b = (6,14)");
  f.check(r.a == BMap{{1, 6}, {2, 4}}, "a = (6,4)");
  const auto d = congruence(b2, w, 2, PairingKind::Dual);
  f.check(d.residue == IntPoly{8, 6}, "dual residue 8+6q");
  f.check(d.b == BMap{{1, 2}, {2, 14}}, "dual b = (2,14)");
  f.check(d.a == BMap{{1, 2}, {2, 6}}, "dual a = (2,6)");
}

void criterion3(Failures& f) {
  const std::vector<const char*> types{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                       "C3", "C4", "D4", "F4", "G2"};
  for (const char* name : types) {
    const CartanDatum datum(CartanType::parse(name));
    const int r = datum.rank();
    std::vector<std::int64_t> base(r, 0);
    while (true) {
      for (std::uint64_t n = 1; n <= 6; ++n) {
        const Weight w = Weight{base}.scaled(static_cast<std::int64_t>(n));
        const std::string ctx = std::string(name) + " " + w.to_string() + " n=" + std::to_string(n);
        try {
          const auto c = congruence(datum, w, n);
          BigInt weighted = 0;
          bool nonneg = true;
          for (const auto& [d, ad] : c.a) {
            weighted += static_cast<unsigned long>(d) * ad;
            nonneg = nonneg && ad >= 0;
          }
          f.check(nonneg, ctx + ": negative a_d");
          f.check(weighted == weyl_dim(datum, w), ctx + ": sum d a_d != Weyl dimension");
          const auto dec = orbit_basis_decompose(c.residue, n);
          f.check(dec && dec->coeffs == c.a && dec->reconstruct() == c.residue, ctx + ": residue does not reconstruct");
          const auto aa = aa_criterion(qdim(datum, w), n);
          bool sums = aa.exists;
          for (const auto& [k, ak] : c.a) {
            auto it = aa.mobius_sums.find(k);
            sums = sums && it != aa.mobius_sums.end() && it->second == static_cast<unsigned long>(k) * ak;
          }
          f.check(sums, ctx + ": Mobius certificate disagrees with k a_k");
        } catch (const Error& e) {
          f.check(false, ctx + ": " + e.what());
        }
      }
      int i = 0;
      while (i < r && base[i] == 2) base[i++] = 0;
      if (i == r) break;
      ++base[i];
    }
  }
}

void criterion4(Failures& f) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& lambda : shapes(8, m)) {
      const std::string ctx = where(lambda, m);
      const auto all = enumerate_ssyt(lambda, m);
      std::size_t uniform = 0, fixed = 0;
      bool axioms = true, involution = true, braid = true, order = true, fixed_is_uniform = true;
      for (const auto& t : all) {
        const auto c = content(t);
        for (int i = 1; i < m; ++i) {
          const int phi = crystal_phi(i, t), eps = crystal_epsilon(i, t);
          axioms = axioms && phi - eps == c[i - 1] - c[i];
          if (auto ft = crystal_f(i, t)) {
            const auto cf = content(*ft);
            axioms = axioms && phi > 0 && crystal_e(i, *ft) == t && crystal_phi(i, *ft) == phi - 1 &&
                     crystal_epsilon(i, *ft) == eps + 1 && cf[i - 1] == c[i - 1] - 1 && cf[i] == c[i] + 1;
          } else {
            axioms = axioms && phi == 0;
          }
          if (auto et = crystal_e(i, t)) {
            axioms = axioms && eps > 0 && crystal_f(i, *et) == t;
          } else {
            axioms = axioms && eps == 0;
          }
          const Tableau s = weyl_s(i, t);
          const auto cs = content(s);
          involution = involution && weyl_s(i, s) == t && cs[i - 1] == c[i] && cs[i] == c[i - 1];
          for (int j = i + 1; j < m; ++j) {
            if (j == i + 1) {
              braid = braid && weyl_s(i, weyl_s(j, weyl_s(i, t))) == weyl_s(j, weyl_s(i, weyl_s(j, t)));
            } else {
              braid = braid && weyl_s(i, weyl_s(j, t)) == weyl_s(j, weyl_s(i, t));
            }
          }
        }
        Tableau x = c_action(t);
        const bool is_fixed = x == t;
        for (int k = 1; k < m; ++k) x = c_action(x);
        order = order && x == t;
        const bool is_uniform = std::all_of(c.begin(), c.end(), [&](int v) { return v == c[0]; });
        fixed_is_uniform = fixed_is_uniform && is_fixed == is_uniform;
        fixed += is_fixed;
        uniform += is_uniform;
      }
      f.check(axioms, ctx + ": crystal axioms");
      f.check(involution, ctx + ": s_i is not an involution acting by reflection on weights");
      f.check(braid, ctx + ": braid relations");
      f.check(order, ctx + ": c^m != id");
      f.check(fixed_is_uniform, ctx + ": fixed points of c differ from uniform-content tableaux");
      const std::uint64_t k =
          lambda.size() % m == 0 ? kostka(lambda, std::vector<int>(m, lambda.size() / m)) : 0;
      f.check(fixed == k && uniform == k, ctx + ": fixed point count " + std::to_string(fixed) + " vs Kostka " +
                                              std::to_string(k));
    }
  }
}

std::vector<std::pair<Partition, int>> non_coprime_sweep() {
  std::vector<std::pair<Partition, int>> out;
  for (int m = 2; m <= 4; ++m)
    for (int size = 0; size <= 12; size += m)
      for (auto& lambda : partitions_of(size, m - 1)) out.emplace_back(lambda, m);
  return out;
}

void criterion5(Failures& f) {
  for (const auto& [lambda, m] : non_coprime_sweep()) {
    const auto r = rect_characterization(lambda, m);
    f.check(r.agree, where(lambda, m) + ": csp " + (r.csp ? "true" : "false") + ", shape predicate " +
                         (r.predicted ? "true" : "false"));
  }
}

void criterion6(Failures& f) {
  for (int m = 2; m <= 4; ++m) {
    for (int a = 1; a <= 3; ++a) {
      for (const Partition& lambda : {Partition::rectangle(a * m, 1), Partition::rectangle(a * m, m - 1)}) {
        for (Action act : {Action::C, Action::Promotion}) {
          const auto census = orbit_census(lambda, m, act);
          const std::string ctx = where(lambda, m) + " action " + to_string(act);
          std::uint64_t covered = 0;
          for (auto d : divisors(static_cast<std::uint64_t>(m))) {
            const BigInt predicted = orbit_formula(static_cast<std::uint64_t>(a), d);
            f.check(predicted == static_cast<unsigned long>(census.orbits_of_size(d)),
                    ctx + ": orbits of size " + std::to_string(d) + " = " +
                        std::to_string(census.orbits_of_size(d)) + ", formula " + predicted.get_str());
            covered += d * census.orbits_of_size(d);
          }
          f.check(covered == census.total, ctx + ": orbit sizes outside the divisors of m");
        }
      }
    }
  }
  for (std::uint64_t a = 0; a <= 12; ++a) {
    f.check(orbit_formula(a, 2) == a, "#Orb^2 = a for a=" + std::to_string(a));
    f.check(2 * orbit_formula(a, 3) == 3 * a * (a + 1), "#Orb^3 = (3/2)a(a+1) for a=" + std::to_string(a));
  }
}

void criterion7(Failures& f) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& lambda : shapes(8, m)) {
      const auto value = eval_root_of_unity(schur_specialization(lambda, m), static_cast<std::uint64_t>(m), 1);
      const MCore core = m_core(lambda, m);
      const BigInt expected = core.is_empty ? BigInt(core.sign.value_or(0)) : BigInt(0);
      f.check(value && *value == expected && (!core.is_empty || core.sign),
              where(lambda, m) + ": value " + (value ? value->get_str() : "irrational") + ", expected " +
                  expected.get_str());
    }
  }
}

void criterion8(Failures& f) {
  std::size_t divisible_cases = 0;
  for (const auto& [lambda, m] : non_coprime_sweep()) {
    const CartanDatum datum = type_a(m);
    const Weight w = gl_weight(lambda, m);
    const auto n = static_cast<std::uint64_t>(m);
    if (!divisibility_condition(datum, w, n)) continue;
    ++divisible_cases;
    const std::string ctx = where(lambda, m);
    const auto cmp = census_vs_a(lambda, m, Action::C);
    f.check(cmp.census_matches_a == cmp.csp_verdict, ctx + ": census-equals-a differs from the CSP verdict");
    const auto aa = aa_criterion(principal_specialization(lambda, m), n);
    f.check(aa.exists, ctx + ": no Mobius certificate");
    if (is_prime(n) && datum.rho_pairing(highest_root(datum)) < m) {
      const bool unique_fixed = cmp.census.fixed_by_power(1) == 1;
      f.check(unique_fixed == cmp.csp_verdict, ctx + ": unique fixed point differs from the CSP verdict");
    }
  }
  f.check(divisible_cases > 0, "no instance satisfies the divisibility condition");
}

void criterion9(Failures& f) {
  for (int m = 1; m <= 4; ++m) {
    for (int a = 1; a <= 4; ++a) {
      for (const Partition& lambda : {Partition::rectangle(a, 1), Partition::rectangle(a, m - 1)}) {
        bool equal = true;
        for (const auto& t : enumerate_ssyt(lambda, m)) equal = equal && c_action(t) == promotion(t);
        f.check(equal, where(lambda, m) + ": c != pr");
      }
    }
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= std::min(3, m); ++b) {
        const Partition lambda = Partition::rectangle(a, b);
        bool identity = true;
        for (const auto& t : enumerate_ssyt(lambda, m)) {
          Tableau x = t;
          for (int k = 0; k < m; ++k) x = promotion(x);
          identity = identity && x == t;
        }
        f.check(identity, where(lambda, m) + ": pr^m != id");
      }
    }
  }
}

void criterion10(Failures& f) {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& lambda : shapes(8, m)) {
      const std::string ctx = where(lambda, m);
      const auto parts = lambda.padded(m);
      // (rho, Lambda - wt T) with Lambda - wt T = sum_i k_i alpha_i, k_i the partial sums of lambda - content
      std::map<std::size_t, long> counts;
      for (const auto& t : enumerate_ssyt(lambda, m)) {
        const auto c = content(t);
        long exponent = 0, partial = 0;
        for (int i = 0; i + 1 < m; ++i) {
          partial += parts[i] - c[i];
          exponent += partial;
        }
        ++counts[static_cast<std::size_t>(exponent)];
      }
      IntPoly sum;
      for (const auto& [e, k] : counts) sum += IntPoly::monomial(k, e);
      const IntPoly spec = principal_specialization(lambda, m);
      f.check(spec == sum, ctx + ": specialization " + to_string(spec) + " vs tableau sum " + to_string(sum));
      if (m >= 2) {
        const IntPoly q = qdim(type_a(m), gl_weight(lambda, m));
        f.check(q == spec, ctx + ": qdim " + to_string(q) + " vs specialization " + to_string(spec));
      }
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Failures&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "gl3, n=4 example end to end", 1, criterion1},
      {2, "B2 example, standard and dual", 1, criterion2},
      {3, "congruence sweep over rank <= 4, n <= 6", 60, criterion3},
      {4, "crystal axioms, Weyl relations, c^m = id, fixed points", 120, criterion4},
      {5, "CSP under c vs rectangular shape predicate", 300, criterion5},
      {6, "orbit-count formula vs censuses", 300, criterion6},
      {7, "Schur specialization at zeta_m vs m-core sign", 60, criterion7},
      {8, "census = a <=> CSP, unique fixed point at prime n", 300, criterion8},
      {9, "c = pr on rows and (m-1)-row rectangles, pr^m = id", 120, criterion9},
      {10, "qdim = specialization = tableau sum", 120, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(f);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail = f.report();
    if (!error.empty()) detail += (detail.empty() ? "" : "\n    ") + std::string("exception: ") + error;
    if (seconds > c.budget_seconds) {
      detail += (detail.empty() ? "" : "\n    ") + std::string("over budget");
    }
    const bool ok = detail.empty();
    failed += !ok;
    std::printf("%s criterion %2d: %s (%zu checks, %.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                f.checks(), seconds, c.budget_seconds, ok ? "" : "\n    ", detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
