#include "crystal_sieve/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::q_pow_minus_one(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "q^0 - 1 is zero");
  std::vector<BigInt> v(n + 1);
  v[0] = -1;
  v[n] = 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::eval_at_one() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool IntPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void IntPoly::mul_one_minus_q_pow(std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "1 - q^0 is zero");
  if (coeffs_.empty()) return;
  const std::size_t old = coeffs_.size();
  coeffs_.resize(old + k);
  // Walk downwards so each source coefficient is read before it is updated.
  for (std::size_t i = old + k; i-- > k;) coeffs_[i] -= coeffs_[i - k];
  trim();
}

void IntPoly::div_one_minus_q_pow(std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "division by 1 - q^0");
  if (coeffs_.empty()) return;
  if (coeffs_.size() <= k) throw Error(Errc::InexactDivision, "degree below divisor degree");
  // f = (1 - q^k) h  <=>  h_i = f_i + h_{i-k}; the top k coefficients of the
  // running sum must vanish for the division to be exact.
  const std::size_t qdeg = coeffs_.size() - 1 - k;
  for (std::size_t i = k; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - k];
  for (std::size_t i = qdeg + 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) throw Error(Errc::InexactDivision, "(1 - q^" + std::to_string(k) + ") does not divide");
  }
  coeffs_.resize(qdeg + 1);
  trim();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly poly_add(const IntPoly& f, const IntPoly& g) { return f + g; }
IntPoly poly_sub(const IntPoly& f, const IntPoly& g) { return f - g; }
IntPoly poly_mul(const IntPoly& f, const IntPoly& g) { return f * g; }

IntPoly poly_divexact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw Error(Errc::InexactDivision, "divisor degree exceeds dividend degree");
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const std::size_t gd = gc.size() - 1;
  const BigInt& lead = gc[gd];
  std::vector<BigInt> quot(rem.size() - gd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + gd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(Errc::InexactDivision, "quotient leaves the integers");
    }
    BigInt c = top / lead;
    for (std::size_t i = 0; i <= gd; ++i) rem[k + i] -= c * gc[i];
    quot[k] = std::move(c);
  }
  for (const auto& c : rem) {
    if (c != 0) throw Error(Errc::InexactDivision, "nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly rem_mod(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw Error(Errc::NotMonic, "modulus must have leading coefficient 1");
  if (g.degree() < 1) throw Error(Errc::InvalidArgument, "modulus must have degree >= 1");
  if (f.degree() < g.degree()) return f;
  std::vector<BigInt> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const std::size_t gd = gc.size() - 1;
  for (std::size_t top = rem.size() - 1; top >= gd; --top) {
    if (rem[top] != 0) {
      const BigInt c = rem[top];
      const std::size_t shift = top - gd;
      for (std::size_t i = 0; i < gd; ++i) {
        if (gc[i] != 0) rem[shift + i] -= c * gc[i];
      }
      rem[top] = 0;
    }
    if (top == gd) break;
  }
  rem.resize(gd);
  return IntPoly(std::move(rem));
}

IntPoly fold_mod(const IntPoly& f, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "fold modulus must be positive");
  const auto c = f.coeffs();
  std::vector<BigInt> out(std::min<std::size_t>(n, c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) out[i % n] += c[i];
  return IntPoly(std::move(out));
}

namespace {

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::map<std::uint64_t, IntPoly> table;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace

const IntPoly& cyclotomic(std::uint64_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "cyclotomic index must be positive");
  auto& cache = cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(d);
    if (it != cache.table.end()) return it->second;
  }
  IntPoly value = IntPoly::q_pow_minus_one(d);
  for (std::uint64_t e : divisors(d)) {
    if (e < d) value = poly_divexact(value, cyclotomic(e));
  }
  std::unique_lock lock(cache.mutex);
  return cache.table.emplace(d, std::move(value)).first->second;
}

int mobius(std::uint64_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "mobius(0) is undefined");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "divisors(0) is undefined");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::optional<BigInt> eval_root_of_unity(const IntPoly& f, std::uint64_t n, std::int64_t j) {
  if (n == 0) throw Error(Errc::InvalidArgument, "root of unity order must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  const auto jr = static_cast<std::uint64_t>(((j % sn) + sn) % sn);
  const std::uint64_t d = n / std::gcd(n, jr);
  // Phi_d divides q^d - 1, so folding first keeps the division short.
  IntPoly r = rem_mod(fold_mod(f, d), cyclotomic(d));
  if (!r.is_constant()) return std::nullopt;
  return r.coeff(0);
}

IntPoly binomial_product(const std::map<std::uint64_t, std::int64_t>& exponents) {
  IntPoly acc = IntPoly::constant(1);
  for (const auto& [k, e] : exponents) {
    for (std::int64_t i = 0; i < e; ++i) acc.mul_one_minus_q_pow(k);
  }
  for (const auto& [k, e] : exponents) {
    for (std::int64_t i = 0; i < -e; ++i) acc.div_one_minus_q_pow(k);
  }
  return acc;
}

IntPoly cyclotomic_power_product(const std::map<std::uint64_t, std::int64_t>& powers) {
  std::map<std::uint64_t, std::int64_t> binomial;
  std::int64_t phi1 = 0;
  for (const auto& [d, c] : powers) {
    if (c < 0) throw Error(Errc::InvalidArgument, "negative cyclotomic power");
    if (c == 0) continue;
    if (d == 1) phi1 += c;
    for (std::uint64_t e : divisors(d)) binomial[e] += mobius(d / e) * c;
  }
  IntPoly out = binomial_product(binomial);
  // Phi_1 = q - 1 = -(1 - q); every other Phi_d has no sign correction.
  if (phi1 % 2 != 0) out = -out;
  return out;
}

IntPoly shift_up(const IntPoly& f, std::size_t shift) {
  if (f.is_zero()) return f;
  std::vector<BigInt> v(shift);
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPoly(std::move(v));
}

IntPoly orbit_basis_element(std::uint64_t n, std::uint64_t d) {
  if (d == 0 || n % d != 0) throw Error(Errc::InvalidArgument, "d must divide n");
  const std::uint64_t step = n / d;
  std::vector<BigInt> v(n - step + 1);
  for (std::uint64_t k = 0; k < d; ++k) v[k * step] = 1;
  return IntPoly(std::move(v));
}

IntPoly OrbitDecomposition::reconstruct() const {
  IntPoly acc;
  for (const auto& [d, a] : coeffs) {
    if (a != 0) acc += orbit_basis_element(n, d) * a;
  }
  return acc;
}

std::optional<OrbitDecomposition> orbit_basis_decompose(const IntPoly& r, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (r.degree() >= static_cast<long>(n)) throw Error(Errc::InvalidArgument, "residue degree must be < n");
  OrbitDecomposition out;
  out.n = n;
  IntPoly work = r;
  // Basis element d has degree n - n/d, so descending d is descending degree.
  const auto divs = divisors(n);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const std::uint64_t d = *it;
    BigInt a = work.coeff(n - n / d);
    if (a != 0) work -= orbit_basis_element(n, d) * a;
    out.coeffs[d] = std::move(a);
  }
  if (!work.is_zero()) return std::nullopt;
  return out;
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt mag = abs(c[i]);
    const bool neg = c[i] < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(Errc::ParseError, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error(Errc::ParseError, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
  std::map<std::size_t, BigInt> terms;
  std::size_t p = 0;
  auto digits = [&](std::size_t from) {
    std::size_t e = from;
    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
    return e;
  };
  bool first = true;
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
    } else if (!first) {
      throw Error(Errc::ParseError, "expected '+' or '-' at offset " + std::to_string(p));
    }
    first = false;
    BigInt coeff = 1;
    bool have_coeff = false;
    std::size_t e = digits(p);
    if (e > p) {
      coeff = BigInt(s.substr(p, e - p), 10);
      have_coeff = true;
      p = e;
    }
    std::size_t exponent = 0;
    if (p < s.size() && s[p] == '*') {
      if (!have_coeff) throw Error(Errc::ParseError, "'*' without coefficient");
      ++p;
      if (p >= s.size() || s[p] != 'q') throw Error(Errc::ParseError, "expected 'q' after '*'");
    }
    if (p < s.size() && s[p] == 'q') {
      ++p;
      exponent = 1;
      if (p < s.size() && s[p] == '^') {
        ++p;
        e = digits(p);
        if (e == p) throw Error(Errc::ParseError, "expected exponent after '^'");
        exponent = std::stoull(s.substr(p, e - p));
        p = e;
      }
    } else if (!have_coeff) {
      throw Error(Errc::ParseError, "expected a term at offset " + std::to_string(p));
    }
    terms[exponent] += sign * coeff;
  }
  if (terms.empty()) return {};
  std::vector<BigInt> v(terms.rbegin()->first + 1);
  for (auto& [k, c] : terms) v[k] = std::move(c);
  return IntPoly(std::move(v));
}

std::vector<std::string> to_decimal_strings(const IntPoly& f) {
  std::vector<std::string> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly from_decimal_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_bigint(s));
  return IntPoly(std::move(v));
}

}  // namespace crystal_sieve
