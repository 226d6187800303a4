#include "crystal_sieve/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

namespace {

void check_rank(Family f, int r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    CartanType t{f, r};
    throw Error(Errc::InvalidRank, "no finite type " + t.name());
  }
}

// a_ij = <h_i, alpha_j>, Bourbaki numbering (0-based here).
std::vector<std::vector<int>> make_matrix(const CartanType& t) {
  check_rank(t.family, t.rank);
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:
      link(0, 1);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

std::vector<int> make_symmetrizers(const CartanType& t) {
  const int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.family) {
    case Family::B:
      std::fill(d.begin(), d.end() - 1, 2);
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d = {2, 2, 1, 1};
      break;
    case Family::G:
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2) throw Error(Errc::ParseError, "bad Cartan type '" + std::string(text) + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw Error(Errc::ParseError, "unknown Cartan family in '" + std::string(text) + "'");
  }
  int r = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, r);
  if (ec != std::errc{} || ptr != last) throw Error(Errc::ParseError, "bad rank in '" + std::string(text) + "'");
  check_rank(f, r);
  return CartanType{f, r};
}

std::string CartanType::name() const {
  static constexpr char letters[] = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

int Root::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

std::string Root::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (coords[i] != 1) out += std::to_string(coords[i]);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

bool Weight::is_dominant() const {
  return std::all_of(fund_coords.begin(), fund_coords.end(), [](std::int64_t x) { return x >= 0; });
}

Weight Weight::parse(std::string_view text) {
  Weight w;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "bad weight coordinate '" + std::string(tok) + "'");
    }
    w.fund_coords.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return w;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < fund_coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(fund_coords[i]);
  }
  return out;
}

Weight Weight::scaled(std::int64_t factor) const {
  Weight w = *this;
  for (auto& x : w.fund_coords) x *= factor;
  return w;
}

CartanDatum::CartanDatum(CartanType type)
    : type_(type), matrix_(make_matrix(type)), symmetrizers_(make_symmetrizers(type)) {
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (symmetrizers_[i] * matrix_[i][j] != symmetrizers_[j] * matrix_[j][i]) {
        throw Error(Errc::InvalidArgument, "Cartan matrix not symmetrizable for " + type.name());
      }
    }
  }

  // Delta^+ \ {alpha_i} is stable under s_i and every non-simple positive
  // root drops in height under some s_i, so the closure of the simple roots
  // under reflections that stay positive is all of Delta^+.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r = simple_root(i);
    seen.insert(r);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    Root beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root img = reflect(i, beta);
      if (std::any_of(img.coords.begin(), img.coords.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });

  for (const Root& beta : positive_roots_) {
    std::int64_t rp = 0;
    for (int i = 0; i < n; ++i) rp += static_cast<std::int64_t>(beta.coords[i]) * symmetrizers_[i];
    const std::int64_t nb = norm(beta);
    if (nb <= 0 || (2 * rp) % nb != 0) throw Error(Errc::NotARoot, beta.to_string());
    rho_pairings_.push_back(rp);
    corho_pairings_.push_back(2 * rp / nb);
  }
}

std::int64_t CartanDatum::norm(const Root& beta) const {
  const int n = rank();
  if (static_cast<int>(beta.coords.size()) != n) throw Error(Errc::DimensionMismatch, "root length != rank");
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (beta.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      s += static_cast<std::int64_t>(beta.coords[i]) * beta.coords[j] * symmetrizers_[i] * matrix_[i][j];
    }
  }
  return s;
}

Root CartanDatum::reflect(int i, const Root& beta) const {
  int h = 0;
  for (int j = 0; j < rank(); ++j) h += beta.coords[j] * matrix_[i][j];
  Root out = beta;
  out.coords[i] -= h;
  return out;
}

Root CartanDatum::simple_root(int i) const {
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

std::size_t CartanDatum::index_of(const Root& beta) const {
  if (static_cast<int>(beta.coords.size()) != rank()) throw Error(Errc::DimensionMismatch, "root length != rank");
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    if (positive_roots_[k] == beta) return k;
  }
  throw Error(Errc::NotARoot, beta.to_string() + " is not a positive root of " + type_.name());
}

bool CartanDatum::is_simply_laced() const {
  return std::all_of(symmetrizers_.begin(), symmetrizers_.end(), [](int d) { return d == 1; });
}

CartanDatum build_cartan_datum(CartanType type) { return CartanDatum(type); }

std::int64_t pairing(const CartanDatum& datum, const Root& beta, const Weight& lambda) {
  const auto n = static_cast<std::size_t>(datum.rank());
  if (beta.coords.size() != n || lambda.fund_coords.size() != n) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(n) + " coordinates");
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += beta.coords[i] * datum.symmetrizers()[i] * lambda.fund_coords[i];
  return s;
}

std::int64_t copairing(const CartanDatum& datum, const Root& beta, const Weight& lambda) {
  const std::int64_t p = pairing(datum, beta, lambda);
  const std::int64_t nb = datum.norm(beta);
  if (nb <= 0 || (2 * p) % nb != 0) throw Error(Errc::NotARoot, beta.to_string() + " has no integral coroot pairing");
  return 2 * p / nb;
}

Weight gl_weight(const Partition& lambda, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  if (lambda.length() > m) throw Error(Errc::ShapeTooLong, lambda.to_string() + " has more than " + std::to_string(m) + " parts");
  Weight w;
  for (int i = 1; i < m; ++i) w.fund_coords.push_back(lambda.part(i) - lambda.part(i + 1));
  return w;
}

Root highest_root(const CartanDatum& datum) {
  return *std::max_element(datum.positive_roots().begin(), datum.positive_roots().end(),
                           [](const Root& a, const Root& b) { return a.height() < b.height(); });
}

std::size_t classical_root_count(const CartanType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace crystal_sieve
