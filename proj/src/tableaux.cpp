#include "crystal_sieve/tableaux.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

Tableau::Tableau(std::vector<std::vector<int>> rows, int bound) : rows_(std::move(rows)), bound_(bound) {
  if (bound_ < 1) throw Error(Errc::InvalidArgument, "entry bound must be positive");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw Error(Errc::InvalidArgument, "empty tableau row");
    if (r > 0 && row.size() > rows_[r - 1].size()) throw Error(Errc::InvalidArgument, "row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > bound_) {
        throw Error(Errc::NotSemistandard, "entry " + std::to_string(row[c]) + " outside 1.." + std::to_string(bound_));
      }
      if (c > 0 && row[c] < row[c - 1]) throw Error(Errc::NotSemistandard, "row " + std::to_string(r + 1) + " decreases");
      if (r > 0 && row[c] <= rows_[r - 1][c]) {
        throw Error(Errc::NotSemistandard, "column " + std::to_string(c + 1) + " not strictly increasing");
      }
    }
  }
}

Tableau Tableau::parse(std::string_view text, int bound) {
  std::vector<std::vector<int>> rows;
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (!s.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto slash = s.find('/', start);
      const std::string row_text = s.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
      std::vector<int> row;
      std::size_t p = 0;
      while (p <= row_text.size()) {
        const auto comma = row_text.find(',', p);
        const std::string tok = row_text.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
          throw Error(Errc::ParseError, "bad tableau entry '" + tok + "'");
        }
        row.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
      rows.push_back(std::move(row));
      if (slash == std::string::npos) break;
      start = slash + 1;
    }
  }
  return Tableau(std::move(rows), bound);
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

std::size_t default_enumeration_cap() {
  if (const char* env = std::getenv("CRYSTAL_SIEVE_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int m, std::size_t cap) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  std::vector<Tableau> out;
  if (lambda.length() > m) return out;
  const auto& shape = lambda.parts();
  std::vector<int> col_height(shape.empty() ? 0 : static_cast<std::size_t>(shape[0]), 0);
  for (int len : shape) {
    for (int c = 0; c < len; ++c) ++col_height[c];
  }
  std::vector<std::vector<int>> rows;
  for (int len : shape) rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  }

  // Row-major backtracking; the upper bound leaves room for the rest of
  // each column, so every branch completes and output is lexicographic.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      if (out.size() >= cap) {
        throw Error(Errc::ResourceLimit, "more than " + std::to_string(cap) + " tableaux in SST_" +
                                             std::to_string(m) + "(" + lambda.to_string() + ")");
      }
      out.emplace_back(rows, m);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    const int hi = m - (col_height[c] - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      rows[r][c] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> out(static_cast<std::size_t>(t.bound()), 0);
  for (const auto& row : t.rows()) {
    for (int v : row) ++out[v - 1];
  }
  return out;
}

std::uint64_t kostka(const Partition& lambda, const std::vector<int>& mu) {
  int total = 0;
  for (int x : mu) {
    if (x < 0) throw Error(Errc::InvalidArgument, "content entries must be nonnegative");
    total += x;
  }
  if (total != lambda.size()) throw Error(Errc::SizeMismatch, "|lambda| != |mu|");
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  std::uint64_t count = 0;
  for (const Tableau& t : enumerate_ssyt(lambda, static_cast<int>(mu.size()))) {
    if (content(t) == mu) ++count;
  }
  return count;
}

namespace {

void check_index(int i, const Tableau& t) {
  if (i < 1 || i >= t.bound()) {
    throw Error(Errc::InvalidArgument, "index " + std::to_string(i) + " outside 1.." + std::to_string(t.bound() - 1));
  }
}

struct Signature {
  // Cells (row, col) of the unbracketed entries, in reading order.
  std::vector<std::pair<int, int>> plus;
  std::vector<std::pair<int, int>> minus;
};

Signature signature(int i, const Tableau& t) {
  check_index(i, t);
  Signature sig;
  const auto& rows = t.rows();
  for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      const int v = rows[r][c];
      if (v == i + 1) {
        sig.minus.emplace_back(r, c);
      } else if (v == i) {
        // A '+' cancels against the nearest unmatched '-' to its left.
        if (!sig.minus.empty()) {
          sig.minus.pop_back();
        } else {
          sig.plus.emplace_back(r, c);
        }
      }
    }
  }
  return sig;
}

Tableau with_entry(const Tableau& t, std::pair<int, int> cell, int value) {
  auto rows = t.rows();
  rows[cell.first][cell.second] = value;
  return Tableau(std::move(rows), t.bound());
}

}  // namespace

int crystal_phi(int i, const Tableau& t) { return static_cast<int>(signature(i, t).plus.size()); }
int crystal_epsilon(int i, const Tableau& t) { return static_cast<int>(signature(i, t).minus.size()); }

std::optional<Tableau> crystal_f(int i, const Tableau& t) {
  const Signature sig = signature(i, t);
  if (sig.plus.empty()) return std::nullopt;
  return with_entry(t, sig.plus.back(), i + 1);
}

std::optional<Tableau> crystal_e(int i, const Tableau& t) {
  const Signature sig = signature(i, t);
  if (sig.minus.empty()) return std::nullopt;
  return with_entry(t, sig.minus.front(), i);
}

Tableau weyl_s(int i, const Tableau& t) {
  check_index(i, t);
  const auto c = content(t);
  int k = c[i - 1] - c[i];
  Tableau cur = t;
  while (k != 0) {
    auto next = k > 0 ? crystal_f(i, cur) : crystal_e(i, cur);
    if (!next) throw Error(Errc::InternalNull, "s_" + std::to_string(i) + " hit the zero element on " + t.to_string());
    cur = std::move(*next);
    k += k > 0 ? -1 : 1;
  }
  return cur;
}

Tableau c_action(const Tableau& t) {
  Tableau cur = t;
  for (int i = t.bound() - 1; i >= 1; --i) cur = weyl_s(i, cur);
  return cur;
}

Tableau bender_knuth(int i, const Tableau& t) {
  check_index(i, t);
  const auto& rows = t.rows();
  auto out = rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::size_t first = row.size(), last = 0;
    int free_i = 0, free_next = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      bool is_free = false;
      if (row[c] == i) {
        is_free = !(r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] == i + 1);
        if (is_free) ++free_i;
      } else if (row[c] == i + 1) {
        is_free = !(r > 0 && rows[r - 1][c] == i);
        if (is_free) ++free_next;
      }
      if (is_free) {
        first = std::min(first, c);
        last = c;
      }
    }
    if (free_i + free_next == 0) continue;
    // The free cells are contiguous: a copies of i then b copies of i+1
    // become b copies of i then a copies of i+1.
    for (std::size_t c = first; c <= last; ++c) {
      out[r][c] = static_cast<int>(c - first) < free_next ? i : i + 1;
    }
  }
  return Tableau(std::move(out), t.bound());
}

Tableau promotion(const Tableau& t) {
  Tableau cur = t;
  for (int i = t.bound() - 1; i >= 1; --i) cur = bender_knuth(i, cur);
  return cur;
}

Tableau superstandard(const Partition& lambda, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  if (lambda.length() > m) throw Error(Errc::ShapeTooLong, lambda.to_string());
  if (lambda.size() % m != 0) {
    throw Error(Errc::NotDivisible, std::to_string(m) + " does not divide |" + lambda.to_string() + "|");
  }
  const int per = lambda.size() / m;
  std::vector<std::vector<int>> rows;
  int k = 0;
  for (int len : lambda.parts()) {
    std::vector<int> row;
    for (int c = 0; c < len; ++c, ++k) row.push_back(k / per + 1);
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows), m);
}

std::vector<Tableau> fixed_points(const Partition& lambda, int m, std::size_t cap) {
  std::vector<Tableau> out;
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  if (lambda.size() % m != 0) return out;
  const std::vector<int> uniform(static_cast<std::size_t>(m), lambda.size() / m);
  for (Tableau& t : enumerate_ssyt(lambda, m, cap)) {
    if (content(t) == uniform) out.push_back(std::move(t));
  }
  return out;
}

MCore m_core(const Partition& lambda, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  const auto parts = lambda.padded(m);
  std::vector<int> beta(static_cast<std::size_t>(m));
  std::vector<int> runner_beads(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= m; ++k) {
    beta[k - 1] = parts[k - 1] + m - k;
    ++runner_beads[beta[k - 1] % m];
  }
  // Slide every bead to the top of its runner.
  std::vector<int> beads;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < runner_beads[r]; ++j) beads.push_back(r + j * m);
  }
  std::sort(beads.rbegin(), beads.rend());
  std::vector<int> core_parts;
  for (int k = 1; k <= m; ++k) core_parts.push_back(beads[k - 1] - (m - k));

  MCore out;
  out.core = Partition(std::move(core_parts));
  out.is_empty = std::all_of(runner_beads.begin(), runner_beads.end(), [](int n) { return n == 1; });
  if (out.is_empty) {
    // Residues are a permutation of 0..m-1; count pairs out of the
    // decreasing order (m-1, ..., 0).
    int inversions = 0;
    for (int k = 0; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        if (beta[k] % m < beta[l] % m) ++inversions;
      }
    }
    out.sign = inversions % 2 == 0 ? 1 : -1;
  }
  return out;
}

const char* to_string(Action a) { return a == Action::C ? "c" : "pr"; }

Action parse_action(std::string_view text) {
  if (text == "c") return Action::C;
  if (text == "pr" || text == "promotion") return Action::Promotion;
  throw Error(Errc::ParseError, "unknown action '" + std::string(text) + "' (expected c or pr)");
}

Tableau apply(Action a, const Tableau& t) { return a == Action::C ? c_action(t) : promotion(t); }

std::uint64_t OrbitCensus::orbits_of_size(std::uint64_t d) const {
  auto it = by_size.find(d);
  return it == by_size.end() ? 0 : it->second;
}

std::uint64_t OrbitCensus::order() const {
  std::uint64_t l = 1;
  for (const auto& [size, count] : by_size) l = std::lcm(l, size);
  return l;
}

std::uint64_t OrbitCensus::fixed_by_power(std::uint64_t j) const {
  std::uint64_t fixed = 0;
  for (const auto& [size, count] : by_size) {
    if (j % size == 0) fixed += size * count;
  }
  return fixed;
}

OrbitCensus census_of_permutation(const std::vector<std::size_t>& perm) {
  OrbitCensus census;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t k = start; !seen[k]; k = perm[k]) {
      seen[k] = true;
      ++len;
    }
    ++census.by_size[len];
    census.total += len;
  }
  return census;
}

std::vector<std::size_t> action_permutation(const std::vector<Tableau>& elements, Action action, unsigned jobs) {
  std::vector<std::size_t> perm(elements.size());
  auto trace = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const Tableau image = apply(action, elements[k]);
      auto it = std::lower_bound(elements.begin(), elements.end(), image);
      if (it == elements.end() || *it != image) {
        throw Error(Errc::InternalNull, "image of " + elements[k].to_string() + " left the crystal");
      }
      perm[k] = static_cast<std::size_t>(it - elements.begin());
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, elements.size() / 256));
  if (workers == 1) {
    trace(0, elements.size());
    return perm;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (elements.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        trace(w * chunk, std::min(elements.size(), (w + 1) * chunk));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return perm;
}

OrbitCensus orbit_census(const Partition& lambda, int m, Action action, std::size_t cap, unsigned jobs) {
  return census_of_permutation(action_permutation(enumerate_ssyt(lambda, m, cap), action, jobs));
}

}  // namespace crystal_sieve
