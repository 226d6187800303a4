#include "crystal_sieve/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(Errc::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(Errc::InvalidArgument, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
  if (rest.empty()) return Partition{};
  while (true) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "bad partition part '" + std::string(tok) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Partition Partition::rectangle(int a, int b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "rectangle sides must be nonnegative");
  if (a == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(b), a));
}

std::vector<int> Partition::padded(int m) const {
  if (m < length()) throw Error(Errc::ShapeTooLong, "partition longer than " + std::to_string(m));
  std::vector<int> out = parts_;
  out.resize(static_cast<std::size_t>(m), 0);
  return out;
}

bool Partition::is_rectangle() const {
  return std::adjacent_find(parts_.begin(), parts_.end(), std::not_equal_to<>{}) == parts_.end();
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::int64_t kappa(const Partition& lambda) {
  std::int64_t k = 0;
  for (int i = 1; i <= lambda.length(); ++i) k += static_cast<std::int64_t>(i - 1) * lambda.part(i);
  return k;
}

bool dominates(const Partition& lambda, const std::vector<int>& mu) {
  int total_mu = 0;
  for (int x : mu) total_mu += x;
  if (total_mu != lambda.size()) throw Error(Errc::SizeMismatch, "dominance needs |lambda| = |mu|");
  std::int64_t sl = 0, sm = 0;
  const int len = std::max<int>(lambda.length(), static_cast<int>(mu.size()));
  for (int k = 1; k <= len; ++k) {
    sl += lambda.part(k);
    sm += k <= static_cast<int>(mu.size()) ? mu[k - 1] : 0;
    if (sl < sm) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, std::max(n, 0)); }

}  // namespace crystal_sieve
