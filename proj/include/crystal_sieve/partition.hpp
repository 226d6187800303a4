#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crystal_sieve {

/// Integer partition with strictly positive, weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zero parts are dropped; anything else that is not weakly
  /// decreasing and nonnegative throws InvalidArgument.
  explicit Partition(std::vector<int> parts);

  /// "4,4,4"; "" and "0" give the empty partition.
  static Partition parse(std::string_view text);
  /// (a^b): b rows of length a.
  static Partition rectangle(int a, int b);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// lambda_k for 1-based k, zero past the length.
  int part(int k) const { return k >= 1 && k <= length() ? parts_[k - 1] : 0; }
  /// Parts padded with zeros to length m (m >= length()).
  std::vector<int> padded(int m) const;
  bool is_rectangle() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Sum_{k>=1} (k-1) lambda_k.
std::int64_t kappa(const Partition& lambda);

/// Dominance order lambda >= mu (partial sums), for |lambda| = |mu|;
/// mu may be any composition and is compared through its partial sums.
bool dominates(const Partition& lambda, const std::vector<int>& mu);

/// All partitions of n (descending lexicographic order).
std::vector<Partition> partitions_of(int n);
/// All partitions of n with at most max_length parts.
std::vector<Partition> partitions_of(int n, int max_length);

}  // namespace crystal_sieve
