#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crystal_sieve/partition.hpp"

namespace crystal_sieve {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// "A3", "B2", "G2", ... Throws ParseError for malformed text and
  /// InvalidRank when the rank is not allowed for the family (D3 included).
  static CartanType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Positive root as simple-root coefficients: beta = sum c_i alpha_i.
struct Root {
  std::vector<int> coords;

  int height() const;
  std::string to_string() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Integral weight in fundamental-weight coordinates <h_i, Lambda>.
struct Weight {
  std::vector<std::int64_t> fund_coords;

  bool is_dominant() const;
  /// "2,0"
  static Weight parse(std::string_view text);
  std::string to_string() const;
  Weight scaled(std::int64_t factor) const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Finite-type Cartan datum with Bourbaki node numbering. Immutable once
/// built. Positive roots are sorted by height; within a height, alpha_1
/// comes first (reverse lexicographic on coordinates).
class CartanDatum {
 public:
  explicit CartanDatum(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  /// a_ij = <h_i, alpha_j>
  int cartan(int i, int j) const { return matrix_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return matrix_; }
  /// d_i with d_i a_ij = d_j a_ji and min d_i = 1; (alpha_i, alpha_i) = 2 d_i.
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// (beta, beta)
  std::int64_t norm(const Root& beta) const;
  /// (beta, rho) = sum_i c_i d_i
  std::int64_t rho_pairing(const Root& beta) const { return rho_pairings_.at(index_of(beta)); }
  /// <beta^vee, rho> = 2 (beta, rho) / (beta, beta)
  std::int64_t corho_pairing(const Root& beta) const { return corho_pairings_.at(index_of(beta)); }

  /// Simple reflection s_i acting on root coordinates.
  Root reflect(int i, const Root& beta) const;
  Root simple_root(int i) const;
  std::size_t index_of(const Root& beta) const;
  bool is_simply_laced() const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> symmetrizers_;
  std::vector<Root> positive_roots_;
  std::vector<std::int64_t> rho_pairings_;
  std::vector<std::int64_t> corho_pairings_;
};

CartanDatum build_cartan_datum(CartanType type);

/// (beta, Lambda) = sum_i c_i d_i <h_i, Lambda>. Throws DimensionMismatch.
std::int64_t pairing(const CartanDatum& datum, const Root& beta, const Weight& lambda);

/// <beta^vee, Lambda> = 2 (beta, Lambda) / (beta, beta). Throws NotARoot when
/// (beta, beta) <= 0 or the quotient is not an integer.
std::int64_t copairing(const CartanDatum& datum, const Root& beta, const Weight& lambda);

/// The A_{m-1} weight of a partition with at most m parts:
/// coordinates lambda_i - lambda_{i+1}. Throws ShapeTooLong.
Weight gl_weight(const Partition& lambda, int m);

Root highest_root(const CartanDatum& datum);

/// Classical |Delta^+| for the type.
std::size_t classical_root_count(const CartanType& type);

}  // namespace crystal_sieve
