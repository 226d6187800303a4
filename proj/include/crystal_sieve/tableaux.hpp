#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crystal_sieve/partition.hpp"

namespace crystal_sieve {

/// Semistandard Young tableau of a given shape with entries in {1, ..., m}.
/// Rows are stored top to bottom. Ordering is lexicographic on the
/// row-major entry sequence, which is also the enumeration order.
class Tableau {
 public:
  Tableau() = default;
  /// Validates shape and semistandardness; throws NotSemistandard or
  /// InvalidArgument.
  Tableau(std::vector<std::vector<int>> rows, int bound);

  /// "1,1,2/2,3" (rows separated by '/'). Throws ParseError on malformed
  /// text, otherwise validates like the constructor.
  static Tableau parse(std::string_view text, int bound);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int bound() const { return bound_; }
  Partition shape() const;
  int at(int row, int col) const { return rows_[row][col]; }
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  int bound_ = 1;
};

/// Default cap on enumerated crystal size (10^7), overridden by the
/// CRYSTAL_SIEVE_MAX_ENUM environment variable when set.
std::size_t default_enumeration_cap();

/// SST_m(lambda) in canonical order. Empty when l(lambda) > m.
/// Throws ResourceLimit once more than `cap` tableaux would be produced.
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, int m, std::size_t cap = default_enumeration_cap());

/// Count of i's for i = 1..m.
std::vector<int> content(const Tableau& t);

/// Number of SSYT of shape lambda and content mu (a composition).
/// Throws SizeMismatch when |lambda| != |mu|.
std::uint64_t kostka(const Partition& lambda, const std::vector<int>& mu);

/// Number of unbracketed i's (phi_i) and i+1's (epsilon_i) in the signature
/// of the reading word.
int crystal_phi(int i, const Tableau& t);
int crystal_epsilon(int i, const Tableau& t);

/// Kashiwara operators on tableaux. The reading word runs through the rows
/// bottom to top, each row left to right; an i is '+', an i+1 is '-', and
/// adjacent "-+" pairs cancel until the word reads +...+-...-. f_i changes
/// the rightmost surviving '+' to i+1, e_i the leftmost surviving '-' to i.
std::optional<Tableau> crystal_f(int i, const Tableau& t);
std::optional<Tableau> crystal_e(int i, const Tableau& t);

/// Simple reflection s_i on the crystal: f_i^k if k = <h_i, wt> >= 0,
/// e_i^{-k} otherwise, with <h_i, wt> = c_i - c_{i+1}.
Tableau weyl_s(int i, const Tableau& t);

/// c = s_1 s_2 ... s_{m-1}, applied right to left (s_{m-1} first).
/// For m = 1 this is the identity.
Tableau c_action(const Tableau& t);

/// Bender-Knuth involution sigma_i.
Tableau bender_knuth(int i, const Tableau& t);

/// pr = sigma_1 sigma_2 ... sigma_{m-1}, applied right to left.
Tableau promotion(const Tableau& t);

/// T_lambda^0: uniform content filled in reading order. Throws NotDivisible
/// when m does not divide |lambda| and NotSemistandard when the filling
/// breaks a column.
Tableau superstandard(const Partition& lambda, int m);

/// c-fixed points: the tableaux with content (|lambda|/m, ..., |lambda|/m).
std::vector<Tableau> fixed_points(const Partition& lambda, int m, std::size_t cap = default_enumeration_cap());

struct MCore {
  Partition core;
  bool is_empty = false;
  /// Sign of w_lambda when the core is empty.
  std::optional<int> sign;
};

/// m-core via beta-numbers on an m-runner abacus. Throws ShapeTooLong.
MCore m_core(const Partition& lambda, int m);

enum class Action { C, Promotion };

const char* to_string(Action a);
Action parse_action(std::string_view text);
Tableau apply(Action a, const Tableau& t);

struct OrbitCensus {
  /// orbit size -> number of orbits of that size
  std::map<std::uint64_t, std::uint64_t> by_size;
  std::uint64_t total = 0;

  std::uint64_t orbits_of_size(std::uint64_t d) const;
  /// lcm of the orbit sizes (1 for an empty set).
  std::uint64_t order() const;
  /// Elements fixed by g^j: sum of sizes l dividing j, weighted by count.
  std::uint64_t fixed_by_power(std::uint64_t j) const;

  friend bool operator==(const OrbitCensus&, const OrbitCensus&) = default;
};

/// Orbit sizes of a permutation given as an index map.
OrbitCensus census_of_permutation(const std::vector<std::size_t>& perm);

/// Index permutation of `elements` (sorted, canonical order) under `action`,
/// traced on up to `jobs` threads.
std::vector<std::size_t> action_permutation(const std::vector<Tableau>& elements, Action action, unsigned jobs = 1);

OrbitCensus orbit_census(const Partition& lambda, int m, Action action, std::size_t cap = default_enumeration_cap(),
                         unsigned jobs = 1);

}  // namespace crystal_sieve
