#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfext {

/// Finite group as an explicit multiplication table over indices 0..order-1
/// with the identity at index 0.
struct GroupTable {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> mul;  // row-major, mul[u*order+v] = u*v

  GroupTable() = default;
  GroupTable(std::uint32_t order_, std::vector<std::uint32_t> mul_);

  std::uint32_t at(std::uint32_t u, std::uint32_t v) const { return mul[u * order + v]; }

  bool is_group() const;  // identity at 0, associativity, inverses
  bool is_abelian() const;

  std::uint32_t inverse(std::uint32_t u) const;
  std::uint32_t power(std::uint32_t u, std::uint64_t e) const;
  std::uint32_t element_order(std::uint32_t u) const;
  std::uint32_t exponent() const;
  std::uint32_t commutator(std::uint32_t u, std::uint32_t v) const;  // u v u^-1 v^-1

  std::vector<std::uint32_t> element_orders() const;       // per element
  std::map<std::uint32_t, std::uint32_t> order_histogram() const;
  std::uint32_t centralizer_size(std::uint32_t u) const;
  std::uint32_t center_size() const;

  /// Subgroup generated by the given elements, as a sorted element list.
  std::vector<std::uint32_t> closure(std::vector<std::uint32_t> gens) const;

  /// Sizes |gamma_1|, |gamma_2|, ... of the lower central series, ending
  /// with the first entry equal to 1.
  std::vector<std::uint32_t> lower_central_sizes() const;

  /// Greedy irredundant generating set (scans elements in index order).
  std::vector<std::uint32_t> generating_set() const;

  /// Table with elements renamed by a permutation (an isomorphic copy).
  GroupTable relabeled(const std::vector<std::uint32_t>& perm) const;
};

/// Exact isomorphism test by generator-image backtracking with invariant
/// pruning.  Intended for groups of order <= the cap (default 3^5).
bool brute_force_iso(const GroupTable& a, const GroupTable& b, std::uint32_t order_cap = 243);

/// JSON export: {"order": n, "mul": [[...], ...]} plus basic facts.
std::string group_table_to_json(const GroupTable& g);
GroupTable group_table_from_json(const std::string& text);

}  // namespace hopfext
