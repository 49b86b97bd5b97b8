#pragma once

#include <optional>

#include "hopfext/linalg.hpp"

namespace hopfext {

/// Jordan-block multiplicities of a unipotent action: m[l-1] copies of the
/// indecomposable block of size l, 1 <= l <= p.  A complete isomorphism
/// invariant of the module.
struct BlockProfile {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> m;  // m[l-1] = number of blocks of size l

  std::size_t rank() const;  // sum l * m[l-1]
  bool operator==(const BlockProfile& o) const;
  std::string to_string() const;  // "m1,m2,..." with trailing zeros dropped

  static BlockProfile parse(std::uint32_t p, const std::string& text);
  static BlockProfile trivial(std::uint32_t p, std::size_t n);

  /// All profiles of a given rank (partitions of n into parts <= p),
  /// in a deterministic order.
  static std::vector<BlockProfile> all_of_rank(std::uint32_t p, std::size_t n);
};

/// Action of the cyclic group of odd prime order p on Z_p^n, stored as the
/// matrix T of a fixed generator t acting on row vectors from the right.
/// T is unipotent of order dividing p.
class CpModule {
 public:
  CpModule(std::uint32_t p, FpMatrix T);

  static CpModule from_blocks(const BlockProfile& profile);
  static CpModule trivial(std::uint32_t p, std::size_t n);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }
  const FpMatrix& T() const { return T_; }
  bool is_trivial() const { return T_.is_identity(); }

  /// Action matrix of t^k (k mod p).
  FpMatrix T_pow(std::uint32_t k) const;
  /// Action of t on the dual group in the dual basis.
  FpMatrix dual_action() const { return T_.transpose(); }

  CpModule twist(std::uint32_t k) const;  // action a |> t^k; requires gcd(k, p) = 1

  BlockProfile block_profile() const;

  /// Change of basis U with U * T * U^{-1} equal to the canonical
  /// block-diagonal form from_blocks(block_profile()).  Rows of U are the
  /// new basis: Jordan chains v, vN, ..., blocks listed by increasing size.
  FpMatrix decompose_basis() const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  FpMatrix T_;
};

/// Solution space of T * L = L * T' inside n x n matrices, flattened
/// row-major into vectors of length n^2.
Subspace intertwiner_space(const CpModule& a, const CpModule& b);

/// An invertible L with T * L = L * T', or nullopt exactly when the block
/// profiles differ.  Deterministic (built from the canonical decomposition
/// bases of both modules).
std::optional<FpMatrix> find_invertible_intertwiner(const CpModule& a, const CpModule& b);

/// Invertible intertwiner between a module and its k-th twist.
struct Intertwiner {
  std::uint32_t k;   // unit mod p
  FpMatrix lambda;   // T * lambda = lambda * T^k
};

std::optional<Intertwiner> twist_intertwiner(const CpModule& m, std::uint32_t k);

}  // namespace hopfext
