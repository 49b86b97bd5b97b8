#pragma once

#include "hopfext/cohomology.hpp"

namespace hopfext {

/// Scalar in the group of p^2-th roots of unity (stored as the exponent),
/// or zero.  The only scalars occurring in the structure constants.
struct RootScalar {
  std::uint32_t modulus = 0;  // p^2
  std::uint32_t exponent = 0;
  bool is_zero = true;

  static RootScalar zero(std::uint32_t modulus);
  static RootScalar root(std::uint32_t modulus, std::uint32_t exponent);
  RootScalar times(const RootScalar& o) const;
  bool operator==(const RootScalar&) const = default;
};

/// Exact structure constants of the extension attached to a point of the
/// classifying space.  The basis is p_a x^i indexed by a_index * p + i;
/// the algebra is the smash product (products are single basis elements)
/// and the coalgebra is deformed by the cocycle components tau[i].
class HopfStructure {
 public:
  HopfStructure(CpModule m, std::vector<PairTable> tau);

  std::uint32_t p() const { return module_.p(); }
  std::size_t n() const { return module_.n(); }
  const CpModule& module() const { return module_; }
  const GroupIndexer& indexer() const { return idx_; }
  std::size_t dim() const { return idx_.count() * p(); }
  const std::vector<PairTable>& tau() const { return tau_; }

  std::size_t basis_index(std::size_t a, std::uint32_t i) const { return a * p() + i; }
  std::size_t group_part(std::size_t basis) const { return basis / p(); }
  std::uint32_t grade_part(std::size_t basis) const { return static_cast<std::uint32_t>(basis % p()); }

  /// a * T^i as an index.
  std::size_t act(std::uint32_t i, std::size_t a) const { return act_[i % p()][a]; }

  /// Product of two basis elements: one basis element with coefficient 1,
  /// or zero.  (p_a x^i)(p_b x^j) = [b = a T^i] p_a x^{i+j}.
  struct Product {
    bool zero = true;
    std::size_t basis = 0;
  };
  Product multiply(std::size_t u, std::size_t v) const;

  struct CoproductTerm {
    std::size_t left = 0, right = 0;
    std::uint32_t exponent = 0;  // of the p^2-th root of unity
  };
  /// Delta(p_c x^i) = sum_{a+b=c} tau_i(a,b) p_a x^i (x) p_b x^i.
  std::vector<CoproductTerm> coproduct(std::size_t basis) const;

  std::uint32_t counit(std::size_t basis) const { return group_part(basis) == 0 ? 1 : 0; }

  bool is_cocommutative() const;

  /// Corrupt one cocycle value (testing hook for the axiom checker).
  void corrupt_tau(std::uint32_t i, std::size_t a, std::size_t b, std::uint32_t delta);

 private:
  CpModule module_;
  GroupIndexer idx_;
  std::vector<std::vector<std::uint32_t>> act_;
  std::vector<PairTable> tau_;
};

HopfStructure build_hopf(const ClassSpace& space, const ClassPoint& pt);

/// The class point a structure realizes, recovered from tau(t).
ClassPoint point_of_hopf(const ClassSpace& space, const HopfStructure& h);

struct AxiomReport {
  bool pass = true;
  std::string failed_check;                // empty when pass
  std::vector<std::uint64_t> witness;      // indices pinning the failure
  std::uint64_t checks_run = 0;
  std::string to_string() const;
};

/// Exact verification: unit/counit laws, associativity (full loop under a
/// budget, otherwise the action identities it reduces to), coassociativity,
/// the cocycle-component compatibility, and coproduct multiplicativity.
AxiomReport check_axioms(const HopfStructure& h);

/// New structure with tau twisted by the coboundary chain of an admissible
/// function g (norm of g vanishes mod p^2).  Realizes the same class point.
HopfStructure shift_by_coboundary(const HopfStructure& h, const FunctionTable& g);

std::string hopf_to_json(const HopfStructure& h, const AxiomReport& report);

/// Parses and validates an exported structure; throws on schema violations.
void validate_hopf_json(const std::string& text);

}  // namespace hopfext
