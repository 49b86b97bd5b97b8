#pragma once

#include "hopfext/cohomology.hpp"

namespace hopfext {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultGroupCap = 20'000'000;
inline constexpr std::uint64_t kDefaultPointCap = 100'000'000;

/// The group of module automorphisms (invertible centralizer elements of T)
/// together with the chosen twist intertwiners.  Generators are always
/// available; the full element list is enumerated only below the cap.
class SymmetryGroup {
 public:
  static SymmetryGroup of_module(const CpModule& m);

  const CpModule& module() const { return module_; }
  const Subspace& centralizer_space() const { return cent_; }

  /// Generating set of the automorphism group.
  const std::vector<FpMatrix>& generators() const { return gens_; }

  /// All invertible centralizer elements; throws CapExceededError when the
  /// solution space is larger than the cap.
  std::vector<FpMatrix> enumerate_elements(std::uint64_t cap = kDefaultGroupCap) const;

  /// |A|, from the closed form p^(dim radical) * prod_l |GL(m_l, p)|.
  std::uint64_t aut_order() const { return aut_order_; }

  /// Twists k admitting an invertible intertwiner, with the chosen one.
  const std::vector<Intertwiner>& twists() const { return twists_; }
  std::vector<std::uint32_t> twist_group() const;
  std::uint64_t gamma_order() const { return aut_order_ * twists_.size(); }

 private:
  CpModule module_;
  Subspace cent_;
  std::vector<FpMatrix> gens_;
  std::uint64_t aut_order_ = 0;
  std::vector<Intertwiner> twists_;

  explicit SymmetryGroup(CpModule m) : module_(std::move(m)) {}
};

std::uint64_t gl_order(std::uint32_t p, std::size_t m);
Fp primitive_root(std::uint32_t p);

/// Induced action of a symmetry on the coordinates of the classifying
/// space: a pair of invertible matrices acting on the chi and alt parts.
struct PointAction {
  FpMatrix chi_map;
  FpMatrix alt_map;
};

PointAction point_action_of_aut(const ClassSpace& space, const FpMatrix& F);
PointAction point_action_of_omega(const ClassSpace& space, const Intertwiner& tw);

/// Point actions of the automorphism generators only.
std::vector<PointAction> aut_point_actions(const ClassSpace& space, const SymmetryGroup& g);
/// Point actions generating the full symmetry group (automorphisms and twists).
std::vector<PointAction> gamma_point_actions(const ClassSpace& space, const SymmetryGroup& g);

enum class OrbitSlice { Full, BetaZero, BetaNonzero };

struct OrbitReport {
  std::uint64_t total_points = 0;  // points visited in the slice
  std::uint64_t orbit_count_beta_zero = 0;
  std::uint64_t orbit_count_beta_nonzero = 0;
  std::vector<std::uint64_t> representatives;  // minimal point index per orbit
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<std::uint32_t> point_orbit;  // orbit id per point when labels kept

  std::uint64_t orbit_count() const { return representatives.size(); }
};

/// Point index <-> coordinates: the concatenated digit string (chi then
/// alt) read big-endian, so index order is lexicographic order.
std::uint64_t encode_point(const ClassSpace& space, const ClassPoint& pt);
ClassPoint decode_point(const ClassSpace& space, std::uint64_t idx);

/// Breadth-first orbit enumeration over the chosen slice of the space.
/// Orbits are discovered in increasing index order, so representatives are
/// lexicographic minima.  `keep_labels` stores the full point -> orbit map.
OrbitReport enumerate_orbits(const ClassSpace& space, const std::vector<PointAction>& gens,
                             OrbitSlice slice, std::uint64_t cap_points = kDefaultPointCap,
                             bool keep_labels = false);

/// Isomorphism-class counts for the action class of a module.
struct IsoclassCount {
  std::uint64_t cocommutative = 0;
  std::uint64_t noncocommutative = 0;
  std::uint64_t total = 0;
};

struct ClassifyResult {
  BlockProfile profile;
  std::size_t chi_dim = 0;
  std::size_t alt_dim = 0;
  std::uint64_t aut_order = 0;
  std::vector<std::uint32_t> twist_group;
  IsoclassCount counts;
  OrbitReport chi_slice;    // automorphism orbits on the cocommutative slice
  OrbitReport full_gamma;   // full-group orbits on the whole space
};

ClassifyResult classify_module(const CpModule& m,
                               std::uint64_t cap_points = kDefaultPointCap,
                               std::uint64_t cap_group = kDefaultGroupCap);

IsoclassCount isoclass_count(std::uint32_t p, const BlockProfile& profile,
                             std::uint64_t cap_points = kDefaultPointCap,
                             std::uint64_t cap_group = kDefaultGroupCap);

}  // namespace hopfext
