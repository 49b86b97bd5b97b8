#pragma once

#include "hopfext/group_table.hpp"
#include "hopfext/orbit_engine.hpp"

namespace hopfext {

/// Extension of the cyclic group of order p by the module's group G:
/// generated by G and an element x with x^p = a (a fixed point) and
/// x g x^{-1} = g * T^{-1}.  Elements are pairs (g, i) = g x^i indexed
/// as g_index * p + i.
class ExtGroup {
 public:
  ExtGroup(CpModule m, FpVec a);

  const CpModule& module() const { return module_; }
  const FpVec& distinguished() const { return a_; }
  const GroupTable& table() const { return table_; }
  std::uint32_t p() const { return module_.p(); }
  std::size_t n() const { return module_.n(); }

  /// Whether the class of a in fixed-points modulo norms is trivial.
  bool class_is_trivial() const;

  /// Dimensions of gamma_2, gamma_3, ... (log_p of the subgroup sizes).
  std::vector<std::size_t> lower_central_dims() const;

 private:
  CpModule module_;
  FpVec a_;
  GroupTable table_;
};

struct IsoCertificate {
  bool verdict = false;
  std::string reason;
};

/// Decision procedure for isomorphism of extension groups: equal block
/// profiles, matching norm-class triviality, and for nontrivial classes a
/// common orbit of the distinguished cosets under module automorphisms
/// (transported through a chosen intertwiner).
IsoCertificate ext_groups_isomorphic(const ExtGroup& a, const ExtGroup& b);

/// Representatives of the fixed points modulo the norm image of a module,
/// enumerated over the chosen complement (the zero class first).
std::vector<FpVec> fixed_class_representatives(const CpModule& m);

}  // namespace hopfext
