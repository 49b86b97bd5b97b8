#pragma once

#include "hopfext/cohomology.hpp"
#include "hopfext/group_table.hpp"

namespace hopfext {

/// Complete invariant of a pair (character, alternating form) under the
/// full automorphism group when the action is trivial.
struct OrbitLabel {
  std::size_t width = 0;      // half the rank of the form
  bool chi_zero = true;
  bool rad_in_kernel = true;  // radical of the form inside ker(chi)

  auto operator<=>(const OrbitLabel&) const = default;
  std::string to_string() const;
};

/// Radical {x : beta(x, -) = 0} of an alternating form.
Subspace radical(const AltForm& beta);

std::size_t form_width(const AltForm& beta);  // rank / 2

OrbitLabel classify_pair(const FpVec& chi, const AltForm& beta);

/// floor((3n+2)/2): the number of commutative isomorphism types on Z_p^n.
std::size_t commutative_isoclass_count(std::size_t n);

/// Number of distinct labels over all p^(n + C(n,2)) pairs, by exhaustive
/// enumeration (grouped by form, so the cost is p^C(n,2) echelon runs).
std::size_t count_labels_exhaustive(std::uint32_t p, std::size_t n);

/// Complete orthogonal decomposition: hyperbolic pairs and the radical.
struct SymplecticBasis {
  std::vector<std::pair<FpVec, FpVec>> hyperbolic;
  Subspace rad;
};
SymplecticBasis symplectic_decomposition(const AltForm& beta);

/// Central extension of Z_p by G attached to a point of the trivial-action
/// space: the group on G x Z_p twisted by the assembled 2-cocycle.
GroupTable central_extension_group(const ClassSpace& space, const ClassPoint& pt);

}  // namespace hopfext
