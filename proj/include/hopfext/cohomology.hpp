#pragma once

#include "hopfext/cp_module.hpp"

namespace hopfext {

/// Indexing of the elements of G = Z_p^n: index = sum_i a_i p^i.
class GroupIndexer {
 public:
  GroupIndexer(std::uint32_t p, std::size_t n);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }
  std::size_t count() const { return count_; }

  FpVec decode(std::size_t idx) const;
  std::size_t encode(const FpVec& a) const;
  std::size_t add(std::size_t i, std::size_t j) const;

  /// Index map of a |-> a * M.
  std::vector<std::uint32_t> action_table(const FpMatrix& M) const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::size_t count_;
};

/// Function table on G x G with additive values mod `modulus` (the modulus
/// is p for p-th roots of unity, p^2 for the scalars of Hopf structures).
struct PairTable {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint32_t modulus = 0;
  std::size_t pts = 0;           // p^n
  std::vector<std::uint32_t> v;  // size p^{2n}, row index first argument

  PairTable() = default;
  PairTable(std::uint32_t p_, std::size_t n_, std::uint32_t modulus_);

  std::size_t points() const { return pts; }
  std::uint32_t at(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, std::uint32_t val);

  bool operator==(const PairTable& o) const = default;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_normalized() const;

  PairTable plus(const PairTable& o) const;
  PairTable minus(const PairTable& o) const;
  PairTable scaled(std::uint32_t c) const;
  /// Embed Z_p values into Z_{p^2} as multiples of p.
  PairTable embedded_times_p() const;
};

/// Checks the 2-cocycle identity z(a,b+c) + z(b,c) = z(a+b,c) + z(a,b).
/// Exhaustive when p^{3n} is small, deterministic strided sample otherwise.
bool is_two_cocycle(const PairTable& z);

/// Alternating bilinear form beta(a, b) = a B b^T on Z_p^n, values in Z_p
/// written additively.
class AltForm {
 public:
  AltForm(FpMatrix B);  // validates skew symmetry and zero diagonal
  static AltForm zero(std::uint32_t p, std::size_t n);
  static AltForm from_wedge_coords(std::uint32_t p, std::size_t n, const FpVec& coords);

  std::uint32_t p() const { return B_.modulus(); }
  std::size_t n() const { return B_.rows(); }
  const FpMatrix& matrix() const { return B_; }
  FpVec wedge_coords() const;
  Fp value(const FpVec& a, const FpVec& b) const;
  bool is_zero() const { return B_.is_zero(); }
  bool operator==(const AltForm& o) const { return B_ == o.B_; }

 private:
  FpMatrix B_;
};

/// phi_l(S) = I + S + ... + S^{l-1}; for l = p this is the norm operator,
/// which over GF(p) equals (S - I)^{p-1}.
FpMatrix norm_operator(const FpMatrix& S, std::uint32_t l);

/// z |-> z(a,b) - z(b,a), with validation that z is a 2-cocycle and the
/// result is the bilinear form read off generator pairs.
AltForm antisymmetrize(const PairTable& z);

/// Coordinates on the classifying space attached to a module: a chosen
/// complement of the norm image inside the fixed characters, and the
/// norm-killed part of the alternating forms in wedge coordinates.
class ClassSpace {
 public:
  explicit ClassSpace(CpModule m);

  const CpModule& module() const { return module_; }
  std::uint32_t p() const { return module_.p(); }
  std::size_t n() const { return module_.n(); }
  const GroupIndexer& indexer() const { return idx_; }

  const FpMatrix& dual_T() const { return dual_T_; }
  const FpMatrix& wedge_T() const { return wedge_T_; }
  const Subspace& dual_fixed() const { return fixed_; }       // fixed characters
  const Subspace& dual_norm_image() const { return norm_im_; }
  const Subspace& chi_basis() const { return chi_basis_; }
  const Subspace& alt_basis() const { return alt_basis_; }

  std::size_t chi_dim() const { return chi_basis_.dim(); }
  std::size_t alt_dim() const { return alt_basis_.dim(); }
  std::size_t dim() const { return chi_dim() + alt_dim(); }

  /// Index map of a |-> a * T^i on group elements, i = 0..p-1.
  const std::vector<std::uint32_t>& group_action(std::uint32_t i) const;

  FpVec character_of(const FpVec& chi_coords) const;
  AltForm form_of(const FpVec& alt_coords) const;

  /// Coordinates of a fixed character modulo the norm image.
  FpVec reduce_character(const FpVec& chi) const;
  /// Coordinates of a norm-killed form over the alternating basis.
  FpVec reduce_form(const AltForm& beta) const;

 private:
  CpModule module_;
  GroupIndexer idx_;
  FpMatrix dual_T_, wedge_T_;
  Subspace fixed_, norm_im_, chi_basis_, alt_basis_;
  std::vector<std::vector<std::uint32_t>> act_;  // a * T^i, i = 0..p-1
};

/// A point (chi-bar, beta) of the classifying space, as coordinate vectors
/// over the chosen bases.
struct ClassPoint {
  FpVec chi;
  FpVec beta;
  bool operator==(const ClassPoint& o) const = default;
};

/// (t^i . z)(a, b) = z(a * T^i, b * T^i).
PairTable act_on_table(const ClassSpace& space, const PairTable& z, std::uint32_t i);

/// phi_l . z = sum_{j<l} t^j . z.
PairTable norm_on_table(const ClassSpace& space, const PairTable& z, std::uint32_t l);

/// Bilinear cocycle with antisymmetrization beta: ((p+1)/2) * beta(a,b).
/// Norm-killed whenever beta lies in the alternating part of the space.
PairTable lift_beta_to_cocycle(const ClassSpace& space, const AltForm& beta);

/// Upper-triangular lift on the standard basis: s(a,b) = a U b^T with U the
/// upper triangle of the form matrix.  Same antisymmetrization, kept as an
/// independent cross-check of the halving lift.
PairTable lift_beta_upper_triangular(const AltForm& beta);

/// Values of a function G -> Z_{p^2} (exponents of a primitive p^2-th root).
using FunctionTable = std::vector<std::uint32_t>;

/// f(a) + f(b) - f(a+b) as a PairTable mod p^2.
PairTable coboundary_of_function(const ClassSpace& space, const FunctionTable& f);

/// (phi_p . f)(a) = sum_i f(a * T^i) mod p^2.
FunctionTable norm_on_function(const ClassSpace& space, const FunctionTable& f);

/// Function f with phi_p . f equal to the embedded character: f is set to
/// chi on one representative of each free orbit, zero elsewhere on the
/// orbit, and to a p-th root of chi(s) on fixed points.
FunctionTable lift_chi_to_function(const ClassSpace& space, const FpVec& chi);

/// tau(t^i) = phi_i . s for i = 0..p-1; requires phi_p . s = 0.
std::vector<PairTable> tau_components(const ClassSpace& space, const PairTable& s);

/// Full cocycle mod p^2 representing a point: p * (halving lift of beta)
/// plus the coboundary of the chi lift.
PairTable assemble_point_cocycle(const ClassSpace& space, const ClassPoint& pt);

/// Inverse of assemble_point_cocycle up to coboundary equivalence: reads
/// beta off the antisymmetrization and chi-bar off norm sums over the
/// kernel of the group-side norm.
ClassPoint recover_point(const ClassSpace& space, const PairTable& s);

}  // namespace hopfext
