#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfext {

using Fp = std::uint32_t;
using FpVec = std::vector<Fp>;

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

bool is_odd_prime(std::uint32_t p);
void require_odd_prime(std::uint32_t p);

Fp fp_add(Fp a, Fp b, std::uint32_t p);
Fp fp_sub(Fp a, Fp b, std::uint32_t p);
Fp fp_mul(Fp a, Fp b, std::uint32_t p);
Fp fp_neg(Fp a, std::uint32_t p);
Fp fp_pow(Fp a, std::uint64_t e, std::uint32_t p);
Fp fp_inv(Fp a, std::uint32_t p);

/// Dense matrix over GF(p), p an odd prime.
///
/// Convention used throughout: group elements and characters are row
/// vectors and matrices act on the right, v -> v*M.  kernel() is the
/// left kernel {v : v*M = 0}; image() is the row space {v*M : v}.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  FpMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix from_rows(std::uint32_t p, const std::vector<FpVec>& rows);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Fp at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, long long v);
  FpVec row(std::size_t i) const;
  FpVec flatten() const { return a_; }

  bool operator==(const FpMatrix& o) const;
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix scaled(Fp c) const;
  FpMatrix transpose() const;
  FpMatrix pow(std::uint64_t e) const;
  FpMatrix inverse() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_invertible() const;
  std::size_t rank() const;

  /// Induced matrix on the second exterior power, in the basis
  /// e_i ^ e_j, i < j, pairs ordered lexicographically.  Satisfies
  /// wedge_square(A*B) = wedge_square(A) * wedge_square(B).
  FpMatrix wedge_square() const;

  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fp> a_;

  void check_same_shape(const FpMatrix& o) const;
};

FpVec vec_mat(const FpVec& v, const FpMatrix& m);
Fp vec_dot(const FpVec& a, const FpVec& b, std::uint32_t p);
FpVec vec_add(const FpVec& a, const FpVec& b, std::uint32_t p);
FpVec vec_scaled(const FpVec& a, Fp c, std::uint32_t p);
bool vec_is_zero(const FpVec& v);

/// Lexicographically ordered pairs (i, j), i < j, indexing the basis of
/// the second exterior power of an n-dimensional space.
std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n);

/// Row span in reduced row echelon form; pivot columns strictly increase.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::size_t ambient);  // zero subspace
  static Subspace from_rows(std::uint32_t p, std::size_t ambient, const std::vector<FpVec>& rows);
  static Subspace full(std::uint32_t p, std::size_t ambient);

  std::uint32_t modulus() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FpVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const FpVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  /// Coefficients c with sum_i c_i * basis_i = v, if v lies in the span.
  std::optional<FpVec> coordinates(const FpVec& v) const;

  /// Element of the span from a coefficient vector.
  FpVec element(const FpVec& coeffs) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Vectors from `larger` extending this basis to a basis of `larger`.
  /// Requires *this to be contained in `larger`.  Deterministic: scans
  /// the echelon basis of `larger` in order.
  std::vector<FpVec> complement_in(const Subspace& larger) const;

 private:
  std::uint32_t p_ = 0;
  std::size_t ambient_ = 0;
  std::vector<FpVec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const FpMatrix& m);     // {v : v*m = 0}
Subspace image(const FpMatrix& m);      // row space {v*m : v}
std::optional<FpVec> solve_left(const FpMatrix& m, const FpVec& b);  // x with x*m = b

}  // namespace hopfext
