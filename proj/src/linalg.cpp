#include "hopfext/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hopfext {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint32_t p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

Fp fp_add(Fp a, Fp b, std::uint32_t p) { return (a + b) % p; }
Fp fp_sub(Fp a, Fp b, std::uint32_t p) { return (a + p - b % p) % p; }
Fp fp_mul(Fp a, Fp b, std::uint32_t p) {
  return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p);
}
Fp fp_neg(Fp a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

Fp fp_pow(Fp a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1, base = a % p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Fp>(r);
}

Fp fp_inv(Fp a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw SingularMatrixError("division by zero in GF(" + std::to_string(p) + ")");
  return fp_pow(a, p - 2, p);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  require_odd_prime(p);
}

FpMatrix::FpMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows)
    : FpMatrix(p, rows.size(), rows.begin() == rows.end() ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
    std::size_t j = 0;
    for (long long v : r) set(i, j++, v);
    ++i;
  }
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<FpVec>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.a_[i * c + j] = rows[i][j] % p;
  }
  return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, long long v) {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  a_[i * cols_ + j] = static_cast<Fp>(r);
}

FpVec FpMatrix::row(std::size_t i) const {
  return FpVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

void FpMatrix::check_same_shape(const FpMatrix& o) const {
  if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_shape(o);
  FpMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fp_add(a_[k], o.a_[k], p_);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  check_same_shape(o);
  FpMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = fp_sub(a_[k], o.a_[k], p_);
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  FpMatrix r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t aik = a_[i * cols_ + k];
      if (!aik) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.a_[i * o.cols_ + j] =
            static_cast<Fp>((r.a_[i * o.cols_ + j] + aik * o.a_[k * o.cols_ + j]) % p_);
    }
  return r;
}

FpMatrix FpMatrix::scaled(Fp c) const {
  FpMatrix r = *this;
  for (auto& v : r.a_) v = fp_mul(v, c, p_);
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
  return r;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  if (!is_square()) throw std::invalid_argument("pow requires a square matrix");
  FpMatrix r = identity(p_, rows_), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {

// Gauss-Jordan to reduced row echelon form, in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(std::vector<Fp>& a, std::size_t rows, std::size_t cols,
                                      std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c]) { piv = i; break; }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    Fp inv = fp_inv(a[r * cols + c], p);
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = fp_mul(a[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Fp f = a[i * cols + c];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[i * cols + j] = fp_sub(a[i * cols + j], fp_mul(f, a[r * cols + j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FpMatrix FpMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse requires a square matrix");
  std::size_t n = rows_;
  std::vector<Fp> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = a_[i * n + j];
    aug[i * 2 * n + n + i] = 1;
  }
  auto piv = rref_inplace(aug, n, 2 * n, p_);
  if (piv.size() != n || piv.back() >= n)
    throw SingularMatrixError("matrix is singular over GF(" + std::to_string(p_) + ")");
  FpMatrix r(p_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.a_[i * n + j] = aug[i * 2 * n + n + j];
  return r;
}

bool FpMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Fp v) { return v == 0; });
}

bool FpMatrix::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(p_, rows_);
}

bool FpMatrix::is_invertible() const { return is_square() && rank() == rows_; }

std::size_t FpMatrix::rank() const {
  std::vector<Fp> a = a_;
  return rref_inplace(a, rows_, cols_, p_).size();
}

FpMatrix FpMatrix::wedge_square() const {
  if (!is_square()) throw std::invalid_argument("wedge_square requires a square matrix");
  auto pairs = wedge_pairs(rows_);
  std::size_t w = pairs.size();
  FpMatrix r(p_, w, w);
  for (std::size_t a = 0; a < w; ++a) {
    auto [i, j] = pairs[a];
    for (std::size_t b = 0; b < w; ++b) {
      auto [k, l] = pairs[b];
      // 2x2 minor: (e_i ^ e_j) * (M ^ M) expanded on e_k ^ e_l
      Fp v = fp_sub(fp_mul(at(i, k), at(j, l), p_), fp_mul(at(i, l), at(j, k), p_), p_);
      r.a_[a * w + b] = v;
    }
  }
  return r;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "] mod " << p_;
  return os.str();
}

FpVec vec_mat(const FpVec& v, const FpMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat dimension mismatch");
  FpVec r(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t vi = v[i];
    if (!vi) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      r[j] = static_cast<Fp>((r[j] + vi * m.at(i, j)) % m.modulus());
  }
  return r;
}

Fp vec_dot(const FpVec& a, const FpVec& b, std::uint32_t p) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot dimension mismatch");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::uint64_t>(a[i]) * b[i] % p;
  return static_cast<Fp>(s % p);
}

FpVec vec_add(const FpVec& a, const FpVec& b, std::uint32_t p) {
  FpVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = fp_add(r[i], b[i], p);
  return r;
}

FpVec vec_scaled(const FpVec& a, Fp c, std::uint32_t p) {
  FpVec r(a);
  for (auto& v : r) v = fp_mul(v, c, p);
  return r;
}

bool vec_is_zero(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : p_(p), ambient_(ambient) {
  require_odd_prime(p);
}

Subspace Subspace::from_rows(std::uint32_t p, std::size_t ambient,
                             const std::vector<FpVec>& rows) {
  Subspace s(p, ambient);
  if (rows.empty()) return s;
  std::vector<Fp> a;
  a.reserve(rows.size() * ambient);
  for (const auto& r : rows) {
    if (r.size() != ambient) throw std::invalid_argument("row has wrong ambient dimension");
    for (Fp v : r) a.push_back(v % p);
  }
  auto pivots = rref_inplace(a, rows.size(), ambient, p);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    s.basis_.emplace_back(a.begin() + i * ambient, a.begin() + (i + 1) * ambient);
  s.pivots_ = pivots;
  return s;
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    FpVec e(ambient, 0);
    e[i] = 1;
    rows.push_back(e);
  }
  return from_rows(p, ambient, rows);
}

bool Subspace::contains(const FpVec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.basis_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return p_ == o.p_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::optional<FpVec> Subspace::coordinates(const FpVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("wrong ambient dimension");
  FpVec residue = v;
  for (auto& x : residue) x %= p_;
  FpVec coeffs(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Fp c = residue[pivots_[i]];
    if (!c) continue;
    coeffs[i] = c;
    for (std::size_t j = 0; j < ambient_; ++j)
      residue[j] = fp_sub(residue[j], fp_mul(c, basis_[i][j], p_), p_);
  }
  if (!vec_is_zero(residue)) return std::nullopt;
  return coeffs;
}

FpVec Subspace::element(const FpVec& coeffs) const {
  if (coeffs.size() != basis_.size()) throw std::invalid_argument("wrong coefficient count");
  FpVec r(ambient_, 0);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      r[j] = fp_add(r[j], fp_mul(coeffs[i] % p_, basis_[i][j], p_), p_);
  return r;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (p_ != other.p_ || ambient_ != other.ambient_)
    throw std::invalid_argument("subspace mismatch");
  std::vector<FpVec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return from_rows(p_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (p_ != other.p_ || ambient_ != other.ambient_)
    throw std::invalid_argument("subspace mismatch");
  // Zassenhaus: row reduce [A|A ; B|0]; rows with zero left half carry
  // the intersection in the right half.
  std::size_t da = basis_.size(), db = other.basis_.size();
  if (da == 0 || db == 0) return Subspace(p_, ambient_);
  std::size_t w = 2 * ambient_;
  std::vector<Fp> a((da + db) * w, 0);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      a[i * w + j] = a[i * w + ambient_ + j] = basis_[i][j];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < ambient_; ++j) a[(da + i) * w + j] = other.basis_[i][j];
  rref_inplace(a, da + db, w, p_);
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < da + db; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < ambient_ && left_zero; ++j) left_zero = (a[i * w + j] == 0);
    if (!left_zero) continue;
    FpVec right(a.begin() + i * w + ambient_, a.begin() + (i + 1) * w);
    if (!vec_is_zero(right)) rows.push_back(right);
  }
  return from_rows(p_, ambient_, rows);
}

std::vector<FpVec> Subspace::complement_in(const Subspace& larger) const {
  if (!larger.contains(*this))
    throw std::invalid_argument("complement_in: subspace is not contained in the larger one");
  std::vector<FpVec> complement;
  std::vector<FpVec> span = basis_;
  Subspace current = *this;
  for (const auto& v : larger.basis_) {
    if (current.contains(v)) continue;
    complement.push_back(v);
    span.push_back(v);
    current = from_rows(p_, ambient_, span);
  }
  return complement;
}

Subspace kernel(const FpMatrix& m) {
  // Left kernel: x*m = 0  <=>  m^T x^T = 0; read solutions off the rref
  // of m^T using free columns.
  FpMatrix mt = m.transpose();
  std::size_t rows = mt.rows(), cols = mt.cols();
  std::vector<Fp> a = mt.flatten();
  auto pivots = rref_inplace(a, rows, cols, m.modulus());
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = fp_neg(a[i * cols + free], m.modulus());
    basis.push_back(v);
  }
  return Subspace::from_rows(m.modulus(), cols, basis);
}

Subspace image(const FpMatrix& m) {
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace::from_rows(m.modulus(), m.cols(), rows);
}

std::optional<FpVec> solve_left(const FpMatrix& m, const FpVec& b) {
  // x*m = b: solve m^T x^T = b^T by reducing the augmented system.
  if (b.size() != m.cols()) throw std::invalid_argument("solve_left dimension mismatch");
  FpMatrix mt = m.transpose();
  std::size_t rows = mt.rows(), cols = mt.cols();
  std::uint32_t p = m.modulus();
  std::vector<Fp> a(rows * (cols + 1), 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * (cols + 1) + j] = mt.at(i, j);
    a[i * (cols + 1) + cols] = b[i] % p;
  }
  auto pivots = rref_inplace(a, rows, cols + 1, p);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  FpVec x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i * (cols + 1) + cols];
  return x;
}

}  // namespace hopfext
