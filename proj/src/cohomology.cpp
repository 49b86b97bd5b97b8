#include "hopfext/cohomology.hpp"

#include <algorithm>

namespace hopfext {

GroupIndexer::GroupIndexer(std::uint32_t p, std::size_t n) : p_(p), n_(n) {
  require_odd_prime(p);
  count_ = 1;
  for (std::size_t i = 0; i < n; ++i) count_ *= p;
}

FpVec GroupIndexer::decode(std::size_t idx) const {
  FpVec a(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    a[i] = static_cast<Fp>(idx % p_);
    idx /= p_;
  }
  return a;
}

std::size_t GroupIndexer::encode(const FpVec& a) const {
  std::size_t idx = 0;
  for (std::size_t i = n_; i-- > 0;) idx = idx * p_ + a[i] % p_;
  return idx;
}

std::size_t GroupIndexer::add(std::size_t i, std::size_t j) const {
  std::size_t out = 0, mult = 1;
  for (std::size_t d = 0; d < n_; ++d) {
    out += (i % p_ + j % p_) % p_ * mult;
    i /= p_;
    j /= p_;
    mult *= p_;
  }
  return out;
}

std::vector<std::uint32_t> GroupIndexer::action_table(const FpMatrix& M) const {
  std::vector<std::uint32_t> t(count_);
  for (std::size_t idx = 0; idx < count_; ++idx)
    t[idx] = static_cast<std::uint32_t>(encode(vec_mat(decode(idx), M)));
  return t;
}

PairTable::PairTable(std::uint32_t p_, std::size_t n_, std::uint32_t modulus_)
    : p(p_), n(n_), modulus(modulus_) {
  pts = 1;
  for (std::size_t i = 0; i < n; ++i) pts *= p;
  v.assign(pts * pts, 0);
}

std::uint32_t PairTable::at(std::size_t a, std::size_t b) const { return v[a * pts + b]; }
void PairTable::set(std::size_t a, std::size_t b, std::uint32_t val) {
  v[a * pts + b] = val % modulus;
}

bool PairTable::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool PairTable::is_symmetric() const {
  std::size_t c = points();
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b)
      if (v[a * c + b] != v[b * c + a]) return false;
  return true;
}

bool PairTable::is_normalized() const {
  std::size_t c = points();
  for (std::size_t a = 0; a < c; ++a)
    if (v[a * c] != 0 || v[a] != 0) return false;
  return true;
}

PairTable PairTable::plus(const PairTable& o) const {
  if (p != o.p || n != o.n || modulus != o.modulus)
    throw std::invalid_argument("pair table mismatch");
  PairTable r = *this;
  for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = (v[i] + o.v[i]) % modulus;
  return r;
}

PairTable PairTable::minus(const PairTable& o) const {
  if (p != o.p || n != o.n || modulus != o.modulus)
    throw std::invalid_argument("pair table mismatch");
  PairTable r = *this;
  for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = (v[i] + modulus - o.v[i]) % modulus;
  return r;
}

PairTable PairTable::scaled(std::uint32_t c) const {
  PairTable r = *this;
  for (auto& x : r.v)
    x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * c % modulus);
  return r;
}

PairTable PairTable::embedded_times_p() const {
  if (modulus != p) throw std::invalid_argument("embedding expects Z_p values");
  PairTable r(p, n, p * p);
  for (std::size_t i = 0; i < v.size(); ++i) r.v[i] = v[i] * p;
  return r;
}

bool is_two_cocycle(const PairTable& z) {
  GroupIndexer idx(z.p, z.n);
  std::size_t c = idx.count();
  std::vector<std::uint32_t> add(c * c);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) add[a * c + b] = static_cast<std::uint32_t>(idx.add(a, b));
  std::uint64_t total = static_cast<std::uint64_t>(c) * c * c;
  std::uint64_t limit = 20'000'000;
  auto check = [&](std::size_t a, std::size_t b, std::size_t g) {
    std::uint32_t lhs = (z.at(a, add[b * c + g]) + z.at(b, g)) % z.modulus;
    std::uint32_t rhs = (z.at(add[a * c + b], g) + z.at(a, b)) % z.modulus;
    return lhs == rhs;
  };
  if (total <= limit) {
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = 0; b < c; ++b)
        for (std::size_t g = 0; g < c; ++g)
          if (!check(a, b, g)) return false;
    return true;
  }
  std::uint64_t stride = total / limit + 1;
  for (std::uint64_t t = 0; t < total; t += stride) {
    std::size_t a = t % c, b = (t / c) % c, g = (t / c / c) % c;
    if (!check(a, b, g)) return false;
  }
  return true;
}

AltForm::AltForm(FpMatrix B) : B_(std::move(B)) {
  if (!B_.is_square()) throw std::invalid_argument("form matrix must be square");
  std::uint32_t p = B_.modulus();
  for (std::size_t i = 0; i < B_.rows(); ++i) {
    if (B_.at(i, i) != 0) throw std::invalid_argument("alternating form needs zero diagonal");
    for (std::size_t j = 0; j < B_.cols(); ++j)
      if (B_.at(i, j) != fp_neg(B_.at(j, i), p))
        throw std::invalid_argument("alternating form must be skew symmetric");
  }
}

AltForm AltForm::zero(std::uint32_t p, std::size_t n) { return AltForm(FpMatrix(p, n, n)); }

AltForm AltForm::from_wedge_coords(std::uint32_t p, std::size_t n, const FpVec& coords) {
  auto pairs = wedge_pairs(n);
  if (coords.size() != pairs.size()) throw std::invalid_argument("wrong wedge coordinate count");
  FpMatrix B(p, n, n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    B.set(i, j, coords[k] % p);
    B.set(j, i, fp_neg(coords[k] % p, p));
  }
  return AltForm(std::move(B));
}

FpVec AltForm::wedge_coords() const {
  auto pairs = wedge_pairs(n());
  FpVec c(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) c[k] = B_.at(pairs[k].first, pairs[k].second);
  return c;
}

Fp AltForm::value(const FpVec& a, const FpVec& b) const {
  return vec_dot(vec_mat(a, B_), b, p());
}

FpMatrix norm_operator(const FpMatrix& S, std::uint32_t l) {
  if (!S.is_square()) throw std::invalid_argument("norm operator needs a square matrix");
  std::uint32_t p = S.modulus();
  if (l < 1 || l > p) throw std::invalid_argument("norm operator exponent out of range");
  if (!S.pow(p).is_identity()) throw std::invalid_argument("operator must satisfy S^p = I");
  FpMatrix acc(p, S.rows(), S.rows());
  FpMatrix power = FpMatrix::identity(p, S.rows());
  for (std::uint32_t i = 0; i < l; ++i) {
    acc = acc + power;
    power = power * S;
  }
  return acc;
}

AltForm antisymmetrize(const PairTable& z) {
  if (z.modulus != z.p) throw std::invalid_argument("antisymmetrize expects Z_p values");
  if (!is_two_cocycle(z)) throw std::invalid_argument("table violates the 2-cocycle identity");
  GroupIndexer idx(z.p, z.n);
  FpMatrix B(z.p, z.n, z.n);
  for (std::size_t i = 0; i < z.n; ++i)
    for (std::size_t j = 0; j < z.n; ++j) {
      FpVec ei(z.n, 0), ej(z.n, 0);
      ei[i] = 1;
      ej[j] = 1;
      std::size_t a = idx.encode(ei), b = idx.encode(ej);
      B.set(i, j, fp_sub(z.at(a, b), z.at(b, a), z.p));
    }
  AltForm beta(B);
  // the antisymmetrization of a cocycle is bimultiplicative; verify the
  // generator-pair reading reproduces every value
  std::size_t c = idx.count();
  for (std::size_t a = 0; a < c; ++a) {
    FpVec va = idx.decode(a);
    for (std::size_t b = 0; b < c; ++b) {
      Fp got = fp_sub(z.at(a, b), z.at(b, a), z.p);
      if (got != beta.value(va, idx.decode(b)))
        throw std::invalid_argument("antisymmetrization is not bilinear");
    }
  }
  return beta;
}

ClassSpace::ClassSpace(CpModule m)
    : module_(std::move(m)),
      idx_(module_.p(), module_.n()),
      dual_T_(module_.dual_action()),
      wedge_T_(dual_T_.wedge_square()) {
  std::uint32_t p = module_.p();
  std::size_t n = module_.n();
  fixed_ = kernel(dual_T_ - FpMatrix::identity(p, n));
  norm_im_ = image(norm_operator(dual_T_, p));
  if (!fixed_.contains(norm_im_))
    throw std::logic_error("norm image must consist of fixed characters");
  chi_basis_ = Subspace::from_rows(p, n, norm_im_.complement_in(fixed_));
  alt_basis_ = kernel(norm_operator(wedge_T_, p));
  act_.reserve(p);
  for (std::uint32_t i = 0; i < p; ++i) act_.push_back(idx_.action_table(module_.T_pow(i)));
}

const std::vector<std::uint32_t>& ClassSpace::group_action(std::uint32_t i) const {
  return act_[i % p()];
}

FpVec ClassSpace::character_of(const FpVec& chi_coords) const {
  return chi_basis_.element(chi_coords);
}

AltForm ClassSpace::form_of(const FpVec& alt_coords) const {
  return AltForm::from_wedge_coords(p(), n(), alt_basis_.element(alt_coords));
}

FpVec ClassSpace::reduce_character(const FpVec& chi) const {
  // chi = coords * chi_basis + nu with nu in the norm image
  if (!fixed_.contains(chi)) throw std::invalid_argument("character is not fixed by the action");
  std::vector<FpVec> rows = chi_basis_.basis();
  for (const auto& r : norm_im_.basis()) rows.push_back(r);
  FpMatrix stacked = rows.empty() ? FpMatrix(p(), 0, n()) : FpMatrix::from_rows(p(), rows);
  auto sol = solve_left(stacked, chi);
  if (!sol) throw std::logic_error("fixed character outside complement + norm image");
  return FpVec(sol->begin(), sol->begin() + chi_basis_.dim());
}

FpVec ClassSpace::reduce_form(const AltForm& beta) const {
  auto coords = alt_basis_.coordinates(beta.wedge_coords());
  if (!coords) throw std::invalid_argument("form is not killed by the norm");
  return *coords;
}

PairTable act_on_table(const ClassSpace& space, const PairTable& z, std::uint32_t i) {
  const auto& act = space.group_action(i);
  PairTable r(z.p, z.n, z.modulus);
  std::size_t c = z.points();
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) r.v[a * c + b] = z.at(act[a], act[b]);
  return r;
}

PairTable norm_on_table(const ClassSpace& space, const PairTable& z, std::uint32_t l) {
  if (l < 1 || l > space.p()) throw std::invalid_argument("norm exponent out of range");
  PairTable acc(z.p, z.n, z.modulus);
  for (std::uint32_t j = 0; j < l; ++j) acc = acc.plus(act_on_table(space, z, j));
  return acc;
}

PairTable lift_beta_to_cocycle(const ClassSpace& space, const AltForm& beta) {
  space.reduce_form(beta);  // throws when beta is not norm-killed
  std::uint32_t p = space.p();
  Fp half = fp_inv(2, p);
  const GroupIndexer& idx = space.indexer();
  PairTable s(p, space.n(), p);
  std::size_t c = idx.count();
  for (std::size_t a = 0; a < c; ++a) {
    FpVec va = idx.decode(a);
    FpVec rowB = vec_mat(va, beta.matrix());
    for (std::size_t b = 0; b < c; ++b)
      s.v[a * c + b] = fp_mul(half, vec_dot(rowB, idx.decode(b), p), p);
  }
  return s;
}

PairTable lift_beta_upper_triangular(const AltForm& beta) {
  std::uint32_t p = beta.p();
  std::size_t n = beta.n();
  FpMatrix upper(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.set(i, j, beta.matrix().at(i, j));
  GroupIndexer idx(p, n);
  PairTable s(p, n, p);
  std::size_t c = idx.count();
  for (std::size_t a = 0; a < c; ++a) {
    FpVec rowU = vec_mat(idx.decode(a), upper);
    for (std::size_t b = 0; b < c; ++b) s.v[a * c + b] = vec_dot(rowU, idx.decode(b), p);
  }
  return s;
}

PairTable coboundary_of_function(const ClassSpace& space, const FunctionTable& f) {
  const GroupIndexer& idx = space.indexer();
  std::uint32_t m = space.p() * space.p();
  if (f.size() != idx.count()) throw std::invalid_argument("function table has wrong size");
  PairTable r(space.p(), space.n(), m);
  std::size_t c = idx.count();
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      r.v[a * c + b] = (f[a] + f[b] + m - f[idx.add(a, b)] % m) % m;
  return r;
}

FunctionTable norm_on_function(const ClassSpace& space, const FunctionTable& f) {
  std::uint32_t m = space.p() * space.p();
  std::size_t c = space.indexer().count();
  FunctionTable r(c, 0);
  for (std::uint32_t i = 0; i < space.p(); ++i) {
    const auto& act = space.group_action(i);
    for (std::size_t a = 0; a < c; ++a) r[a] = (r[a] + f[act[a]]) % m;
  }
  return r;
}

FunctionTable lift_chi_to_function(const ClassSpace& space, const FpVec& chi) {
  if (!space.dual_fixed().contains(chi))
    throw std::invalid_argument("character is not fixed by the action");
  std::uint32_t p = space.p();
  const GroupIndexer& idx = space.indexer();
  const auto& act = space.group_action(1);
  std::size_t c = idx.count();
  FunctionTable f(c, 0);
  std::vector<bool> seen(c, false);
  for (std::size_t a = 0; a < c; ++a) {
    if (seen[a]) continue;
    Fp chival = vec_dot(chi, idx.decode(a), p);
    if (act[a] == a) {
      // fixed point: a p-th root of chi(a)
      seen[a] = true;
      f[a] = chival;
    } else {
      // free orbit: put the whole character value on the representative
      f[a] = chival * p;
      std::size_t g = a;
      while (!seen[g]) {
        seen[g] = true;
        g = act[g];
      }
    }
  }
  return f;
}

std::vector<PairTable> tau_components(const ClassSpace& space, const PairTable& s) {
  if (!norm_on_table(space, s, space.p()).is_zero())
    throw std::invalid_argument("cocycle is not admissible (norm does not vanish)");
  std::vector<PairTable> tau;
  tau.emplace_back(s.p, s.n, s.modulus);  // tau(1) = 0
  PairTable acc = s;
  for (std::uint32_t i = 1; i < space.p(); ++i) {
    tau.push_back(acc);
    acc = acc.plus(act_on_table(space, s, i));
  }
  return tau;
}

PairTable assemble_point_cocycle(const ClassSpace& space, const ClassPoint& pt) {
  if (pt.chi.size() != space.chi_dim() || pt.beta.size() != space.alt_dim())
    throw std::invalid_argument("point does not match the space dimensions");
  PairTable beta_part = lift_beta_to_cocycle(space, space.form_of(pt.beta)).embedded_times_p();
  FunctionTable f = lift_chi_to_function(space, space.character_of(pt.chi));
  return beta_part.plus(coboundary_of_function(space, f));
}

ClassPoint recover_point(const ClassSpace& space, const PairTable& s) {
  std::uint32_t p = space.p();
  if (s.modulus != p * p || s.n != space.n())
    throw std::invalid_argument("expected a Z_{p^2}-valued table on the module's group");
  const GroupIndexer& idx = space.indexer();

  // beta from the antisymmetrization (values are multiples of p)
  FpMatrix B(p, space.n(), space.n());
  for (std::size_t i = 0; i < space.n(); ++i)
    for (std::size_t j = 0; j < space.n(); ++j) {
      FpVec ei(space.n(), 0), ej(space.n(), 0);
      ei[i] = 1;
      ej[j] = 1;
      std::uint32_t d =
          (s.at(idx.encode(ei), idx.encode(ej)) + p * p - s.at(idx.encode(ej), idx.encode(ei))) %
          (p * p);
      if (d % p != 0) throw std::invalid_argument("antisymmetrization is not p-th root valued");
      B.set(i, j, d / p);
    }
  AltForm beta(B);
  FpVec beta_coords = space.reduce_form(beta);

  // remove the alternating part; the remainder is a coboundary
  PairTable b = s.minus(lift_beta_to_cocycle(space, beta).embedded_times_p());

  // chi-bar is determined by norm sums of b over the kernel of the
  // group-side norm, where the norm image of the dual vanishes
  Subspace K = kernel(norm_operator(space.module().T(), p));
  std::vector<FpVec> eqs;
  FpVec rhs;
  for (const auto& a : K.basis()) {
    std::size_t sigma = idx.encode(a);  // partial sum a + a*T + ...
    std::uint64_t val = 0;
    for (std::uint32_t j = 1; j < p; ++j) {
      std::size_t aj = idx.encode(vec_mat(a, space.module().T_pow(j)));
      val += b.at(sigma, aj);
      sigma = idx.add(sigma, aj);
    }
    if (sigma != 0) throw std::logic_error("norm of a norm-kernel element is nonzero");
    val %= p * p;
    if (val % p != 0) throw std::invalid_argument("chi recovery: sum is not an embedded value");
    // chi(a) for each kernel basis vector
    eqs.push_back(a);
    rhs.push_back(static_cast<Fp>(val / p));
  }
  FpVec chi_coords(space.chi_dim(), 0);
  if (space.chi_dim() > 0) {
    // solve sum_k c_k (basis_k . a_j) = chi(a_j)
    FpMatrix R(p, space.chi_dim(), eqs.size());
    for (std::size_t k = 0; k < space.chi_dim(); ++k)
      for (std::size_t j = 0; j < eqs.size(); ++j)
        R.set(k, j, vec_dot(space.chi_basis().basis()[k], eqs[j], p));
    auto sol = solve_left(R, rhs);
    if (!sol) throw std::invalid_argument("chi recovery: inconsistent restriction values");
    chi_coords = *sol;
  }
  return ClassPoint{chi_coords, beta_coords};
}

}  // namespace hopfext
