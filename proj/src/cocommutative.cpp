#include "hopfext/cocommutative.hpp"

#include <algorithm>
#include <set>

namespace hopfext {

namespace {

Subspace fixed_points(const CpModule& m) {
  return kernel(m.T() - FpMatrix::identity(m.p(), m.n()));
}

Subspace norm_image(const CpModule& m) { return image(norm_operator(m.T(), m.p())); }

GroupTable build_table(const CpModule& m, const FpVec& a) {
  std::uint32_t p = m.p();
  GroupIndexer idx(p, m.n());
  std::size_t gcount = idx.count();
  std::uint32_t order = static_cast<std::uint32_t>(gcount * p);
  std::size_t a_idx = idx.encode(a);
  // powers of T^{-1} acting on indices
  FpMatrix Tinv = m.T().inverse();
  std::vector<std::vector<std::uint32_t>> conj(p);
  FpMatrix power = FpMatrix::identity(p, m.n());
  for (std::uint32_t i = 0; i < p; ++i) {
    conj[i] = idx.action_table(power);
    power = power * Tinv;
  }
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(order) * order);
  for (std::size_t g = 0; g < gcount; ++g)
    for (std::uint32_t i = 0; i < p; ++i)
      for (std::size_t h = 0; h < gcount; ++h)
        for (std::uint32_t j = 0; j < p; ++j) {
          // (g x^i)(h x^j) = (g + h T^{-i} + [i+j >= p] a) x^{(i+j) mod p}
          std::size_t part = idx.add(g, conj[i][h]);
          if (i + j >= p) part = idx.add(part, a_idx);
          std::uint32_t u = static_cast<std::uint32_t>(g * p + i);
          std::uint32_t v = static_cast<std::uint32_t>(h * p + j);
          mul[static_cast<std::size_t>(u) * order + v] =
              static_cast<std::uint32_t>(part * p + (i + j) % p);
        }
  return GroupTable(order, std::move(mul));
}

}  // namespace

ExtGroup::ExtGroup(CpModule m, FpVec a) : module_(std::move(m)), a_(std::move(a)) {
  if (a_.size() != module_.n()) throw std::invalid_argument("distinguished element has wrong size");
  for (auto& x : a_) x %= module_.p();
  if (!fixed_points(module_).contains(a_))
    throw std::invalid_argument("distinguished element must be a fixed point");
  table_ = build_table(module_, a_);
}

bool ExtGroup::class_is_trivial() const { return norm_image(module_).contains(a_); }

std::vector<std::size_t> ExtGroup::lower_central_dims() const {
  std::vector<std::size_t> dims;
  auto sizes = table_.lower_central_sizes();
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    std::size_t d = 0;
    std::uint32_t s = sizes[i];
    while (s > 1) {
      s /= p();
      ++d;
    }
    dims.push_back(d);
  }
  return dims;
}

std::vector<FpVec> fixed_class_representatives(const CpModule& m) {
  Subspace fix = fixed_points(m);
  Subspace nim = norm_image(m);
  Subspace complement = Subspace::from_rows(m.p(), m.n(), nim.complement_in(fix));
  GroupIndexer coeffs(m.p(), complement.dim());
  std::vector<FpVec> reps;
  for (std::size_t t = 0; t < coeffs.count(); ++t)
    reps.push_back(complement.element(coeffs.decode(t)));
  return reps;
}

namespace {

// orbit of a coset of the norm image inside the fixed points, under the
// automorphism group of the module, as a set of coset indices
std::set<std::size_t> coset_orbit(const CpModule& m, const FpVec& start) {
  Subspace fix = fixed_points(m);
  Subspace nim = norm_image(m);
  Subspace complement = Subspace::from_rows(m.p(), m.n(), nim.complement_in(fix));
  GroupIndexer coeffs(m.p(), complement.dim());

  auto coset_index = [&](const FpVec& v) -> std::size_t {
    // v = coords * complement + nu, nu in the norm image
    std::vector<FpVec> rows = complement.basis();
    for (const auto& r : nim.basis()) rows.push_back(r);
    if (rows.empty()) return 0;
    auto sol = solve_left(FpMatrix::from_rows(m.p(), rows), v);
    if (!sol) throw std::logic_error("fixed point not covered by complement + norm image");
    return coeffs.encode(FpVec(sol->begin(), sol->begin() + complement.dim()));
  };

  SymmetryGroup aut = SymmetryGroup::of_module(m);
  std::set<std::size_t> orbit{coset_index(start)};
  std::vector<FpVec> queue{complement.element(coeffs.decode(*orbit.begin()))};
  while (!queue.empty()) {
    FpVec cur = queue.back();
    queue.pop_back();
    for (const auto& F : aut.generators()) {
      FpVec img = vec_mat(cur, F);
      std::size_t ci = coset_index(img);
      if (orbit.insert(ci).second) queue.push_back(complement.element(coeffs.decode(ci)));
    }
  }
  return orbit;
}

}  // namespace

IsoCertificate ext_groups_isomorphic(const ExtGroup& a, const ExtGroup& b) {
  if (a.p() != b.p() || a.n() != b.n())
    throw std::invalid_argument("extension groups have different orders");
  if (!(a.module().block_profile() == b.module().block_profile()))
    return {false, "block profiles differ: " + a.module().block_profile().to_string() + " vs " +
                       b.module().block_profile().to_string()};
  bool ta = a.class_is_trivial(), tb = b.class_is_trivial();
  if (ta != tb) return {false, "one class is split, the other is not"};
  if (ta) return {true, "equal profiles, both split"};
  // transport a's class through an intertwiner and compare automorphism
  // orbits of the cosets on b's side
  auto lambda = find_invertible_intertwiner(a.module(), b.module());
  if (!lambda) return {false, "no invertible intertwiner"};  // unreachable: profiles equal
  FpVec transported = vec_mat(a.distinguished(), *lambda);
  auto orbit = coset_orbit(b.module(), transported);
  Subspace fix = kernel(b.module().T() - FpMatrix::identity(b.p(), b.n()));
  Subspace nim = image(norm_operator(b.module().T(), b.p()));
  Subspace complement = Subspace::from_rows(b.p(), b.n(), nim.complement_in(fix));
  GroupIndexer coeffs(b.p(), complement.dim());
  // coset index of b's distinguished element
  std::vector<FpVec> rows = complement.basis();
  for (const auto& r : nim.basis()) rows.push_back(r);
  auto sol = solve_left(FpMatrix::from_rows(b.p(), rows), b.distinguished());
  if (!sol) throw std::logic_error("distinguished element not in the fixed subspace");
  std::size_t target = coeffs.encode(FpVec(sol->begin(), sol->begin() + complement.dim()));
  if (orbit.count(target))
    return {true, "classes lie in one automorphism orbit of fixed points mod norms"};
  return {false, "classes lie in different automorphism orbits"};
}

}  // namespace hopfext
