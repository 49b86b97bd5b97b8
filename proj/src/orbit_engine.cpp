#include "hopfext/orbit_engine.hpp"

#include <algorithm>
#include <numeric>

namespace hopfext {

std::uint64_t gl_order(std::uint32_t p, std::size_t m) {
  std::uint64_t order = 1, pm = 1;
  for (std::size_t i = 0; i < m; ++i) pm *= p;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < m; ++i) {
    order *= pm - pi;
    pi *= p;
  }
  return order;
}

Fp primitive_root(std::uint32_t p) {
  for (Fp g = 2; g < p; ++g) {
    Fp x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = fp_mul(x, g, p);
      ++ord;
    }
    if (ord == p - 1) return g;
  }
  return 1;  // p = 3 handled above; unreachable for odd primes
}

namespace {

// Offsets of the Jordan chains in the canonical (ascending block size)
// layout: chain (l, i) occupies rows offset .. offset+l-1.
std::vector<std::vector<std::size_t>> chain_offsets(const BlockProfile& prof) {
  std::vector<std::vector<std::size_t>> off(prof.m.size());
  std::size_t pos = 0;
  for (std::size_t l = 1; l <= prof.m.size(); ++l)
    for (std::uint32_t i = 0; i < prof.m[l - 1]; ++i) {
      off[l - 1].push_back(pos);
      pos += l;
    }
  return off;
}

}  // namespace

SymmetryGroup SymmetryGroup::of_module(const CpModule& m) {
  SymmetryGroup g(m);
  std::uint32_t p = m.p();
  std::size_t n = m.n();
  g.cent_ = intertwiner_space(m, m);
  std::size_t d = g.cent_.dim();

  BlockProfile prof = m.block_profile();
  auto offsets = chain_offsets(prof);

  // |A| = p^(dim radical) * prod_l |GL(m_l, p)|
  std::size_t sq = 0;
  std::uint64_t order = 1;
  for (std::size_t l = 1; l <= prof.m.size(); ++l) {
    sq += static_cast<std::size_t>(prof.m[l - 1]) * prof.m[l - 1];
    order *= gl_order(p, prof.m[l - 1]);
  }
  if (sq > d) throw std::logic_error("centralizer dimension below the semisimple part");
  for (std::size_t i = 0; i < d - sq; ++i) order *= p;
  g.aut_order_ = order;

  // Generators, assembled in the decomposition basis and conjugated back:
  // per block size the head-permuting transvections and one scaling, plus
  // one-parameter subgroups 1 + b over a filtration-adapted basis of the
  // radical (centralizer elements with vanishing head-to-head part).
  FpMatrix U = m.decompose_basis();
  FpMatrix Uinv = U.inverse();
  Fp zeta = primitive_root(p);
  auto push_raw = [&](const FpMatrix& F) {
    if (!(m.T() * F == F * m.T()) || !F.is_invertible())
      throw std::logic_error("generator construction broke the centralizer condition");
    g.gens_.push_back(F);
  };
  auto push_gen = [&](const FpMatrix& ks) { push_raw(Uinv * ks * U); };
  for (std::size_t l = 1; l <= prof.m.size(); ++l) {
    std::uint32_t ml = prof.m[l - 1];
    if (ml == 0) continue;
    FpMatrix scale = FpMatrix::identity(p, n);
    for (std::size_t r = 0; r < l; ++r) scale.set(offsets[l - 1][0] + r, offsets[l - 1][0] + r, zeta);
    push_gen(scale);
    for (std::uint32_t i = 0; i < ml; ++i)
      for (std::uint32_t j = 0; j < ml; ++j) {
        if (i == j) continue;
        FpMatrix tr = FpMatrix::identity(p, n);
        for (std::size_t r = 0; r < l; ++r)
          tr.set(offsets[l - 1][i] + r, offsets[l - 1][j] + r, 1);
        push_gen(tr);
      }
  }

  // head-to-head functionals cut out the radical
  {
    std::vector<FpVec> functionals;
    for (std::size_t l = 1; l <= prof.m.size(); ++l)
      for (std::uint32_t i = 0; i < prof.m[l - 1]; ++i)
        for (std::uint32_t j = 0; j < prof.m[l - 1]; ++j) {
          std::size_t a = offsets[l - 1][i], b = offsets[l - 1][j];
          // coefficient of X_{s,t} in (U X U^{-1})_{a,b}
          FpVec f(n * n);
          for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
              f[s * n + t] = fp_mul(U.at(a, s), Uinv.at(t, b), p);
          functionals.push_back(std::move(f));
        }
    FpMatrix B = FpMatrix::from_rows(p, g.cent_.basis());       // d x n^2
    FpMatrix Fn = FpMatrix::from_rows(p, functionals);          // sq x n^2
    Subspace gamma = kernel(B * Fn.transpose());                // coeffs with all heads zero
    std::vector<FpVec> jbasis;
    for (const auto& c : gamma.basis()) jbasis.push_back(g.cent_.element(c));
    Subspace J = Subspace::from_rows(p, n * n, jbasis);
    if (J.dim() != d - sq) throw std::logic_error("radical dimension mismatch");

    // powers of the radical, deepest first, for the adapted basis
    auto as_matrix = [&](const FpVec& flat) {
      FpMatrix X(p, n, n);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) X.set(s, t, flat[s * n + t]);
      return X;
    };
    std::vector<Subspace> powers{J};
    while (powers.back().dim() > 0) {
      std::vector<FpVec> prods;
      for (const auto& x : powers.back().basis())
        for (const auto& y : J.basis()) prods.push_back((as_matrix(x) * as_matrix(y)).flatten());
      powers.push_back(Subspace::from_rows(p, n * n, prods));
      if (powers.size() > n * n + 2) throw std::logic_error("radical is not nilpotent");
    }
    for (std::size_t k = powers.size() - 1; k-- > 0;) {
      Subspace deeper = powers[k + 1];
      for (const auto& b : deeper.complement_in(powers[k]))
        push_raw(FpMatrix::identity(p, n) + as_matrix(b));
    }
  }

  // twist intertwiners; for elementary abelian G every unit admits one
  for (std::uint32_t k = 1; k < p; ++k) {
    auto tw = twist_intertwiner(m, k);
    if (tw) g.twists_.push_back(std::move(*tw));
  }
  if (g.twists_.size() != p - 1)
    throw std::logic_error("twist group is smaller than the full unit group");
  return g;
}

std::vector<FpMatrix> SymmetryGroup::enumerate_elements(std::uint64_t cap) const {
  std::uint32_t p = module_.p();
  std::size_t n = module_.n(), d = cent_.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= p;
    if (total > cap)
      throw CapExceededError("centralizer space has " + std::to_string(d) +
                             " dimensions, enumeration exceeds the cap");
  }
  std::vector<FpMatrix> elements;
  GroupIndexer coeffs(p, d);
  for (std::size_t t = 0; t < coeffs.count(); ++t) {
    FpVec flat = cent_.element(coeffs.decode(t));
    FpMatrix F(p, n, n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t u = 0; u < n; ++u) F.set(s, u, flat[s * n + u]);
    if (F.is_invertible()) elements.push_back(std::move(F));
  }
  if (elements.size() != aut_order_)
    throw std::logic_error("enumerated automorphism count disagrees with the closed form");
  return elements;
}

std::vector<std::uint32_t> SymmetryGroup::twist_group() const {
  std::vector<std::uint32_t> ks;
  for (const auto& tw : twists_) ks.push_back(tw.k);
  return ks;
}

namespace {

FpMatrix restrict_rows(const ClassSpace& space, const Subspace& basis, const FpMatrix& op,
                       bool chi_side) {
  std::size_t d = basis.dim();
  FpMatrix out(space.p(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    FpVec img = vec_mat(basis.basis()[i], op);
    FpVec coords;
    if (chi_side) {
      coords = space.reduce_character(img);
    } else {
      auto c = basis.coordinates(img);
      if (!c) throw std::logic_error("induced map leaves the invariant subspace");
      coords = *c;
    }
    for (std::size_t j = 0; j < d; ++j) out.set(i, j, coords[j]);
  }
  if (!out.is_invertible()) throw std::logic_error("induced point action is not invertible");
  return out;
}

}  // namespace

PointAction point_action_of_aut(const ClassSpace& space, const FpMatrix& F) {
  if (!(space.module().T() * F == F * space.module().T()))
    throw std::invalid_argument("matrix does not commute with the action");
  FpMatrix D = F.inverse().transpose();
  return PointAction{restrict_rows(space, space.chi_basis(), D, true),
                     restrict_rows(space, space.alt_basis(), D.wedge_square(), false)};
}

PointAction point_action_of_omega(const ClassSpace& space, const Intertwiner& tw) {
  std::uint32_t p = space.p();
  if (!(space.module().T() * tw.lambda == tw.lambda * space.module().T_pow(tw.k)))
    throw std::invalid_argument("not an intertwiner for the module");
  std::uint32_t l = fp_inv(tw.k, p);
  FpMatrix lam_dual = tw.lambda.inverse().transpose();
  FpMatrix chi_op = norm_operator(space.dual_T(), l) * lam_dual;
  FpMatrix alt_op = norm_operator(space.wedge_T(), l) * lam_dual.wedge_square();
  return PointAction{restrict_rows(space, space.chi_basis(), chi_op, true),
                     restrict_rows(space, space.alt_basis(), alt_op, false)};
}

std::vector<PointAction> aut_point_actions(const ClassSpace& space, const SymmetryGroup& g) {
  std::vector<PointAction> acts;
  for (const auto& F : g.generators()) acts.push_back(point_action_of_aut(space, F));
  return acts;
}

std::vector<PointAction> gamma_point_actions(const ClassSpace& space, const SymmetryGroup& g) {
  std::vector<PointAction> acts = aut_point_actions(space, g);
  for (const auto& tw : g.twists())
    if (tw.k != 1) acts.push_back(point_action_of_omega(space, tw));
  return acts;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// big-endian digits so index order is lexicographic order
std::uint64_t encode_digits(const FpVec& v, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (Fp d : v) idx = idx * p + d % p;
  return idx;
}

FpVec decode_digits(std::uint64_t idx, std::uint32_t p, std::size_t len) {
  FpVec v(len);
  for (std::size_t i = len; i-- > 0;) {
    v[i] = static_cast<Fp>(idx % p);
    idx /= p;
  }
  return v;
}

std::vector<std::uint32_t> linear_perm(const FpMatrix& m, std::size_t dim, std::uint32_t p) {
  std::uint64_t count = pow_u64(p, dim);
  std::vector<std::uint32_t> perm(count);
  std::vector<bool> hit(count, false);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t img = encode_digits(vec_mat(decode_digits(i, p, dim), m), p);
    perm[i] = static_cast<std::uint32_t>(img);
    if (hit[img]) throw std::logic_error("point action is not a bijection");
    hit[img] = true;
  }
  return perm;
}

}  // namespace

std::uint64_t encode_point(const ClassSpace& space, const ClassPoint& pt) {
  std::uint64_t alt_count = pow_u64(space.p(), space.alt_dim());
  return encode_digits(pt.chi, space.p()) * alt_count + encode_digits(pt.beta, space.p());
}

ClassPoint decode_point(const ClassSpace& space, std::uint64_t idx) {
  std::uint64_t alt_count = pow_u64(space.p(), space.alt_dim());
  return ClassPoint{decode_digits(idx / alt_count, space.p(), space.chi_dim()),
                    decode_digits(idx % alt_count, space.p(), space.alt_dim())};
}

OrbitReport enumerate_orbits(const ClassSpace& space, const std::vector<PointAction>& gens,
                             OrbitSlice slice, std::uint64_t cap_points, bool keep_labels) {
  std::uint32_t p = space.p();
  std::uint64_t chi_count = pow_u64(p, space.chi_dim());
  std::uint64_t alt_count = pow_u64(p, space.alt_dim());
  std::uint64_t total = chi_count * alt_count;
  if (total > cap_points)
    throw CapExceededError("point count " + std::to_string(total) + " exceeds the cap");

  struct Perms {
    std::vector<std::uint32_t> chi, alt;
  };
  std::vector<Perms> perms;
  perms.reserve(gens.size());
  for (const auto& g : gens) {
    Perms pr{linear_perm(g.chi_map, space.chi_dim(), p), linear_perm(g.alt_map, space.alt_dim(), p)};
    // the cocommutative slice must be stable: linear actions fix alt = 0
    if (pr.alt[0] != 0) throw std::logic_error("action moves the beta = 0 slice");
    perms.push_back(std::move(pr));
  }

  OrbitReport report;
  std::vector<bool> visited(total, false);
  if (keep_labels) report.point_orbit.assign(total, 0);
  std::vector<std::uint64_t> stack;

  auto in_slice = [&](std::uint64_t idx) {
    std::uint64_t alt = idx % alt_count;
    switch (slice) {
      case OrbitSlice::Full: return true;
      case OrbitSlice::BetaZero: return alt == 0;
      case OrbitSlice::BetaNonzero: return alt != 0;
    }
    return true;
  };

  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start] || !in_slice(start)) continue;
    std::uint32_t orbit_id = static_cast<std::uint32_t>(report.representatives.size());
    bool start_beta_zero = start % alt_count == 0;
    std::uint64_t size = 0;
    visited[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      if (keep_labels) report.point_orbit[cur] = orbit_id;
      if ((cur % alt_count == 0) != start_beta_zero)
        throw std::logic_error("orbit crosses the cocommutative slice");
      std::uint64_t c = cur / alt_count, a = cur % alt_count;
      for (const auto& pr : perms) {
        std::uint64_t next = static_cast<std::uint64_t>(pr.chi[c]) * alt_count + pr.alt[a];
        if (!visited[next]) {
          visited[next] = true;
          stack.push_back(next);
        }
      }
    }
    report.representatives.push_back(start);
    report.orbit_sizes.push_back(size);
    report.total_points += size;
    if (start_beta_zero)
      ++report.orbit_count_beta_zero;
    else
      ++report.orbit_count_beta_nonzero;
  }
  return report;
}

ClassifyResult classify_module(const CpModule& m, std::uint64_t cap_points,
                               std::uint64_t cap_group) {
  ClassSpace space(m);
  SymmetryGroup group = SymmetryGroup::of_module(m);
  // below the enumeration cap, cross-check the closed-form order
  try {
    group.enumerate_elements(cap_group);
  } catch (const CapExceededError&) {
    // generator mode only; counts do not depend on it
  }
  ClassifyResult res;
  res.profile = m.block_profile();
  res.chi_dim = space.chi_dim();
  res.alt_dim = space.alt_dim();
  res.aut_order = group.aut_order();
  res.twist_group = group.twist_group();

  auto aut_acts = aut_point_actions(space, group);
  auto gamma_acts = gamma_point_actions(space, group);
  // cocommutative classes: automorphism orbits on the beta = 0 slice
  res.chi_slice = enumerate_orbits(space, aut_acts, OrbitSlice::BetaZero, cap_points);
  // noncocommutative classes: full-group orbits off that slice
  res.full_gamma = enumerate_orbits(space, gamma_acts, OrbitSlice::Full, cap_points);
  res.counts.cocommutative = res.chi_slice.orbit_count_beta_zero;
  res.counts.noncocommutative = res.full_gamma.orbit_count_beta_nonzero;
  res.counts.total = res.counts.cocommutative + res.counts.noncocommutative;
  return res;
}

IsoclassCount isoclass_count(std::uint32_t p, const BlockProfile& profile,
                             std::uint64_t cap_points, std::uint64_t cap_group) {
  if (profile.p != p) throw std::invalid_argument("profile modulus mismatch");
  return classify_module(CpModule::from_blocks(profile), cap_points, cap_group).counts;
}

}  // namespace hopfext
