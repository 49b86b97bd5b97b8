#include "hopfext/commutative.hpp"

#include <set>
#include <sstream>

namespace hopfext {

std::string OrbitLabel::to_string() const {
  std::ostringstream os;
  os << "(w=" << width << ", chi" << (chi_zero ? "=0" : "!=0");
  if (!chi_zero && width > 0) os << (rad_in_kernel ? ", rad in ker" : ", rad not in ker");
  os << ")";
  return os.str();
}

Subspace radical(const AltForm& beta) { return kernel(beta.matrix()); }

std::size_t form_width(const AltForm& beta) {
  std::size_t r = beta.matrix().rank();
  if (r % 2 != 0) throw std::logic_error("alternating form has odd rank");
  return r / 2;
}

OrbitLabel classify_pair(const FpVec& chi, const AltForm& beta) {
  OrbitLabel label;
  label.width = form_width(beta);
  label.chi_zero = vec_is_zero(chi);
  if (label.chi_zero || label.width == 0) {
    label.rad_in_kernel = true;  // canonical: the condition carries no information
    return label;
  }
  // ker(chi) as the left kernel of the column vector chi^T
  FpMatrix col(beta.p(), beta.n(), 1);
  for (std::size_t i = 0; i < beta.n(); ++i) col.set(i, 0, chi[i]);
  Subspace ker_chi = kernel(col);
  label.rad_in_kernel = ker_chi.contains(radical(beta));
  return label;
}

std::size_t commutative_isoclass_count(std::size_t n) { return (3 * n + 2) / 2; }

std::size_t count_labels_exhaustive(std::uint32_t p, std::size_t n) {
  GroupIndexer chi_idx(p, n);
  GroupIndexer wedge_idx(p, n * (n - 1) / 2);
  std::set<OrbitLabel> labels;
  for (std::size_t w = 0; w < wedge_idx.count(); ++w) {
    AltForm beta = AltForm::from_wedge_coords(p, n, wedge_idx.decode(w));
    std::size_t width = form_width(beta);
    Subspace rad = radical(beta);
    labels.insert(OrbitLabel{width, true, true});
    for (std::size_t c = 1; c < chi_idx.count(); ++c) {
      FpVec chi = chi_idx.decode(c);
      bool rad_in_ker = true;
      if (width > 0)
        for (const auto& r : rad.basis())
          if (vec_dot(r, chi, p) != 0) {
            rad_in_ker = false;
            break;
          }
      labels.insert(OrbitLabel{width, false, rad_in_ker});
    }
  }
  return labels.size();
}

SymplecticBasis symplectic_decomposition(const AltForm& beta) {
  std::uint32_t p = beta.p();
  std::size_t n = beta.n();
  SymplecticBasis out;
  Subspace current = Subspace::full(p, n);
  for (;;) {
    // first non-orthogonal basis pair, scanned in order
    const auto& basis = current.basis();
    std::size_t bi = basis.size(), bj = basis.size();
    for (std::size_t i = 0; i < basis.size() && bi == basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (beta.value(basis[i], basis[j]) != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == basis.size()) break;
    FpVec x = basis[bi];
    FpVec y = vec_scaled(basis[bj], fp_inv(beta.value(basis[bi], basis[bj]), p), p);
    out.hyperbolic.emplace_back(x, y);
    // orthogonal complement of the plane inside the current space
    FpMatrix constraints(p, n, 2);
    FpVec bx = vec_mat(x, beta.matrix());
    FpVec by = vec_mat(y, beta.matrix());
    for (std::size_t i = 0; i < n; ++i) {
      constraints.set(i, 0, bx[i]);
      constraints.set(i, 1, by[i]);
    }
    current = current.intersect(kernel(constraints));
  }
  out.rad = current;
  if (out.rad.dim() != n - 2 * out.hyperbolic.size())
    throw std::logic_error("symplectic decomposition dimensions are inconsistent");
  if (!(out.rad == radical(beta))) throw std::logic_error("residual space is not the radical");
  return out;
}

GroupTable central_extension_group(const ClassSpace& space, const ClassPoint& pt) {
  if (!space.module().is_trivial())
    throw std::invalid_argument("central extensions require the trivial action");
  std::uint32_t p = space.p();
  const GroupIndexer& idx = space.indexer();
  PairTable s = assemble_point_cocycle(space, pt);
  std::size_t gcount = idx.count();
  std::uint32_t order = static_cast<std::uint32_t>(gcount * p);
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(order) * order);
  for (std::size_t g = 0; g < gcount; ++g)
    for (std::size_t h = 0; h < gcount; ++h) {
      std::uint32_t z = s.at(g, h);
      if (z % p != 0) throw std::logic_error("assembled cocycle is not p-th root valued");
      z /= p;
      std::size_t sum = idx.add(g, h);
      for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j)
          mul[(g * p + i) * static_cast<std::size_t>(order) + h * p + j] =
              static_cast<std::uint32_t>(sum * p + (i + j + z) % p);
    }
  return GroupTable(order, std::move(mul));
}

}  // namespace hopfext
