#include "hopfext/cp_module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfext {

std::size_t BlockProfile::rank() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < m.size(); ++l) n += (l + 1) * m[l];
  return n;
}

bool BlockProfile::operator==(const BlockProfile& o) const {
  if (p != o.p) return false;
  std::size_t len = std::max(m.size(), o.m.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t a = i < m.size() ? m[i] : 0;
    std::uint32_t b = i < o.m.size() ? o.m[i] : 0;
    if (a != b) return false;
  }
  return true;
}

std::string BlockProfile::to_string() const {
  std::size_t last = m.size();
  while (last > 1 && m[last - 1] == 0) --last;
  std::ostringstream os;
  for (std::size_t i = 0; i < last; ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

BlockProfile BlockProfile::parse(std::uint32_t p, const std::string& text) {
  require_odd_prime(p);
  BlockProfile b{p, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad block profile entry '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad block profile entry '" + item + "'");
    b.m.push_back(static_cast<std::uint32_t>(v));
  }
  if (b.m.empty()) throw std::invalid_argument("empty block profile");
  if (b.m.size() > p)
    throw std::invalid_argument("block size " + std::to_string(b.m.size()) +
                                " exceeds p=" + std::to_string(p));
  if (b.rank() == 0) throw std::invalid_argument("block profile has rank 0");
  b.m.resize(p, 0);
  return b;
}

BlockProfile BlockProfile::trivial(std::uint32_t p, std::size_t n) {
  require_odd_prime(p);
  if (n == 0) throw std::invalid_argument("rank must be positive");
  BlockProfile b{p, std::vector<std::uint32_t>(p, 0)};
  b.m[0] = static_cast<std::uint32_t>(n);
  return b;
}

std::vector<BlockProfile> BlockProfile::all_of_rank(std::uint32_t p, std::size_t n) {
  require_odd_prime(p);
  std::vector<BlockProfile> out;
  BlockProfile cur{p, std::vector<std::uint32_t>(p, 0)};
  // enumerate multiplicities of the largest part first
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (max_part == 0) return;
    for (std::uint32_t cnt = static_cast<std::uint32_t>(remaining / max_part);; --cnt) {
      cur.m[max_part - 1] = cnt;
      self(self, remaining - cnt * max_part, max_part - 1);
      cur.m[max_part - 1] = 0;
      if (cnt == 0) break;
    }
  };
  rec(rec, n, std::min<std::size_t>(n, p));
  return out;
}

CpModule::CpModule(std::uint32_t p, FpMatrix T) : p_(p), n_(T.rows()), T_(std::move(T)) {
  require_odd_prime(p);
  if (T_.modulus() != p) throw std::invalid_argument("matrix modulus differs from p");
  if (!T_.is_square() || n_ == 0) throw std::invalid_argument("action matrix must be square, n >= 1");
  if (!T_.pow(p).is_identity())
    throw std::invalid_argument("action matrix does not satisfy T^p = I");
}

CpModule CpModule::from_blocks(const BlockProfile& profile) {
  require_odd_prime(profile.p);
  if (profile.m.size() > profile.p) throw std::invalid_argument("block size exceeds p");
  std::size_t n = profile.rank();
  if (n == 0) throw std::invalid_argument("block profile has rank 0");
  FpMatrix T = FpMatrix::identity(profile.p, n);
  std::size_t pos = 0;
  for (std::size_t l = 1; l <= profile.m.size(); ++l) {
    for (std::uint32_t c = 0; c < profile.m[l - 1]; ++c) {
      for (std::size_t i = 0; i + 1 < l; ++i) T.set(pos + i, pos + i + 1, 1);
      pos += l;
    }
  }
  return CpModule(profile.p, T);
}

CpModule CpModule::trivial(std::uint32_t p, std::size_t n) {
  return from_blocks(BlockProfile::trivial(p, n));
}

FpMatrix CpModule::T_pow(std::uint32_t k) const { return T_.pow(k % p_); }

CpModule CpModule::twist(std::uint32_t k) const {
  if (k % p_ == 0) throw std::invalid_argument("twist exponent must be a unit mod p");
  return CpModule(p_, T_pow(k));
}

BlockProfile CpModule::block_profile() const {
  FpMatrix N = T_ - FpMatrix::identity(p_, n_);
  // ranks of powers of the nilpotent part; m_l = r_{l-1} - 2 r_l + r_{l+1}
  std::vector<std::size_t> r{n_};
  FpMatrix Nk = FpMatrix::identity(p_, n_);
  for (std::uint32_t j = 1; j <= p_ + 1; ++j) {
    Nk = Nk * N;
    r.push_back(Nk.rank());
  }
  BlockProfile b{p_, std::vector<std::uint32_t>(p_, 0)};
  for (std::uint32_t l = 1; l <= p_; ++l)
    b.m[l - 1] = static_cast<std::uint32_t>(r[l - 1] - 2 * r[l] + r[l + 1]);
  return b;
}

FpMatrix CpModule::decompose_basis() const {
  FpMatrix N = T_ - FpMatrix::identity(p_, n_);
  // kernel chain K_j = ker(N^j)
  std::vector<Subspace> K{Subspace(p_, n_)};
  FpMatrix Nk = FpMatrix::identity(p_, n_);
  std::size_t s = 0;
  while (K.back().dim() < n_) {
    Nk = Nk * N;
    K.push_back(kernel(Nk));
    ++s;
  }
  // Jordan chains: starters of height j extend K_{j-1} plus the pushed-down
  // tails of longer chains inside K_j.
  struct Chain {
    std::size_t len;
    std::vector<FpVec> vecs;  // v, vN, ..., vN^{len-1}
  };
  std::vector<Chain> chains;
  for (std::size_t j = s; j >= 1; --j) {
    std::vector<FpVec> blocked = K[j - 1].basis();
    for (const auto& ch : chains) blocked.push_back(ch.vecs[ch.len - j]);
    Subspace V = Subspace::from_rows(p_, n_, blocked);
    for (const auto& starter : V.complement_in(K[j])) {
      Chain ch{j, {starter}};
      for (std::size_t i = 1; i < j; ++i) ch.vecs.push_back(vec_mat(ch.vecs.back(), N));
      chains.push_back(std::move(ch));
      blocked.push_back(chains.back().vecs[chains.back().len - j]);
      V = Subspace::from_rows(p_, n_, blocked);
    }
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const Chain& a, const Chain& b) { return a.len < b.len; });
  std::vector<FpVec> rows;
  for (const auto& ch : chains)
    for (const auto& v : ch.vecs) rows.push_back(v);
  FpMatrix U = FpMatrix::from_rows(p_, rows);
  if (!U.is_invertible()) throw std::logic_error("decompose_basis produced a singular basis");
  return U;
}

Subspace intertwiner_space(const CpModule& a, const CpModule& b) {
  if (a.p() != b.p() || a.n() != b.n())
    throw std::invalid_argument("intertwiner_space requires equal p and rank");
  std::size_t n = a.n();
  std::uint32_t p = a.p();
  const FpMatrix& T = a.T();
  const FpMatrix& T2 = b.T();
  // T*L - L*T2 = 0 as a linear system on the n^2 entries of L (row-major):
  // row index of the system = output entry (i,j), columns = entries (k,l).
  FpMatrix sys(p, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t out = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        // (T*L)_{ij} += T_{ik} L_{kj}
        sys.set(out, k * n + j, static_cast<long long>(sys.at(out, k * n + j)) + T.at(i, k));
        // (L*T2)_{ij} += L_{ik} T2_{kj}
        sys.set(out, i * n + k, static_cast<long long>(sys.at(out, i * n + k)) -
                                    static_cast<long long>(T2.at(k, j)));
      }
    }
  // solutions x with sys * x^T = 0, i.e. left kernel of sys^T
  return kernel(sys.transpose());
}

std::optional<FpMatrix> find_invertible_intertwiner(const CpModule& a, const CpModule& b) {
  if (a.p() != b.p() || a.n() != b.n())
    throw std::invalid_argument("intertwiner search requires equal p and rank");
  if (!(a.block_profile() == b.block_profile())) return std::nullopt;
  // U T U^{-1} = C = U' T' U'^{-1} gives T (U^{-1}U') = (U^{-1}U') T'.
  FpMatrix U = a.decompose_basis();
  FpMatrix Uq = b.decompose_basis();
  FpMatrix L = U.inverse() * Uq;
  if (a.T() * L != L * b.T()) throw std::logic_error("intertwiner construction failed");
  return L;
}

std::optional<Intertwiner> twist_intertwiner(const CpModule& m, std::uint32_t k) {
  k %= m.p();
  if (k == 0) throw std::invalid_argument("twist exponent must be a unit mod p");
  auto L = find_invertible_intertwiner(m, m.twist(k));
  if (!L) return std::nullopt;
  return Intertwiner{k, *L};
}

}  // namespace hopfext
