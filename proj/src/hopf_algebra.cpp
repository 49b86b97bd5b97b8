#include "hopfext/hopf_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hopfext {

RootScalar RootScalar::zero(std::uint32_t modulus) { return RootScalar{modulus, 0, true}; }

RootScalar RootScalar::root(std::uint32_t modulus, std::uint32_t exponent) {
  return RootScalar{modulus, exponent % modulus, false};
}

RootScalar RootScalar::times(const RootScalar& o) const {
  if (modulus != o.modulus) throw std::invalid_argument("scalar modulus mismatch");
  if (is_zero || o.is_zero) return zero(modulus);
  return root(modulus, exponent + o.exponent);
}

HopfStructure::HopfStructure(CpModule m, std::vector<PairTable> tau)
    : module_(std::move(m)), idx_(module_.p(), module_.n()), tau_(std::move(tau)) {
  std::uint32_t p = module_.p();
  if (tau_.size() != p) throw std::invalid_argument("expected one cocycle table per grade");
  for (const auto& t : tau_)
    if (t.p != p || t.n != module_.n() || t.modulus != p * p)
      throw std::invalid_argument("cocycle table shape mismatch");
  if (!tau_[0].is_zero()) throw std::invalid_argument("tau at the identity must vanish");
  act_.reserve(p);
  for (std::uint32_t i = 0; i < p; ++i) act_.push_back(idx_.action_table(module_.T_pow(i)));
}

HopfStructure::Product HopfStructure::multiply(std::size_t u, std::size_t v) const {
  std::size_t a = group_part(u), b = group_part(v);
  std::uint32_t i = grade_part(u), j = grade_part(v);
  if (b != act_[i][a]) return Product{true, 0};
  return Product{false, basis_index(a, (i + j) % p())};
}

std::vector<HopfStructure::CoproductTerm> HopfStructure::coproduct(std::size_t basis) const {
  std::size_t c = group_part(basis);
  std::uint32_t i = grade_part(basis);
  std::vector<CoproductTerm> terms;
  terms.reserve(idx_.count());
  for (std::size_t a = 0; a < idx_.count(); ++a) {
    // b with a + b = c
    FpVec va = idx_.decode(a), vc = idx_.decode(c);
    FpVec vb(n());
    for (std::size_t d = 0; d < n(); ++d) vb[d] = fp_sub(vc[d], va[d], p());
    std::size_t b = idx_.encode(vb);
    terms.push_back(CoproductTerm{basis_index(a, i), basis_index(b, i), tau_[i].at(a, b)});
  }
  return terms;
}

bool HopfStructure::is_cocommutative() const {
  for (const auto& t : tau_)
    if (!t.is_symmetric()) return false;
  return true;
}

void HopfStructure::corrupt_tau(std::uint32_t i, std::size_t a, std::size_t b,
                                std::uint32_t delta) {
  tau_[i % p()].set(a, b, tau_[i % p()].at(a, b) + delta);
}

HopfStructure build_hopf(const ClassSpace& space, const ClassPoint& pt) {
  PairTable s = assemble_point_cocycle(space, pt);
  return HopfStructure(space.module(), tau_components(space, s));
}

ClassPoint point_of_hopf(const ClassSpace& space, const HopfStructure& h) {
  if (space.module().T() != h.module().T())
    throw std::invalid_argument("structure belongs to a different module");
  return recover_point(space, h.tau()[1]);
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  if (pass) {
    os << "all axioms hold (" << checks_run << " identities checked)";
  } else {
    os << "FAILED " << failed_check << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  return os.str();
}

AxiomReport check_axioms(const HopfStructure& h) {
  AxiomReport rep;
  std::uint32_t p = h.p();
  std::size_t gcount = h.indexer().count();
  std::uint32_t mod = p * p;
  auto fail = [&](std::string what, std::initializer_list<std::uint64_t> w) {
    rep.pass = false;
    rep.failed_check = std::move(what);
    rep.witness = w;
    return rep;
  };

  // group action identities (zero products reduce associativity to these)
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j)
      for (std::size_t a = 0; a < gcount; ++a) {
        ++rep.checks_run;
        if (h.act(j, h.act(i, a)) != h.act((i + j) % p, a))
          return fail("action-consistency", {i, j, a});
      }

  // shared addition table for the coalgebra loops
  std::vector<std::uint32_t> add(gcount * gcount);
  for (std::size_t a = 0; a < gcount; ++a)
    for (std::size_t b = 0; b < gcount; ++b)
      add[a * gcount + b] = static_cast<std::uint32_t>(h.indexer().add(a, b));

  // associativity: the full triple loop under a budget, otherwise all
  // triples with both sides potentially nonzero
  std::uint64_t dim = h.dim();
  if (dim * dim * dim <= 300'000ull) {
    for (std::size_t u = 0; u < dim; ++u)
      for (std::size_t v = 0; v < dim; ++v) {
        auto uv = h.multiply(u, v);
        for (std::size_t w = 0; w < dim; ++w) {
          ++rep.checks_run;
          auto vw = h.multiply(v, w);
          auto lhs = uv.zero ? uv : h.multiply(uv.basis, w);
          auto rhs = vw.zero ? vw : h.multiply(u, vw.basis);
          if (lhs.zero != rhs.zero || (!lhs.zero && lhs.basis != rhs.basis))
            return fail("associativity", {u, v, w});
        }
      }
  } else {
    for (std::size_t a = 0; a < gcount; ++a)
      for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j)
          for (std::uint32_t k = 0; k < p; ++k) {
            ++rep.checks_run;
            std::size_t u = h.basis_index(a, i);
            std::size_t v = h.basis_index(h.act(i, a), j);
            std::size_t w = h.basis_index(h.act(j, h.group_part(v)), k);
            auto uv = h.multiply(u, v);
            auto vw = h.multiply(v, w);
            if (uv.zero || vw.zero) return fail("associativity", {u, v, w});
            auto lhs = h.multiply(uv.basis, w);
            auto rhs = h.multiply(u, vw.basis);
            if (lhs.zero || rhs.zero || lhs.basis != rhs.basis)
              return fail("associativity", {u, v, w});
          }
  }

  // unit: sum_a p_a x^0 is a two-sided unit
  for (std::size_t v = 0; v < dim; ++v) {
    ++rep.checks_run;
    std::size_t hits = 0;
    for (std::size_t a = 0; a < gcount; ++a) {
      auto left = h.multiply(h.basis_index(a, 0), v);
      if (!left.zero) {
        if (left.basis != v) return fail("unit-left", {a, v});
        ++hits;
      }
    }
    if (hits != 1) return fail("unit-left", {v});
    hits = 0;
    for (std::size_t a = 0; a < gcount; ++a) {
      auto right = h.multiply(v, h.basis_index(a, 0));
      if (!right.zero) {
        if (right.basis != v) return fail("unit-right", {a, v});
        ++hits;
      }
    }
    if (hits != 1) return fail("unit-right", {v});
  }

  // counit laws reduce to normalization of every component
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < gcount; ++a) {
      ++rep.checks_run;
      if (h.tau()[i].at(0, a) != 0 || h.tau()[i].at(a, 0) != 0)
        return fail("counit-normalization", {i, a});
    }

  // coassociativity: the 2-cocycle identity for every component
  for (std::uint32_t i = 0; i < p; ++i) {
    const PairTable& t = h.tau()[i];
    for (std::size_t a = 0; a < gcount; ++a)
      for (std::size_t b = 0; b < gcount; ++b) {
        std::size_t ab = add[a * gcount + b];
        std::uint32_t tab = t.at(a, b);
        for (std::size_t c = 0; c < gcount; ++c) {
          ++rep.checks_run;
          std::uint32_t lhs = (t.at(a, add[b * gcount + c]) + t.at(b, c)) % mod;
          std::uint32_t rhs = (t.at(ab, c) + tab) % mod;
          if (lhs != rhs) return fail("coassociativity", {i, a, b, c});
        }
      }
  }

  // multiplicativity of the coproduct on the cocycle level:
  // tau(t^{i+j}) = tau(t^i) + t^i . tau(t^j)
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j)
      for (std::size_t a = 0; a < gcount; ++a)
        for (std::size_t b = 0; b < gcount; ++b) {
          ++rep.checks_run;
          std::uint32_t lhs = h.tau()[(i + j) % p].at(a, b);
          std::uint32_t rhs = (h.tau()[i].at(a, b) + h.tau()[j].at(h.act(i, a), h.act(i, b))) % mod;
          if (lhs != rhs) return fail("bialgebra", {i, j, a, b});
        }

  // coproduct multiplicativity spelled out on basis pairs.  The component
  // identity above is already the complete expansion-level statement (each
  // coproduct term of u pairs with at most one surviving term of v), so
  // this pass re-derives a deterministic sample through the product code.
  {
    // each pair costs gcount^2 term products
    std::uint64_t pair_cost = dim * dim * gcount * gcount;
    std::uint64_t step = pair_cost <= 200'000ull ? 1 : pair_cost / 200'000ull + 1;
    for (std::uint64_t pair = 0; pair < dim * dim; pair += step) {
      std::size_t u = pair / dim, v = pair % dim;
      ++rep.checks_run;
      auto uv = h.multiply(u, v);
      std::vector<HopfStructure::CoproductTerm> want;
      if (!uv.zero) want = h.coproduct(uv.basis);
      std::vector<HopfStructure::CoproductTerm> got;
      auto cu = h.coproduct(u);
      auto cv = h.coproduct(v);
      for (const auto& tu : cu)
        for (const auto& tv : cv) {
          auto l = h.multiply(tu.left, tv.left);
          auto r = h.multiply(tu.right, tv.right);
          if (!l.zero && !r.zero)
            got.push_back({l.basis, r.basis, (tu.exponent + tv.exponent) % mod});
        }
      auto key = [](const HopfStructure::CoproductTerm& t) {
        return std::tuple(t.left, t.right, t.exponent);
      };
      auto cmp = [&](const auto& x, const auto& y) { return key(x) < key(y); };
      std::sort(want.begin(), want.end(), cmp);
      std::sort(got.begin(), got.end(), cmp);
      if (want.size() != got.size() ||
          !std::equal(want.begin(), want.end(), got.begin(),
                      [&](const auto& x, const auto& y) { return key(x) == key(y); }))
        return fail("bialgebra-products", {u, v});
    }
  }
  return rep;
}

HopfStructure shift_by_coboundary(const HopfStructure& h, const FunctionTable& g) {
  std::uint32_t p = h.p(), mod = p * p;
  std::size_t gcount = h.indexer().count();
  if (g.size() != gcount) throw std::invalid_argument("function table has wrong size");
  if (g[0] % mod != 0) throw std::invalid_argument("function must be normalized at the identity");
  // admissibility: the norm of g vanishes
  for (std::size_t a = 0; a < gcount; ++a) {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < p; ++i) s = (s + g[h.act(i, a)]) % mod;
    if (s != 0) throw std::invalid_argument("function is not admissible (norm does not vanish)");
  }
  std::vector<PairTable> tau = h.tau();
  // eta_i = phi_i . g; tau_i' = tau_i + delta(eta_i)
  FunctionTable eta(gcount, 0);
  for (std::uint32_t i = 1; i < p; ++i) {
    for (std::size_t a = 0; a < gcount; ++a)
      eta[a] = (eta[a] + g[h.act(i - 1, a)]) % mod;  // phi_i . g
    for (std::size_t a = 0; a < gcount; ++a)
      for (std::size_t b = 0; b < gcount; ++b) {
        std::size_t ab = h.indexer().add(a, b);
        std::uint32_t d = (eta[a] + eta[b] + mod - eta[ab]) % mod;
        tau[i].set(a, b, tau[i].at(a, b) + d);
      }
  }
  return HopfStructure(h.module(), std::move(tau));
}

std::string hopf_to_json(const HopfStructure& h, const AxiomReport& report) {
  nlohmann::json j;
  j["schema"] = "hopfext-v1";
  j["p"] = h.p();
  j["n"] = h.n();
  j["dim"] = h.dim();
  j["scalar_modulus"] = h.p() * h.p();
  j["blocks"] = h.module().block_profile().to_string();
  std::vector<std::vector<Fp>> action;
  for (std::size_t i = 0; i < h.n(); ++i) action.push_back(h.module().T().row(i));
  j["action"] = action;
  j["cocommutative"] = h.is_cocommutative();
  j["axioms"] = {{"pass", report.pass},
                 {"checks", report.checks_run},
                 {"failed", report.failed_check}};

  std::vector<std::array<std::uint64_t, 4>> mult;
  for (std::size_t u = 0; u < h.dim(); ++u)
    for (std::size_t v = 0; v < h.dim(); ++v) {
      auto r = h.multiply(u, v);
      if (!r.zero) mult.push_back({u, v, r.basis, 0});
    }
  j["mult"] = mult;

  std::vector<std::array<std::uint64_t, 4>> comult;
  for (std::size_t u = 0; u < h.dim(); ++u)
    for (const auto& t : h.coproduct(u)) comult.push_back({u, t.left, t.right, t.exponent});
  j["comult"] = comult;

  std::vector<std::uint32_t> counit;
  for (std::size_t u = 0; u < h.dim(); ++u) counit.push_back(h.counit(u));
  j["counit"] = counit;
  return j.dump();
}

void validate_hopf_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  for (const char* key : {"schema", "p", "n", "dim", "scalar_modulus", "mult", "comult", "counit"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
  if (j["schema"] != "hopfext-v1") throw std::invalid_argument("unrecognized schema version");
  std::uint64_t p = j["p"].get<std::uint64_t>();
  std::uint64_t n = j["n"].get<std::uint64_t>();
  std::uint64_t dim = j["dim"].get<std::uint64_t>();
  std::uint64_t mod = j["scalar_modulus"].get<std::uint64_t>();
  if (!is_odd_prime(static_cast<std::uint32_t>(p))) throw std::invalid_argument("p is not an odd prime");
  if (mod != p * p) throw std::invalid_argument("scalar modulus must be p^2");
  std::uint64_t expect = p;
  for (std::uint64_t i = 0; i < n; ++i) expect *= p;
  if (dim != expect) throw std::invalid_argument("dimension is not p^(n+1)");
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const auto& row : j["mult"]) {
    if (row.size() != 4) throw std::invalid_argument("mult rows must be quadruples");
    std::uint64_t u = row[0].get<std::uint64_t>(), v = row[1].get<std::uint64_t>();
    std::uint64_t w = row[2].get<std::uint64_t>(), e = row[3].get<std::uint64_t>();
    if (u >= dim || v >= dim || w >= dim) throw std::invalid_argument("mult index out of range");
    if (e >= mod) throw std::invalid_argument("mult scalar out of range");
    if (!seen.emplace(u, v).second) throw std::invalid_argument("duplicate product entry");
  }
  for (const auto& row : j["comult"]) {
    if (row.size() != 4) throw std::invalid_argument("comult rows must be quadruples");
    for (int k = 0; k < 3; ++k)
      if (row[k].get<std::uint64_t>() >= dim) throw std::invalid_argument("comult index out of range");
    if (row[3].get<std::uint64_t>() >= mod) throw std::invalid_argument("comult scalar out of range");
  }
  if (j["counit"].size() != dim) throw std::invalid_argument("counit vector has wrong length");
}

}  // namespace hopfext
