// Acceptance suite: every counting claim and structural guarantee the
// library is expected to reproduce, one pass/fail line per criterion.
// All comparisons are exact integer equalities.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfext/cocommutative.hpp"
#include "hopfext/commutative.hpp"
#include "hopfext/hopf_algebra.hpp"
#include "hopfext/orbit_engine.hpp"

using namespace hopfext;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail, Clock::time_point start) {
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream os;
  os << (pass ? "[PASS] " : "[FAIL] ") << id << ": " << detail << " (" << std::fixed
     << std::setprecision(2) << secs << " s)";
  std::cout << os.str() << std::endl;
  if (!pass) ++failures;
}

FpMatrix random_invertible(std::mt19937& rng, std::uint32_t p, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (;;) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
    if (m.is_invertible()) return m;
  }
}

std::uint64_t full_orbit_count(const CpModule& m, bool gamma) {
  ClassSpace space(m);
  SymmetryGroup g = SymmetryGroup::of_module(m);
  auto acts = gamma ? gamma_point_actions(space, g) : aut_point_actions(space, g);
  return enumerate_orbits(space, acts, OrbitSlice::Full).orbit_count();
}

// ---- criterion 1: commutative counts -------------------------------------

void criterion_commutative() {
  auto start = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::uint64_t claim = commutative_isoclass_count(n);
      std::uint64_t labels = count_labels_exhaustive(p, n);
      std::uint64_t orbits = full_orbit_count(CpModule::trivial(p, n), /*gamma=*/false);
      if (labels != claim || orbits != claim) {
        pass = false;
        detail << " p=" << p << ",n=" << n << ": labels " << labels << ", orbits " << orbits
               << ", claim " << claim << ";";
      }
    }
  }
  if (pass) detail << "labels and orbit counts give 2,4,5,7 for n=1..4 at p=3,5";
  report("criterion-1 commutative counts", pass, detail.str(), start);
}

// ---- criterion 2: two-block module ----------------------------------------

void criterion_two_block() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t p : {3u, 5u}) {
    CpModule m = CpModule::from_blocks(BlockProfile::parse(p, "1,1"));
    std::uint64_t total = classify_module(m).counts.total;
    std::uint64_t claim = 2 * p + 11;
    ClassSpace space(m);
    SymmetryGroup g = SymmetryGroup::of_module(m);
    OrbitReport a = enumerate_orbits(space, aut_point_actions(space, g), OrbitSlice::Full,
                                     kDefaultPointCap, true);
    OrbitReport full = enumerate_orbits(space, gamma_point_actions(space, g), OrbitSlice::Full,
                                        kDefaultPointCap, true);
    bool partitions_agree = a.point_orbit == full.point_orbit;
    if (total != claim || !partitions_agree) {
      pass = false;
      detail << " p=" << p << ": total " << total << " vs " << claim << ", partitions "
             << (partitions_agree ? "agree" : "differ") << ";";
    }
  }
  if (pass) detail << "totals 17 and 21, twist orbits equal automorphism orbits";
  report("criterion-2 two-block counts", pass, detail.str(), start);
}

// ---- criterion 3: single size-3 block -------------------------------------

void criterion_three_block() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::uint64_t claim = p == 3 ? 4 : p + 9;
    std::uint64_t total = isoclass_count(p, BlockProfile::parse(p, "0,0,1")).total;
    if (total != claim) {
      pass = false;
      detail << " p=" << p << ": " << total << " vs " << claim << ";";
    }
  }
  if (pass) detail << "totals 4, 14, 16 at p=3,5,7";
  report("criterion-3 size-3 block counts", pass, detail.str(), start);
}

// ---- criterion 4: rank two ------------------------------------------------

void criterion_rank_two() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t p : {3u, 5u}) {
    std::uint64_t nontrivial = isoclass_count(p, BlockProfile::parse(p, "0,1")).total;
    std::uint64_t trivial = isoclass_count(p, BlockProfile::trivial(p, 2)).total;
    if (nontrivial != p + 3 || nontrivial + trivial != p + 7) {
      pass = false;
      detail << " p=" << p << ": nontrivial " << nontrivial << ", total "
             << nontrivial + trivial << ";";
    }
  }
  if (pass) detail << "totals 10 and 12, nontrivial class contributes p+3";
  report("criterion-4 rank-two counts", pass, detail.str(), start);
}

// ---- criterion 5: rank one ------------------------------------------------

void criterion_rank_one() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::uint64_t total = isoclass_count(p, BlockProfile::trivial(p, 1)).total;
    if (total != 2) {
      pass = false;
      detail << " p=" << p << ": " << total << ";";
    }
  }
  if (pass) detail << "exactly 2 isoclasses at p=3,5,7";
  report("criterion-5 rank-one counts", pass, detail.str(), start);
}

// ---- criterion 6: space dimensions -----------------------------------------

void criterion_dimensions() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t p : {3u, 5u}) {
    ClassSpace s(CpModule::from_blocks(BlockProfile::parse(p, "1,1")));
    if (s.dim() != 5) {
      pass = false;
      detail << " two-block p=" << p << " dim " << s.dim() << ";";
    }
  }
  for (std::uint32_t p : {3u, 5u, 7u}) {
    ClassSpace s(CpModule::from_blocks(BlockProfile::parse(p, "0,0,1")));
    std::size_t claim = p == 3 ? 2 : 4;
    if (s.dim() != claim) {
      pass = false;
      detail << " size-3 block p=" << p << " dim " << s.dim() << ";";
    }
  }
  if (pass) detail << "dim 5 for the two-block space; 2 (p=3) and 4 (p=5,7) for the size-3 block";
  report("criterion-6 space dimensions", pass, detail.str(), start);
}

// ---- criterion 7: structural properties -------------------------------------

void criterion_structural() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;

  // (a) basis-change invariance, 10 random conjugations per case
  std::mt19937 rng(12021);
  struct Case {
    std::uint32_t p;
    const char* blocks;
  };
  for (const Case& c : {Case{3, "1,1"}, Case{5, "1,1"}, Case{3, "0,0,1"}, Case{5, "0,0,1"},
                        Case{7, "0,0,1"}, Case{3, "0,1"}, Case{5, "0,1"}, Case{3, "1"},
                        Case{5, "1"}, Case{7, "1"}}) {
    CpModule m = CpModule::from_blocks(BlockProfile::parse(c.p, c.blocks));
    IsoclassCount base = classify_module(m).counts;
    for (int trial = 0; trial < 10; ++trial) {
      FpMatrix s = random_invertible(rng, c.p, m.n());
      IsoclassCount got = classify_module(CpModule(c.p, s * m.T() * s.inverse())).counts;
      if (got.total != base.total || got.cocommutative != base.cocommutative ||
          got.noncocommutative != base.noncocommutative) {
        pass = false;
        detail << " conjugation changed counts for p=" << c.p << " blocks=" << c.blocks << ";";
        break;
      }
    }
  }

  // (b) orbit size bound |tA| <= |tG| <= |C| * |tA| for every orbit,
  // (c) the beta = 0 slice is stable under every generator
  for (std::uint32_t p : {3u, 5u}) {
    for (const char* blocks : {"1,1", "0,0,1", "0,1"}) {
      CpModule m = CpModule::from_blocks(BlockProfile::parse(p, blocks));
      ClassSpace space(m);
      SymmetryGroup g = SymmetryGroup::of_module(m);
      auto gamma = gamma_point_actions(space, g);
      OrbitReport a = enumerate_orbits(space, aut_point_actions(space, g), OrbitSlice::Full,
                                       kDefaultPointCap, true);
      OrbitReport full = enumerate_orbits(space, gamma, OrbitSlice::Full, kDefaultPointCap, true);
      std::uint64_t cw = g.twist_group().size();
      for (std::size_t pt = 0; pt < full.point_orbit.size(); ++pt) {
        std::uint64_t sa = a.orbit_sizes[a.point_orbit[pt]];
        std::uint64_t sg = full.orbit_sizes[full.point_orbit[pt]];
        if (!(sa <= sg && sg <= cw * sa)) {
          pass = false;
          detail << " orbit size bound violated at p=" << p << " blocks=" << blocks << ";";
          break;
        }
      }
      std::uint64_t alt_count = 1;
      for (std::size_t i = 0; i < space.alt_dim(); ++i) alt_count *= p;
      for (const auto& act : gamma) {
        // linear alt maps fix zero; verify stability point by point
        GroupIndexer ci(p, space.chi_dim());
        for (std::size_t chi = 0; chi < ci.count(); ++chi) {
          std::uint64_t idx = static_cast<std::uint64_t>(chi) * alt_count;
          ClassPoint before = decode_point(space, idx);
          FpVec chi_img = vec_mat(before.chi, act.chi_map);
          FpVec beta_img = vec_mat(before.beta, act.alt_map);
          if (!vec_is_zero(beta_img)) {
            pass = false;
            detail << " beta=0 slice moved at p=" << p << ";";
            break;
          }
          (void)chi_img;
        }
      }
    }
  }

  // (d) invertible intertwiner exists iff block profiles match
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto profiles = BlockProfile::all_of_rank(p, n);
      for (const auto& pa : profiles)
        for (const auto& pb : profiles) {
          auto L = find_invertible_intertwiner(CpModule::from_blocks(pa),
                                               CpModule::from_blocks(pb));
          if (L.has_value() != (pa == pb)) {
            pass = false;
            detail << " intertwiner criterion failed for " << pa.to_string() << " vs "
                   << pb.to_string() << ";";
          }
        }
    }
  }

  if (pass)
    detail << "conjugation invariance, orbit-size bounds, slice stability, intertwiner criterion";
  report("criterion-7 structural properties", pass, detail.str(), start);
}

// ---- criterion 8: axiom sweep ------------------------------------------------

void criterion_axioms() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  std::uint64_t points = 0;
  for (std::size_t n = 1; n <= 3 && pass; ++n) {
    for (const auto& prof : BlockProfile::all_of_rank(3, n)) {
      ClassSpace s(CpModule::from_blocks(prof));
      GroupIndexer ci(3, s.chi_dim()), bi(3, s.alt_dim());
      for (std::size_t a = 0; a < ci.count() && pass; ++a)
        for (std::size_t b = 0; b < bi.count(); ++b) {
          ClassPoint pt{ci.decode(a), bi.decode(b)};
          HopfStructure h = build_hopf(s, pt);
          AxiomReport rep = check_axioms(h);
          ++points;
          if (!rep.pass || h.is_cocommutative() != vec_is_zero(pt.beta)) {
            pass = false;
            detail << " failure at p=3 blocks=" << prof.to_string() << ": " << rep.to_string()
                   << ";";
            break;
          }
        }
    }
  }
  std::mt19937 rng(77007);
  std::uniform_int_distribution<std::uint32_t> d(0, 4);
  auto profiles5 = BlockProfile::all_of_rank(5, 3);
  for (int trial = 0; trial < 100 && pass; ++trial) {
    const auto& prof = profiles5[trial % profiles5.size()];
    ClassSpace s(CpModule::from_blocks(prof));
    ClassPoint pt{FpVec(s.chi_dim()), FpVec(s.alt_dim())};
    for (auto& x : pt.chi) x = d(rng);
    for (auto& x : pt.beta) x = d(rng);
    HopfStructure h = build_hopf(s, pt);
    AxiomReport rep = check_axioms(h);
    ++points;
    if (!rep.pass || h.is_cocommutative() != vec_is_zero(pt.beta)) {
      pass = false;
      detail << " failure at p=5 blocks=" << prof.to_string() << ": " << rep.to_string() << ";";
    }
  }
  if (pass)
    detail << "axioms and the cocommutativity criterion hold at " << points << " points";
  report("criterion-8 axiom sweep", pass, detail.str(), start);
}

// ---- criterion 9: cocommutative oracle ----------------------------------------

void criterion_oracle() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  std::vector<ExtGroup> groups;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& prof : BlockProfile::all_of_rank(3, n)) {
      CpModule m = CpModule::from_blocks(prof);
      for (const auto& a : fixed_class_representatives(m)) groups.emplace_back(m, a);
    }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < groups.size() && pass; ++i)
    for (std::size_t j = i; j < groups.size(); ++j) {
      if (groups[i].n() != groups[j].n()) continue;
      ++pairs;
      bool derived = ext_groups_isomorphic(groups[i], groups[j]).verdict;
      bool oracle = brute_force_iso(groups[i].table(), groups[j].table());
      if (derived != oracle) {
        pass = false;
        detail << " disagreement between the decision procedure and the oracle;";
        break;
      }
    }
  if (pass)
    detail << "decision procedure agrees with the search oracle on " << pairs << " pairs";
  report("criterion-9 cocommutative oracle", pass, detail.str(), start);
}

// ---- criterion 10: coboundary shifts ------------------------------------------

void criterion_shifts() {
  auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::uint32_t> d(0, 8);
  for (const char* blocks : {"2", "0,1"}) {
    ClassSpace s(CpModule::from_blocks(BlockProfile::parse(3, blocks)));
    GroupIndexer ci(3, s.chi_dim()), bi(3, s.alt_dim());
    for (int trial = 0; trial < 25 && pass; ++trial) {
      ClassPoint pt{ci.decode(d(rng) % ci.count()), bi.decode(d(rng) % bi.count())};
      HopfStructure h = build_hopf(s, pt);
      FunctionTable raw(h.indexer().count());
      for (auto& x : raw) x = d(rng);
      raw[0] = 0;
      FunctionTable g(raw.size());
      for (std::size_t a = 0; a < raw.size(); ++a)
        g[a] = (raw[h.act(1, a)] + 9 - raw[a]) % 9;  // (t-1).raw is admissible
      HopfStructure shifted = shift_by_coboundary(h, g);
      if (!check_axioms(shifted).pass || !(point_of_hopf(s, shifted) == pt)) {
        pass = false;
        detail << " shift broke the point or the axioms at blocks=" << blocks << ";";
      }
    }
  }
  if (pass) detail << "50 random admissible shifts preserve the class point and all axioms";
  report("criterion-10 coboundary shifts", pass, detail.str(), start);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion_commutative();
  criterion_two_block();
  criterion_three_block();
  criterion_rank_two();
  criterion_rank_one();
  criterion_dimensions();
  criterion_structural();
  criterion_axioms();
  criterion_oracle();
  criterion_shifts();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << std::fixed << std::setprecision(1) << secs << " s total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
