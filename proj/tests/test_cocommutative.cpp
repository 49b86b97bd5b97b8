#include <numeric>

#include "doctest.h"
#include "hopfext/cocommutative.hpp"
#include "test_util.hpp"

using namespace hopfext;

namespace {

// every extension group constructible over a module, one per class rep
std::vector<ExtGroup> all_ext_groups(const CpModule& m) {
  std::vector<ExtGroup> out;
  for (const auto& a : fixed_class_representatives(m)) out.emplace_back(m, a);
  return out;
}

}  // namespace

TEST_SUITE("cocommutative") {

TEST_CASE("trivial action with zero class is elementary abelian") {
  ExtGroup e(CpModule::trivial(3, 2), FpVec{0, 0});
  CHECK(e.table().order == 27);
  CHECK(e.table().is_group());
  CHECK(e.table().is_abelian());
  CHECK(e.table().exponent() == 3);
  CHECK(e.class_is_trivial());
}

TEST_CASE("trivial action with nonzero class has an order-p^2 element") {
  ExtGroup e(CpModule::trivial(3, 2), FpVec{1, 0});
  CHECK(e.table().is_group());
  CHECK(e.table().is_abelian());
  CHECK(e.table().exponent() == 9);
  CHECK(!e.class_is_trivial());
  auto hist = e.table().order_histogram();
  CHECK(hist[1] == 1);
  CHECK(hist[3] == 8);
  CHECK(hist[9] == 18);
}

TEST_CASE("nontrivial action with zero class is a semidirect product") {
  CpModule m = CpModule::from_blocks(BlockProfile::parse(3, "1,1"));
  ExtGroup e(m, FpVec{0, 0, 0});
  CHECK(e.table().is_group());
  CHECK(!e.table().is_abelian());
  CHECK(e.class_is_trivial());
}

TEST_CASE("distinguished element must be fixed") {
  CpModule m = CpModule::from_blocks(BlockProfile::parse(3, "1,1"));
  // the canonical layout puts the moving block last; its head is not fixed
  CHECK_THROWS_AS(ExtGroup(m, FpVec{0, 1, 0}), std::invalid_argument);
}

TEST_CASE("all constructions are groups of order p^(n+1)") {
  for (std::uint32_t p : {3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& prof : BlockProfile::all_of_rank(p, n)) {
        CpModule m = CpModule::from_blocks(prof);
        for (const auto& e : all_ext_groups(m)) {
          REQUIRE(e.table().order == std::pow(p, n + 1));
          REQUIRE(e.table().is_group());
        }
      }
    }
  }
}

TEST_CASE("lower central dimensions match nilpotent ranks for split classes") {
  for (std::uint32_t p : {3u, 5u}) {
    for (const auto& prof : BlockProfile::all_of_rank(p, 3)) {
      CpModule m = CpModule::from_blocks(prof);
      ExtGroup e(m, FpVec(3, 0));
      auto dims = e.lower_central_dims();
      FpMatrix N = m.T() - FpMatrix::identity(p, 3);
      for (std::size_t r = 0; r < dims.size(); ++r)
        REQUIRE(dims[r] == N.pow(r + 1).rank());  // gamma_{r+2} has rank (T-I)^{r+1}
      // successive quotients count blocks of size >= l
      std::vector<std::size_t> full{3};
      for (const auto& d : dims) full.push_back(d);
      for (std::size_t l = 1; l < full.size(); ++l) {
        std::size_t tail = 0;
        for (std::size_t j = l; j <= prof.m.size(); ++j) tail += prof.m[j - 1];
        REQUIRE(full[l - 1] - full[l] == tail);
      }
    }
  }
}

TEST_CASE("abelian extension groups have trivial second central term") {
  ExtGroup e(CpModule::trivial(5, 1), FpVec{2});
  auto dims = e.lower_central_dims();
  REQUIRE(dims.size() == 1);
  CHECK(dims[0] == 0);
}

TEST_CASE("isomorphism decision on the trivial action") {
  CpModule m = CpModule::trivial(3, 2);
  ExtGroup zero(m, FpVec{0, 0});
  ExtGroup a(m, FpVec{1, 0}), b(m, FpVec{2, 1});
  CHECK(ext_groups_isomorphic(a, a).verdict);
  CHECK(ext_groups_isomorphic(a, b).verdict);  // any two nonzero classes agree
  CHECK(!ext_groups_isomorphic(zero, a).verdict);
  CHECK(!ext_groups_isomorphic(a, zero).verdict);
}

TEST_CASE("profile mismatch is decisive") {
  ExtGroup a(CpModule::trivial(3, 3), FpVec{0, 0, 0});
  ExtGroup b(CpModule::from_blocks(BlockProfile::parse(3, "1,1")), FpVec{0, 0, 0});
  IsoCertificate cert = ext_groups_isomorphic(a, b);
  CHECK(!cert.verdict);
  CHECK(cert.reason.find("profile") != std::string::npos);
}

TEST_CASE("brute force oracle basics") {
  ExtGroup z9(CpModule::trivial(3, 1), FpVec{1});
  ExtGroup z33(CpModule::trivial(3, 1), FpVec{0});
  CHECK(!brute_force_iso(z9.table(), z33.table()));
  CHECK(brute_force_iso(z9.table(), z9.table()));

  std::mt19937 rng(555);
  for (const auto& prof : BlockProfile::all_of_rank(3, 2)) {
    CpModule m = CpModule::from_blocks(prof);
    for (const auto& e : all_ext_groups(m)) {
      std::vector<std::uint32_t> perm(e.table().order);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      REQUIRE(brute_force_iso(e.table(), e.table().relabeled(perm)));
    }
  }
}

TEST_CASE("oracle cap is enforced") {
  GroupTable big(244, std::vector<std::uint32_t>(244 * 244, 0));
  CHECK_THROWS_AS(brute_force_iso(big, big), std::invalid_argument);
}

TEST_CASE("decision procedure agrees with the oracle exhaustively") {
  // every pair of extension groups constructible at p=3, n <= 3
  std::vector<ExtGroup> groups;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& prof : BlockProfile::all_of_rank(3, n))
      for (auto& e : all_ext_groups(CpModule::from_blocks(prof))) groups.push_back(std::move(e));
  std::size_t pairs = 0, agreements = 0;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i; j < groups.size(); ++j) {
      if (groups[i].p() != groups[j].p() || groups[i].n() != groups[j].n()) continue;
      ++pairs;
      bool derived = ext_groups_isomorphic(groups[i], groups[j]).verdict;
      bool oracle = brute_force_iso(groups[i].table(), groups[j].table());
      if (derived == oracle) ++agreements;
      REQUIRE(derived == oracle);
    }
  CHECK(pairs == agreements);
  CHECK(pairs > 500);
}

TEST_CASE("the decision is an equivalence relation on samples") {
  CpModule m = CpModule::from_blocks(BlockProfile::parse(3, "1,1"));
  auto groups = all_ext_groups(m);
  for (const auto& a : groups) CHECK(ext_groups_isomorphic(a, a).verdict);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      CHECK(ext_groups_isomorphic(a, b).verdict == ext_groups_isomorphic(b, a).verdict);
      for (const auto& c : groups) {
        bool ab = ext_groups_isomorphic(a, b).verdict;
        bool bc = ext_groups_isomorphic(b, c).verdict;
        bool ac = ext_groups_isomorphic(a, c).verdict;
        if (ab && bc) CHECK(ac);
      }
    }
}

TEST_CASE("class count matches the cocommutative orbit count") {
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& prof : BlockProfile::all_of_rank(p, n)) {
        CpModule m = CpModule::from_blocks(prof);
        // grouplikes live in the dual module
        CpModule dual(p, m.dual_action());
        auto groups = all_ext_groups(dual);
        std::size_t classes = 0;
        std::vector<bool> taken(groups.size(), false);
        for (std::size_t i = 0; i < groups.size(); ++i) {
          if (taken[i]) continue;
          ++classes;
          for (std::size_t j = i + 1; j < groups.size(); ++j)
            if (!taken[j] && ext_groups_isomorphic(groups[i], groups[j]).verdict) taken[j] = true;
        }
        REQUIRE(classes == classify_module(m).counts.cocommutative);
      }
    }
  }
}

TEST_CASE("group table json round trip and rejection") {
  ExtGroup e(CpModule::trivial(3, 1), FpVec{1});
  std::string text = group_table_to_json(e.table());
  GroupTable back = group_table_from_json(text);
  CHECK(back.mul == e.table().mul);
  std::string corrupted = text;
  corrupted.replace(corrupted.find("hopfext-group-v1"), 16, "hopfext-group-v9");
  CHECK_THROWS_AS(group_table_from_json(corrupted), std::invalid_argument);
}

}  // TEST_SUITE
