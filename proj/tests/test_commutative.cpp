#include <set>

#include "doctest.h"
#include "hopfext/commutative.hpp"
#include "hopfext/orbit_engine.hpp"
#include "test_util.hpp"

using namespace hopfext;

namespace {

AltForm hyperbolic_form(std::uint32_t p, std::size_t n) {
  FpMatrix B(p, n, n);
  B.set(0, 1, 1);
  B.set(1, 0, -1);
  return AltForm(std::move(B));
}

AltForm random_form(std::mt19937& rng, std::uint32_t p, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  FpMatrix B(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      B.set(i, j, d(rng));
      B.set(j, i, -static_cast<long long>(B.at(i, j)));
    }
  return AltForm(std::move(B));
}

}  // namespace

TEST_SUITE("commutative") {

TEST_CASE("radical basics") {
  CHECK(radical(AltForm::zero(3, 3)).dim() == 3);
  CHECK(radical(hyperbolic_form(5, 2)).dim() == 0);
  CHECK(radical(hyperbolic_form(5, 3)).dim() == 1);
  CHECK(form_width(hyperbolic_form(5, 3)) == 1);
}

TEST_CASE("radical dimension plus twice the width is the rank") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        AltForm beta = random_form(rng, p, n);
        REQUIRE(radical(beta).dim() + 2 * form_width(beta) == n);
      }
    }
  }
}

TEST_CASE("pair classification") {
  std::uint32_t p = 5;
  std::size_t n = 4;
  FpVec zero(n, 0), chi{1, 0, 0, 0};
  CHECK(classify_pair(zero, AltForm::zero(p, n)) == OrbitLabel{0, true, true});
  CHECK(classify_pair(chi, AltForm::zero(p, n)) == OrbitLabel{0, false, true});
  // width n/2 forms have zero radical, so the kernel condition is automatic
  FpMatrix B(p, n, n);
  B.set(0, 1, 1);
  B.set(1, 0, -1);
  B.set(2, 3, 1);
  B.set(3, 2, -1);
  OrbitLabel top = classify_pair(chi, AltForm(B));
  CHECK(top.width == 2);
  CHECK(!top.chi_zero);
  CHECK(top.rad_in_kernel);
  // width 1 on n=4: the radical is span{e3, e4}
  AltForm hyp = hyperbolic_form(p, n);
  CHECK(classify_pair(FpVec{0, 0, 1, 0}, hyp) == OrbitLabel{1, false, false});
  CHECK(classify_pair(FpVec{1, 0, 0, 0}, hyp) == OrbitLabel{1, false, true});
  CHECK(classify_pair(FpVec{1, 1, 0, 0}, hyp) == OrbitLabel{1, false, true});
}

TEST_CASE("kernel condition detects radical placement") {
  // n=3, width 1: radical = span{e3}
  AltForm hyp = hyperbolic_form(3, 3);
  CHECK(classify_pair(FpVec{1, 0, 0}, hyp) == OrbitLabel{1, false, true});
  CHECK(classify_pair(FpVec{0, 0, 1}, hyp) == OrbitLabel{1, false, false});
  CHECK(classify_pair(FpVec{1, 0, 2}, hyp) == OrbitLabel{1, false, false});
}

TEST_CASE("closed-form commutative counts") {
  CHECK(commutative_isoclass_count(1) == 2);
  CHECK(commutative_isoclass_count(2) == 4);
  CHECK(commutative_isoclass_count(3) == 5);
  CHECK(commutative_isoclass_count(4) == 7);
  CHECK(commutative_isoclass_count(5) == 8);
}

TEST_CASE("exhaustive labeling realizes the closed form") {
  for (std::uint32_t p : {3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n)
      REQUIRE(count_labels_exhaustive(p, n) == commutative_isoclass_count(n));
}

TEST_CASE("symplectic decomposition invariants") {
  std::mt19937 rng(99);
  for (std::uint32_t p : {3u, 5u}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 25; ++trial) {
        AltForm beta = random_form(rng, p, n);
        SymplecticBasis dec = symplectic_decomposition(beta);
        REQUIRE(dec.hyperbolic.size() == form_width(beta));
        for (std::size_t i = 0; i < dec.hyperbolic.size(); ++i) {
          auto& [x, y] = dec.hyperbolic[i];
          REQUIRE(beta.value(x, y) == 1);
          for (std::size_t j = i + 1; j < dec.hyperbolic.size(); ++j) {
            REQUIRE(beta.value(x, dec.hyperbolic[j].first) == 0);
            REQUIRE(beta.value(x, dec.hyperbolic[j].second) == 0);
            REQUIRE(beta.value(y, dec.hyperbolic[j].first) == 0);
            REQUIRE(beta.value(y, dec.hyperbolic[j].second) == 0);
          }
          for (const auto& r : dec.rad.basis()) {
            REQUIRE(beta.value(x, r) == 0);
            REQUIRE(beta.value(y, r) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("central extension of the zero point is elementary abelian") {
  ClassSpace s(CpModule::trivial(3, 2));
  GroupTable g = central_extension_group(s, ClassPoint{FpVec{0, 0}, FpVec{0}});
  CHECK(g.order == 27);
  CHECK(g.is_group());
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 3);
}

TEST_CASE("nonzero character produces an order-p^2 element") {
  ClassSpace s(CpModule::trivial(3, 2));
  GroupTable g = central_extension_group(s, ClassPoint{FpVec{1, 0}, FpVec{0}});
  CHECK(g.is_group());
  CHECK(g.is_abelian());
  CHECK(g.exponent() == 9);
}

TEST_CASE("hyperbolic form gives the exponent-p nonabelian group") {
  ClassSpace s(CpModule::trivial(5, 2));
  GroupTable g = central_extension_group(s, ClassPoint{FpVec{0, 0}, FpVec{1}});
  CHECK(g.order == 125);
  CHECK(g.is_group());
  CHECK(!g.is_abelian());
  CHECK(g.exponent() == 5);
}

TEST_CASE("central extensions are groups for every point") {
  ClassSpace s(CpModule::trivial(3, 2));
  GroupIndexer ci(3, 2), bi(3, 1);
  for (std::size_t c = 0; c < ci.count(); ++c)
    for (std::size_t b = 0; b < bi.count(); ++b) {
      GroupTable g = central_extension_group(s, ClassPoint{ci.decode(c), bi.decode(b)});
      REQUIRE(g.is_group());
      REQUIRE((g.is_abelian() == vec_is_zero(bi.decode(b))));
    }
}

TEST_CASE("labels agree with the orbit partition pointwise") {
  // two points lie in one automorphism orbit exactly when their labels match
  for (std::size_t n = 1; n <= 3; ++n) {
    CpModule m = CpModule::trivial(3, n);
    ClassSpace space(m);
    SymmetryGroup g = SymmetryGroup::of_module(m);
    OrbitReport rep = enumerate_orbits(space, aut_point_actions(space, g), OrbitSlice::Full,
                                       kDefaultPointCap, true);
    std::map<OrbitLabel, std::set<std::uint32_t>> orbit_ids_of_label;
    std::map<std::uint32_t, std::set<OrbitLabel>> labels_of_orbit;
    for (std::uint64_t idx = 0; idx < rep.point_orbit.size(); ++idx) {
      ClassPoint pt = decode_point(space, idx);
      OrbitLabel label = classify_pair(space.character_of(pt.chi), space.form_of(pt.beta));
      orbit_ids_of_label[label].insert(rep.point_orbit[idx]);
      labels_of_orbit[rep.point_orbit[idx]].insert(label);
    }
    for (const auto& [label, ids] : orbit_ids_of_label) REQUIRE(ids.size() == 1);
    for (const auto& [id, labels] : labels_of_orbit) REQUIRE(labels.size() == 1);
    REQUIRE(orbit_ids_of_label.size() == commutative_isoclass_count(n));
  }
}

TEST_CASE("extension type depends only on the label") {
  std::uint32_t p = 3;
  std::size_t n = 2;
  ClassSpace s(CpModule::trivial(p, n));
  GroupIndexer ci(p, n), bi(p, 1);
  std::map<OrbitLabel, std::vector<GroupTable>> by_label;
  for (std::size_t c = 0; c < ci.count(); ++c)
    for (std::size_t b = 0; b < bi.count(); ++b) {
      ClassPoint pt{ci.decode(c), bi.decode(b)};
      OrbitLabel label = classify_pair(s.character_of(pt.chi), s.form_of(pt.beta));
      auto& bucket = by_label[label];
      if (bucket.size() < 3) bucket.push_back(central_extension_group(s, pt));
    }
  CHECK(by_label.size() == commutative_isoclass_count(n));
  for (auto it = by_label.begin(); it != by_label.end(); ++it) {
    for (const auto& g : it->second) REQUIRE(brute_force_iso(it->second.front(), g));
    for (auto jt = std::next(it); jt != by_label.end(); ++jt)
      REQUIRE(!brute_force_iso(it->second.front(), jt->second.front()));
  }
}

}  // TEST_SUITE
