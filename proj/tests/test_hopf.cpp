#include "doctest.h"
#include "hopfext/hopf_algebra.hpp"
#include "test_util.hpp"

using namespace hopfext;

namespace {

ClassSpace two_block_space(std::uint32_t p) {
  return ClassSpace(CpModule(p, FpMatrix(p, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})));
}

std::vector<ClassPoint> all_points(const ClassSpace& s) {
  GroupIndexer ci(s.p(), s.chi_dim()), bi(s.p(), s.alt_dim());
  std::vector<ClassPoint> pts;
  for (std::size_t a = 0; a < ci.count(); ++a)
    for (std::size_t b = 0; b < bi.count(); ++b)
      pts.push_back(ClassPoint{ci.decode(a), bi.decode(b)});
  return pts;
}

// Delta(f x) = (f x) (x) (f x) for the function with exponent table f?
bool is_grouplike(const HopfStructure& h, const FunctionTable& f, std::uint32_t grade) {
  std::uint32_t mod = h.p() * h.p();
  std::size_t gcount = h.indexer().count();
  // coefficient of p_a x^i (x) p_b x^i in Delta(sum_c f(c) p_c x^i) is
  // f(a+b) + tau_i(a,b); on the right-hand side it is f(a) + f(b)
  for (std::size_t a = 0; a < gcount; ++a)
    for (std::size_t b = 0; b < gcount; ++b) {
      std::size_t ab = h.indexer().add(a, b);
      std::uint32_t lhs = (f[ab] + h.tau()[grade].at(a, b)) % mod;
      std::uint32_t rhs = (f[a] + f[b]) % mod;
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("hopf") {

TEST_CASE("dimension and unit structure") {
  ClassSpace s = two_block_space(3);
  HopfStructure h = build_hopf(s, ClassPoint{FpVec{0, 0}, FpVec{0, 0, 0}});
  CHECK(h.dim() == 81);
  // the sum of p_a x^0 acts as the identity on every basis element
  for (std::size_t v = 0; v < h.dim(); ++v) {
    std::size_t hits = 0;
    for (std::size_t a = 0; a < h.indexer().count(); ++a) {
      auto r = h.multiply(h.basis_index(a, 0), v);
      if (!r.zero) {
        CHECK(r.basis == v);
        ++hits;
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("zero point: the grade-one basis sums to a grouplike") {
  ClassSpace s = two_block_space(3);
  HopfStructure h = build_hopf(s, ClassPoint{FpVec{0, 0}, FpVec{0, 0, 0}});
  CHECK(is_grouplike(h, FunctionTable(h.indexer().count(), 0), 1));
  CHECK(h.is_cocommutative());
  for (const auto& t : h.tau()) CHECK(t.is_zero());
}

TEST_CASE("pure character points make the twisted grade-one element grouplike") {
  for (std::uint32_t p : {3u, 5u}) {
    ClassSpace s = two_block_space(p);
    GroupIndexer ci(p, s.chi_dim());
    for (std::size_t c = 1; c < ci.count(); ++c) {
      ClassPoint pt{ci.decode(c), FpVec(s.alt_dim(), 0)};
      HopfStructure h = build_hopf(s, pt);
      FunctionTable f = lift_chi_to_function(s, s.character_of(pt.chi));
      REQUIRE(is_grouplike(h, f, 1));
      REQUIRE(h.is_cocommutative());
    }
  }
}

TEST_CASE("nonzero form points are not cocommutative") {
  ClassSpace s = two_block_space(3);
  GroupIndexer bi(3, s.alt_dim());
  for (std::size_t b = 1; b < bi.count(); ++b) {
    HopfStructure h = build_hopf(s, ClassPoint{FpVec{0, 0}, bi.decode(b)});
    REQUIRE(!h.is_cocommutative());
  }
}

TEST_CASE("cocommutativity is equivalent to a vanishing form part") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& prof : BlockProfile::all_of_rank(3, n)) {
      ClassSpace s(CpModule::from_blocks(prof));
      for (const auto& pt : all_points(s)) {
        HopfStructure h = build_hopf(s, pt);
        REQUIRE(h.is_cocommutative() == vec_is_zero(pt.beta));
      }
    }
  }
}

TEST_CASE("axioms pass exhaustively at p=3 up to rank 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& prof : BlockProfile::all_of_rank(3, n)) {
      ClassSpace s(CpModule::from_blocks(prof));
      for (const auto& pt : all_points(s)) {
        HopfStructure h = build_hopf(s, pt);
        AxiomReport rep = check_axioms(h);
        REQUIRE_MESSAGE(rep.pass, rep.to_string());
        REQUIRE(point_of_hopf(s, h) == pt);
      }
    }
  }
}

TEST_CASE("axioms pass on random points at p=5") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<std::uint32_t> d(0, 4);
  for (const auto& prof : BlockProfile::all_of_rank(5, 3)) {
    ClassSpace s(CpModule::from_blocks(prof));
    for (int trial = 0; trial < 4; ++trial) {
      ClassPoint pt{FpVec(s.chi_dim()), FpVec(s.alt_dim())};
      for (auto& x : pt.chi) x = d(rng);
      for (auto& x : pt.beta) x = d(rng);
      HopfStructure h = build_hopf(s, pt);
      AxiomReport rep = check_axioms(h);
      REQUIRE_MESSAGE(rep.pass, rep.to_string());
      REQUIRE(h.is_cocommutative() == vec_is_zero(pt.beta));
    }
  }
}

TEST_CASE("corrupted cocycle fails the checker with a witness") {
  ClassSpace s = two_block_space(3);
  HopfStructure h = build_hopf(s, ClassPoint{FpVec{1, 0}, FpVec{1, 0, 0}});
  h.corrupt_tau(1, 4, 5, 1);
  AxiomReport rep = check_axioms(h);
  CHECK(!rep.pass);
  CHECK(!rep.failed_check.empty());
  CHECK(!rep.witness.empty());
}

TEST_CASE("component at the identity grade vanishes") {
  ClassSpace s = two_block_space(5);
  HopfStructure h = build_hopf(s, ClassPoint{FpVec{2, 1}, FpVec{0, 3, 1}});
  CHECK(h.tau()[0].is_zero());
  // phi_p applied to tau(t) vanishes as well
  CHECK(norm_on_table(s, h.tau()[1], 5).is_zero());
}

TEST_CASE("coboundary shifts preserve the class point and the axioms") {
  ClassSpace s = two_block_space(3);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::uint32_t> d(0, 8);
  GroupIndexer ci(3, s.chi_dim()), bi(3, s.alt_dim());
  for (int trial = 0; trial < 12; ++trial) {
    ClassPoint pt{ci.decode(d(rng) % ci.count()), bi.decode(d(rng) % bi.count())};
    HopfStructure h = build_hopf(s, pt);
    // admissible g = (t-1).h for a random function h
    FunctionTable raw(h.indexer().count());
    for (auto& x : raw) x = d(rng);
    raw[0] = 0;
    FunctionTable g(raw.size());
    for (std::size_t a = 0; a < raw.size(); ++a)
      g[a] = (raw[h.act(1, a)] + 9 - raw[a]) % 9;
    HopfStructure shifted = shift_by_coboundary(h, g);
    REQUIRE(check_axioms(shifted).pass);
    REQUIRE(point_of_hopf(s, shifted) == pt);
  }
}

TEST_CASE("zero shift and character shifts change nothing") {
  ClassSpace s = two_block_space(3);
  ClassPoint pt{FpVec{1, 2}, FpVec{0, 1, 0}};
  HopfStructure h = build_hopf(s, pt);
  HopfStructure same = shift_by_coboundary(h, FunctionTable(h.indexer().count(), 0));
  CHECK(same.tau() == h.tau());
  // a character in the kernel of the dual norm: additive homs die under
  // the coboundary, so the tables are literally unchanged
  Subspace norm_ker = kernel(norm_operator(s.dual_T(), 3));
  REQUIRE(norm_ker.dim() > 0);
  FpVec chi = norm_ker.basis()[0];
  FunctionTable g(h.indexer().count());
  for (std::size_t a = 0; a < g.size(); ++a)
    g[a] = 3 * vec_dot(chi, h.indexer().decode(a), 3);
  HopfStructure shifted = shift_by_coboundary(h, g);
  CHECK(shifted.tau() == h.tau());
}

TEST_CASE("inadmissible shifts are rejected") {
  ClassSpace s(CpModule::trivial(3, 1));
  HopfStructure h = build_hopf(s, ClassPoint{FpVec{0}, FpVec{}});
  FunctionTable g(3, 0);
  g[1] = 1;  // norm = 3 * g != 0 mod 9
  CHECK_THROWS_AS(shift_by_coboundary(h, g), std::invalid_argument);
}

TEST_CASE("json export validates and rejects corruption") {
  ClassSpace s(CpModule::trivial(3, 1));
  HopfStructure h = build_hopf(s, ClassPoint{FpVec{1}, FpVec{}});
  std::string text = hopf_to_json(h, check_axioms(h));
  validate_hopf_json(text);
  // byte-identical across calls
  CHECK(text == hopf_to_json(h, check_axioms(h)));
  std::string bad = text;
  bad.replace(bad.find("hopfext-v1"), 10, "hopfext-v2");
  CHECK_THROWS_AS(validate_hopf_json(bad), std::invalid_argument);
  std::string bad2 = text;
  bad2.replace(bad2.find("\"dim\":9"), 7, "\"dim\":8");
  CHECK_THROWS_AS(validate_hopf_json(bad2), std::invalid_argument);
}

}  // TEST_SUITE
