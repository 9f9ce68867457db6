#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "unital/incidence.hpp"
#include "unital/io.hpp"
#include "unital/plane.hpp"

using namespace unital;

namespace {

Incidence fano() {
  return Incidence::make(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace

TEST(Incidence, MakeRejectsBadInput) {
  EXPECT_THROW(Incidence::make(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Incidence::make(3, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Incidence::make(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  const auto inc = Incidence::make(3, {{2, 0, 1}});
  EXPECT_EQ(inc.block(0), (Block{0, 1, 2}));
}

TEST(Validation, HermitianValidAndDeletionBreaksCoverage) {
  const auto u = hermitian_unital(2);
  const auto ok = validate_unital(u.incidence(), 2);
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.v, 9u);

  auto blocks = hermitian_unital(3).incidence().blocks();
  blocks.pop_back();
  const auto bad = validate_unital(Incidence::make(28, blocks), 3);
  EXPECT_FALSE(bad.valid);
  EXPECT_FALSE(bad.pair_coverage.empty());
  EXPECT_THROW(Unital(Incidence::make(28, blocks), 3), std::invalid_argument);
}

TEST(Unital, BlockCountFormulaAndPencils) {
  for (std::size_t q : {2, 3, 4}) {
    const auto u = hermitian_unital(static_cast<std::uint32_t>(q));
    EXPECT_EQ(u.num_blocks() * (q + 1), (q * q * q + 1) * q * q);
    for (Point c = 0; c < u.num_points(); ++c) {
      ASSERT_EQ(u.pencil(c).size(), q * q);
      for (auto b : u.pencil(c)) ASSERT_TRUE(u.incidence().contains(b, c));
    }
  }
}

TEST(Unital, BlockThrough) {
  const auto u = hermitian_unital(2);
  for (Point x = 0; x < 9; ++x)
    for (Point y = 0; y < 9; ++y) {
      if (x == y) {
        EXPECT_THROW(u.block_through(x, y), std::invalid_argument);
        continue;
      }
      const auto b = u.block_through(x, y);
      EXPECT_LT(b, 12u);
      EXPECT_EQ(b, u.block_through(y, x));
      EXPECT_TRUE(u.incidence().contains(b, x) && u.incidence().contains(b, y));
    }
}

TEST(Restriction, WholeSetAndSingleBlock) {
  const auto u = hermitian_unital(2);
  std::vector<Point> all(9);
  for (Point i = 0; i < 9; ++i) all[i] = i;
  const auto r = restrict_to(u.incidence(), all);
  EXPECT_EQ(r.structure, u.incidence());
  EXPECT_TRUE(r.linear_space);
  EXPECT_FALSE(ideal_embedding_violation(u.incidence(), all).has_value());

  const auto& blk = u.block(0);
  const auto one = restrict_to(u.incidence(), blk);
  EXPECT_EQ(one.structure.num_points(), 3u);
  EXPECT_EQ(one.structure.num_blocks(), 1u);
  EXPECT_EQ(one.points, blk);
  const auto w = ideal_embedding_violation(u.incidence(), blk);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(std::binary_search(blk.begin(), blk.end(), w->point));
}

TEST(Restriction, IdealEmbeddingInheritsPencilSizes) {
  const auto u = hermitian_unital(3);
  std::vector<Point> all(u.num_points());
  for (Point i = 0; i < all.size(); ++i) all[i] = i;
  const auto r = restrict_to(u.incidence(), all);
  for (Point x = 0; x < all.size(); ++x) EXPECT_EQ(r.structure.blocks_through(x).size(), 9u);
}

TEST(Fisher, Examples) {
  const auto h3 = fisher_check(hermitian_unital(3).incidence());
  EXPECT_EQ(h3.r, 9u);
  EXPECT_TRUE(h3.inequality_holds);
  EXPECT_FALSE(h3.projective_plane);
  const auto f = fisher_check(fano());
  EXPECT_EQ(f.r, 3u);
  EXPECT_TRUE(f.projective_plane);
  const auto ag = fisher_check(affine_plane_order3());
  EXPECT_EQ(ag.r, 4u);
  EXPECT_FALSE(ag.projective_plane);
  EXPECT_THROW(fisher_check(Incidence::make(4, {{0, 1, 2}, {2, 3}})), std::invalid_argument);
}

TEST(Onan, HermitianExhaustiveAgreesWithBruteForce) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto u = hermitian_unital(q);
    EXPECT_EQ(oracle::count_onan_quadruples(u.incidence()), 0u);
    const auto r = onan_search(u.incidence());
    EXPECT_EQ(r.status, SearchStatus::exhausted);
    EXPECT_FALSE(r.witness.has_value());
  }
  const auto r4 = onan_search(hermitian_unital(4).incidence(), 0, 2);
  EXPECT_EQ(r4.status, SearchStatus::exhausted);
}

TEST(Onan, FindsConfigurationInProjectivePlane) {
  // Four lines in general position in PG(2,3) form the configuration.
  const ProjectivePlane pl(std::make_shared<const Field>(Field::make(3, 1)));
  std::vector<Block> lines;
  for (std::uint32_t l = 0; l < pl.size(); ++l) {
    auto pts = pl.points_on(l);
    lines.emplace_back(pts.begin(), pts.end());
  }
  const auto inc = Incidence::make(pl.size(), lines);
  EXPECT_GT(oracle::count_onan_quadruples(inc), 0u);
  const auto r = onan_search(inc);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(is_onan_configuration(inc, *r.witness));
  // Parallel search reports the same (least) witness.
  const auto r2 = onan_search(inc, 0, 3);
  ASSERT_TRUE(r2.witness.has_value());
  EXPECT_EQ(r2.witness->blocks, r.witness->blocks);
  EXPECT_EQ(r2.witness->points, r.witness->points);
  // A budget far below the exhaustive node count stops the search early.
  EXPECT_EQ(onan_search(hermitian_unital(3).incidence(), 10).status, SearchStatus::budget_exceeded);
}

TEST(Isomorphism, HermitianOrderTwoIsAffinePlane) {
  const auto h = hermitian_unital(2);
  const auto ag = affine_plane_order3();
  const auto r = isomorphism_search(h.incidence(), ag);
  ASSERT_TRUE(r.map.has_value());
  EXPECT_TRUE(is_isomorphism(h.incidence(), ag, *r.map));
}

TEST(Isomorphism, SelfAndMismatch) {
  const auto h3 = hermitian_unital(3);
  const auto self = isomorphism_search(h3.incidence(), h3.incidence());
  ASSERT_TRUE(self.map.has_value());
  EXPECT_TRUE(is_isomorphism(h3.incidence(), h3.incidence(), *self.map));
  const auto none = isomorphism_search(h3.incidence(), hermitian_unital(4).incidence());
  EXPECT_FALSE(none.map.has_value());
  EXPECT_EQ(none.status, SearchStatus::exhausted);
  EXPECT_FALSE(isomorphism_search(fano(), affine_plane_order3()).map.has_value());
}

TEST(IsomorphismProperty, RelabelledCopiesAreFoundBothWays) {
  std::mt19937 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto u = hermitian_unital(q);
    for (int t = 0; t < 3; ++t) {
      const auto perm = oracle::random_permutation(u.num_points(), rng);
      const auto copy = relabel(u.incidence(), perm);
      const auto ab = isomorphism_search(u.incidence(), copy);
      const auto ba = isomorphism_search(copy, u.incidence());
      ASSERT_TRUE(ab.map && ba.map);
      EXPECT_TRUE(is_isomorphism(u.incidence(), copy, *ab.map));
      EXPECT_TRUE(is_isomorphism(copy, u.incidence(), *ba.map));
    }
  }
}

TEST(IsomorphismProperty, NonIsomorphicStaysNonIsomorphicBothWays) {
  // AG(2,3) with one parallel class re-grouped is not a linear space, so not isomorphic.
  const auto ag = affine_plane_order3();
  auto blocks = ag.blocks();
  blocks.back() = {0, 4, 8};
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  const auto other = Incidence::make(9, blocks);
  EXPECT_EQ(isomorphism_search(ag, other).map.has_value(), isomorphism_search(other, ag).map.has_value());
}

TEST(UnitalIo, RoundTrip) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto u = hermitian_unital(q);
    std::stringstream ss;
    write_unital(u.incidence(), ss);
    const auto back = read_unital(ss);
    EXPECT_EQ(back, u);
    std::stringstream again;
    write_unital(back.incidence(), again);
    std::stringstream first;
    write_unital(u.incidence(), first);
    EXPECT_EQ(again.str(), first.str());
  }
}

TEST(UnitalIo, HeaderAndComments) {
  std::stringstream ss("# order two\nunital v=9 k=3  # header\n\n0 1 2\n3 4 5 # row\n6 7 8\n0 3 6\n1 4 7\n2 5 8\n"
                       "0 4 8\n1 5 6\n2 3 7\n0 5 7\n1 3 8\n2 4 6\n");
  const auto u = read_unital(ss);
  EXPECT_EQ(u.num_points(), 9u);
  EXPECT_EQ(u.num_blocks(), 12u);
}

TEST(UnitalIo, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::stringstream ss(text);
    try {
      parse_unital(ss);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("unital v=4 k=2\n0 1\n# c\n0 1\n"), 4u);
  EXPECT_EQ(line_of("unital v=4 k=2\n0 9\n"), 2u);
  EXPECT_EQ(line_of("unital v=4 k=2\n1 0\n"), 2u);
  EXPECT_EQ(line_of("unital v=4 k=2\n0 x\n"), 2u);
  EXPECT_EQ(line_of("\nunitl v=4 k=2\n"), 2u);
  EXPECT_EQ(line_of("unital v=4\n"), 1u);
  std::stringstream bad("unital v=9 k=3\n0 1 2\n");
  EXPECT_THROW(read_unital(bad), std::invalid_argument);
}
