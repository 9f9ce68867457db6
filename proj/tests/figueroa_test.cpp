#include <gtest/gtest.h>

#include <algorithm>

#include "unital/figueroa.hpp"
#include "unital/structure.hpp"

using namespace unital;

namespace {

struct Built {
  FigPlane fig{2};
  FigPolarity pi = build_fig_polarity(fig);
  FigueroaUnital uf = build_polar_unital(fig, pi);
  TranslationAtlas atlas = build_atlas(uf.unital);
};

const Built& built() {
  static const Built b;
  return b;
}

}  // namespace

TEST(FigPlane, TypeCounts) {
  const auto& fig = built().fig;
  const auto pc = fig.point_type_counts();
  EXPECT_EQ(pc[0], 21u);
  EXPECT_EQ(pc[0] + pc[1] + pc[2], 4161u);
  EXPECT_EQ(pc[1] % 3, 0u);
  EXPECT_EQ(pc[2] % 3, 0u);
  // Frozen from enumeration.
  EXPECT_EQ(pc[1], 1260u);
  EXPECT_EQ(pc[2], 2880u);
  EXPECT_EQ(fig.line_type_counts(), pc);
  for (std::uint32_t p = 0; p < fig.size(); ++p) ASSERT_EQ(fig.point_type(fig.alpha(p)), fig.point_type(p));
}

TEST(FigPlane, TypeOneIsTheSubfieldPlane) {
  const auto& fig = built().fig;
  const auto& f = fig.plane().field();
  for (std::uint32_t p = 0; p < fig.size(); ++p) {
    const auto c = fig.plane().coords(p);
    const bool sub = f.in_subfield(c[0], 2) && f.in_subfield(c[1], 2) && f.in_subfield(c[2], 2);
    ASSERT_EQ(sub, fig.point_type(p) == FigType::I);
  }
}

TEST(FigPlane, MuMaps) {
  const auto& fig = built().fig;
  std::vector<char> hit(fig.size(), 0);
  for (std::uint32_t p = 0; p < fig.size(); ++p) {
    if (fig.point_type(p) != FigType::III) {
      EXPECT_THROW(fig.mu_point(p), std::invalid_argument);
      continue;
    }
    const auto m = fig.mu_point(p);
    ASSERT_EQ(fig.line_type(m), FigType::III);
    ASSERT_FALSE(hit[m]);
    hit[m] = 1;
    ASSERT_EQ(fig.mu_point(fig.alpha(p)), fig.alpha(m));
    ASSERT_EQ(fig.point_type(fig.mu_line(m)), FigType::III);
  }
}

TEST(FigPlane, ProjectiveAxioms) {
  const auto r = built().fig.validate();
  EXPECT_TRUE(r.ok()) << r.detail;
  EXPECT_TRUE(built().fig.alpha_is_collineation());
}

TEST(FigPlane, IncidenceMatchesLineLists) {
  const auto& fig = built().fig;
  for (std::uint32_t l = 0; l < fig.size(); l += 17) {
    const auto& pts = fig.points_on(l);
    for (std::uint32_t p = 0; p < fig.size(); ++p)
      ASSERT_EQ(fig.incident(p, l), std::binary_search(pts.begin(), pts.end(), p));
  }
  // Type I points keep their classical incidences.
  for (std::uint32_t p = 0; p < fig.size(); ++p) {
    if (fig.point_type(p) != FigType::I) continue;
    for (std::uint32_t l = 0; l < fig.size(); l += 5) ASSERT_EQ(fig.incident(p, l), fig.plane().incident(p, l));
  }
}

TEST(FigPlane, RejectsNonPrimePowers) { EXPECT_THROW(FigPlane(6), std::invalid_argument); }

TEST(FigPolarity, Verified) {
  const auto& r = built().pi.report;
  EXPECT_TRUE(r.involutory);
  EXPECT_TRUE(r.incidence_reversing);
  EXPECT_TRUE(r.commutes_with_alpha);
  EXPECT_EQ(r.pairs_checked, 4161ull * 4161ull);
}

TEST(PolarUnital, Counts) {
  const auto& u = built().uf.unital;
  EXPECT_EQ(u.num_points(), 513u);
  EXPECT_EQ(u.num_blocks(), 3648u);
  EXPECT_EQ(u.incidence().constant_block_size(), std::optional<std::size_t>(9));
  EXPECT_TRUE(validate_unital(u.incidence(), 8).valid);
  EXPECT_EQ(u.pencil(0).size(), 64u);
}

TEST(PolarUnital, AlphaPermutesPointsAndBlocks) {
  const auto& uf = built().uf;
  EXPECT_TRUE(is_automorphism(uf.unital.incidence(), uf.alpha));
  EXPECT_EQ(uf.alpha.order(), 3u);
  for (BlockId b = 0; b < uf.unital.num_blocks(); ++b) {
    Block img;
    for (auto x : uf.unital.block(b)) img.push_back(uf.alpha(x));
    std::sort(img.begin(), img.end());
    const auto target = uf.unital.incidence().find_block(img);
    ASSERT_TRUE(target.has_value());
    ASSERT_EQ(uf.block_line[*target], built().fig.alpha(uf.block_line[b]));
  }
}

TEST(PolarUnital, OnanWitness) {
  const auto& u = built().uf.unital;
  const auto r = onan_search(u.incidence());
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(is_onan_configuration(u.incidence(), *r.witness));
}

TEST(HermitianSubunital, IsHermitianOfOrderTwo) {
  const auto& uf = built().uf;
  const auto h = hermitian_subunital(uf);
  ASSERT_EQ(h.size(), 9u);
  const auto r = restrict_to(uf.unital.incidence(), h);
  EXPECT_TRUE(r.linear_space);
  EXPECT_TRUE(validate_unital(r.structure, 2).valid);
  const auto iso = isomorphism_search(r.structure, hermitian_unital(2).incidence());
  ASSERT_TRUE(iso.map.has_value());
}

TEST(FigueroaTranslations, GroupStructureOnH) {
  const auto& b = built();
  const auto r = verify_figueroa_theorems(b.uf, b.atlas);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.omega2_is_h);
  EXPECT_TRUE(r.mho_is_complement);
  EXPECT_EQ(b.atlas.mho.size(), 504u);
  EXPECT_EQ(b.atlas.primes, (std::set<std::uint64_t>{2}));
  EXPECT_TRUE(r.all_involutions);
  EXPECT_EQ(r.nontrivial_translations, 9u);
  EXPECT_EQ(r.center_group_orders, std::vector<std::size_t>(9, 2));
  EXPECT_TRUE(r.h_invariant);
  // The group on H is C2 ⋉ C3^2: transitive, order 18, not two-transitive.
  EXPECT_EQ(r.t2_on_h_order, 18u);
  EXPECT_TRUE(r.t2_transitive_on_h);
  EXPECT_FALSE(r.t2_two_transitive_on_h);
  EXPECT_TRUE(r.alpha_trivial_on_omega2 && r.alpha_nontrivial && r.alpha_order == 3);
}

TEST(FigueroaTranslations, InvolutionsFixOnlyTheirCenter) {
  const auto& a = built().atlas;
  const auto c = orbit_congruence_check(a, 2);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.cycles_outside, 9u * 252u);
  EXPECT_EQ(c.cycles_inside, 9u * 4u);
  EXPECT_TRUE(check_translation_axioms(built().uf.unital, a, 2).ok());
  EXPECT_TRUE(check_lemma_trs_omega_p(built().uf.unital, a, 2).ok());
}

TEST(FigueroaStructure, SubunitalAndClassification) {
  const auto& b = built();
  const auto s = subunital_analysis(b.uf.unital, b.atlas, 2);
  EXPECT_FALSE(s.containing_block.has_value());
  EXPECT_FALSE(s.ideally_embedded);
  ASSERT_TRUE(s.embedding_witness.has_value());
  EXPECT_TRUE(s.hermitian_isomorphism.has_value());
  EXPECT_FALSE(s.mho_empty);
  // alpha is nontrivial yet acts trivially on Ω_2, so Aut(U) is not faithful there.
  EXPECT_FALSE(b.uf.alpha.is_identity());
  for (auto x : s.omega) EXPECT_EQ(b.uf.alpha(x), x);

  const auto ci = constant_intersection_check(b.uf.unital, b.atlas, 2);
  EXPECT_EQ(ci.constant_value, std::optional<std::size_t>(3));
  EXPECT_EQ(ci.intersection_sizes.at(3), 12u);
  EXPECT_FALSE(ci.omega_is_everything);
  EXPECT_FALSE(ci.failed_hypothesis.empty());
  EXPECT_TRUE(ci.consistent);

  const auto c = classify(b.uf.unital, b.atlas);
  EXPECT_EQ(c.conclusion, Conclusion::hypothesis_failed);
  ASSERT_TRUE(c.witness_point.has_value());
  EXPECT_TRUE(b.atlas.translations[*c.witness_point].size() == 1);
  EXPECT_NE(b.uf.type[*c.witness_point], FigType::I);
}
