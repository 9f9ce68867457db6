#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "oracles.hpp"
#include "unital/plane.hpp"
#include "unital/translations.hpp"

using namespace unital;

namespace {

std::vector<Point> range(std::size_t n) {
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Point>(i);
  return out;
}

// The unitary transvection x -> x + h(x, a) a of PG(2,4), a absolute,
// h(x, y) = sum x_i y_i^2, restricted to the hermitian unital of order 2.
Permutation transvection_q2(const HermitianUnital& h, Point center) {
  const auto field = std::make_shared<const Field>(Field::make(2, 2));
  const ProjectivePlane pl(field);
  const Field& f = *field;
  const Triple a = pl.coords(h.plane_point[center]);
  std::vector<Point> img(h.plane_point.size());
  for (Point i = 0; i < img.size(); ++i) {
    const Triple x = pl.coords(h.plane_point[i]);
    Field::Elem hxa = 0;
    for (int k = 0; k < 3; ++k) hxa = f.add(hxa, f.mul(x[k], f.mul(a[k], a[k])));
    Triple y;
    for (int k = 0; k < 3; ++k) y[k] = f.add(x[k], f.mul(hxa, a[k]));
    const auto target = pl.index_of(y);
    const auto it = std::find(h.plane_point.begin(), h.plane_point.end(), target);
    img[i] = static_cast<Point>(it - h.plane_point.begin());
  }
  return Permutation(img);
}

}  // namespace

TEST(IsTranslation, IdentityAndTransvection) {
  const auto h = build_hermitian_unital(2);
  const auto& u = h.unital;
  for (Point c = 0; c < 9; ++c) {
    EXPECT_TRUE(is_translation(u, Permutation::identity(9), c));
    const auto t = transvection_q2(h, c);
    EXPECT_FALSE(t.is_identity());
    EXPECT_TRUE(is_translation(u, t, c));
    EXPECT_EQ(translations_at(u, c).back(), t);
  }
}

TEST(IsTranslation, SwapBreaksBlocks) {
  const auto u = hermitian_unital(2);
  const auto swap = Permutation::from_cycles(9, {{0, 1}});
  for (Point c = 2; c < 9; ++c) EXPECT_FALSE(is_translation(u, swap, c));
}

TEST(TranslationsAt, GroupOrders) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto u = hermitian_unital(q);
    for (Point c = 0; c < u.num_points(); c += 3) {
      const auto t = translations_at(u, c);
      ASSERT_EQ(t.size(), q) << "q=" << q << " c=" << c;
      for (const auto& s : t) ASSERT_TRUE(is_translation(u, s, c));
    }
  }
}

TEST(TranslationsAt, PruningIsSound) {
  const auto u2 = hermitian_unital(2);
  for (Point c = 0; c < 9; ++c)
    EXPECT_EQ(translations_at(u2, c, {.prune_extra_fixed_points = false}), translations_at(u2, c));
  const auto u3 = hermitian_unital(3);
  for (Point c : {0u, 13u, 27u})
    EXPECT_EQ(translations_at(u3, c, {.prune_extra_fixed_points = false}), translations_at(u3, c));
}

TEST(Atlas, Hermitian) {
  const auto a2 = build_atlas(hermitian_unital(2));
  EXPECT_EQ(a2.omega_of(2), range(9));
  EXPECT_TRUE(a2.mho.empty());
  EXPECT_EQ(a2.primes, (std::set<std::uint64_t>{2}));

  const auto a3 = build_atlas(hermitian_unital(3));
  EXPECT_EQ(a3.omega_of(3), range(28));
  EXPECT_TRUE(a3.mho.empty());
  EXPECT_EQ(a3.primes, (std::set<std::uint64_t>{3}));

  // Translation groups at q=4 are elementary abelian: no translation of order 4.
  const auto a4 = build_atlas(hermitian_unital(4));
  EXPECT_EQ(a4.omega_of(2), range(65));
  EXPECT_TRUE(a4.omega_of(4).empty());
  EXPECT_EQ(a4.omega.size(), 1u);
  EXPECT_EQ(a4.tgroups.at(2).order(), 62400u);
}

TEST(Atlas, ThreadCountDoesNotMatter) {
  const auto u = hermitian_unital(3);
  const auto a = build_atlas(u, 1);
  const auto b = build_atlas(u, 4);
  EXPECT_EQ(a.translations, b.translations);
  EXPECT_EQ(a.omega, b.omega);
  EXPECT_EQ(a.mho, b.mho);
}

TEST(AtlasProperty, RelabellingConjugates) {
  std::mt19937 rng(2024);
  for (std::uint32_t q : {2u, 3u}) {
    const auto u = hermitian_unital(q);
    const auto atlas = build_atlas(u);
    for (int t = 0; t < 2; ++t) {
      const auto map = oracle::random_permutation(u.num_points(), rng);
      const Permutation p(map);
      const Unital v(relabel(u.incidence(), map), q);
      const auto other = build_atlas(v);
      for (Point c = 0; c < u.num_points(); ++c) {
        std::vector<Permutation> conj;
        for (const auto& s : atlas.translations[c]) conj.push_back(s.conjugate(p));
        std::sort(conj.begin(), conj.end());
        ASSERT_EQ(other.translations[map[c]], conj);
      }
      // The isomorphism search recovers a bijection under which the atlases
      // correspond as well.
      const auto iso = isomorphism_search(u.incidence(), v.incidence());
      ASSERT_TRUE(iso.map.has_value());
      std::vector<Point> omega_img;
      for (auto x : atlas.omega_of(q)) omega_img.push_back((*iso.map)[x]);
      std::sort(omega_img.begin(), omega_img.end());
      EXPECT_EQ(omega_img, other.omega_of(q));
    }
  }
}

TEST(Atlas, AxiomsHold) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto u = hermitian_unital(q);
    const auto atlas = build_atlas(u);
    const auto r = check_translation_axioms(u, atlas, prime_power(q).first);
    EXPECT_TRUE(r.ok()) << "q=" << q;
    EXPECT_EQ(r.nontrivial, u.num_points() * (q - 1));
  }
}

TEST(Lemma, TransitivityAndDivisors) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto u = hermitian_unital(q);
    const auto atlas = build_atlas(u);
    const auto p = prime_power(q).first;
    const auto r = check_lemma_trs_omega_p(u, atlas, p);
    EXPECT_TRUE(r.ok()) << "q=" << q;
    EXPECT_TRUE(r.omega_transitive);
    EXPECT_EQ(r.blocks_checked, u.num_blocks());
    ASSERT_TRUE(r.stabilizer_transitive.has_value());
    EXPECT_TRUE(*r.stabilizer_transitive);
    EXPECT_THROW(check_lemma_trs_omega_p(u, atlas, p == 2 ? 3 : 2), std::invalid_argument);
  }
}

TEST(Congruence, CycleStructure) {
  const auto a2 = build_atlas(hermitian_unital(2));
  const auto r2 = orbit_congruence_check(a2, 2);
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.omega_size, 9u);
  EXPECT_EQ(r2.translations_checked, 9u);
  EXPECT_EQ(r2.cycles_inside, 9u * 4u);
  EXPECT_EQ(r2.cycles_outside, 0u);
  for (const auto& t : a2.translations_of_order(2)) {
    auto lengths = t.cycle_lengths();
    std::sort(lengths.begin(), lengths.end());
    EXPECT_EQ(lengths, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  }
  const auto r3 = orbit_congruence_check(build_atlas(hermitian_unital(3)), 3);
  EXPECT_TRUE(r3.ok());
  EXPECT_EQ(r3.omega_size % 3, 1u);
}

TEST(SmallestPrimeDivisor, Values) {
  EXPECT_EQ(smallest_prime_divisor(2), 2u);
  EXPECT_EQ(smallest_prime_divisor(9), 3u);
  EXPECT_EQ(smallest_prime_divisor(35), 5u);
  EXPECT_EQ(smallest_prime_divisor(13), 13u);
  EXPECT_THROW(smallest_prime_divisor(1), std::invalid_argument);
}
