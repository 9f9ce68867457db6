#include "unital/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unital/plane.hpp"

namespace unital {

namespace {

// s with s^3 + 1 == v and s + 1 == k, if any.
std::optional<std::size_t> unital_order_for(std::size_t v, std::optional<std::size_t> k) {
  if (!k || *k < 3) return std::nullopt;
  const std::size_t s = *k - 1;
  if (s * s * s + 1 != v) return std::nullopt;
  return s;
}

bool is_prime_power(std::size_t q) {
  try {
    prime_power(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

SubunitalReport subunital_analysis(const Unital& u, const TranslationAtlas& atlas,
                                   std::uint64_t p) {
  const auto& omega = atlas.omega_of(p);
  if (omega.empty()) throw std::invalid_argument("Ω_p is empty for p = " + std::to_string(p));
  SubunitalReport r;
  r.p = p;
  r.omega = omega;
  r.restriction = restrict_to(u.incidence(), omega);
  r.linear_space = r.restriction.linear_space;
  r.mho_empty = atlas.mho.empty();

  for (BlockId b = 0; b < u.num_blocks() && !r.containing_block; ++b) {
    const Block& blk = u.block(b);
    if (std::includes(blk.begin(), blk.end(), omega.begin(), omega.end())) r.containing_block = b;
  }

  r.embedding_witness = ideal_embedding_violation(u.incidence(), omega);
  r.ideally_embedded = !r.embedding_witness.has_value();

  const PermGroup kernel = atlas.tgroups.at(p).pointwise_stabilizer(omega);
  r.kernel_order = kernel.order();
  r.faithful = r.kernel_order == 1;

  const auto& trace = r.restriction.structure;
  if (!r.containing_block && r.linear_space) {
    r.hermitian_order = unital_order_for(trace.num_points(), trace.constant_block_size());
    if (r.hermitian_order && is_prime_power(*r.hermitian_order) && *r.hermitian_order <= 8) {
      const Unital h = hermitian_unital(static_cast<std::uint32_t>(*r.hermitian_order));
      auto iso = isomorphism_search(trace, h.incidence());
      if (iso.map && is_isomorphism(trace, h.incidence(), *iso.map))
        r.hermitian_isomorphism = std::move(iso.map);
    }
  }
  return r;
}

ConstantIntersectionReport constant_intersection_check(const Unital& u,
                                                       const TranslationAtlas& atlas,
                                                       std::uint64_t p) {
  const auto& omega = atlas.omega_of(p);
  if (omega.empty()) throw std::invalid_argument("Ω_p is empty for p = " + std::to_string(p));
  ConstantIntersectionReport r;
  r.p = p;
  std::vector<char> in(u.num_points(), 0);
  for (auto x : omega) in[x] = 1;
  for (const auto& blk : u.incidence().blocks()) {
    std::size_t n = 0;
    for (auto x : blk) n += in[x];
    if (n >= 2) ++r.intersection_sizes[n];
  }
  if (r.intersection_sizes.size() == 1) r.constant_value = r.intersection_sizes.begin()->first;
  r.omega_is_everything = omega.size() == u.num_points();
  r.mho_empty = atlas.mho.empty();
  if (!r.mho_empty)
    r.failed_hypothesis = "every point is the center of a nontrivial translation (point " +
                          std::to_string(atlas.mho.front()) + " is not)";
  if (r.constant_value && r.mho_empty) {
    std::vector<Point> all(u.num_points());
    for (Point x = 0; x < all.size(); ++x) all[x] = x;
    r.transitive_on_points = r.omega_is_everything && is_transitive(atlas.tgroups.at(p), all);
    r.consistent = *r.transitive_on_points;
  }
  return r;
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::verified_hermitian:
      return "verified-hermitian";
    case Conclusion::hypothesis_failed:
      return "hypothesis-failed";
    case Conclusion::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

ClassificationReport classify(const Unital& u, const TranslationAtlas& atlas) {
  ClassificationReport r;
  r.q = u.order();
  r.every_point_center = atlas.mho.empty();
  r.exists_involutory_translation = !atlas.omega_of(2).empty();
  r.omega2_full = atlas.omega_of(2).size() == u.num_points();
  if (r.q > 2) {
    const std::size_t q = r.q;
    r.regular_normal_subgroup_excluded = (q * q * q + 1) % ((q + 1) * (q + 1)) != 0;
  }

  if (!r.every_point_center) {
    r.conclusion = Conclusion::hypothesis_failed;
    r.witness_point = atlas.mho.front();
    r.witness = "point " + std::to_string(atlas.mho.front()) +
                " is not the center of a nontrivial translation";
    return r;
  }
  if (!r.exists_involutory_translation) {
    r.conclusion = Conclusion::hypothesis_failed;
    r.witness = "no translation of order 2";
    return r;
  }
  if (!r.omega2_full) {
    r.witness = "Ω_2 is a proper subset although both hypotheses hold";
    return r;
  }
  if (!is_prime_power(r.q) || r.q > 8) {
    r.witness = "no hermitian reference unital of order " + std::to_string(r.q);
    return r;
  }
  const Unital h = hermitian_unital(static_cast<std::uint32_t>(r.q));
  auto iso = isomorphism_search(u.incidence(), h.incidence());
  if (iso.map && is_isomorphism(u.incidence(), h.incidence(), *iso.map)) {
    r.conclusion = Conclusion::verified_hermitian;
    r.isomorphism = std::move(iso.map);
  } else {
    r.witness = "no isomorphism to the hermitian unital found";
  }
  return r;
}

ClassificationReport classify(const Unital& u, unsigned threads) {
  return classify(u, build_atlas(u, threads));
}

SharplyTransitiveReport sharplytrs_suite(const PermGroup& g, std::span<const Point> omega,
                                         const Permutation& tau, const PermGroup* m) {
  SharplyTransitiveReport r;
  auto fail = [&](std::string why) { r.failed_preconditions.push_back(std::move(why)); };

  std::vector<Point> om(omega.begin(), omega.end());
  std::sort(om.begin(), om.end());
  om.erase(std::unique(om.begin(), om.end()), om.end());
  if (om.size() <= 1) fail("Ω has at most one element");

  bool invariant = true;
  try {
    if (!is_transitive(g, om)) fail("G is not transitive on Ω");
  } catch (const std::invalid_argument&) {
    invariant = false;
    fail("Ω is not G-invariant");
  }
  if (tau.degree() != g.degree() || tau.order() != 2) {
    fail("tau is not an involution");
    return r;
  }
  if (!g.contains(tau)) fail("tau is not in G");
  std::size_t fixed = 0;
  for (auto x : om) fixed += tau(x) == x;
  if (fixed != 1) fail("tau fixes " + std::to_string(fixed) + " points of Ω, expected exactly one");

  std::optional<PermGroup> discovered;
  if (!m) {
    const auto d = generalized_dihedral_check(g, tau, om);
    if (!d.kernel_is_subgroup) {
      fail("products of involutions do not form a subgroup");
      return r;
    }
    discovered.emplace(g.degree(), d.kernel);
    m = &*discovered;
  }
  if (m->order() % 2 == 0) fail("M has even order");
  for (const auto& gen : m->generators())
    if (!g.contains(gen)) {
      fail("M is not a subgroup of G");
      break;
    }
  bool normal = true;
  for (const auto& x : g.generators())
    for (const auto& y : m->generators()) normal = normal && m->contains(y.conjugate(x));
  if (!normal) fail("M is not normal in G");
  if (invariant) {
    try {
      if (!is_transitive(*m, om)) fail("M is not transitive on Ω");
    } catch (const std::invalid_argument&) {
      fail("Ω is not M-invariant");
    }
  }
  if (!r.preconditions_met()) return r;

  const auto& mg = m->generators();
  r.kernel_abelian = true;
  for (std::size_t i = 0; i < mg.size(); ++i)
    for (std::size_t j = i + 1; j < mg.size(); ++j)
      r.kernel_abelian = r.kernel_abelian && mg[i] * mg[j] == mg[j] * mg[i];
  r.kernel_regular = m->order() == om.size();
  r.tau_semiregular = true;
  for (const auto& e : m->elements())
    if (!e.is_identity() && tau * e * tau == e) r.tau_semiregular = false;
  r.equivalent = r.kernel_abelian == r.kernel_regular && r.kernel_regular == r.tau_semiregular;
  if (r.equivalent && r.kernel_abelian) {
    std::vector<Permutation> gens = mg;
    gens.push_back(tau);
    r.dihedral = generalized_dihedral_check(PermGroup(g.degree(), std::move(gens)), tau, om);
  }
  return r;
}

}  // namespace unital
