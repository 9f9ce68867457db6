#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unital/incidence.hpp"
#include "unital/perm.hpp"

namespace unital {

/// Automorphism of the unital fixing c and every block through c.
bool is_translation(const Unital& u, const Permutation& p, Point c);

struct TranslationSearchOptions {
  /// A nontrivial translation fixes no point besides its center, so any
  /// branch that fixes another point is cut. Disable to search blindly.
  bool prune_extra_fixed_points = true;
};

/// All translations with center c (identity included), sorted.
///
/// Backtracking over point images: every point stays on its block through c,
/// and once a block holds two assigned points its image block is known, which
/// forces the images of its remaining points. Unassigned points are branched
/// most-constrained first. Every result is re-verified with is_translation.
std::vector<Permutation> translations_at(const Unital& u, Point c,
                                         const TranslationSearchOptions& opts = {});

/// Smallest prime divisor of n > 1.
std::uint64_t smallest_prime_divisor(std::uint64_t n);

struct TranslationAtlas {
  std::size_t v = 0;
  /// Translation group per center, identity included, sorted.
  std::vector<std::vector<Permutation>> translations;
  /// n -> centers of translations of order n (n > 1), ascending.
  std::map<std::uint64_t, std::vector<Point>> omega;
  /// Centers whose translation group is trivial.
  std::vector<Point> mho;
  /// Smallest prime divisors of the orders n with T[n] nontrivial.
  std::set<std::uint64_t> primes;
  /// T[n]: group generated by all translations of order n.
  std::map<std::uint64_t, PermGroup> tgroups;

  const std::vector<Point>& omega_of(std::uint64_t n) const;
  /// All translations of order n.
  std::vector<Permutation> translations_of_order(std::uint64_t n) const;
  /// Translations of order n whose center is in `centers`.
  std::vector<Permutation> translations_of_order_on(std::uint64_t n,
                                                    const std::vector<Point>& centers) const;
  /// Number of centers whose group is nontrivial.
  std::size_t centers() const;
};

/// Runs translations_at for every center (in parallel when threads > 1) and
/// assembles the atlas in center order.
TranslationAtlas build_atlas(const Unital& u, unsigned threads = 1);

struct LemmaCheck {
  bool omega_transitive = false;
  /// Blocks B with |Ω_p ∩ B| >= 2 whose p-translations with center on B are
  /// not transitive on Ω_p ∩ B (empty when the check holds).
  std::vector<BlockId> block_failures;
  std::size_t blocks_checked = 0;
  /// Setwise block stabilizers in T[p] transitive on Ω_p ∩ B; unset when
  /// T[p] is too large to enumerate.
  std::optional<bool> stabilizer_transitive;
  /// Ω_k == Ω_n for every n present and divisor k > 1; T[n] transitive on Ω_n.
  bool divisor_omegas_equal = true;
  bool composite_transitive = true;
  std::vector<std::string> notes;
  bool ok() const;
};

/// Transitivity of T[p] on Ω_p, of p-translations with center on a block on
/// Ω_p ∩ B, and Ω_k = Ω_n for divisors. Throws std::invalid_argument if Ω_p is empty.
LemmaCheck check_lemma_trs_omega_p(const Unital& u, const TranslationAtlas& atlas,
                                   std::uint64_t p);

struct CongruenceCheck {
  std::uint64_t n = 0;
  std::size_t omega_size = 0;
  bool omega_congruent = false;
  std::size_t translations_checked = 0;
  /// Every order-n translation has all nontrivial cycles of length n, inside and outside Ω_n.
  bool cycles_ok = true;
  std::size_t cycles_inside = 0;
  std::size_t cycles_outside = 0;
  bool ok() const { return omega_congruent && cycles_ok; }
};

CongruenceCheck orbit_congruence_check(const TranslationAtlas& atlas, std::uint64_t n);

struct TranslationAxioms {
  std::size_t nontrivial = 0;
  bool fixed_points_ok = true;
  bool orders_prime_power = true;
  bool groups_closed = true;
  bool all_verified = true;
  bool ok() const { return fixed_points_ok && orders_prime_power && groups_closed && all_verified; }
};

/// Fixed-point set equals {center}; order a power of `characteristic`;
/// each trs(c) closed under composition and inversion.
TranslationAxioms check_translation_axioms(const Unital& u, const TranslationAtlas& atlas,
                                           std::uint64_t characteristic);

}  // namespace unital
