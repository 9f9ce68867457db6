#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unital/incidence.hpp"
#include "unital/perm.hpp"
#include "unital/translations.hpp"

namespace unital {

struct SubunitalReport {
  std::uint64_t p = 0;
  std::vector<Point> omega;
  Restriction restriction;
  std::optional<BlockId> containing_block;
  bool linear_space = false;
  bool ideally_embedded = false;
  std::optional<EmbeddingWitness> embedding_witness;
  bool mho_empty = false;
  /// Order of the kernel of T[p] acting on Ω_p.
  std::uint64_t kernel_order = 0;
  bool faithful = false;
  /// s when the trace structure has the parameters 2-(s^3+1, s+1, 1).
  std::optional<std::size_t> hermitian_order;
  /// Map from trace-structure points to points of hermitian_unital(s).
  std::optional<std::vector<Point>> hermitian_isomorphism;
};

/// Studies U_p = (Ω_p, B_p): containment in a block, ideal embedding,
/// faithfulness of T[p] on Ω_p, and isomorphism to a hermitian unital when
/// the parameters fit. Throws std::invalid_argument if Ω_p is empty.
SubunitalReport subunital_analysis(const Unital& u, const TranslationAtlas& atlas, std::uint64_t p);

struct ConstantIntersectionReport {
  std::uint64_t p = 0;
  /// |Ω_p ∩ B| -> number of blocks B in B_p with that intersection size.
  std::map<std::size_t, std::size_t> intersection_sizes;
  std::optional<std::size_t> constant_value;
  bool omega_is_everything = false;
  bool mho_empty = false;
  std::optional<bool> transitive_on_points;
  /// Set when the constant-intersection conclusion is not forced because a hypothesis fails.
  std::string failed_hypothesis;
  /// False only if the hypotheses hold, the size is constant, and yet Ω_p != U.
  bool consistent = true;
};

ConstantIntersectionReport constant_intersection_check(const Unital& u,
                                                       const TranslationAtlas& atlas,
                                                       std::uint64_t p);

enum class Conclusion { verified_hermitian, hypothesis_failed, undetermined };

std::string to_string(Conclusion c);

struct ClassificationReport {
  std::size_t q = 0;
  bool every_point_center = false;
  bool exists_involutory_translation = false;
  bool omega2_full = false;
  Conclusion conclusion = Conclusion::undetermined;
  std::optional<Point> witness_point;
  std::string witness;
  /// Point map onto hermitian_unital(q), verified.
  std::optional<std::vector<Point>> isomorphism;
  /// For q > 2: (q+1)^2 does not divide q^3+1.
  std::optional<bool> regular_normal_subgroup_excluded;
};

/// Checks the two hypotheses (every point a center, an involutory
/// translation exists) and, when both hold and Ω_2 = U, searches for an
/// explicit isomorphism to the hermitian unital of the same order.
ClassificationReport classify(const Unital& u, const TranslationAtlas& atlas);
ClassificationReport classify(const Unital& u, unsigned threads = 1);

struct SharplyTransitiveReport {
  std::vector<std::string> failed_preconditions;
  bool kernel_abelian = false;
  bool kernel_regular = false;
  bool tau_semiregular = false;
  bool equivalent = false;
  std::optional<DihedralReport> dihedral;
  bool preconditions_met() const { return failed_preconditions.empty(); }
};

/// G transitive on Ω, tau an involution fixing exactly one point of Ω and
/// semi-regular on the rest, M an odd-order transitive normal subgroup
/// (discovered from products of involutions when not given). Evaluates
/// M abelian / M regular on Ω / tau semi-regular on M and whether they agree.
SharplyTransitiveReport sharplytrs_suite(const PermGroup& g, std::span<const Point> omega,
                                         const Permutation& tau, const PermGroup* m = nullptr);

}  // namespace unital
