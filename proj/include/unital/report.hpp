#pragma once

#include <json.hpp>

#include "unital/figueroa.hpp"
#include "unital/incidence.hpp"
#include "unital/perm.hpp"
#include "unital/structure.hpp"
#include "unital/translations.hpp"

// JSON views of the analysis results. Objects use nlohmann::json's default
// sorted keys, so dumps are byte-stable.
namespace unital::report {

using nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

json validation(const UnitalValidation& r);
json permutation(const Permutation& p);
json onan(const OnanResult& r);
json isomorphism(const IsomorphismResult& r);
json fisher(const FisherReport& r);

/// Per center: nontrivial translations (images and order) and the order of
/// trs(c); plus the omega / mho / K summary.
json atlas(const TranslationAtlas& a);
/// The translations with one center.
json center(const TranslationAtlas& a, Point c);
json atlas_summary(const TranslationAtlas& a);

json lemma(const LemmaCheck& r);
json congruence(const CongruenceCheck& r);
json axioms(const TranslationAxioms& r);
json subunital(const SubunitalReport& r);
json constant_intersection(const ConstantIntersectionReport& r);
json classification(const ClassificationReport& r);
json sharply_transitive(const SharplyTransitiveReport& r);
json dihedral(const DihedralReport& r);

json projective_axioms(const ProjectiveAxiomReport& r);
json polarity(const PolarityReport& r);
json figueroa_theorems(const FigueroaTheorems& r);
/// Unital point -> homogeneous coordinates (field elements as integers) and type.
json figueroa_sidecar(const FigPlane& fig, const FigueroaUnital& uf);

/// Wraps a section with the tool version and input descriptor.
json envelope(const std::string& command, const std::string& input, json body);

}  // namespace unital::report
