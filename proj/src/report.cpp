#include "unital/report.hpp"

namespace unital::report {

namespace {

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted:
      return "exhausted";
    case SearchStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

json optional_or_null(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

}  // namespace

json validation(const UnitalValidation& r) {
  return {{"valid", r.valid},
          {"v", r.v},
          {"q", r.q},
          {"violations",
           {{"point_count", optional_or_null(r.point_count)},
            {"block_size", optional_or_null(r.block_size)},
            {"pair_coverage", optional_or_null(r.pair_coverage)},
            {"point_degree", optional_or_null(r.point_degree)}}}};
}

json permutation(const Permutation& p) { return p.images(); }

json onan(const OnanResult& r) {
  json j = {{"status", status_name(r.status)}, {"nodes", r.nodes}, {"witness", nullptr}};
  if (r.witness) j["witness"] = {{"blocks", r.witness->blocks}, {"points", r.witness->points}};
  return j;
}

json isomorphism(const IsomorphismResult& r) {
  json j = {{"status", status_name(r.status)}, {"nodes", r.nodes}, {"map", nullptr}};
  if (r.map) j["map"] = *r.map;
  return j;
}

json fisher(const FisherReport& r) {
  return {{"v", r.v},
          {"k", r.k},
          {"r", r.r},
          {"inequality_holds", r.inequality_holds},
          {"projective_plane", r.projective_plane}};
}

json center(const TranslationAtlas& a, Point c) {
  json list = json::array();
  for (const auto& t : a.translations.at(c))
    if (!t.is_identity()) list.push_back({{"images", permutation(t)}, {"order", t.order()}});
  return {{"center", c}, {"group_order", a.translations.at(c).size()}, {"translations", list}};
}

json atlas_summary(const TranslationAtlas& a) {
  json omega = json::object();
  for (const auto& [n, pts] : a.omega) omega[std::to_string(n)] = pts;
  json groups = json::object();
  for (const auto& [n, g] : a.tgroups) groups[std::to_string(n)] = g.order();
  return {{"v", a.v},
          {"omega", omega},
          {"mho", a.mho},
          {"K", a.primes},
          {"T_orders", groups},
          {"centers", a.centers()}};
}

json atlas(const TranslationAtlas& a) {
  json centers = json::array();
  for (Point c = 0; c < a.v; ++c) centers.push_back(center(a, c));
  json j = atlas_summary(a);
  j["per_center"] = centers;
  return j;
}

json lemma(const LemmaCheck& r) {
  return {{"ok", r.ok()},
          {"omega_transitive", r.omega_transitive},
          {"blocks_checked", r.blocks_checked},
          {"block_failures", r.block_failures},
          {"stabilizer_transitive",
           r.stabilizer_transitive ? json(*r.stabilizer_transitive) : json(nullptr)},
          {"divisor_omegas_equal", r.divisor_omegas_equal},
          {"composite_transitive", r.composite_transitive},
          {"notes", r.notes}};
}

json congruence(const CongruenceCheck& r) {
  return {{"ok", r.ok()},
          {"n", r.n},
          {"omega_size", r.omega_size},
          {"omega_congruent", r.omega_congruent},
          {"translations_checked", r.translations_checked},
          {"cycles_ok", r.cycles_ok},
          {"cycles_inside", r.cycles_inside},
          {"cycles_outside", r.cycles_outside}};
}

json axioms(const TranslationAxioms& r) {
  return {{"ok", r.ok()},
          {"nontrivial", r.nontrivial},
          {"fixed_points_ok", r.fixed_points_ok},
          {"orders_prime_power", r.orders_prime_power},
          {"groups_closed", r.groups_closed},
          {"all_verified", r.all_verified}};
}

json subunital(const SubunitalReport& r) {
  json j = {{"p", r.p},
            {"omega", r.omega},
            {"trace_points", r.restriction.structure.num_points()},
            {"trace_blocks", r.restriction.structure.num_blocks()},
            {"contained_in_block", r.containing_block.has_value()},
            {"containing_block", r.containing_block ? json(*r.containing_block) : json(nullptr)},
            {"linear_space", r.linear_space},
            {"ideally_embedded", r.ideally_embedded},
            {"embedding_witness", nullptr},
            {"mho_empty", r.mho_empty},
            {"kernel_order", r.kernel_order},
            {"faithful", r.faithful},
            {"hermitian_order", r.hermitian_order ? json(*r.hermitian_order) : json(nullptr)},
            {"hermitian_isomorphism",
             r.hermitian_isomorphism ? json(*r.hermitian_isomorphism) : json(nullptr)}};
  if (r.embedding_witness)
    j["embedding_witness"] = {{"point", r.embedding_witness->point},
                              {"block", r.embedding_witness->block}};
  return j;
}

json constant_intersection(const ConstantIntersectionReport& r) {
  json sizes = json::object();
  for (const auto& [n, count] : r.intersection_sizes) sizes[std::to_string(n)] = count;
  return {{"p", r.p},
          {"intersection_sizes", sizes},
          {"constant_value", r.constant_value ? json(*r.constant_value) : json(nullptr)},
          {"omega_is_everything", r.omega_is_everything},
          {"mho_empty", r.mho_empty},
          {"transitive_on_points",
           r.transitive_on_points ? json(*r.transitive_on_points) : json(nullptr)},
          {"failed_hypothesis", optional_or_null(r.failed_hypothesis)},
          {"consistent", r.consistent}};
}

json classification(const ClassificationReport& r) {
  json witness = nullptr;
  if (!r.witness.empty()) {
    witness = {{"description", r.witness},
               {"point", r.witness_point ? json(*r.witness_point) : json(nullptr)}};
  }
  return {{"q", r.q},
          {"hypotheses",
           {{"every_point_center", r.every_point_center},
            {"exists_involutory_translation", r.exists_involutory_translation}}},
          {"omega2_full", r.omega2_full},
          {"conclusion", to_string(r.conclusion)},
          {"witness", witness},
          {"isomorphism", r.isomorphism ? json(*r.isomorphism) : json(nullptr)},
          {"regular_normal_subgroup_excluded",
           r.regular_normal_subgroup_excluded ? json(*r.regular_normal_subgroup_excluded)
                                              : json(nullptr)}};
}

json dihedral(const DihedralReport& r) {
  return {{"generalized_dihedral", r.generalized_dihedral},
          {"group_order", r.group_order},
          {"kernel_order", r.kernel_order},
          {"kernel_is_subgroup", r.kernel_is_subgroup},
          {"kernel_odd", r.kernel_odd},
          {"kernel_index_two", r.kernel_index_two},
          {"tau_inverts_kernel", r.tau_inverts_kernel},
          {"coset_is_conjugacy_class", r.coset_is_conjugacy_class},
          {"coset_all_involutions", r.coset_all_involutions},
          {"kernel_abelian", r.kernel_abelian},
          {"kernel_regular", r.kernel_regular},
          {"tau_semiregular_on_kernel", r.tau_semiregular_on_kernel}};
}

json sharply_transitive(const SharplyTransitiveReport& r) {
  return {{"preconditions_met", r.preconditions_met()},
          {"failed_preconditions", r.failed_preconditions},
          {"kernel_abelian", r.kernel_abelian},
          {"kernel_regular", r.kernel_regular},
          {"tau_semiregular", r.tau_semiregular},
          {"equivalent", r.equivalent},
          {"dihedral", r.dihedral ? dihedral(*r.dihedral) : json(nullptr)}};
}

json projective_axioms(const ProjectiveAxiomReport& r) {
  json ce = nullptr;
  if (r.counterexample) ce = {r.counterexample->first, r.counterexample->second};
  return {{"ok", r.ok()},
          {"line_sizes_ok", r.line_sizes_ok},
          {"point_degrees_ok", r.point_degrees_ok},
          {"two_points_one_line", r.two_points_one_line},
          {"two_lines_one_point", r.two_lines_one_point},
          {"quadrangle", r.quadrangle},
          {"counterexample", ce},
          {"detail", optional_or_null(r.detail)}};
}

json polarity(const PolarityReport& r) {
  json ce = nullptr;
  if (r.counterexample) ce = {r.counterexample->first, r.counterexample->second};
  return {{"ok", r.ok()},
          {"involutory", r.involutory},
          {"incidence_reversing", r.incidence_reversing},
          {"commutes_with_alpha", r.commutes_with_alpha},
          {"pairs_checked", r.pairs_checked},
          {"counterexample", ce}};
}

json figueroa_theorems(const FigueroaTheorems& r) {
  return {{"ok", r.ok()},
          {"H", r.h},
          {"omega2_is_H", r.omega2_is_h},
          {"mho_is_complement", r.mho_is_complement},
          {"all_involutions", r.all_involutions},
          {"nontrivial_translations", r.nontrivial_translations},
          {"center_group_orders", r.center_group_orders},
          {"T2_order", r.t2_order},
          {"T2_on_H_order", r.t2_on_h_order},
          {"T2_transitive_on_H", r.t2_transitive_on_h},
          {"T2_two_transitive_on_H", r.t2_two_transitive_on_h},
          {"H_invariant", r.h_invariant},
          {"alpha_automorphism", r.alpha_automorphism},
          {"alpha_order", r.alpha_order},
          {"alpha_trivial_on_omega2", r.alpha_trivial_on_omega2},
          {"alpha_nontrivial", r.alpha_nontrivial}};
}

json figueroa_sidecar(const FigPlane& fig, const FigueroaUnital& uf) {
  json points = json::array();
  for (Point x = 0; x < uf.plane_point.size(); ++x) {
    const auto t = fig.plane().coords(uf.plane_point[x]);
    points.push_back({{"index", x},
                      {"plane_index", uf.plane_point[x]},
                      {"coords", t},
                      {"type", to_string(uf.type[x])}});
  }
  const auto& f = fig.plane().field();
  return {{"q", fig.q()},
          {"plane_order", fig.order()},
          {"field", {{"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}}},
          {"element_encoding", "sum of c_i p^i over the polynomial basis"},
          {"points", points}};
}

json envelope(const std::string& command, const std::string& input, json body) {
  return {{"tool_version", kToolVersion}, {"command", command}, {"input", input}, {"result", std::move(body)}};
}

}  // namespace unital::report
