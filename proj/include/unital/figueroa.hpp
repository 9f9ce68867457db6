#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unital/incidence.hpp"
#include "unital/perm.hpp"
#include "unital/plane.hpp"
#include "unital/translations.hpp"

namespace unital {

enum class FigType : std::uint8_t { I = 1, II = 2, III = 3 };

std::string to_string(FigType t);

struct ProjectiveAxiomReport {
  bool line_sizes_ok = true;
  bool point_degrees_ok = true;
  bool two_points_one_line = true;
  bool two_lines_one_point = true;
  bool quadrangle = false;
  /// First offending (point, point) or (line, line) pair, or (line, size) for a size failure.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;
  std::string detail;
  bool ok() const {
    return line_sizes_ok && point_degrees_ok && two_points_one_line && two_lines_one_point &&
           quadrangle;
  }
};

/// Figueroa plane of order q^6 on the points and lines of PG(2, F_{q^6}).
///
/// alpha is the coordinatewise map x -> x^(q^2), of order 3. A point P is
/// of type I if fixed by alpha, type II if P, P^alpha, P^alpha^2 are
/// distinct and collinear, type III if they form a triangle; dually for
/// lines. For type III elements mu(P) = line through P^alpha and P^alpha^2,
/// mu(l) = meet of l^alpha and l^alpha^2. A type III point P lies on a type
/// III line l iff the point mu(l) lies on the line mu(P); all other
/// incidences are the classical ones.
class FigPlane {
 public:
  /// Throws std::invalid_argument unless q is a prime power with q^6 <= 2^20.
  explicit FigPlane(std::uint32_t q, unsigned threads = 1);

  const ProjectivePlane& plane() const { return plane_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t order() const { return plane_.order(); }
  std::uint32_t size() const { return plane_.size(); }

  FigType point_type(std::uint32_t p) const { return point_type_[p]; }
  FigType line_type(std::uint32_t l) const { return line_type_[l]; }
  /// Number of points (resp. lines) of each type, indexed I, II, III.
  std::array<std::size_t, 3> point_type_counts() const;
  std::array<std::size_t, 3> line_type_counts() const;

  /// alpha on indices; points and lines use the same formula.
  std::uint32_t alpha(std::uint32_t index) const { return alpha_[index]; }
  const std::vector<std::uint32_t>& alpha_map() const { return alpha_; }

  /// Throws std::invalid_argument unless the argument has type III.
  std::uint32_t mu_point(std::uint32_t p) const;
  std::uint32_t mu_line(std::uint32_t l) const;

  bool incident(std::uint32_t p, std::uint32_t l) const;

  /// Points on a line under the modified incidence, ascending.
  const std::vector<std::uint32_t>& points_on(std::uint32_t l) const { return line_points_[l]; }
  const std::vector<std::uint32_t>& lines_through(std::uint32_t p) const {
    return point_lines_[p];
  }

  /// Exhaustive check of the projective plane axioms of order q^6.
  ProjectiveAxiomReport validate(unsigned threads = 1) const;

  /// alpha maps every line's point set onto the point set of its image line.
  bool alpha_is_collineation() const;

 private:
  std::uint32_t q_;
  ProjectivePlane plane_;
  std::vector<std::uint32_t> alpha_;
  std::vector<FigType> point_type_;
  std::vector<FigType> line_type_;
  // Indexed by plane index; only meaningful for type III.
  std::vector<std::uint32_t> mu_point_;
  std::vector<std::uint32_t> mu_line_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
};

struct PolarityReport {
  bool involutory = false;
  bool incidence_reversing = false;
  bool commutes_with_alpha = false;
  std::uint64_t pairs_checked = 0;
  /// (point, line) pair where incidence is not reversed.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;
  bool ok() const { return involutory && incidence_reversing && commutes_with_alpha; }
};

struct FigPolarity {
  /// Point index -> line index and line index -> point index (same formula).
  std::vector<std::uint32_t> map;
  PolarityReport report;
};

/// Candidate x -> x^(q^3) checked over all point/line pairs of the modified
/// incidence. Throws std::runtime_error with the counterexample if it fails.
FigPolarity build_fig_polarity(const FigPlane& fig, unsigned threads = 1);

struct FigueroaUnital {
  Unital unital;
  /// Unital point -> plane point index (ascending).
  std::vector<std::uint32_t> plane_point;
  std::vector<FigType> type;
  /// Block -> the Fig line it is the trace of.
  std::vector<std::uint32_t> block_line;
  /// alpha restricted to the unital.
  Permutation alpha;
};

/// Absolute points of the polarity with traces of the non-tangent lines.
FigueroaUnital build_polar_unital(const FigPlane& fig, const FigPolarity& pi);

/// Unital points of type I, ascending.
std::vector<Point> hermitian_subunital(const FigueroaUnital& uf);

struct FigueroaTheorems {
  std::vector<Point> h;
  bool omega2_is_h = false;
  bool mho_is_complement = false;
  bool all_involutions = false;
  std::size_t nontrivial_translations = 0;
  /// Orders of trs(c) for c in H.
  std::vector<std::size_t> center_group_orders;
  std::uint64_t t2_order = 0;
  /// Order of T[2] restricted to H.
  std::uint64_t t2_on_h_order = 0;
  bool t2_transitive_on_h = false;
  bool t2_two_transitive_on_h = false;
  bool h_invariant = false;
  bool alpha_automorphism = false;
  std::uint64_t alpha_order = 0;
  bool alpha_trivial_on_omega2 = false;
  bool alpha_nontrivial = false;
  /// Everything except two-transitivity.
  bool ok() const;
};

FigueroaTheorems verify_figueroa_theorems(const FigueroaUnital& uf, const TranslationAtlas& atlas);

}  // namespace unital
