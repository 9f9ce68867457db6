#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unital/incidence.hpp"

namespace unital {

/// Bijection of {0, ..., n-1}. Products act on the right: x^(ab) = (x^a)^b,
/// so `a * b` applies a first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t n);
  /// Product of disjoint cycles on n points.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  /// Conjugate by g: g^-1 * this * g.
  Permutation conjugate(const Permutation& g) const;

  bool is_identity() const;
  std::uint64_t order() const;
  std::vector<Point> fixed_points() const;
  std::vector<std::size_t> cycle_lengths() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// Whether p maps every block of inc onto a block.
bool is_automorphism(const Incidence& inc, const Permutation& p);

/// Permutation group given by generators, with a base and strong generating
/// set computed by the deterministic Schreier-Sims algorithm. Base points
/// listed in `base_prefix` come first, in that order, so the stabilizer
/// chain passes through their pointwise stabilizers.
class PermGroup {
 public:
  static constexpr std::uint64_t kEnumerationLimit = 1'000'000;

  /// Throws std::invalid_argument if generator degrees differ from `degree`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  /// All elements, sorted. Throws std::length_error above kEnumerationLimit.
  std::vector<Permutation> elements() const;

  std::vector<Point> base() const;
  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;
  /// Pointwise stabilizer of the given points.
  PermGroup pointwise_stabilizer(std::span<const Point> points) const;

  std::vector<Point> orbit(Point x) const;
  /// Orbits of the whole domain, each sorted, ordered by least element.
  std::vector<std::vector<Point>> orbits() const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    // Indexed by point; transversal[x] maps base to x, empty when x is off the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  void schreier_sims();
  void build_orbit(Level& level) const;
  void append_level_for(const Permutation& h);
  // Strips h through levels from `start`; returns the residue and the level reached.
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t start) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Orbits of the group generated by `gens` on [0, degree).
std::vector<std::vector<Point>> orbits_of(std::size_t degree, std::span<const Permutation> gens);

/// Throws std::invalid_argument unless X is invariant under every generator.
bool is_transitive(const PermGroup& g, std::span<const Point> x);
/// Transitive, and the stabilizer of the least point of X is transitive on the rest.
bool is_two_transitive(const PermGroup& g, std::span<const Point> x);

/// Action of g on an invariant set X, as a group on [0, |X|) (X sorted).
PermGroup restrict_action(const PermGroup& g, std::span<const Point> x);
Permutation restrict_permutation(const Permutation& p, std::span<const Point> sorted_x);

/// Elements fixing the point set B setwise, by filtering the element list.
PermGroup setwise_block_stabilizer(const PermGroup& g, std::span<const Point> block);

/// Orbit lengths of the two-point stabilizer G_{x,y} on the whole domain, sorted.
std::vector<std::size_t> two_point_stabilizer_orbits(const PermGroup& g, Point x, Point y);
/// The orbits themselves, ordered by least element.
std::vector<std::vector<Point>> two_point_stabilizer_orbit_sets(const PermGroup& g, Point x,
                                                                Point y);

struct GleasonCertificate {
  Point point;
  Permutation element;
};

struct GleasonReport {
  enum class Outcome { transitive, bad_certificate, not_transitive };
  Outcome outcome = Outcome::transitive;
  /// Offending point for bad_certificate, or an unreached point for not_transitive.
  std::optional<Point> location;
  std::string detail;
};

/// Verifies each certificate (order exactly p, fixes its point and no other
/// point of X) and then transitivity on X of the group they generate.
GleasonReport gleason_check(std::span<const GleasonCertificate> certs, std::span<const Point> x,
                            std::uint64_t p);

struct DihedralReport {
  bool tau_involution = false;
  bool tau_in_group = false;
  std::uint64_t group_order = 0;
  /// M: products of two involutions.
  std::uint64_t kernel_order = 0;
  bool kernel_is_subgroup = false;
  bool kernel_odd = false;
  bool kernel_index_two = false;
  bool tau_inverts_kernel = false;
  bool coset_is_conjugacy_class = false;
  bool coset_all_involutions = false;
  bool kernel_abelian = false;
  bool kernel_regular = false;
  bool tau_semiregular_on_kernel = false;
  bool generalized_dihedral = false;
  std::vector<Permutation> kernel;
};

/// Throws std::invalid_argument if tau is not an involution. `domain` is the
/// set on which regularity of M is judged (all points when empty).
DihedralReport generalized_dihedral_check(const PermGroup& g, const Permutation& tau,
                                          std::span<const Point> domain = {});

struct InvolutionReport {
  std::size_t involutions = 0;
  bool unique = false;
  std::optional<Permutation> involution;
  /// Set when N was supplied and a unique involution exists.
  std::optional<bool> inverts_normal_subgroup;
};

InvolutionReport unique_involution_check(const PermGroup& q,
                                         const PermGroup* normal_subgroup = nullptr);

}  // namespace unital
