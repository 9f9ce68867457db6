#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unital {

using Point = std::uint32_t;
using BlockId = std::uint32_t;
using Block = std::vector<Point>;

/// Finite incidence structure on points 0..v-1.
///
/// Blocks are stored in canonical form: each block strictly increasing,
/// block list sorted lexicographically, no repeated blocks. A v x v pair
/// table records the block joining two points (or that none / several do).
class Incidence {
 public:
  Incidence() = default;

  /// Canonicalizes and validates. Throws std::invalid_argument on an out of
  /// range point, a repeated point inside a block or a repeated block.
  static Incidence make(std::size_t v, std::vector<Block> blocks);

  std::size_t num_points() const { return v_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(BlockId b) const { return blocks_[b]; }
  std::span<const BlockId> blocks_through(Point x) const { return point_index_[x]; }

  bool contains(BlockId b, Point x) const;

  /// Block joining x and y when exactly one exists. Throws std::invalid_argument if x == y.
  std::optional<BlockId> block_through(Point x, Point y) const;
  /// Number of blocks containing both x and y.
  std::size_t pair_multiplicity(Point x, Point y) const;

  /// Index of a block given as a sorted point list.
  std::optional<BlockId> find_block(std::span<const Point> sorted) const;

  /// Every pair of points lies on at most one block.
  bool is_partial_linear_space() const { return partial_linear_; }
  /// Every pair of points lies on exactly one block.
  bool is_linear_space() const { return linear_; }
  /// Common block size, if all blocks have the same size.
  std::optional<std::size_t> constant_block_size() const;

  friend bool operator==(const Incidence& a, const Incidence& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t v_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::vector<BlockId>> point_index_;
  // -1 no block, -2 several blocks.
  std::vector<std::int32_t> pair_;
  bool partial_linear_ = true;
  bool linear_ = true;
};

struct UnitalValidation {
  bool valid = true;
  std::size_t v = 0;
  std::size_t q = 0;
  // First violation per category, empty when the category holds.
  std::string point_count;
  std::string block_size;
  std::string pair_coverage;
  std::string point_degree;
};

/// Checks the 2-(q^3+1, q+1, 1) design axioms and the point degree q^2.
UnitalValidation validate_unital(const Incidence& inc, std::size_t q);

/// An incidence structure known to be a unital of order q.
class Unital {
 public:
  /// Throws std::invalid_argument with the validation message if the axioms fail.
  Unital(Incidence inc, std::size_t q);
  /// Infers q from the block size.
  explicit Unital(Incidence inc);

  const Incidence& incidence() const { return inc_; }
  std::size_t order() const { return q_; }
  std::size_t num_points() const { return inc_.num_points(); }
  std::size_t num_blocks() const { return inc_.num_blocks(); }
  const Block& block(BlockId b) const { return inc_.block(b); }

  BlockId block_through(Point x, Point y) const;
  /// The q^2 blocks through c.
  std::span<const BlockId> pencil(Point c) const { return inc_.blocks_through(c); }

  friend bool operator==(const Unital& a, const Unital& b) { return a.inc_ == b.inc_; }

 private:
  Incidence inc_;
  std::size_t q_ = 0;
};

/// Trace structure on a point subset.
struct Restriction {
  Incidence structure;
  /// New index -> original point (ascending).
  std::vector<Point> points;
  /// Trace block -> originating block of the ambient structure.
  std::vector<BlockId> source_block;
  bool linear_space = false;
};

/// Traces B ∩ S with at least two points, re-indexed over S. S must be nonempty.
Restriction restrict_to(const Incidence& inc, std::span<const Point> subset);

struct EmbeddingWitness {
  Point point;
  BlockId block;
};

/// Whether every block through a point of S meets S in at least two points.
/// Returns the first violating (point, block) in index order, or nothing.
std::optional<EmbeddingWitness> ideal_embedding_violation(const Incidence& inc,
                                                          std::span<const Point> subset);

struct FisherReport {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  bool inequality_holds = false;
  bool projective_plane = false;
};

/// Fisher's inequality r >= k for a linear space with constant line size
/// k > 2 and more than one line. Throws std::invalid_argument otherwise.
FisherReport fisher_check(const Incidence& inc);

struct OnanWitness {
  std::array<BlockId, 4> blocks;
  /// points[i] is the intersection of the i-th block pair in the order
  /// (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
  std::array<Point, 6> points;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

struct OnanResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<OnanWitness> witness;
  std::uint64_t nodes = 0;
};

/// Searches for four blocks pairwise meeting in six distinct points (an
/// O'Nan configuration). Deterministic: reports the first witness in the
/// order (first block, shared point, second block, ...). `budget` caps the
/// number of candidate third-block pairs examined; 0 means exhaustive.
OnanResult onan_search(const Incidence& inc, std::uint64_t budget = 0, unsigned threads = 1);

/// Independent check that a witness satisfies the configuration definition.
bool is_onan_configuration(const Incidence& inc, const OnanWitness& w);

struct IsomorphismResult {
  SearchStatus status = SearchStatus::exhausted;
  /// map[x] = image of point x of the first structure.
  std::optional<std::vector<Point>> map;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a point bijection mapping blocks onto blocks.
/// Exhaustive unless `budget` (number of search nodes) is nonzero.
IsomorphismResult isomorphism_search(const Incidence& a, const Incidence& b,
                                     std::uint64_t budget = 0);

/// True iff `map` is a bijection taking the block set of a onto that of b.
bool is_isomorphism(const Incidence& a, const Incidence& b, std::span<const Point> map);

/// Block set of inc with every point x renamed to map[x].
Incidence relabel(const Incidence& inc, std::span<const Point> map);

/// The affine plane AG(2,3): points (x,y) in F_3^2 as 3x+y, lines y = mx+b and x = c.
Incidence affine_plane_order3();

}  // namespace unital
