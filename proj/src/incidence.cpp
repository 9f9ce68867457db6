#include "unital/incidence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>

#include "unital/parallel.hpp"

namespace unital {

Incidence Incidence::make(std::size_t v, std::vector<Block> blocks) {
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("block repeats a point");
    if (!b.empty() && b.back() >= v)
      throw std::invalid_argument("block point " + std::to_string(b.back()) + " out of range");
  }
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw std::invalid_argument("repeated block");

  Incidence inc;
  inc.v_ = v;
  inc.blocks_ = std::move(blocks);
  inc.point_index_.assign(v, {});
  inc.pair_.assign(v * v, -1);
  for (BlockId id = 0; id < inc.blocks_.size(); ++id) {
    const Block& b = inc.blocks_[id];
    for (std::size_t i = 0; i < b.size(); ++i) {
      inc.point_index_[b[i]].push_back(id);
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        for (auto idx : {b[i] * v + b[j], b[j] * v + b[i]}) {
          auto& slot = inc.pair_[idx];
          slot = slot == -1 ? static_cast<std::int32_t>(id) : -2;
        }
      }
    }
  }
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      const auto s = inc.pair_[x * v + y];
      if (s == -2) inc.partial_linear_ = false;
      if (s < 0) inc.linear_ = false;
    }
  }
  return inc;
}

bool Incidence::contains(BlockId b, Point x) const {
  return std::binary_search(blocks_[b].begin(), blocks_[b].end(), x);
}

std::optional<BlockId> Incidence::block_through(Point x, Point y) const {
  if (x == y) throw std::invalid_argument("block_through needs two distinct points");
  const auto s = pair_[x * v_ + y];
  if (s < 0) return std::nullopt;
  return static_cast<BlockId>(s);
}

std::size_t Incidence::pair_multiplicity(Point x, Point y) const {
  const auto s = pair_[x * v_ + y];
  if (s == -1) return 0;
  if (s >= 0) return 1;
  std::size_t n = 0;
  for (auto b : point_index_[x])
    if (contains(b, y)) ++n;
  return n;
}

std::optional<BlockId> Incidence::find_block(std::span<const Point> sorted) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sorted,
                             [](const Block& b, std::span<const Point> key) {
                               return std::lexicographical_compare(b.begin(), b.end(),
                                                                   key.begin(), key.end());
                             });
  if (it == blocks_.end() || !std::equal(it->begin(), it->end(), sorted.begin(), sorted.end()))
    return std::nullopt;
  return static_cast<BlockId>(it - blocks_.begin());
}

std::optional<std::size_t> Incidence::constant_block_size() const {
  if (blocks_.empty()) return std::nullopt;
  const std::size_t k = blocks_.front().size();
  for (const auto& b : blocks_)
    if (b.size() != k) return std::nullopt;
  return k;
}

UnitalValidation validate_unital(const Incidence& inc, std::size_t q) {
  UnitalValidation r;
  r.v = inc.num_points();
  r.q = q;
  const std::size_t v = inc.num_points();
  if (v != q * q * q + 1)
    r.point_count = "expected " + std::to_string(q * q * q + 1) + " points, found " + std::to_string(v);
  for (BlockId b = 0; b < inc.num_blocks(); ++b) {
    if (inc.block(b).size() != q + 1) {
      r.block_size = "block " + std::to_string(b) + " has " + std::to_string(inc.block(b).size()) +
                     " points, expected " + std::to_string(q + 1);
      break;
    }
  }
  for (Point x = 0; x < v && r.pair_coverage.empty(); ++x) {
    for (Point y = x + 1; y < v; ++y) {
      const auto m = inc.pair_multiplicity(x, y);
      if (m != 1) {
        r.pair_coverage = "points " + std::to_string(x) + " and " + std::to_string(y) + " lie on " +
                          std::to_string(m) + " blocks";
        break;
      }
    }
  }
  for (Point x = 0; x < v; ++x) {
    if (inc.blocks_through(x).size() != q * q) {
      r.point_degree = "point " + std::to_string(x) + " lies on " +
                       std::to_string(inc.blocks_through(x).size()) + " blocks, expected " +
                       std::to_string(q * q);
      break;
    }
  }
  r.valid = r.point_count.empty() && r.block_size.empty() && r.pair_coverage.empty() &&
            r.point_degree.empty();
  return r;
}

Unital::Unital(Incidence inc, std::size_t q) : inc_(std::move(inc)), q_(q) {
  const auto report = validate_unital(inc_, q_);
  if (!report.valid) {
    std::string msg = "not a unital of order " + std::to_string(q_) + ":";
    for (const auto* s : {&report.point_count, &report.block_size, &report.pair_coverage,
                          &report.point_degree})
      if (!s->empty()) msg += " " + *s + ";";
    throw std::invalid_argument(msg);
  }
}

namespace {

std::size_t infer_order(const Incidence& inc) {
  if (inc.num_blocks() == 0 || inc.block(0).size() < 3)
    throw std::invalid_argument("cannot infer unital order");
  return inc.block(0).size() - 1;
}

}  // namespace

Unital::Unital(Incidence inc) : Unital(inc, infer_order(inc)) {}

BlockId Unital::block_through(Point x, Point y) const { return *inc_.block_through(x, y); }

Restriction restrict_to(const Incidence& inc, std::span<const Point> subset) {
  if (subset.empty()) throw std::invalid_argument("restriction to an empty point set");
  std::vector<Point> points(subset.begin(), subset.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::int64_t> local(inc.num_points(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= inc.num_points()) throw std::invalid_argument("subset point out of range");
    local[points[i]] = static_cast<std::int64_t>(i);
  }

  std::map<Block, BlockId> traces;
  for (BlockId b = 0; b < inc.num_blocks(); ++b) {
    Block trace;
    for (auto x : inc.block(b))
      if (local[x] >= 0) trace.push_back(static_cast<Point>(local[x]));
    if (trace.size() >= 2) traces.emplace(std::move(trace), b);
  }
  Restriction r;
  std::vector<Block> blocks;
  for (auto& [trace, src] : traces) {
    blocks.push_back(trace);
    r.source_block.push_back(src);
  }
  r.structure = Incidence::make(points.size(), std::move(blocks));
  r.points = std::move(points);
  r.linear_space = r.structure.is_linear_space();
  return r;
}

std::optional<EmbeddingWitness> ideal_embedding_violation(const Incidence& inc,
                                                          std::span<const Point> subset) {
  std::vector<char> in(inc.num_points(), 0);
  for (auto x : subset) in[x] = 1;
  std::vector<Point> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto x : sorted) {
    for (auto b : inc.blocks_through(x)) {
      std::size_t n = 0;
      for (auto y : inc.block(b)) n += in[y];
      if (n < 2) return EmbeddingWitness{x, b};
    }
  }
  return std::nullopt;
}

FisherReport fisher_check(const Incidence& inc) {
  const auto k = inc.constant_block_size();
  if (!k) throw std::invalid_argument("fisher_check needs constant line size");
  if (*k <= 2) throw std::invalid_argument("fisher_check needs line size > 2");
  if (inc.num_blocks() < 2) throw std::invalid_argument("fisher_check needs more than one line");
  if (!inc.is_linear_space()) throw std::invalid_argument("fisher_check needs a linear space");
  FisherReport r;
  r.v = inc.num_points();
  r.k = *k;
  r.r = (r.v - 1) / (r.k - 1);
  r.inequality_holds = r.r >= r.k;
  r.projective_plane = r.r == r.k && r.v == r.k * r.k - r.k + 1;
  return r;
}

namespace {

std::optional<Point> common_point(const Block& a, const Block& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return *i;
  }
  return std::nullopt;
}

// Search for configurations whose first block is b1. Returns false once the
// shared node budget is exhausted.
bool onan_from(const Incidence& inc, BlockId b1, std::uint64_t budget, std::uint64_t& nodes,
               std::optional<OnanWitness>& out) {
  const Block& B1 = inc.block(b1);
  for (Point a : B1) {
    for (BlockId b2 : inc.blocks_through(a)) {
      if (b2 == b1) continue;
      const Block& B2 = inc.block(b2);
      for (Point b : B1) {
        if (b == a) continue;
        for (Point c : B2) {
          if (c == a) continue;
          const auto b3 = inc.block_through(b, c);
          if (!b3) continue;
          if (budget != 0 && nodes >= budget) return false;
          ++nodes;
          const Block& B3 = inc.block(*b3);
          for (Point d : B1) {
            if (d == a || d == b) continue;
            for (Point e : B2) {
              if (e == a || e == c) continue;
              const auto b4 = inc.block_through(d, e);
              if (!b4) continue;
              const auto f = common_point(B3, inc.block(*b4));
              if (!f) continue;
              out = OnanWitness{{b1, b2, *b3, *b4}, {a, b, d, c, e, *f}};
              return true;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

OnanResult onan_search(const Incidence& inc, std::uint64_t budget, unsigned threads) {
  if (!inc.is_partial_linear_space())
    throw std::invalid_argument("onan_search needs a partial linear space");
  OnanResult result;
  const std::size_t nb = inc.num_blocks();
  if (budget != 0 || threads <= 1) {
    for (BlockId b1 = 0; b1 < nb; ++b1) {
      std::optional<OnanWitness> w;
      if (!onan_from(inc, b1, budget, result.nodes, w)) {
        result.status = SearchStatus::budget_exceeded;
        return result;
      }
      if (w) {
        result.status = SearchStatus::found;
        result.witness = w;
        return result;
      }
    }
    return result;
  }

  // Least first block with a witness wins, independent of scheduling.
  std::atomic<std::size_t> best{nb};
  std::vector<std::optional<OnanWitness>> found(nb);
  std::vector<std::uint64_t> node_counts(nb, 0);
  parallel_for(nb, threads, [&](std::size_t b1) {
    if (b1 > best.load()) return;
    onan_from(inc, static_cast<BlockId>(b1), 0, node_counts[b1], found[b1]);
    if (found[b1]) {
      std::size_t cur = best.load();
      while (b1 < cur && !best.compare_exchange_weak(cur, b1)) {
      }
    }
  });
  const std::size_t b = best.load();
  for (std::size_t i = 0; i < nb && i <= b; ++i) result.nodes += node_counts[i];
  if (b < nb) {
    result.status = SearchStatus::found;
    result.witness = found[b];
  }
  return result;
}

bool is_onan_configuration(const Incidence& inc, const OnanWitness& w) {
  std::vector<Point> pts(w.points.begin(), w.points.end());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
  std::vector<BlockId> bls(w.blocks.begin(), w.blocks.end());
  std::sort(bls.begin(), bls.end());
  if (std::adjacent_find(bls.begin(), bls.end()) != bls.end()) return false;
  for (Point x : pts) {
    int on = 0;
    for (BlockId b : bls) on += inc.contains(b, x);
    if (on != 2) return false;
  }
  for (BlockId b : bls) {
    int has = 0;
    for (Point x : pts) has += inc.contains(b, x);
    if (has != 3) return false;
  }
  return true;
}

Incidence relabel(const Incidence& inc, std::span<const Point> map) {
  std::vector<Block> blocks;
  blocks.reserve(inc.num_blocks());
  for (const auto& b : inc.blocks()) {
    Block nb;
    nb.reserve(b.size());
    for (auto x : b) nb.push_back(map[x]);
    blocks.push_back(std::move(nb));
  }
  return Incidence::make(inc.num_points(), std::move(blocks));
}

bool is_isomorphism(const Incidence& a, const Incidence& b, std::span<const Point> map) {
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks()) return false;
  if (map.size() != a.num_points()) return false;
  std::vector<char> hit(b.num_points(), 0);
  for (auto y : map) {
    if (y >= b.num_points() || hit[y]) return false;
    hit[y] = 1;
  }
  Block img;
  for (const auto& blk : a.blocks()) {
    img.clear();
    for (auto x : blk) img.push_back(map[x]);
    std::sort(img.begin(), img.end());
    if (!b.find_block(img)) return false;
  }
  return true;
}

namespace {

// Per-point invariant: for each block through the point, the histogram of
// its intersection sizes with all other blocks; sorted.
using Fingerprint = std::vector<std::vector<std::uint32_t>>;

std::vector<Fingerprint> fingerprints(const Incidence& inc) {
  const std::size_t nb = inc.num_blocks();
  std::vector<std::vector<std::uint32_t>> hist(nb);
  std::vector<std::uint32_t> meet(nb);
  for (BlockId b = 0; b < nb; ++b) {
    std::fill(meet.begin(), meet.end(), 0);
    for (auto x : inc.block(b))
      for (auto c : inc.blocks_through(x)) ++meet[c];
    auto& h = hist[b];
    h.assign(inc.block(b).size() + 1, 0);
    for (BlockId c = 0; c < nb; ++c)
      if (c != b) ++h[meet[c]];
  }
  std::vector<Fingerprint> fp(inc.num_points());
  for (Point x = 0; x < inc.num_points(); ++x) {
    for (auto b : inc.blocks_through(x)) fp[x].push_back(hist[b]);
    std::sort(fp[x].begin(), fp[x].end());
  }
  return fp;
}

class IsoSearch {
 public:
  IsoSearch(const Incidence& a, const Incidence& b, std::vector<std::uint32_t> class_a,
            std::vector<std::uint32_t> class_b, std::uint64_t budget)
      : a_(a), b_(b), class_a_(std::move(class_a)), class_b_(std::move(class_b)),
        budget_(budget), fwd_(a.num_points(), kNone), inv_(b.num_points(), kNone),
        gmap_(a.num_blocks(), kNone), ginv_(b.num_blocks(), kNone) {}

  IsomorphismResult run() {
    IsomorphismResult r;
    const bool done = recurse(0);
    r.nodes = nodes_;
    if (found_) {
      r.status = SearchStatus::found;
      r.map = fwd_;
    } else {
      r.status = done ? SearchStatus::exhausted : SearchStatus::budget_exceeded;
    }
    return r;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  // Next point to assign: an unassigned point on the lowest mapped block, else
  // the lowest unassigned point.
  Point choose() const {
    for (BlockId blk = 0; blk < a_.num_blocks(); ++blk) {
      if (gmap_[blk] == kNone) continue;
      for (auto x : a_.block(blk))
        if (fwd_[x] == kNone) return x;
    }
    for (Point x = 0; x < a_.num_points(); ++x)
      if (fwd_[x] == kNone) return x;
    return kNone;
  }

  bool consistent(Point z, Point w) const {
    if (class_a_[z] != class_b_[w]) return false;
    for (Point x : assigned_) {
      const Point y = fwd_[x];
      const auto ma = a_.pair_multiplicity(x, z);
      if (ma != b_.pair_multiplicity(y, w)) return false;
      if (ma != 1 || !a_.is_partial_linear_space()) continue;
      const BlockId ba = *a_.block_through(x, z);
      const BlockId bb = *b_.block_through(y, w);
      if (a_.block(ba).size() != b_.block(bb).size()) return false;
      if (gmap_[ba] != kNone && gmap_[ba] != bb) return false;
      if (ginv_[bb] != kNone && ginv_[bb] != ba) return false;
    }
    return true;
  }

  // Returns false when the budget ran out.
  bool recurse(std::size_t depth) {
    if (depth == a_.num_points()) {
      if (is_isomorphism(a_, b_, fwd_)) found_ = true;
      return true;
    }
    const Point z = choose();
    std::vector<Point> candidates;
    bool on_mapped = false;
    if (a_.is_partial_linear_space()) {
      for (auto blk : a_.blocks_through(z)) {
        if (gmap_[blk] == kNone) continue;
        on_mapped = true;
        for (auto w : b_.block(gmap_[blk]))
          if (inv_[w] == kNone) candidates.push_back(w);
        break;
      }
    }
    if (!on_mapped)
      for (Point w = 0; w < b_.num_points(); ++w)
        if (inv_[w] == kNone) candidates.push_back(w);

    for (Point w : candidates) {
      if (!consistent(z, w)) continue;
      if (budget_ != 0 && nodes_ >= budget_) return false;
      ++nodes_;
      // Assign and record newly mapped blocks for undo.
      std::vector<BlockId> added;
      if (a_.is_partial_linear_space()) {
        for (Point x : assigned_) {
          if (a_.pair_multiplicity(x, z) != 1) continue;
          const BlockId ba = *a_.block_through(x, z);
          if (gmap_[ba] != kNone) continue;
          const BlockId bb = *b_.block_through(fwd_[x], w);
          gmap_[ba] = bb;
          ginv_[bb] = ba;
          added.push_back(ba);
        }
      }
      fwd_[z] = w;
      inv_[w] = z;
      assigned_.push_back(z);
      const bool ok = recurse(depth + 1);
      if (found_) return true;
      assigned_.pop_back();
      fwd_[z] = kNone;
      inv_[w] = kNone;
      for (auto ba : added) {
        ginv_[gmap_[ba]] = kNone;
        gmap_[ba] = kNone;
      }
      if (!ok) return false;
    }
    return true;
  }

  const Incidence& a_;
  const Incidence& b_;
  std::vector<std::uint32_t> class_a_;
  std::vector<std::uint32_t> class_b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  std::vector<Point> fwd_, inv_;
  std::vector<BlockId> gmap_, ginv_;
  std::vector<Point> assigned_;
};

std::vector<std::size_t> sorted_sizes(const Incidence& inc) {
  std::vector<std::size_t> s;
  for (const auto& b : inc.blocks()) s.push_back(b.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

IsomorphismResult isomorphism_search(const Incidence& a, const Incidence& b,
                                     std::uint64_t budget) {
  IsomorphismResult none;
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks() ||
      a.is_partial_linear_space() != b.is_partial_linear_space() ||
      sorted_sizes(a) != sorted_sizes(b))
    return none;

  const auto fa = fingerprints(a);
  const auto fb = fingerprints(b);
  std::map<Fingerprint, std::uint32_t> ids;
  for (const auto* fps : {&fa, &fb})
    for (const auto& f : *fps) ids.emplace(f, 0);
  std::uint32_t next = 0;
  for (auto& [f, id] : ids) id = next++;
  std::vector<std::uint32_t> ca, cb;
  for (const auto& f : fa) ca.push_back(ids.at(f));
  for (const auto& f : fb) cb.push_back(ids.at(f));
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return none;

  return IsoSearch(a, b, std::move(ca), std::move(cb), budget).run();
}

Incidence affine_plane_order3() {
  auto pt = [](std::uint32_t x, std::uint32_t y) { return 3 * (x % 3) + (y % 3); };
  std::vector<Block> lines;
  for (std::uint32_t m = 0; m < 3; ++m)
    for (std::uint32_t c = 0; c < 3; ++c) {
      Block l;
      for (std::uint32_t x = 0; x < 3; ++x) l.push_back(pt(x, m * x + c));
      lines.push_back(l);
    }
  for (std::uint32_t c = 0; c < 3; ++c) lines.push_back({pt(c, 0), pt(c, 1), pt(c, 2)});
  return Incidence::make(9, std::move(lines));
}

}  // namespace unital
