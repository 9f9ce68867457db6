#include "unital/translations.hpp"

#include <algorithm>
#include <stdexcept>

#include "unital/parallel.hpp"

namespace unital {

bool is_translation(const Unital& u, const Permutation& p, Point c) {
  if (p.degree() != u.num_points() || c >= u.num_points()) return false;
  if (p(c) != c) return false;
  for (auto b : u.pencil(c))
    for (auto x : u.block(b))
      if (!u.incidence().contains(b, p(x))) return false;
  return is_automorphism(u.incidence(), p);
}

namespace {

constexpr std::int32_t kUnset = -1;

class TranslationSearch {
 public:
  TranslationSearch(const Unital& u, Point c, bool prune)
      : u_(u), inc_(u.incidence()), c_(c), prune_(prune),
        pencil_block_(u.num_points(), 0), through_c_(u.num_blocks(), 0) {
    for (auto b : u.pencil(c)) {
      through_c_[b] = 1;
      for (auto x : u.block(b)) pencil_block_[x] = b;
    }
  }

  std::vector<Permutation> run() {
    State s;
    s.img.assign(u_.num_points(), kUnset);
    s.pre.assign(u_.num_points(), kUnset);
    s.bmap.assign(u_.num_blocks(), kUnset);
    s.brev.assign(u_.num_blocks(), kUnset);
    s.anchor.assign(u_.num_blocks(), kUnset);
    for (BlockId b = 0; b < u_.num_blocks(); ++b)
      if (through_c_[b]) s.bmap[b] = s.brev[b] = static_cast<std::int32_t>(b);
    s.img[c_] = s.pre[c_] = static_cast<std::int32_t>(c_);
    s.assigned = 1;
    if (prune_) results_.push_back(Permutation::identity(u_.num_points()));
    search(std::move(s));
    std::sort(results_.begin(), results_.end());
    results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
    return std::move(results_);
  }

 private:
  struct State {
    std::vector<std::int32_t> img, pre, bmap, brev, anchor;
    std::size_t assigned = 0;
  };

  bool assign(State& s, Point z, Point w, std::vector<Point>& queue) const {
    if (s.pre[w] != kUnset) return false;
    if (prune_ && z == w) return false;
    s.img[z] = static_cast<std::int32_t>(w);
    s.pre[w] = static_cast<std::int32_t>(z);
    ++s.assigned;
    queue.push_back(z);
    return true;
  }

  bool propagate(State& s, std::vector<Point>& queue) const {
    while (!queue.empty()) {
      const Point a = queue.back();
      queue.pop_back();
      const Point ia = static_cast<Point>(s.img[a]);
      for (auto blk : inc_.blocks_through(a)) {
        if (through_c_[blk]) continue;
        if (s.bmap[blk] != kUnset) {
          if (!inc_.contains(static_cast<BlockId>(s.bmap[blk]), ia)) return false;
          continue;
        }
        if (s.anchor[blk] == kUnset) {
          s.anchor[blk] = static_cast<std::int32_t>(a);
          continue;
        }
        const Point b = static_cast<Point>(s.anchor[blk]);
        const BlockId target = u_.block_through(ia, static_cast<Point>(s.img[b]));
        if (s.brev[target] != kUnset || through_c_[target]) return false;
        s.bmap[blk] = static_cast<std::int32_t>(target);
        s.brev[target] = static_cast<std::int32_t>(blk);
        for (auto x : u_.block(blk)) {
          if (s.img[x] != kUnset) {
            if (!inc_.contains(target, static_cast<Point>(s.img[x]))) return false;
            continue;
          }
          // The image stays on the block through c and x; that block meets
          // `target` in at most one point.
          std::int32_t w = kUnset;
          for (auto y : u_.block(target))
            if (pencil_block_[y] == pencil_block_[x]) w = static_cast<std::int32_t>(y);
          if (w == kUnset) return false;
          if (!assign(s, x, static_cast<Point>(w), queue)) return false;
        }
      }
    }
    return true;
  }

  // Images of z compatible with every block through z already pinned down
  // (mapped) or half pinned down (one assigned point).
  bool consistent(const State& s, Point z, Point w) const {
    for (auto blk : inc_.blocks_through(z)) {
      if (through_c_[blk]) continue;
      if (s.bmap[blk] != kUnset) {
        if (!inc_.contains(static_cast<BlockId>(s.bmap[blk]), w)) return false;
      } else if (s.anchor[blk] != kUnset) {
        const BlockId target = u_.block_through(static_cast<Point>(s.img[s.anchor[blk]]), w);
        if (through_c_[target] || s.brev[target] != kUnset) return false;
      }
    }
    return true;
  }

  std::vector<Point> candidates(const State& s, Point z) const {
    std::vector<Point> out;
    for (auto w : u_.block(pencil_block_[z])) {
      if (w == c_ || s.pre[w] != kUnset) continue;
      if (prune_ && w == z) continue;
      if (consistent(s, z, w)) out.push_back(w);
    }
    return out;
  }

  std::size_t anchored(const State& s, Point z) const {
    std::size_t n = 0;
    for (auto blk : inc_.blocks_through(z)) n += !through_c_[blk] && s.anchor[blk] != kUnset;
    return n;
  }

  void search(State s) {
    if (s.assigned == u_.num_points()) {
      std::vector<Point> img(s.img.begin(), s.img.end());
      Permutation p(std::move(img));
      if (is_translation(u_, p, c_)) results_.push_back(std::move(p));
      return;
    }
    // Points whose assignment pins down a block come first (branching inside
    // a block through c propagates nothing); then fewest candidates, then
    // most half-pinned blocks.
    Point best = 0;
    std::vector<Point> best_cands;
    std::size_t best_count = SIZE_MAX, best_anchored = 0;
    for (Point z = 0; z < u_.num_points(); ++z) {
      if (s.img[z] != kUnset) continue;
      auto cands = candidates(s, z);
      if (cands.empty()) return;
      const auto a = anchored(s, z);
      if (best_count != SIZE_MAX && (a > 0) != (best_anchored > 0)) {
        if (a == 0) continue;
      } else if (cands.size() > best_count ||
                 (cands.size() == best_count && a <= best_anchored)) {
        continue;
      }
      best = z;
      best_cands = std::move(cands);
      best_count = best_cands.size();
      best_anchored = a;
    }
    for (auto w : best_cands) {
      State next = s;
      std::vector<Point> queue;
      if (!assign(next, best, w, queue)) continue;
      if (!propagate(next, queue)) continue;
      search(std::move(next));
    }
  }

  const Unital& u_;
  const Incidence& inc_;
  Point c_;
  bool prune_;
  std::vector<BlockId> pencil_block_;
  std::vector<char> through_c_;
  std::vector<Permutation> results_;
};

}  // namespace

std::vector<Permutation> translations_at(const Unital& u, Point c,
                                         const TranslationSearchOptions& opts) {
  if (c >= u.num_points()) throw std::out_of_range("center out of range");
  return TranslationSearch(u, c, opts.prune_extra_fixed_points).run();
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_divisor needs n > 1");
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

const std::vector<Point>& TranslationAtlas::omega_of(std::uint64_t n) const {
  static const std::vector<Point> empty;
  auto it = omega.find(n);
  return it == omega.end() ? empty : it->second;
}

std::vector<Permutation> TranslationAtlas::translations_of_order_on(
    std::uint64_t n, const std::vector<Point>& centers) const {
  std::vector<Permutation> out;
  for (auto c : centers)
    for (const auto& t : translations[c])
      if (t.order() == n) out.push_back(t);
  return out;
}

std::vector<Permutation> TranslationAtlas::translations_of_order(std::uint64_t n) const {
  return translations_of_order_on(n, omega_of(n));
}

std::size_t TranslationAtlas::centers() const {
  std::size_t n = 0;
  for (const auto& t : translations) n += t.size() > 1;
  return n;
}

TranslationAtlas build_atlas(const Unital& u, unsigned threads) {
  TranslationAtlas atlas;
  atlas.v = u.num_points();
  atlas.translations.resize(u.num_points());
  parallel_for(u.num_points(), threads, [&](std::size_t c) {
    atlas.translations[c] = translations_at(u, static_cast<Point>(c));
  });
  for (Point c = 0; c < u.num_points(); ++c) {
    const auto& group = atlas.translations[c];
    if (group.size() <= 1) atlas.mho.push_back(c);
    std::set<std::uint64_t> orders;
    for (const auto& t : group)
      if (!t.is_identity()) orders.insert(t.order());
    for (auto n : orders) atlas.omega[n].push_back(c);
  }
  for (const auto& [n, centers] : atlas.omega) {
    PermGroup t(u.num_points(), atlas.translations_of_order(n));
    if (!t.is_trivial()) atlas.primes.insert(smallest_prime_divisor(n));
    atlas.tgroups.emplace(n, std::move(t));
  }
  return atlas;
}

bool LemmaCheck::ok() const {
  return omega_transitive && block_failures.empty() && stabilizer_transitive.value_or(true) &&
         divisor_omegas_equal && composite_transitive;
}

LemmaCheck check_lemma_trs_omega_p(const Unital& u, const TranslationAtlas& atlas,
                                   std::uint64_t p) {
  const auto& omega = atlas.omega_of(p);
  if (omega.empty()) throw std::invalid_argument("Ω_p is empty for p = " + std::to_string(p));
  LemmaCheck r;
  const PermGroup& tp = atlas.tgroups.at(p);
  r.omega_transitive = is_transitive(tp, omega);

  std::vector<char> in_omega(u.num_points(), 0);
  for (auto x : omega) in_omega[x] = 1;
  std::vector<BlockId> relevant;
  std::vector<std::vector<Point>> traces;
  for (BlockId b = 0; b < u.num_blocks(); ++b) {
    std::vector<Point> trace;
    for (auto x : u.block(b))
      if (in_omega[x]) trace.push_back(x);
    if (trace.size() < 2) continue;
    relevant.push_back(b);
    const auto gens = atlas.translations_of_order_on(p, trace);
    const auto orbits = orbits_of(u.num_points(), gens);
    bool transitive = false;
    for (const auto& o : orbits) {
      if (!std::binary_search(o.begin(), o.end(), trace.front())) continue;
      transitive = std::all_of(trace.begin(), trace.end(), [&](Point x) {
        return std::binary_search(o.begin(), o.end(), x);
      });
    }
    if (!transitive) r.block_failures.push_back(b);
    traces.push_back(std::move(trace));
  }
  r.blocks_checked = relevant.size();

  if (tp.order() <= PermGroup::kEnumerationLimit) {
    // Orbit of the first trace point under the setwise stabilizer of each block.
    std::vector<std::vector<char>> reached(relevant.size(), std::vector<char>(u.num_points(), 0));
    for (const auto& e : tp.elements()) {
      for (std::size_t i = 0; i < relevant.size(); ++i) {
        const Block& blk = u.block(relevant[i]);
        if (u.block_through(e(blk[0]), e(blk[1])) != relevant[i]) continue;
        reached[i][e(traces[i].front())] = 1;
      }
    }
    bool all = true;
    for (std::size_t i = 0; i < relevant.size(); ++i)
      for (auto x : traces[i]) all = all && reached[i][x];
    r.stabilizer_transitive = all;
  } else {
    r.notes.push_back("T[p] too large to enumerate; setwise stabilizer check skipped");
  }

  for (const auto& [n, centers] : atlas.omega) {
    if (!is_transitive(atlas.tgroups.at(n), centers)) r.composite_transitive = false;
    for (std::uint64_t k = 2; k <= n; ++k) {
      if (n % k != 0) continue;
      if (atlas.omega_of(k) != centers) {
        r.divisor_omegas_equal = false;
        r.notes.push_back("Ω_" + std::to_string(k) + " differs from Ω_" + std::to_string(n));
      }
    }
  }
  return r;
}

CongruenceCheck orbit_congruence_check(const TranslationAtlas& atlas, std::uint64_t n) {
  CongruenceCheck r;
  r.n = n;
  const auto& omega = atlas.omega_of(n);
  r.omega_size = omega.size();
  r.omega_congruent = !omega.empty() && omega.size() % n == 1 % n;
  std::vector<char> in_omega(atlas.v, 0);
  for (auto x : omega) in_omega[x] = 1;
  for (auto c : omega) {
    for (const auto& t : atlas.translations[c]) {
      if (t.order() != n) continue;
      ++r.translations_checked;
      std::vector<char> seen(atlas.v, 0);
      for (Point x = 0; x < atlas.v; ++x) {
        if (seen[x]) continue;
        std::size_t len = 0;
        bool inside = in_omega[x];
        for (Point y = x; !seen[y]; y = t(y)) {
          seen[y] = 1;
          ++len;
          if (static_cast<bool>(in_omega[y]) != inside) r.cycles_ok = false;
        }
        if (x == c) {
          if (len != 1) r.cycles_ok = false;
          continue;
        }
        if (len != n) r.cycles_ok = false;
        (inside ? r.cycles_inside : r.cycles_outside) += 1;
      }
    }
  }
  return r;
}

TranslationAxioms check_translation_axioms(const Unital& u, const TranslationAtlas& atlas,
                                           std::uint64_t characteristic) {
  TranslationAxioms r;
  for (Point c = 0; c < atlas.translations.size(); ++c) {
    const auto& group = atlas.translations[c];
    std::set<Permutation> elems(group.begin(), group.end());
    for (const auto& t : group) {
      if (!is_translation(u, t, c)) r.all_verified = false;
      if (!elems.count(t.inverse())) r.groups_closed = false;
      for (const auto& s : group)
        if (!elems.count(t * s)) r.groups_closed = false;
      if (t.is_identity()) continue;
      ++r.nontrivial;
      const auto fixed = t.fixed_points();
      if (fixed.size() != 1 || fixed.front() != c) r.fixed_points_ok = false;
      std::uint64_t o = t.order();
      while (o % characteristic == 0) o /= characteristic;
      if (o != 1) r.orders_prime_power = false;
    }
    if (!elems.count(Permutation::identity(u.num_points()))) r.groups_closed = false;
  }
  return r;
}

}  // namespace unital
