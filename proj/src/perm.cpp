#include "unital/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unital {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("not a permutation");
    seen[y] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = o.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation r = identity(degree());
  while (n != 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Permutation Permutation::conjugate(const Permutation& g) const { return g.inverse() * *this * g; }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (auto len : cycle_lengths()) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> f;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) f.push_back(static_cast<Point>(i));
  return f;
}

bool is_automorphism(const Incidence& inc, const Permutation& p) {
  if (p.degree() != inc.num_points()) return false;
  Block img;
  for (const auto& b : inc.blocks()) {
    img.clear();
    for (auto x : b) img.push_back(p(x));
    std::sort(img.begin(), img.end());
    if (!inc.find_block(img)) return false;
  }
  return true;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  for (auto b : base_prefix) {
    if (b >= degree_) throw std::invalid_argument("base point out of range");
    bool dup = false;
    for (const auto& l : levels_) dup = dup || l.base == b;
    if (dup) continue;
    levels_.push_back(Level{b, {}, {}, {}});
  }
  schreier_sims();
}

void PermGroup::build_orbit(Level& level) const {
  level.orbit.clear();
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base] = Permutation::identity(degree_);
  level.orbit.push_back(level.base);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point x = level.orbit[i];
    for (const auto& g : level.gens) {
      const Point y = g(x);
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * g;
        level.orbit.push_back(y);
      }
    }
  }
}

void PermGroup::append_level_for(const Permutation& h) {
  for (Point x = 0; x < degree_; ++x) {
    if (h(x) == x) continue;
    levels_.push_back(Level{x, {}, {}, {}});
    return;
  }
  throw std::logic_error("append_level_for called with the identity");
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation h, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Point beta = h(levels_[l].base);
    const auto& u = levels_[l].transversal[beta];
    if (!u) return {std::move(h), l};
    h = h * u->inverse();
  }
  return {std::move(h), levels_.size()};
}

void PermGroup::schreier_sims() {
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    bool fixes_base = true;
    for (const auto& l : levels_) fixes_base = fixes_base && g(l.base) == l.base;
    if (fixes_base) append_level_for(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      bool fixes = true;
      for (std::size_t j = 0; j < l; ++j) fixes = fixes && g(levels_[j].base) == levels_[j].base;
      if (fixes) levels_[l].gens.push_back(g);
    }
    build_orbit(levels_[l]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level& lvl = levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; !extended && oi < lvl.orbit.size(); ++oi) {
      const Point beta = lvl.orbit[oi];
      for (std::size_t gi = 0; gi < lvl.gens.size(); ++gi) {
        const Permutation& g = lvl.gens[gi];
        Permutation sch = *lvl.transversal[beta] * g * lvl.transversal[g(beta)]->inverse();
        if (sch.is_identity()) continue;
        auto [h, j] = strip(std::move(sch), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) append_level_for(h);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          build_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t o = 1;
  for (const auto& l : levels_) o *= l.orbit.size();
  return o;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = strip(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<Permutation> PermGroup::elements() const {
  if (order() > kEnumerationLimit) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> elems{Permutation::identity(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * levels_[l].orbit.size());
    for (const auto& e : elems)
      for (auto x : levels_[l].orbit) next.push_back(e * *levels_[l].transversal[x]);
    elems = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> points) const {
  PermGroup chained(degree_, generators_, std::vector<Point>(points.begin(), points.end()));
  std::set<Point> distinct(points.begin(), points.end());
  return PermGroup(degree_, chained.stabilizer_generators(distinct.size()));
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<char> seen(degree_, 0);
  std::vector<Point> orb{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : generators_) {
      const Point y = g(orb[i]);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> orbits_of(std::size_t degree, std::span<const Permutation> gens) {
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<Point> orb{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens) {
        const Point y = g(orb[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const { return orbits_of(degree_, generators_); }

namespace {

void require_invariant(const PermGroup& g, std::span<const Point> x) {
  std::vector<char> in(g.degree(), 0);
  for (auto p : x) in[p] = 1;
  for (const auto& gen : g.generators())
    for (auto p : x)
      if (!in[gen(p)]) throw std::invalid_argument("point set is not invariant under the group");
}

}  // namespace

bool is_transitive(const PermGroup& g, std::span<const Point> x) {
  require_invariant(g, x);
  if (x.size() <= 1) return true;
  return g.orbit(x[0]).size() == std::set<Point>(x.begin(), x.end()).size();
}

bool is_two_transitive(const PermGroup& g, std::span<const Point> x) {
  if (!is_transitive(g, x)) return false;
  std::vector<Point> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() <= 2) return true;
  const Point x0 = sorted.front();
  const PermGroup stab = g.pointwise_stabilizer(std::span<const Point>(&x0, 1));
  std::vector<Point> rest(sorted.begin() + 1, sorted.end());
  return is_transitive(stab, rest);
}

Permutation restrict_permutation(const Permutation& p, std::span<const Point> sorted_x) {
  std::vector<Point> img;
  img.reserve(sorted_x.size());
  for (auto x : sorted_x) {
    const Point y = p(x);
    auto it = std::lower_bound(sorted_x.begin(), sorted_x.end(), y);
    if (it == sorted_x.end() || *it != y)
      throw std::invalid_argument("point set is not invariant under the permutation");
    img.push_back(static_cast<Point>(it - sorted_x.begin()));
  }
  return Permutation(std::move(img));
}

PermGroup restrict_action(const PermGroup& g, std::span<const Point> x) {
  std::vector<Point> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) gens.push_back(restrict_permutation(gen, sorted));
  return PermGroup(sorted.size(), std::move(gens));
}

PermGroup setwise_block_stabilizer(const PermGroup& g, std::span<const Point> block) {
  std::vector<char> in(g.degree(), 0);
  for (auto p : block) in[p] = 1;
  std::vector<Permutation> stab;
  for (auto& e : g.elements()) {
    bool keeps = true;
    for (auto p : block) keeps = keeps && in[e(p)];
    if (keeps && !e.is_identity()) stab.push_back(std::move(e));
  }
  return PermGroup(g.degree(), std::move(stab));
}

std::vector<std::vector<Point>> two_point_stabilizer_orbit_sets(const PermGroup& g, Point x,
                                                                Point y) {
  const std::array<Point, 2> pts{x, y};
  return g.pointwise_stabilizer(pts).orbits();
}

std::vector<std::size_t> two_point_stabilizer_orbits(const PermGroup& g, Point x, Point y) {
  std::vector<std::size_t> lengths;
  for (const auto& o : two_point_stabilizer_orbit_sets(g, x, y)) lengths.push_back(o.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

GleasonReport gleason_check(std::span<const GleasonCertificate> certs, std::span<const Point> x,
                            std::uint64_t p) {
  GleasonReport r;
  std::set<Point> xs(x.begin(), x.end());
  std::set<Point> certified;
  std::vector<Permutation> gens;
  for (const auto& c : certs) {
    if (!xs.count(c.point)) {
      r.outcome = GleasonReport::Outcome::bad_certificate;
      r.location = c.point;
      r.detail = "certificate for a point outside X";
      return r;
    }
    if (c.element.order() != p) {
      r.outcome = GleasonReport::Outcome::bad_certificate;
      r.location = c.point;
      r.detail = "element order " + std::to_string(c.element.order()) + " differs from " +
                 std::to_string(p);
      return r;
    }
    for (auto f : xs) {
      const bool fixed = c.element(f) == f;
      if (fixed != (f == c.point)) {
        r.outcome = GleasonReport::Outcome::bad_certificate;
        r.location = c.point;
        r.detail = fixed ? "element fixes a second point " + std::to_string(f)
                         : "element moves its own point";
        return r;
      }
    }
    certified.insert(c.point);
    gens.push_back(c.element);
  }
  for (auto f : xs) {
    if (!certified.count(f)) {
      r.outcome = GleasonReport::Outcome::bad_certificate;
      r.location = f;
      r.detail = "no certificate";
      return r;
    }
  }
  if (xs.empty() || gens.empty()) return r;
  const auto orbits = orbits_of(gens.front().degree(), gens);
  const Point first = *xs.begin();
  for (const auto& o : orbits) {
    if (!std::binary_search(o.begin(), o.end(), first)) continue;
    for (auto f : xs) {
      if (!std::binary_search(o.begin(), o.end(), f)) {
        r.outcome = GleasonReport::Outcome::not_transitive;
        r.location = f;
        r.detail = "point not reached from " + std::to_string(first);
        return r;
      }
    }
  }
  return r;
}

DihedralReport generalized_dihedral_check(const PermGroup& g, const Permutation& tau,
                                          std::span<const Point> domain) {
  if (tau.order() != 2) throw std::invalid_argument("tau is not an involution");
  DihedralReport r;
  r.tau_involution = true;
  r.tau_in_group = g.contains(tau);
  r.group_order = g.order();
  const auto elems = g.elements();
  std::vector<Permutation> involutions;
  for (const auto& e : elems)
    if (e.order() == 2) involutions.push_back(e);
  if (involutions.size() > 5000) throw std::length_error("too many involutions for kernel search");

  std::set<Permutation> kernel{Permutation::identity(g.degree())};
  for (const auto& a : involutions)
    for (const auto& b : involutions) kernel.insert(a * b);
  r.kernel.assign(kernel.begin(), kernel.end());
  r.kernel_order = r.kernel.size();
  if (r.kernel.size() > 5000) throw std::length_error("kernel too large for pairwise checks");

  r.kernel_is_subgroup = PermGroup(g.degree(), r.kernel).order() == r.kernel_order;
  r.kernel_odd = r.kernel_order % 2 == 1;
  r.kernel_index_two = r.group_order == 2 * r.kernel_order;

  r.tau_inverts_kernel = true;
  r.tau_semiregular_on_kernel = true;
  for (const auto& m : r.kernel) {
    const auto c = tau * m * tau;
    r.tau_inverts_kernel = r.tau_inverts_kernel && c == m.inverse();
    if (!m.is_identity() && c == m) r.tau_semiregular_on_kernel = false;
  }

  std::set<Permutation> coset, klass;
  for (const auto& m : r.kernel) {
    coset.insert(tau * m);
    klass.insert(tau.conjugate(m));
  }
  r.coset_is_conjugacy_class = coset == klass;
  r.coset_all_involutions = std::all_of(coset.begin(), coset.end(),
                                        [](const Permutation& p) { return p.order() == 2; });

  r.kernel_abelian = true;
  for (std::size_t i = 0; i < r.kernel.size() && r.kernel_abelian; ++i)
    for (std::size_t j = i + 1; j < r.kernel.size(); ++j)
      if (r.kernel[i] * r.kernel[j] != r.kernel[j] * r.kernel[i]) {
        r.kernel_abelian = false;
        break;
      }

  std::vector<Point> dom(domain.begin(), domain.end());
  if (dom.empty()) {
    dom.resize(g.degree());
    std::iota(dom.begin(), dom.end(), Point{0});
  }
  if (r.kernel_is_subgroup && r.kernel_order == dom.size()) {
    std::set<Point> reached;
    for (const auto& m : r.kernel) reached.insert(m(dom.front()));
    r.kernel_regular = reached == std::set<Point>(dom.begin(), dom.end());
  }

  r.generalized_dihedral = r.kernel_is_subgroup && r.kernel_odd && r.kernel_index_two &&
                           r.kernel_abelian && r.tau_inverts_kernel &&
                           r.coset_is_conjugacy_class && r.coset_all_involutions;
  return r;
}

InvolutionReport unique_involution_check(const PermGroup& q, const PermGroup* normal_subgroup) {
  InvolutionReport r;
  for (const auto& e : q.elements()) {
    if (e.order() != 2) continue;
    ++r.involutions;
    if (!r.involution) r.involution = e;
  }
  r.unique = r.involutions == 1;
  if (normal_subgroup && r.unique) {
    bool inverts = true;
    for (const auto& n : normal_subgroup->elements())
      inverts = inverts && (*r.involution * n * *r.involution) == n.inverse();
    r.inverts_normal_subgroup = inverts;
  }
  return r;
}

}  // namespace unital
