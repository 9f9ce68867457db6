#include "unital/figueroa.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "unital/parallel.hpp"

namespace unital {

std::string to_string(FigType t) {
  switch (t) {
    case FigType::I:
      return "I";
    case FigType::II:
      return "II";
    case FigType::III:
      return "III";
  }
  return "?";
}

namespace {

std::shared_ptr<const Field> sextic_field(std::uint32_t q) {
  const auto [p, e] = prime_power(q);
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < 6 * e; ++i) size *= p;
  if (size > Field::kMaxSize) throw std::invalid_argument("q^6 exceeds the field size bound");
  return std::make_shared<const Field>(Field::make(p, 6 * e));
}

std::uint32_t extension_degree(std::uint32_t q) { return prime_power(q).second; }

std::array<std::size_t, 3> count_types(const std::vector<FigType>& types) {
  std::array<std::size_t, 3> out{};
  for (auto t : types) ++out[static_cast<int>(t) - 1];
  return out;
}

}  // namespace

FigPlane::FigPlane(std::uint32_t q, unsigned threads) : q_(q), plane_(sextic_field(q)) {
  const std::uint32_t n = plane_.size();
  alpha_ = plane_.frobenius_map(2 * extension_degree(q));

  auto classify = [&](std::uint32_t i) {
    const auto a = alpha_[i];
    if (a == i) return FigType::I;
    return plane_.collinear(i, a, alpha_[a]) ? FigType::II : FigType::III;
  };
  point_type_.resize(n);
  line_type_.resize(n);
  mu_point_.assign(n, 0);
  mu_line_.assign(n, 0);
  // Points and lines share the index scheme and the alpha formula, so the
  // type of index i is the same whether read as a point or a line.
  parallel_for(n, threads, [&](std::size_t i) {
    const auto t = classify(static_cast<std::uint32_t>(i));
    point_type_[i] = t;
    line_type_[i] = t;
    if (t == FigType::III) {
      const auto a = alpha_[i], b = alpha_[a];
      mu_point_[i] = plane_.line_through(a, b);
      mu_line_[i] = plane_.meet(a, b);
    }
  });

  // Type III points grouped by mu(P).
  std::vector<std::vector<std::uint32_t>> by_mu(n);
  for (std::uint32_t p = 0; p < n; ++p)
    if (point_type_[p] == FigType::III) by_mu[mu_point_[p]].push_back(p);

  line_points_.resize(n);
  parallel_for(n, threads, [&](std::size_t li) {
    const auto l = static_cast<std::uint32_t>(li);
    auto classical = plane_.points_on(l);
    if (line_type_[l] != FigType::III) {
      line_points_[l] = std::move(classical);
      return;
    }
    std::vector<std::uint32_t> pts;
    for (auto p : classical)
      if (point_type_[p] != FigType::III) pts.push_back(p);
    // Lines through the point mu(l), by duality.
    for (auto big_l : plane_.points_on(mu_line_[l]))
      if (line_type_[big_l] == FigType::III)
        pts.insert(pts.end(), by_mu[big_l].begin(), by_mu[big_l].end());
    std::sort(pts.begin(), pts.end());
    line_points_[l] = std::move(pts);
  });

  point_lines_.resize(n);
  for (std::uint32_t l = 0; l < n; ++l)
    for (auto p : line_points_[l]) point_lines_[p].push_back(l);
}

std::array<std::size_t, 3> FigPlane::point_type_counts() const { return count_types(point_type_); }
std::array<std::size_t, 3> FigPlane::line_type_counts() const { return count_types(line_type_); }

std::uint32_t FigPlane::mu_point(std::uint32_t p) const {
  if (point_type_.at(p) != FigType::III) throw std::invalid_argument("mu_point: point is not of type III");
  return mu_point_[p];
}

std::uint32_t FigPlane::mu_line(std::uint32_t l) const {
  if (line_type_.at(l) != FigType::III) throw std::invalid_argument("mu_line: line is not of type III");
  return mu_line_[l];
}

bool FigPlane::incident(std::uint32_t p, std::uint32_t l) const {
  if (point_type_[p] == FigType::III && line_type_[l] == FigType::III)
    return plane_.incident(mu_line_[l], mu_point_[p]);
  return plane_.incident(p, l);
}

namespace {

// For each x, counts how often every y is reached through the incident sets;
// the axiom holds when each y != x is reached exactly once.
std::optional<std::pair<std::uint32_t, std::uint32_t>> unique_join_failure(
    const std::vector<std::vector<std::uint32_t>>& through,
    const std::vector<std::vector<std::uint32_t>>& on, unsigned threads) {
  const std::size_t n = through.size();
  std::vector<std::int64_t> bad(n, -1);
  parallel_for(n, threads, [&](std::size_t x) {
    std::vector<std::uint32_t> cnt(n, 0);
    for (auto l : through[x])
      for (auto y : on[l]) ++cnt[y];
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && cnt[y] != 1) {
        bad[x] = static_cast<std::int64_t>(y);
        return;
      }
  });
  for (std::size_t x = 0; x < n; ++x)
    if (bad[x] >= 0) return std::pair{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(bad[x])};
  return std::nullopt;
}

}  // namespace

ProjectiveAxiomReport FigPlane::validate(unsigned threads) const {
  ProjectiveAxiomReport r;
  const std::uint32_t n = size();
  const std::size_t k = order() + 1;
  for (std::uint32_t l = 0; l < n && r.line_sizes_ok; ++l)
    if (line_points_[l].size() != k) {
      r.line_sizes_ok = false;
      r.counterexample = std::pair{l, static_cast<std::uint32_t>(line_points_[l].size())};
      r.detail = "line of wrong size";
    }
  for (std::uint32_t p = 0; p < n && r.point_degrees_ok; ++p)
    if (point_lines_[p].size() != k) {
      r.point_degrees_ok = false;
      r.counterexample = std::pair{p, static_cast<std::uint32_t>(point_lines_[p].size())};
      r.detail = "point on wrong number of lines";
    }
  if (auto f = unique_join_failure(point_lines_, line_points_, threads)) {
    r.two_points_one_line = false;
    if (!r.counterexample) r.counterexample = f, r.detail = "two points not on exactly one line";
  }
  if (auto f = unique_join_failure(line_points_, point_lines_, threads)) {
    r.two_lines_one_point = false;
    if (!r.counterexample) r.counterexample = f, r.detail = "two lines not meeting in exactly one point";
  }

  // Quadrangle: 0, 1, a point off their line, and a point off all three joins.
  auto join = [&](std::uint32_t a, std::uint32_t b) -> std::optional<std::uint32_t> {
    for (auto l : point_lines_[a])
      if (std::binary_search(line_points_[l].begin(), line_points_[l].end(), b)) return l;
    return std::nullopt;
  };
  auto on = [&](std::uint32_t p, std::optional<std::uint32_t> l) {
    return l && std::binary_search(line_points_[*l].begin(), line_points_[*l].end(), p);
  };
  if (n >= 4) {
    const auto l01 = join(0, 1);
    for (std::uint32_t c = 2; c < n && !r.quadrangle; ++c) {
      if (on(c, l01)) continue;
      const auto l02 = join(0, c), l12 = join(1, c);
      for (std::uint32_t d = 2; d < n; ++d)
        if (d != c && !on(d, l01) && !on(d, l02) && !on(d, l12)) {
          r.quadrangle = true;
          break;
        }
      break;
    }
  }
  if (!r.quadrangle && r.detail.empty()) r.detail = "no quadrangle";
  return r;
}

bool FigPlane::alpha_is_collineation() const {
  for (std::uint32_t l = 0; l < size(); ++l) {
    std::vector<std::uint32_t> img;
    img.reserve(line_points_[l].size());
    for (auto p : line_points_[l]) img.push_back(alpha_[p]);
    std::sort(img.begin(), img.end());
    if (img != line_points_[alpha_[l]]) return false;
  }
  return true;
}

FigPolarity build_fig_polarity(const FigPlane& fig, unsigned threads) {
  FigPolarity pi;
  const std::uint32_t n = fig.size();
  pi.map = fig.plane().frobenius_map(3 * extension_degree(fig.q()));
  auto& r = pi.report;
  r.involutory = true;
  r.commutes_with_alpha = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    r.involutory = r.involutory && pi.map[pi.map[i]] == i;
    r.commutes_with_alpha = r.commutes_with_alpha && pi.map[fig.alpha(i)] == fig.alpha(pi.map[i]);
  }

  std::vector<std::int64_t> bad(n, -1);
  parallel_for(n, threads, [&](std::size_t pi_) {
    const auto p = static_cast<std::uint32_t>(pi_);
    for (std::uint32_t l = 0; l < n; ++l)
      if (fig.incident(p, l) != fig.incident(pi.map[l], pi.map[p])) {
        bad[p] = l;
        return;
      }
  });
  r.incidence_reversing = true;
  for (std::uint32_t p = 0; p < n && r.incidence_reversing; ++p)
    if (bad[p] >= 0) {
      r.incidence_reversing = false;
      r.counterexample = std::pair{p, static_cast<std::uint32_t>(bad[p])};
    }
  r.pairs_checked = std::uint64_t{n} * n;

  if (!r.ok()) {
    std::string msg = "Figueroa polarity candidate rejected:";
    if (!r.involutory) msg += " not involutory;";
    if (!r.commutes_with_alpha) msg += " does not commute with alpha;";
    if (r.counterexample)
      msg += " incidence not reversed at point " + std::to_string(r.counterexample->first) +
             ", line " + std::to_string(r.counterexample->second) + ";";
    throw std::runtime_error(msg);
  }
  return pi;
}

FigueroaUnital build_polar_unital(const FigPlane& fig, const FigPolarity& pi) {
  const std::uint32_t n = fig.size();
  std::vector<std::uint32_t> absolute;
  std::vector<std::int64_t> index(n, -1);
  for (std::uint32_t p = 0; p < n; ++p)
    if (fig.incident(p, pi.map[p])) {
      index[p] = static_cast<std::int64_t>(absolute.size());
      absolute.push_back(p);
    }

  std::vector<Block> blocks;
  std::vector<std::uint32_t> lines;
  for (std::uint32_t l = 0; l < n; ++l) {
    Block trace;
    for (auto p : fig.points_on(l))
      if (index[p] >= 0) trace.push_back(static_cast<Point>(index[p]));
    if (trace.size() > 1) {
      blocks.push_back(std::move(trace));
      lines.push_back(l);
    }
  }
  auto traces = blocks;
  const std::size_t q3 = static_cast<std::size_t>(fig.q()) * fig.q() * fig.q();
  Unital u(Incidence::make(absolute.size(), std::move(blocks)), q3);

  std::vector<std::uint32_t> block_line(u.num_blocks());
  for (std::size_t i = 0; i < traces.size(); ++i)
    block_line[*u.incidence().find_block(traces[i])] = lines[i];

  std::vector<FigType> types;
  std::vector<Point> alpha(absolute.size());
  for (std::size_t i = 0; i < absolute.size(); ++i) {
    types.push_back(fig.point_type(absolute[i]));
    const auto img = index[fig.alpha(absolute[i])];
    if (img < 0) throw std::logic_error("alpha does not preserve the absolute points");
    alpha[i] = static_cast<Point>(img);
  }
  return FigueroaUnital{std::move(u), std::move(absolute), std::move(types), std::move(block_line),
                        Permutation(std::move(alpha))};
}

std::vector<Point> hermitian_subunital(const FigueroaUnital& uf) {
  std::vector<Point> h;
  for (Point x = 0; x < uf.type.size(); ++x)
    if (uf.type[x] == FigType::I) h.push_back(x);
  return h;
}

bool FigueroaTheorems::ok() const {
  return omega2_is_h && mho_is_complement && all_involutions && t2_transitive_on_h &&
         h_invariant && alpha_automorphism && alpha_order == 3 && alpha_trivial_on_omega2 &&
         alpha_nontrivial;
}

FigueroaTheorems verify_figueroa_theorems(const FigueroaUnital& uf, const TranslationAtlas& atlas) {
  FigueroaTheorems r;
  const auto& u = uf.unital;
  r.h = hermitian_subunital(uf);
  const auto& omega2 = atlas.omega_of(2);
  r.omega2_is_h = omega2 == r.h;

  std::vector<Point> complement;
  std::vector<char> in_h(u.num_points(), 0);
  for (auto x : r.h) in_h[x] = 1;
  for (Point x = 0; x < u.num_points(); ++x)
    if (!in_h[x]) complement.push_back(x);
  r.mho_is_complement = atlas.mho == complement;

  r.all_involutions = true;
  r.h_invariant = true;
  for (const auto& group : atlas.translations)
    for (const auto& t : group) {
      if (t.is_identity()) continue;
      ++r.nontrivial_translations;
      r.all_involutions = r.all_involutions && t.order() == 2;
      for (auto x : r.h) r.h_invariant = r.h_invariant && in_h[t(x)];
    }
  for (auto c : r.h) r.center_group_orders.push_back(atlas.translations[c].size());

  if (auto it = atlas.tgroups.find(2); it != atlas.tgroups.end() && r.h_invariant && !r.h.empty()) {
    r.t2_order = it->second.order();
    const PermGroup on_h = restrict_action(it->second, r.h);
    r.t2_on_h_order = on_h.order();
    r.t2_transitive_on_h = is_transitive(it->second, r.h);
    r.t2_two_transitive_on_h = is_two_transitive(it->second, r.h);
  }

  r.alpha_automorphism = is_automorphism(u.incidence(), uf.alpha);
  r.alpha_order = uf.alpha.order();
  r.alpha_nontrivial = !uf.alpha.is_identity();
  r.alpha_trivial_on_omega2 = true;
  for (auto x : omega2) r.alpha_trivial_on_omega2 = r.alpha_trivial_on_omega2 && uf.alpha(x) == x;
  return r;
}

}  // namespace unital
