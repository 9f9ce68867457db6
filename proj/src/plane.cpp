#include "unital/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace unital {

ProjectivePlane::ProjectivePlane(std::shared_ptr<const Field> field)
    : field_(std::move(field)) {
  const std::uint32_t s = field_->size();
  size_ = s * s + s + 1;
}

Triple ProjectivePlane::coords(std::uint32_t index) const {
  const std::uint32_t s = field_->size();
  if (index < s * s) return {1, index / s, index % s};
  if (index < s * s + s) return {0, 1, index - s * s};
  if (index == s * s + s) return {0, 0, 1};
  throw std::out_of_range("plane index out of range");
}

Triple ProjectivePlane::normalize(Triple t) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] == 0) continue;
    if (t[i] != 1) {
      const auto inv = field_->inv(t[i]);
      for (std::size_t j = i; j < 3; ++j) t[j] = field_->mul(t[j], inv);
    }
    return t;
  }
  throw std::invalid_argument("zero triple is not a projective point");
}

std::uint32_t ProjectivePlane::index_of(const Triple& raw) const {
  const Triple t = normalize(raw);
  const std::uint32_t s = field_->size();
  if (t[0] == 1) return t[1] * s + t[2];
  if (t[1] == 1) return s * s + t[2];
  return s * s + s;
}

Field::Elem ProjectivePlane::dot(const Triple& x, const Triple& a) const {
  const Field& f = *field_;
  return f.add(f.add(f.mul(x[0], a[0]), f.mul(x[1], a[1])), f.mul(x[2], a[2]));
}

bool ProjectivePlane::incident(std::uint32_t point, std::uint32_t line) const {
  return dot(coords(point), coords(line)) == 0;
}

Triple ProjectivePlane::cross(const Triple& x, const Triple& y) const {
  const Field& f = *field_;
  return {f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])),
          f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
          f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]))};
}

std::uint32_t ProjectivePlane::line_through(std::uint32_t p, std::uint32_t q) const {
  if (p == q) throw std::invalid_argument("line_through needs two distinct points");
  return index_of(cross(coords(p), coords(q)));
}

std::uint32_t ProjectivePlane::meet(std::uint32_t l, std::uint32_t m) const {
  if (l == m) throw std::invalid_argument("meet needs two distinct lines");
  return index_of(cross(coords(l), coords(m)));
}

bool ProjectivePlane::collinear(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
  if (a == b || a == c || b == c) return true;
  return dot(cross(coords(a), coords(b)), coords(c)) == 0;
}

std::vector<std::uint32_t> ProjectivePlane::points_on(std::uint32_t line) const {
  const Field& f = *field_;
  const std::uint32_t s = f.size();
  const Triple a = coords(line);
  std::vector<std::uint32_t> out;
  out.reserve(s + 1);
  if (a[2] != 0) {
    const auto inv2 = f.inv(a[2]);
    for (Field::Elem t = 0; t < s; ++t) {
      const auto x2 = f.neg(f.mul(f.add(a[0], f.mul(a[1], t)), inv2));
      out.push_back(index_of({1, t, x2}));
    }
    out.push_back(index_of({0, 1, f.neg(f.mul(a[1], inv2))}));
  } else if (a[1] != 0) {
    const auto t = f.neg(f.div(a[0], a[1]));
    for (Field::Elem b = 0; b < s; ++b) out.push_back(index_of({1, t, b}));
    out.push_back(index_of({0, 0, 1}));
  } else {
    for (Field::Elem b = 0; b < s; ++b) out.push_back(index_of({0, 1, b}));
    out.push_back(index_of({0, 0, 1}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> ProjectivePlane::frobenius_map(std::uint32_t k) const {
  std::vector<std::uint32_t> map(size_);
  for (std::uint32_t i = 0; i < size_; ++i) {
    Triple t = coords(i);
    for (auto& x : t) x = field_->frobenius(x, k);
    map[i] = index_of(t);
  }
  return map;
}

namespace {

// k with p^k == q for the characteristic p of the plane's field.
std::uint32_t frobenius_power(const Field& f, std::uint32_t q) {
  std::uint32_t k = 0;
  std::uint64_t pk = 1;
  while (pk < q) {
    pk *= f.characteristic();
    ++k;
  }
  if (pk != q || 2 * k != f.degree())
    throw std::invalid_argument("plane field is not F_{q^2} for q = " + std::to_string(q));
  return k;
}

}  // namespace

std::vector<std::uint32_t> hermitian_polarity(const ProjectivePlane& plane, std::uint32_t q) {
  return plane.frobenius_map(frobenius_power(plane.field(), q));
}

HermitianUnital build_hermitian_unital(std::uint32_t q) {
  auto [p, e] = prime_power(q);
  auto field = std::make_shared<const Field>(Field::make(p, 2 * e));
  ProjectivePlane plane(field);
  const auto polarity = hermitian_polarity(plane, q);

  std::vector<std::uint32_t> absolute;
  std::vector<std::int32_t> unital_index(plane.size(), -1);
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    if (plane.incident(i, polarity[i])) {
      unital_index[i] = static_cast<std::int32_t>(absolute.size());
      absolute.push_back(i);
    }
  }

  std::vector<Block> blocks;
  for (std::uint32_t l = 0; l < plane.size(); ++l) {
    Block trace;
    for (auto pt : plane.points_on(l))
      if (unital_index[pt] >= 0) trace.push_back(static_cast<Point>(unital_index[pt]));
    if (trace.size() > 1) blocks.push_back(std::move(trace));
  }
  return HermitianUnital{Unital(Incidence::make(absolute.size(), std::move(blocks)), q),
                         std::move(absolute)};
}

Unital hermitian_unital(std::uint32_t q) { return build_hermitian_unital(q).unital; }

}  // namespace unital
