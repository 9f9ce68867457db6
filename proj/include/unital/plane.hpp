#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "unital/field.hpp"
#include "unital/incidence.hpp"

namespace unital {

/// Homogeneous triple, normalized so the first nonzero entry is 1.
using Triple = std::array<Field::Elem, 3>;

/// The desarguesian plane PG(2, F).
///
/// Points and lines are both indexed by their normalized coordinate
/// triple: (1:a:b) -> a*s + b, (0:1:a) -> s^2 + a, (0:0:1) -> s^2 + s,
/// where s = |F|. A point x lies on a line a iff x0*a0 + x1*a1 + x2*a2 = 0.
class ProjectivePlane {
 public:
  explicit ProjectivePlane(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }

  std::uint32_t order() const { return field_->size(); }
  /// s^2 + s + 1; same for points and lines.
  std::uint32_t size() const { return size_; }

  Triple coords(std::uint32_t index) const;
  std::uint32_t index_of(const Triple& t) const;
  Triple normalize(Triple t) const;

  bool incident(std::uint32_t point, std::uint32_t line) const;
  Field::Elem dot(const Triple& x, const Triple& a) const;

  /// Throws std::invalid_argument if the arguments coincide.
  std::uint32_t line_through(std::uint32_t p, std::uint32_t q) const;
  std::uint32_t meet(std::uint32_t l, std::uint32_t m) const;
  /// Zero determinant check for three points (or three lines).
  bool collinear(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

  /// Points of a line (equivalently lines through a point, by duality), ascending.
  std::vector<std::uint32_t> points_on(std::uint32_t line) const;

  /// Index map of the coordinatewise field map x -> x^(p^k).
  std::vector<std::uint32_t> frobenius_map(std::uint32_t k) const;

 private:
  Triple cross(const Triple& x, const Triple& y) const;

  std::shared_ptr<const Field> field_;
  std::uint32_t size_;
};

/// The unitary polarity of PG(2, F_{q^2}) with identity Gram matrix:
/// point (x0:x1:x2) -> line [x0^q : x1^q : x2^q]. Returned as an index map
/// (points to lines, and by the same formula lines to points).
std::vector<std::uint32_t> hermitian_polarity(const ProjectivePlane& plane, std::uint32_t q);

struct HermitianUnital {
  Unital unital;
  /// Unital point -> index of the absolute point in PG(2, F_{q^2}).
  std::vector<std::uint32_t> plane_point;
};

/// Absolute points of the hermitian polarity of PG(2, F_{q^2}) with the
/// secant-line traces as blocks.
HermitianUnital build_hermitian_unital(std::uint32_t q);

/// Shorthand returning just the design.
Unital hermitian_unital(std::uint32_t q);

}  // namespace unital
