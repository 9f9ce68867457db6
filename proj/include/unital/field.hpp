#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace unital {

/// Finite field F_{p^e} with table-driven arithmetic.
///
/// Elements are encoded as integers in [0, p^e): the coefficient vector
/// (c_0, ..., c_{e-1}) of the polynomial representative maps to
/// sum c_i p^i. The modulus is the lexicographically least primitive
/// polynomial (coefficients compared from the constant term upwards), so
/// the class of x always generates the multiplicative group and two
/// fields made with the same (p, e) are identical.
class Field {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  /// Throws std::invalid_argument for non-prime p, e == 0 or p^e > 2^20.
  static Field make(std::uint32_t p, std::uint32_t e);

  /// Field of order q (a prime power).
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t size() const { return size_; }

  /// Monic modulus, coefficients c_0 .. c_e (c_e == 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }
  /// Class of x; has multiplicative order size() - 1.
  Elem generator() const { return exp_[1 % (size_ - 1)]; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size_ - 1) s -= size_ - 1;
    return exp_[s];
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;

  /// a^(p^k), 0 <= k < e.
  Elem frobenius(Elem a, std::uint32_t k) const;
  /// Norm to the subfield of degree d: a^((p^e - 1)/(p^d - 1)). d must divide e.
  Elem rel_norm(Elem a, std::uint32_t d) const;
  /// True iff a lies in the subfield of degree d.
  bool in_subfield(Elem a, std::uint32_t d) const;

  /// Discrete log to base generator(); a != 0.
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  // Dense addition table for small fields; empty otherwise.
  std::vector<Elem> add_table_;
};

bool is_prime(std::uint64_t n);

/// Returns (p, e) with q = p^e, or throws std::invalid_argument.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

/// Checked element wrapper that remembers its field.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const Field> field, Field::Elem rep);

  const Field& field() const { return *field_; }
  Field::Elem rep() const { return rep_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t n) const;
  FieldElement frobenius(std::uint32_t k) const;
  FieldElement norm(std::uint32_t subfield_degree) const;

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  std::shared_ptr<const Field> field_;
  Field::Elem rep_;
};

}  // namespace unital
